#pragma once

// Exact arithmetic in F_{p^k} with a deterministic model of every field:
// the modulus is the lexicographically smallest monic irreducible of degree
// k over F_p, comparing coefficients low-degree-first as integers. Two
// requests for the same (p, k) return the same interned context, so element
// contexts can be compared by pointer.
//
// Extensions of extensions are always realized over the prime field
// (F_{q^n} = F_{p^{kn}}); subfield membership is a Frobenius fixed-point
// test and explicit embeddings are built by root-finding, never by
// isomorphism bookkeeping.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "singcurve/bigint.hpp"
#include "singcurve/errors.hpp"
#include "singcurve/numtheory.hpp"

namespace singcurve {

namespace limits {
inline constexpr uint64_t kFieldOrderMax = uint64_t(1) << 24;    // p^k for arithmetic
inline constexpr uint64_t kElementEnumMax = uint64_t(1) << 20;   // full element listing
inline constexpr uint64_t kPolyEnumMax = uint64_t(1) << 24;      // q^d for irreducible listing
inline constexpr uint64_t kOracleWorkMax = uint64_t(1) << 24;    // brute-force point counting
}  // namespace limits

class FieldCtx;

class FieldElement {
 public:
  FieldElement() = default;  // invalid sentinel; any operation throws

  const FieldCtx& ctx() const {
    if (ctx_ == nullptr) throw validation_error("use of default-constructed field element");
    return *ctx_;
  }
  std::span<const uint32_t> coeffs() const { return c_; }
  bool is_zero() const {
    for (uint32_t v : c_)
      if (v != 0) return false;
    return ctx_ != nullptr;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx_ == b.ctx_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement pow(uint64_t e) const;
  FieldElement pow(const BigInt& e) const;
  FieldElement inv() const;

  std::string str() const;

 private:
  friend class FieldCtx;
  FieldElement(const FieldCtx* ctx, std::vector<uint32_t> c) : ctx_(ctx), c_(std::move(c)) {}

  const FieldCtx* ctx_ = nullptr;
  std::vector<uint32_t> c_;  // k residues mod p, degree < k representative
};

class FieldCtx {
 public:
  // Interned deterministic context for F_{p^k}.
  static const FieldCtx& get(uint64_t p, unsigned k,
                             uint64_t order_bound = limits::kFieldOrderMax);
  // Convenience: F_q for a prime power q.
  static const FieldCtx& for_order(uint64_t q, uint64_t order_bound = limits::kFieldOrderMax) {
    PrimePower pp = prime_power_decompose(q);
    return get(pp.p, pp.k, order_bound);
  }

  uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  uint64_t order() const { return order_; }
  // Monic degree-k modulus, ascending coefficients (size k+1, top = 1).
  std::span<const uint32_t> modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement(this, std::vector<uint32_t>(k_, 0)); }
  FieldElement one() const { return scalar(1); }
  FieldElement scalar(int64_t v) const {
    std::vector<uint32_t> c(k_, 0);
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += static_cast<int64_t>(p_);
    c[0] = static_cast<uint32_t>(r);
    return FieldElement(this, std::move(c));
  }
  FieldElement from_coeffs(std::vector<uint32_t> c) const {
    if (c.size() != k_) throw validation_error("coefficient vector has wrong length");
    for (uint32_t v : c)
      if (v >= p_) throw validation_error("coefficient out of range [0, p)");
    return FieldElement(this, std::move(c));
  }

  // Elements are indexed in lexicographic coefficient order, low-degree
  // coefficients most significant; index 0 is zero.
  FieldElement element_at(uint64_t index) const {
    if (index >= order_) throw validation_error("element index out of range");
    std::vector<uint32_t> c(k_);
    for (unsigned i = k_; i-- > 0;) {
      c[i] = static_cast<uint32_t>(index % p_);
      index /= p_;
    }
    return FieldElement(this, std::move(c));
  }
  uint64_t index_of(const FieldElement& e) const {
    if (&e.ctx() != this) throw validation_error("field context mismatch");
    uint64_t idx = 0;
    for (unsigned i = 0; i < k_; ++i) idx = idx * p_ + e.c_[i];
    return idx;
  }

 private:
  friend class FieldElement;
  FieldCtx(uint64_t p, unsigned k, uint64_t order, std::vector<uint32_t> modulus)
      : p_(p), k_(k), order_(order), modulus_(std::move(modulus)) {}
  FieldCtx(const FieldCtx&) = delete;

  uint64_t p_;
  unsigned k_;
  uint64_t order_;
  std::vector<uint32_t> modulus_;
};

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.ctx_ == nullptr || a.ctx_ != b.ctx_) throw validation_error("field context mismatch");
  const uint64_t p = a.ctx_->p();
  std::vector<uint32_t> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i) {
    uint64_t s = static_cast<uint64_t>(a.c_[i]) + b.c_[i];
    c[i] = static_cast<uint32_t>(s >= p ? s - p : s);
  }
  return FieldElement(a.ctx_, std::move(c));
}

inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  if (a.ctx_ == nullptr || a.ctx_ != b.ctx_) throw validation_error("field context mismatch");
  const uint64_t p = a.ctx_->p();
  std::vector<uint32_t> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i) {
    uint64_t s = static_cast<uint64_t>(a.c_[i]) + p - b.c_[i];
    c[i] = static_cast<uint32_t>(s >= p ? s - p : s);
  }
  return FieldElement(a.ctx_, std::move(c));
}

inline FieldElement FieldElement::operator-() const {
  const uint64_t p = ctx().p();
  std::vector<uint32_t> c(c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<uint32_t>(c_[i] == 0 ? 0 : p - c_[i]);
  return FieldElement(ctx_, std::move(c));
}

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.ctx_ == nullptr || a.ctx_ != b.ctx_) throw validation_error("field context mismatch");
  const uint64_t p = a.ctx_->p();
  const unsigned k = a.ctx_->k();
  if (k == 1) {
    uint64_t v = static_cast<uint64_t>(a.c_[0]) * b.c_[0] % p;
    return FieldElement(a.ctx_, {static_cast<uint32_t>(v)});
  }
  // convolution, then reduction by the monic modulus x^k + sum m_j x^j
  std::vector<uint64_t> t(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) t[i + j] += static_cast<uint64_t>(a.c_[i]) * b.c_[j];
  }
  for (auto& v : t) v %= p;
  const auto mod = a.ctx_->modulus();
  for (unsigned i = 2 * k - 2; i >= k; --i) {
    uint64_t c = t[i];
    if (c != 0) {
      for (unsigned j = 0; j < k; ++j) {
        if (mod[j] == 0) continue;
        t[i - k + j] = (t[i - k + j] + c * (p - mod[j])) % p;
      }
    }
  }
  std::vector<uint32_t> c(k);
  for (unsigned i = 0; i < k; ++i) c[i] = static_cast<uint32_t>(t[i]);
  return FieldElement(a.ctx_, std::move(c));
}

inline FieldElement FieldElement::pow(uint64_t e) const {
  FieldElement r = ctx().one();
  FieldElement b = *this;
  while (e != 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

inline FieldElement FieldElement::pow(const BigInt& e) const {
  if (e.is_negative()) throw validation_error("negative exponent");
  FieldElement r = ctx().one();
  FieldElement b = *this;
  for (size_t i = 0, n = e.bit_length(); i < n; ++i) {
    if (e.bit(i)) r = r * b;
    if (i + 1 < n) b = b * b;
  }
  return r;
}

inline FieldElement FieldElement::inv() const {
  if (is_zero()) throw validation_error("inverse of zero");
  return pow(ctx().order() - 2);
}

inline std::string FieldElement::str() const {
  std::string s = "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Polynomials with coefficients in a field, used for the deterministic
// modulus search and for listing monic irreducibles (closed points of A^1).

struct FieldPoly {
  std::vector<FieldElement> c;  // ascending; normalized: back() nonzero unless constant zero

  unsigned degree() const { return c.empty() ? 0 : static_cast<unsigned>(c.size() - 1); }
  bool is_zero() const {
    for (const auto& e : c)
      if (!e.is_zero()) return false;
    return true;
  }
  FieldElement eval(const FieldElement& x) const {
    FieldElement acc = x.ctx().zero();
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }
};

// Monic polynomial of degree d whose low-degree coefficients are the most
// significant digits of `index` in base q; index order = lexicographic order.
inline FieldPoly monic_poly_at(const FieldCtx& F, unsigned d, uint64_t index) {
  std::vector<FieldElement> c;
  c.reserve(d + 1);
  std::vector<uint64_t> digits(d);
  for (unsigned i = d; i-- > 0;) {
    digits[i] = index % F.order();
    index /= F.order();
  }
  // digits[0] is the constant coefficient
  for (unsigned i = 0; i < d; ++i) c.push_back(F.element_at(digits[i]));
  c.push_back(F.one());
  return FieldPoly{std::move(c)};
}

// Remainder of a by monic divisor b; true iff it is zero.
inline bool divides_monic(const FieldPoly& b, const FieldPoly& a) {
  std::vector<FieldElement> r = a.c;
  const unsigned db = b.degree();
  while (r.size() > db) {
    FieldElement lead = r.back();
    size_t shift = r.size() - 1 - db;
    if (!lead.is_zero()) {
      for (unsigned j = 0; j < db; ++j) r[shift + j] = r[shift + j] - lead * b.c[j];
    }
    r.pop_back();
  }
  for (const auto& e : r)
    if (!e.is_zero()) return false;
  return true;
}

const std::vector<FieldPoly>& monic_irreducibles(const FieldCtx& F, unsigned d,
                                                 uint64_t poly_bound = limits::kPolyEnumMax);

// Trial division at desk scale: irreducible iff no monic irreducible factor
// of degree <= d/2. Degree-1 factors are found by a root scan.
inline bool is_irreducible_monic(const FieldCtx& F, const FieldPoly& f,
                                 uint64_t poly_bound = limits::kPolyEnumMax) {
  const unsigned d = f.degree();
  if (d == 0) return false;
  if (d == 1) return true;
  for (uint64_t i = 0; i < F.order(); ++i)
    if (f.eval(F.element_at(i)).is_zero()) return false;
  for (unsigned e = 2; e <= d / 2; ++e) {
    for (const auto& g : monic_irreducibles(F, e, poly_bound)) {
      if (divides_monic(g, f)) return false;
    }
  }
  return true;
}

inline const std::vector<FieldPoly>& monic_irreducibles(const FieldCtx& F, unsigned d,
                                                        uint64_t poly_bound) {
  if (d == 0) throw validation_error("degree must be >= 1");
  auto count = checked_pow_u64(F.order(), d, poly_bound);
  if (!count)
    throw bound_error("q^d = " + std::to_string(F.order()) + "^" + std::to_string(d) +
                      " exceeds the polynomial enumeration bound " + std::to_string(poly_bound));
  static std::mutex mu;
  static std::map<std::pair<const FieldCtx*, unsigned>, std::unique_ptr<std::vector<FieldPoly>>>
      cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({&F, d});
    if (it != cache.end()) return *it->second;
  }
  auto list = std::make_unique<std::vector<FieldPoly>>();
  // a zero constant term means divisibility by x, so skip that block
  uint64_t start = d >= 2 ? *count / F.order() : 0;
  for (uint64_t idx = start; idx < *count; ++idx) {
    FieldPoly f = monic_poly_at(F, d, idx);
    if (is_irreducible_monic(F, f, poly_bound)) list->push_back(std::move(f));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace({&F, d}, std::move(list));
  return *it->second;
}

// Every monic irreducible of degree d over F_{p^{k_base}}, lexicographic.
inline const std::vector<FieldPoly>& enumerate_monic_irreducibles(
    uint64_t p, unsigned k_base, unsigned d, uint64_t poly_bound = limits::kPolyEnumMax) {
  return monic_irreducibles(FieldCtx::get(p, k_base), d, poly_bound);
}

inline const FieldCtx& FieldCtx::get(uint64_t p, unsigned k, uint64_t order_bound) {
  if (k < 1) throw validation_error("extension degree must be >= 1");
  if (!is_prime_u64(p)) throw validation_error(std::to_string(p) + " is not prime");
  auto order = checked_pow_u64(p, k, order_bound);
  if (!order)
    throw bound_error("field order " + std::to_string(p) + "^" + std::to_string(k) +
                      " exceeds the bound " + std::to_string(order_bound));

  static std::mutex mu;
  static std::map<std::pair<uint64_t, unsigned>, std::unique_ptr<FieldCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, k});
  if (it != cache.end()) return *it->second;

  std::vector<uint32_t> modulus;
  if (k == 1) {
    modulus = {0, 1};  // x
  } else {
    const FieldCtx& base = [&]() -> const FieldCtx& {
      auto bit = cache.find({p, 1u});
      if (bit != cache.end()) return *bit->second;
      auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx(p, 1, p, {0, 1}));
      return *cache.emplace(std::make_pair(p, 1u), std::move(ctx)).first->second;
    }();
    // start past the zero-constant-term block, all of it divisible by x
    for (uint64_t idx = *checked_pow_u64(p, k - 1, UINT64_MAX);; ++idx) {
      FieldPoly f = monic_poly_at(base, k, idx);
      if (is_irreducible_monic(base, f)) {
        modulus.reserve(k + 1);
        for (const auto& e : f.c) modulus.push_back(e.coeffs()[0]);
        break;
      }
    }
  }
  auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx(p, k, *order, std::move(modulus)));
  return *cache.emplace(std::make_pair(p, k), std::move(ctx)).first->second;
}

// All p^k elements in index order (deterministic, zero first).
inline std::vector<FieldElement> enumerate_elements(const FieldCtx& F,
                                                    uint64_t enum_bound = limits::kElementEnumMax) {
  if (F.order() > enum_bound)
    throw bound_error("field order " + std::to_string(F.order()) +
                      " exceeds the element enumeration bound " + std::to_string(enum_bound));
  std::vector<FieldElement> out;
  out.reserve(F.order());
  for (uint64_t i = 0; i < F.order(); ++i) out.push_back(F.element_at(i));
  return out;
}

// True iff e lies in the subfield with q_sub elements, i.e. e^{q_sub} == e.
inline bool frobenius_fixed(const FieldElement& e, uint64_t q_sub) {
  const FieldCtx& F = e.ctx();
  PrimePower pp = prime_power_decompose(q_sub);
  if (pp.p != F.p())
    throw validation_error("subfield order has characteristic " + std::to_string(pp.p) +
                           ", field has " + std::to_string(F.p()));
  if (F.k() % pp.k != 0)
    throw validation_error("F_{" + std::to_string(q_sub) + "} is not a subfield of F_{" +
                           std::to_string(F.order()) + "}");
  return e.pow(q_sub) == e;
}

// Embedding of a subfield into an extension with the same characteristic,
// realized by mapping the generator to the first root of the small modulus
// in index order. Any root gives the same point counts downstream.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(const FieldCtx& small, const FieldCtx& big) : small_(&small), big_(&big) {
    if (small.p() != big.p() || big.k() % small.k() != 0)
      throw validation_error("no embedding of F_{" + std::to_string(small.order()) + "} into F_{" +
                             std::to_string(big.order()) + "}");
    FieldElement root = big.zero();
    if (small.k() == 1) {
      powers_ = {big.one()};
      return;
    }
    bool found = false;
    for (uint64_t i = 0; i < big.order(); ++i) {
      FieldElement cand = big.element_at(i);
      FieldElement acc = big.zero();
      auto mod = small.modulus();
      for (size_t j = mod.size(); j-- > 0;)
        acc = acc * cand + big.scalar(static_cast<int64_t>(mod[j]));
      if (acc.is_zero()) {
        root = cand;
        found = true;
        break;
      }
    }
    if (!found) throw validation_error("internal: modulus has no root in extension");
    powers_.reserve(small.k());
    FieldElement acc = big.one();
    for (unsigned j = 0; j < small.k(); ++j) {
      powers_.push_back(acc);
      if (j + 1 < small.k()) acc = acc * root;
    }
  }

  FieldElement map(const FieldElement& e) const {
    if (&e.ctx() != small_) throw validation_error("field context mismatch");
    FieldElement acc = big_->zero();
    auto cs = e.coeffs();
    for (unsigned j = 0; j < small_->k(); ++j) {
      if (cs[j] == 0) continue;
      acc = acc + big_->scalar(static_cast<int64_t>(cs[j])) * powers_[j];
    }
    return acc;
  }

 private:
  const FieldCtx* small_;
  const FieldCtx* big_;
  std::vector<FieldElement> powers_;
};

}  // namespace singcurve
