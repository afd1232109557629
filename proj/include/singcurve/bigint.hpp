#pragma once

// Minimal exact signed integer. Point counts N_n grow like q^n, past any
// fixed machine width. Magnitude is little-endian base 2^32 with schoolbook
// multiplication; operands here stay within a few dozen limbs.

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "singcurve/errors.hpp"

namespace singcurve {

class BigInt {
 public:
  BigInt() = default;
  template <std::integral T>
  BigInt(T v) {
    if constexpr (std::is_signed_v<T>)
      assign_signed(static_cast<long long>(v));
    else
      assign_magnitude(static_cast<unsigned long long>(v), +1);
  }

  explicit BigInt(std::string_view decimal) {
    bool neg = false;
    size_t i = 0;
    if (!decimal.empty() && (decimal[0] == '-' || decimal[0] == '+')) {
      neg = decimal[0] == '-';
      i = 1;
    }
    if (i == decimal.size()) throw validation_error("empty integer literal");
    for (; i < decimal.size(); ++i) {
      char c = decimal[i];
      if (c < '0' || c > '9')
        throw validation_error("bad digit in integer literal: " + std::string(decimal));
      mul_small_inplace(10);
      add_small_inplace(static_cast<uint32_t>(c - '0'));
    }
    if (neg && sign_ != 0) sign_ = -1;
  }

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = mag_add(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = mag_cmp(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = mag_sub(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = mag_sub(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
      unsigned __int128 carry = 0;
      for (size_t j = 0; j < b.mag_.size(); ++j) {
        unsigned __int128 cur = r.mag_[i + j];
        cur += static_cast<unsigned __int128>(a.mag_[i]) * b.mag_[j];
        cur += carry;
        r.mag_[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = i + b.mag_.size();
      while (carry != 0) {
        unsigned __int128 cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Quotient truncated toward zero, remainder is the magnitude remainder.
  std::pair<BigInt, uint32_t> divmod(uint32_t d) const {
    if (d == 0) throw validation_error("division by zero");
    BigInt q;
    q.mag_.assign(mag_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | mag_[i];
      q.mag_[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    q.sign_ = sign_;
    q.trim();
    return {q, static_cast<uint32_t>(rem)};
  }

  BigInt divexact(uint32_t d, const char* what) const {
    auto [q, r] = divmod(d);
    if (r != 0)
      throw validation_error(std::string(what) + ": expected exact division by " +
                             std::to_string(d) + ", got remainder " + std::to_string(r) +
                             " from " + str());
    return q;
  }

  static BigInt pow(const BigInt& base, uint64_t e) {
    BigInt r(1), b = base;
    while (e != 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  static BigInt pow_u64(uint64_t base, uint64_t e) { return pow(BigInt(base), e); }

  size_t bit_length() const {
    if (sign_ == 0) return 0;
    uint32_t top = mag_.back();
    size_t bits = (mag_.size() - 1) * 32;
    while (top != 0) {
      ++bits;
      top >>= 1;
    }
    return bits;
  }
  bool bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= mag_.size()) return false;
    return (mag_[limb] >> (i % 32)) & 1u;
  }

  bool fits_i64() const {
    if (mag_.size() > 2) return false;
    uint64_t m = magnitude_u64();
    if (sign_ >= 0) return m <= static_cast<uint64_t>(INT64_MAX);
    return m <= static_cast<uint64_t>(INT64_MAX) + 1;
  }
  int64_t to_i64() const {
    if (!fits_i64()) throw validation_error("integer too large for i64: " + str());
    uint64_t m = magnitude_u64();
    return sign_ < 0 ? -static_cast<int64_t>(m) : static_cast<int64_t>(m);
  }
  uint64_t to_u64() const {
    if (sign_ < 0 || mag_.size() > 2)
      throw validation_error("integer out of u64 range: " + str());
    return magnitude_u64();
  }

  std::string str() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> groups;
    BigInt t = *this;
    t.sign_ = 1;
    while (!t.is_zero()) {
      auto [q, r] = t.divmod(1000000000u);
      groups.push_back(r);
      t = std::move(q);
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(groups.back());
    for (size_t i = groups.size() - 1; i-- > 0;) {
      std::string g = std::to_string(groups[i]);
      s += std::string(9 - g.size(), '0') + g;
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

 private:
  int sign_ = 0;
  std::vector<uint32_t> mag_;

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }
  uint64_t magnitude_u64() const {
    uint64_t m = 0;
    if (mag_.size() > 1) m = static_cast<uint64_t>(mag_[1]) << 32;
    if (!mag_.empty()) m |= mag_[0];
    return m;
  }
  void assign_magnitude(unsigned long long v, int s) {
    mag_.clear();
    while (v != 0) {
      mag_.push_back(static_cast<uint32_t>(v));
      v >>= 32;
    }
    sign_ = mag_.empty() ? 0 : s;
  }
  void assign_signed(long long v) {
    if (v < 0)
      assign_magnitude(-static_cast<unsigned long long>(v), -1);
    else
      assign_magnitude(static_cast<unsigned long long>(v), +1);
  }
  void mul_small_inplace(uint32_t f) {
    uint64_t carry = 0;
    for (auto& limb : mag_) {
      uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
      limb = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry != 0) mag_.push_back(static_cast<uint32_t>(carry));
    trim();
  }
  void add_small_inplace(uint32_t v) {
    if (v == 0) return;
    if (sign_ == 0) {
      mag_.assign(1, v);
      sign_ = 1;
      return;
    }
    uint64_t carry = v;
    for (auto& limb : mag_) {
      uint64_t cur = static_cast<uint64_t>(limb) + carry;
      limb = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      if (carry == 0) break;
    }
    if (carry != 0) mag_.push_back(static_cast<uint32_t>(carry));
  }

  static int mag_cmp(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = mag_cmp(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
  }
  static std::vector<uint32_t> mag_add(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r = big;
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(r[i]) + carry + (i < small.size() ? small[i] : 0);
      r[i] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      if (carry == 0 && i >= small.size()) break;
    }
    if (carry != 0) r.push_back(static_cast<uint32_t>(carry));
    return r;
  }
  // requires |a| >= |b|
  static std::vector<uint32_t> mag_sub(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
      if (cur < 0) {
        cur += int64_t(1) << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<uint32_t>(cur);
      if (borrow == 0 && i >= b.size()) break;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

}  // namespace singcurve
