// Command-line front end: bounds, glue, verify-b, scan-elliptic, census, zeta.
//
// Exit codes: 0 success / verification PASS, 2 malformed JSON, 3 invalid
// input or model (schema, budget, numerator), 4 work bound exceeded,
// 5 verification FAIL.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "singcurve/commands.hpp"
#include "singcurve/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitBound = 4;
constexpr int kExitFail = 5;
constexpr int kExitInternal = 9;

using singcurve::BigInt;
using singcurve::BigPoly;

BigPoly parse_coeff_list(const std::string& s) {
  BigPoly out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw singcurve::validation_error("empty coefficient in list");
    out.emplace_back(std::string_view(item).substr(b, e - b + 1));
  }
  if (out.empty()) throw singcurve::validation_error("empty coefficient list");
  return out;
}

void emit(const nlohmann::json& machine_doc, const std::string& text, bool machine) {
  if (machine)
    std::cout << machine_doc.dump() << "\n";
  else
    std::cout << text;
}

std::string join_counts(const std::vector<BigInt>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += v[i].str();
  }
  return s;
}

int run_bounds(uint64_t q, uint64_t g, uint64_t pi, std::optional<int64_t> nqg_flag,
               bool machine) {
  std::optional<BigInt> external;
  if (nqg_flag) external = BigInt(*nqg_flag);
  auto r = singcurve::cmd_bounds(q, g, pi, external);
  std::ostringstream t;
  t << "q = " << r.q << ", g = " << r.g << ", pi = " << r.pi << "\n";
  t << "m = floor(2 sqrt q)     " << r.m << "\n";
  t << "bound (A)  q+1+gm+pi-g  " << r.bound_a << "\n";
  if (r.nqg)
    t << "N_q(g)                  " << *r.nqg << "\n"
      << "bound (B)  N_q(g)+pi-g  " << *r.bound_b << "\n";
  else
    t << "N_q(g)                  unknown for g >= 2 (use --nqg)\n";
  if (r.delta_optimal_pi_max)
    t << "delta-optimal pi range  [" << r.g << ", " << *r.delta_optimal_pi_max << "]\n"
      << "bound (B) attainable    " << to_string(r.bound_b_attainable)
      << (r.bound_b_attainable == singcurve::TriState::no ? "  (pi outside the range)" : "")
      << "\n";
  else
    t << "delta-optimal pi range  unknown for g >= 2\n";
  t << "maximal pi cap          " << r.maximal_pi_cap << "\n";
  if (r.ihara_ok)
    t << "Ihara genus check       " << (*r.ihara_ok ? "pass" : "fail (no smooth maximal curve)")
      << "\n";
  nlohmann::json input = {{"q", q}, {"g", g}, {"pi", pi}};
  if (nqg_flag) input["nqg"] = *nqg_flag;
  emit(singcurve::command_document("bounds", input, r), t.str(), machine);
  return kExitOk;
}

int run_glue(const std::string& path, std::optional<unsigned> horizon_flag, bool machine) {
  std::ifstream in(path);
  if (!in) throw singcurve::validation_error("cannot open spec file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);  // throws json::parse_error with position
  singcurve::GlueSpec spec = singcurve::parse_glue_spec(doc);
  if (horizon_flag) spec.horizon = *horizon_flag;
  singcurve::CurveReport report = singcurve::run_glue(spec);
  std::ostringstream t;
  t << "q                  " << report.q << "\n";
  t << "geometric genus    " << report.geometric_genus << "\n";
  t << "arithmetic genus   " << report.arithmetic_genus << "\n";
  t << "delta (pi - g)     " << report.delta << "\n";
  t << "Delta_X            " << report.delta_x << "\n";
  t << "N'_n, n=1.." << report.horizon << "      " << join_counts(report.point_counts) << "\n";
  t << "zeta extra factor  [" << join_counts(report.zeta_factor) << "]\n";
  t << "bound (A)          " << report.bound_a << "\n";
  if (report.nqg) t << "N_q(g)             " << *report.nqg << "\n";
  if (report.bound_b) t << "bound (B)          " << *report.bound_b << "\n";
  t << "maximal            " << (report.is_maximal ? "yes" : "no") << "\n";
  t << "delta-optimal      " << to_string(report.is_delta_optimal) << "\n";
  emit(singcurve::report_document(spec, report), t.str(), machine);
  return kExitOk;
}

int run_verify_b(uint64_t q, unsigned n, uint64_t work_bound, bool machine) {
  auto r = singcurve::cmd_verify_b(q, n, work_bound);
  std::ostringstream t;
  t << "curve: image of (s:t) -> (s^(q+1) : s^q t + s t^q : t^(q+1)), q = " << q << "\n";
  t << "brute count over F_q^" << n << "   " << r.brute << "\n";
  t << "glued-model prediction  " << r.predicted << "\n";
  t << (r.pass ? "PASS" : "FAIL") << "\n";
  nlohmann::json input = {{"q", q}, {"n", n}};
  emit(singcurve::command_document("verify-b", input, r), t.str(), machine);
  return r.pass ? kExitOk : kExitFail;
}

int run_scan_elliptic(uint64_t q, uint64_t work_bound, bool machine) {
  auto r = singcurve::cmd_scan_elliptic(q, work_bound);
  std::ostringstream t;
  t << "smooth Weierstrass curves over F_" << q << " by N_1:\n";
  for (const auto& [n1, curves] : r.histogram)
    t << "  N_1 = " << n1 << "   " << curves << " curves\n";
  t << "observed max  " << r.observed_max << "\n";
  t << "N_q(1)        " << r.expected_max << "\n";
  t << "optimal curve: N_2 = " << r.optimal_n2 << ", B_2 = " << r.optimal_b2 << "\n";
  t << (r.pass ? "PASS" : "FAIL") << "\n";
  nlohmann::json input = {{"q", q}};
  emit(singcurve::command_document("scan-elliptic", input, r), t.str(), machine);
  return r.pass ? kExitOk : kExitFail;
}

int run_census(uint64_t q, unsigned d_max, const std::string& base_kind,
               std::optional<int64_t> n1, std::optional<std::string> coeffs, uint64_t work_bound,
               bool machine) {
  singcurve::BaseDescriptor base;
  nlohmann::json base_echo;
  if (base_kind == "p1") {
    base.kind = singcurve::BaseDescriptor::Kind::p1;
    base_echo = {{"type", "p1"}};
  } else if (base_kind == "elliptic") {
    if (!n1) throw singcurve::validation_error("--base elliptic needs --n1");
    base.kind = singcurve::BaseDescriptor::Kind::elliptic_from_count;
    base.n1 = *n1;
    base_echo = {{"type", "elliptic_from_count"}, {"n1", *n1}};
  } else if (base_kind == "numerator") {
    if (!coeffs) throw singcurve::validation_error("--base numerator needs --coeffs");
    base.kind = singcurve::BaseDescriptor::Kind::zeta_numerator;
    base.coeffs = parse_coeff_list(*coeffs);
    base_echo = {{"type", "zeta_numerator"},
                 {"coeffs", singcurve::io_detail::bigints_to_json(base.coeffs)}};
  } else {
    throw singcurve::validation_error("--base must be p1, elliptic or numerator");
  }
  auto r = singcurve::cmd_census(q, d_max, base, work_bound);
  std::ostringstream t;
  t << "closed points of degree d, q = " << q << "\n";
  t << "  d   B_d        brute\n";
  for (const auto& row : r.rows) {
    t << "  " << row.d << "   " << row.b_d.str();
    for (size_t pad = row.b_d.str().size(); pad < 9; ++pad) t << " ";
    t << "  " << (row.brute ? std::to_string(*row.brute) : std::string("-")) << "\n";
  }
  if (r.note) t << "note: " << *r.note << "\n";
  nlohmann::json input = {{"q", q}, {"d_max", d_max}, {"base", base_echo}};
  emit(singcurve::command_document("census", input, r), t.str(), machine);
  return kExitOk;
}

int run_zeta(uint64_t q, const std::string& coeffs, unsigned horizon, bool machine) {
  auto r = singcurve::cmd_zeta(q, parse_coeff_list(coeffs), horizon);
  std::ostringstream t;
  t << "numerator  [" << join_counts(r.numer) << "] over F_" << q << "\n";
  t << "N_n, n=1.." << r.horizon << "   " << join_counts(r.counts) << "\n";
  t << "B_d, d=1.." << r.horizon << "   " << join_counts(r.census) << "\n";
  nlohmann::json input = {{"q", q},
                          {"coeffs", singcurve::io_detail::bigints_to_json(r.numer)},
                          {"horizon", horizon}};
  emit(singcurve::command_document("zeta", input, r), t.str(), machine);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of singular curves over finite fields"};
  app.require_subcommand(1);

  std::string format = "text";
  uint64_t q = 0, g = 0, pi = 0;
  unsigned n = 1, d_max = 4, horizon = 6;
  bool horizon_set = false;
  std::optional<int64_t> nqg_flag;
  std::optional<std::string> coeffs_flag;
  std::string spec_path, base_kind = "p1", coeffs;
  std::optional<int64_t> n1_flag;
  uint64_t work_bound = singcurve::limits::kOracleWorkMax;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
  };

  CLI::App* bounds = app.add_subcommand("bounds", "bounds (A)/(B) and classification caps");
  bounds->add_option("--q", q, "field size (prime power)")->required();
  bounds->add_option("--g", g, "geometric genus")->required();
  bounds->add_option("--pi", pi, "arithmetic genus")->required();
  bounds->add_option("--nqg", nqg_flag, "externally known N_q(g), for g >= 2");
  add_format(bounds);

  CLI::App* glue = app.add_subcommand("glue", "evaluate a glue spec file");
  glue->add_option("--spec", spec_path, "path to a glue spec (JSON)")->required();
  glue->add_option("--horizon", horizon, "override the horizon given in the spec file")
      ->each([&](const std::string&) { horizon_set = true; });
  add_format(glue);

  CLI::App* verify = app.add_subcommand("verify-b", "brute-count the glued rational curve");
  verify->add_option("--q", q, "field size (prime power)")->required();
  verify->add_option("--n", n, "extension degree");
  verify->add_option("--work-bound", work_bound, "enumeration work bound");
  add_format(verify);

  CLI::App* scan = app.add_subcommand("scan-elliptic", "scan all Weierstrass curves over F_q");
  scan->add_option("--q", q, "field size (prime power)")->required();
  scan->add_option("--work-bound", work_bound, "enumeration work bound");
  add_format(scan);

  CLI::App* census = app.add_subcommand("census", "closed points by degree");
  census->add_option("--q", q, "field size (prime power)")->required();
  census->add_option("--d-max", d_max, "largest degree");
  census->add_option("--base", base_kind, "base curve: p1|elliptic|numerator");
  census->add_option("--n1", n1_flag, "rational point count for --base elliptic");
  census->add_option("--coeffs", coeffs_flag, "comma-separated numerator for --base numerator");
  census->add_option("--work-bound", work_bound, "enumeration work bound");
  add_format(census);

  CLI::App* zeta = app.add_subcommand("zeta", "point counts and census of a numerator");
  zeta->add_option("--q", q, "field size (prime power)")->required();
  zeta->add_option("--coeffs", coeffs, "comma-separated numerator coefficients")->required();
  zeta->add_option("--horizon", horizon, "table horizon");
  add_format(zeta);

  CLI11_PARSE(app, argc, argv);
  const bool machine = format == "machine";

  try {
    if (bounds->parsed()) return run_bounds(q, g, pi, nqg_flag, machine);
    if (glue->parsed())
      return run_glue(spec_path, horizon_set ? std::optional<unsigned>(horizon) : std::nullopt,
                      machine);
    if (verify->parsed()) return run_verify_b(q, n, work_bound, machine);
    if (scan->parsed()) return run_scan_elliptic(q, work_bound, machine);
    if (census->parsed())
      return run_census(q, d_max, base_kind, n1_flag, coeffs_flag, work_bound, machine);
    if (zeta->parsed()) return run_zeta(q, coeffs, horizon, machine);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const singcurve::bound_error& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const singcurve::validation_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
