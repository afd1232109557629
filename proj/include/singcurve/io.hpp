#pragma once

// JSON forms of the glue spec documents and the reports. Parsing is strict:
// unknown fields are rejected, integers may be given as JSON integers or as
// decimal strings (large values must use strings, JSON numbers lose
// precision past 2^63). All emitted integers that can exceed 64 bits are
// decimal strings, so output is exact and round-trips losslessly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "singcurve/commands.hpp"
#include "singcurve/version.hpp"

namespace singcurve {

using json = nlohmann::json;

namespace io_detail {

inline void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                           const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok)
      throw validation_error("unknown field \"" + it.key() + "\" in " + where);
  }
}

inline const json& require(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw validation_error(std::string("missing field \"") + key + "\" in " + where);
  return *it;
}

inline BigInt parse_bigint(const json& v, const char* where) {
  if (v.is_number_integer()) return BigInt(v.get<int64_t>());
  if (v.is_number_unsigned()) return BigInt(v.get<uint64_t>());
  if (v.is_string()) return BigInt(std::string_view(v.get_ref<const std::string&>()));
  throw validation_error(std::string("expected an integer (number or decimal string) in ") +
                         where);
}

inline uint64_t parse_u64(const json& v, const char* where) {
  BigInt b = parse_bigint(v, where);
  if (b.is_negative()) throw validation_error(std::string("expected a nonnegative integer in ") + where);
  return b.to_u64();
}

inline unsigned parse_unsigned(const json& v, const char* where) {
  uint64_t u = parse_u64(v, where);
  if (u > UINT32_MAX) throw validation_error(std::string("value too large in ") + where);
  return static_cast<unsigned>(u);
}

inline json bigints_to_json(const std::vector<BigInt>& v) {
  json arr = json::array();
  for (const auto& b : v) arr.push_back(b.str());
  return arr;
}

inline std::vector<BigInt> bigints_from_json(const json& arr, const char* where) {
  if (!arr.is_array()) throw validation_error(std::string("expected an array in ") + where);
  std::vector<BigInt> v;
  v.reserve(arr.size());
  for (const auto& e : arr) v.push_back(parse_bigint(e, where));
  return v;
}

}  // namespace io_detail

// --------------------------------------------------------------------------
// GlueSpecDocument

inline GlueSpec parse_glue_spec(const json& doc) {
  using namespace io_detail;
  if (!doc.is_object()) throw validation_error("glue spec must be a JSON object");
  reject_unknown(doc, {"q", "base", "singularities", "horizon", "external_nqg"}, "glue spec");
  GlueSpec spec;
  spec.q = parse_u64(require(doc, "q", "glue spec"), "\"q\"");

  const json& base = require(doc, "base", "glue spec");
  if (!base.is_object()) throw validation_error("\"base\" must be an object");
  const json& type = require(base, "type", "\"base\"");
  if (!type.is_string()) throw validation_error("\"base.type\" must be a string");
  std::string kind = type.get<std::string>();
  if (kind == "p1") {
    reject_unknown(base, {"type"}, "\"base\"");
    spec.base.kind = BaseDescriptor::Kind::p1;
  } else if (kind == "zeta_numerator") {
    reject_unknown(base, {"type", "coeffs"}, "\"base\"");
    spec.base.kind = BaseDescriptor::Kind::zeta_numerator;
    spec.base.coeffs = bigints_from_json(require(base, "coeffs", "\"base\""), "\"base.coeffs\"");
  } else if (kind == "elliptic_from_count") {
    reject_unknown(base, {"type", "n1"}, "\"base\"");
    spec.base.kind = BaseDescriptor::Kind::elliptic_from_count;
    spec.base.n1 = io_detail::parse_bigint(require(base, "n1", "\"base\""), "\"base.n1\"").to_i64();
  } else {
    throw validation_error("unknown base type \"" + kind +
                           "\" (expected p1, zeta_numerator or elliptic_from_count)");
  }

  const json& sings = require(doc, "singularities", "glue spec");
  if (!sings.is_array()) throw validation_error("\"singularities\" must be an array");
  for (const auto& s : sings) {
    if (!s.is_object()) throw validation_error("each singularity must be an object");
    reject_unknown(s, {"branches"}, "singularity");
    const json& branches = require(s, "branches", "singularity");
    if (!branches.is_array()) throw validation_error("\"branches\" must be an array");
    SingularityPrescription pres;
    for (const auto& b : branches) {
      if (!b.is_object()) throw validation_error("each branch must be an object");
      reject_unknown(b, {"degree", "multiplicity"}, "branch");
      BranchSpec bs;
      bs.degree = parse_unsigned(require(b, "degree", "branch"), "\"degree\"");
      bs.multiplicity = parse_unsigned(require(b, "multiplicity", "branch"), "\"multiplicity\"");
      pres.branches.push_back(bs);
    }
    spec.singularities.push_back(std::move(pres));
  }

  if (auto it = doc.find("horizon"); it != doc.end())
    spec.horizon = parse_unsigned(*it, "\"horizon\"");
  if (auto it = doc.find("external_nqg"); it != doc.end())
    spec.external_nqg = io_detail::parse_bigint(*it, "\"external_nqg\"");
  return spec;
}

inline json glue_spec_to_json(const GlueSpec& spec) {
  json base;
  switch (spec.base.kind) {
    case BaseDescriptor::Kind::p1:
      base = {{"type", "p1"}};
      break;
    case BaseDescriptor::Kind::zeta_numerator:
      base = {{"type", "zeta_numerator"}, {"coeffs", io_detail::bigints_to_json(spec.base.coeffs)}};
      break;
    case BaseDescriptor::Kind::elliptic_from_count:
      base = {{"type", "elliptic_from_count"}, {"n1", spec.base.n1}};
      break;
  }
  json sings = json::array();
  for (const auto& pres : spec.singularities) {
    json branches = json::array();
    for (const auto& b : pres.branches)
      branches.push_back({{"degree", b.degree}, {"multiplicity", b.multiplicity}});
    sings.push_back({{"branches", branches}});
  }
  json doc = {{"q", spec.q}, {"base", base}, {"singularities", sings}, {"horizon", spec.horizon}};
  if (spec.external_nqg) doc["external_nqg"] = spec.external_nqg->str();
  return doc;
}

// --------------------------------------------------------------------------
// CurveReport / ReportDocument

inline json report_to_json(const CurveReport& r) {
  json j = {{"q", r.q},
            {"geometric_genus", r.geometric_genus},
            {"arithmetic_genus", r.arithmetic_genus},
            {"delta", r.delta},
            {"delta_x", r.delta_x},
            {"horizon", r.horizon},
            {"point_counts", io_detail::bigints_to_json(r.point_counts)},
            {"zeta_factor", io_detail::bigints_to_json(r.zeta_factor)},
            {"bound_a", r.bound_a.str()},
            {"is_delta_optimal", to_string(r.is_delta_optimal)},
            {"is_maximal", r.is_maximal}};
  if (r.nqg) j["nqg"] = r.nqg->str();
  if (r.bound_b) j["bound_b"] = r.bound_b->str();
  return j;
}

inline CurveReport report_from_json(const json& j) {
  using namespace io_detail;
  reject_unknown(j,
                 {"q", "geometric_genus", "arithmetic_genus", "delta", "delta_x", "horizon",
                  "point_counts", "zeta_factor", "bound_a", "nqg", "bound_b", "is_delta_optimal",
                  "is_maximal"},
                 "report");
  CurveReport r;
  r.q = parse_u64(require(j, "q", "report"), "\"q\"");
  r.geometric_genus = parse_u64(require(j, "geometric_genus", "report"), "\"geometric_genus\"");
  r.arithmetic_genus = parse_u64(require(j, "arithmetic_genus", "report"), "\"arithmetic_genus\"");
  r.delta = parse_u64(require(j, "delta", "report"), "\"delta\"");
  r.delta_x = parse_u64(require(j, "delta_x", "report"), "\"delta_x\"");
  r.horizon = parse_unsigned(require(j, "horizon", "report"), "\"horizon\"");
  r.point_counts = bigints_from_json(require(j, "point_counts", "report"), "\"point_counts\"");
  r.zeta_factor = bigints_from_json(require(j, "zeta_factor", "report"), "\"zeta_factor\"");
  r.bound_a = parse_bigint(require(j, "bound_a", "report"), "\"bound_a\"");
  if (auto it = j.find("nqg"); it != j.end()) r.nqg = parse_bigint(*it, "\"nqg\"");
  if (auto it = j.find("bound_b"); it != j.end()) r.bound_b = parse_bigint(*it, "\"bound_b\"");
  std::string flag = require(j, "is_delta_optimal", "report").get<std::string>();
  r.is_delta_optimal = flag == "yes"    ? TriState::yes
                       : flag == "no"   ? TriState::no
                       : flag == "unknown"
                           ? TriState::unknown
                           : throw validation_error("bad \"is_delta_optimal\" value: " + flag);
  r.is_maximal = require(j, "is_maximal", "report").get<bool>();
  return r;
}

inline json report_document(const GlueSpec& spec, const CurveReport& r) {
  return {{"command", "glue"},
          {"input", glue_spec_to_json(spec)},
          {"result", report_to_json(r)},
          {"tool", kToolName},
          {"version", kToolVersion}};
}

struct ReportDocument {
  GlueSpec input;
  CurveReport result;
};

inline ReportDocument parse_report_document(const json& doc) {
  using namespace io_detail;
  if (!doc.is_object()) throw validation_error("report document must be a JSON object");
  reject_unknown(doc, {"command", "input", "result", "tool", "version"}, "report document");
  if (require(doc, "command", "report document").get<std::string>() != "glue")
    throw validation_error("not a glue report document");
  ReportDocument rd;
  rd.input = parse_glue_spec(require(doc, "input", "report document"));
  rd.result = report_from_json(require(doc, "result", "report document"));
  return rd;
}

inline json serialize_report_document(const ReportDocument& rd) {
  return report_document(rd.input, rd.result);
}

// --------------------------------------------------------------------------
// Machine forms of the other commands

inline json to_json(const BoundsReport& r) {
  json j = {{"q", r.q},
            {"g", r.g},
            {"pi", r.pi},
            {"m", r.m},
            {"bound_a", r.bound_a.str()},
            {"maximal_pi_max", r.maximal_pi_cap.str()},
            {"bound_b_attainable", to_string(r.bound_b_attainable)}};
  if (r.nqg) j["nqg"] = r.nqg->str();
  if (r.bound_b) j["bound_b"] = r.bound_b->str();
  if (r.delta_optimal_pi_max) j["delta_optimal_pi_max"] = r.delta_optimal_pi_max->str();
  if (r.ihara_ok) j["ihara_ok"] = *r.ihara_ok;
  return j;
}

inline json to_json(const VerifyBResult& r) {
  return {{"q", r.q},
          {"n", r.n},
          {"brute", r.brute},
          {"predicted", r.predicted.str()},
          {"pass", r.pass}};
}

inline json to_json(const ScanEllipticReport& r) {
  json hist = json::object();
  for (const auto& [n1, curves] : r.histogram) hist[std::to_string(n1)] = curves;
  return {{"q", r.q},
          {"histogram", hist},
          {"observed_max", r.observed_max},
          {"expected_max", r.expected_max},
          {"pass", r.pass},
          {"optimal_n2", r.optimal_n2},
          {"optimal_b2", r.optimal_b2.str()}};
}

inline json to_json(const CensusReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr = {{"d", row.d}, {"b_d", row.b_d.str()}};
    if (row.brute) jr["brute"] = *row.brute;
    rows.push_back(jr);
  }
  json j = {{"q", r.q}, {"d_max", r.d_max}, {"rows", rows}};
  if (r.note) j["note"] = *r.note;
  return j;
}

inline json to_json(const ZetaInspect& r) {
  return {{"q", r.q},
          {"numerator", io_detail::bigints_to_json(r.numer)},
          {"horizon", r.horizon},
          {"point_counts", io_detail::bigints_to_json(r.counts)},
          {"census", io_detail::bigints_to_json(r.census)}};
}

template <typename Result>
json command_document(const char* command, const json& input, const Result& result) {
  return {{"command", command},
          {"input", input},
          {"result", to_json(result)},
          {"tool", kToolName},
          {"version", kToolVersion}};
}

}  // namespace singcurve
