#include "geodex/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace geodex::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

bool fits_int64(const Int& v) {
  static const Int lo(std::to_string(std::numeric_limits<long long>::min()));
  static const Int hi(std::to_string(std::numeric_limits<long long>::max()));
  return v >= lo && v <= hi;
}

json int_list(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_json(x));
  return a;
}

}  // namespace

json to_json(const Int& v) {
  if (fits_int64(v)) return json(std::stoll(v.get_str()));
  return json(v.get_str());
}

Int int_from(const json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0) throw FormatError("not an integer: '" + s + "'");
    return v;
  }
  throw FormatError("expected an integer, got " + j.dump());
}

json exact_json(const Rat& q) { return {{"value", rat_str(q)}, {"approx", q.get_d()}}; }
json exact_json(const ExactReal& x) { return {{"value", x.str()}, {"approx", x.approx()}}; }

Rat rat_from(const json& j) {
  if (j.is_number_integer()) return Rat(int_from(j));
  if (j.is_object() && j.contains("value")) return rat_from(j.at("value"));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("expected a rational, got " + j.dump());
}

json to_json(const Turn& t) { return t.str(); }

Turn turn_from(const json& j) {
  if (j.is_number_integer()) return Turn::rational(Rat(int_from(j)));
  if (!j.is_string()) throw FormatError("turn must be a string literal, got " + j.dump());
  try {
    return Turn::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw FormatError(e.what());
  }
}

json to_json(const Block& b) {
  json j = {{"kind", kind_name(b.kind)}};
  if (b.turn) j["turn"] = to_json(*b.turn);
  if (b.kind == BlockKind::Hyperbolic) j["dim"] = b.hyperbolic_dim;
  return j;
}

Block block_from(const json& j) {
  Block b;
  try {
    b.kind = parse_kind(require(j, "kind").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  if (j.contains("turn")) b.turn = turn_from(j.at("turn"));
  if (j.contains("dim")) b.hyperbolic_dim = j.at("dim").get<int>();
  return b;
}

json to_json(const Decomposition& d) {
  json blocks = json::array();
  for (const Block& b : d.blocks) blocks.push_back(to_json(b));
  return {{"n", d.n}, {"blocks", blocks}};
}

Decomposition decomposition_from(const json& j) {
  Decomposition d;
  d.n = require(j, "n").get<int>();
  const json& blocks = require(j, "blocks");
  if (!blocks.is_array()) throw FormatError("'blocks' must be an array");
  for (const json& b : blocks) d.blocks.push_back(block_from(b));
  return d;
}

json to_json(const GeodesicModel& g) {
  json j = {{"decomposition", to_json(g.decomposition)}, {"index", to_json(g.initial_index)}};
  if (!g.label.empty()) j["label"] = g.label;
  return j;
}

GeodesicModel model_from(const json& j) {
  check_schema(j);
  GeodesicModel g;
  g.decomposition = decomposition_from(j.contains("decomposition") ? j.at("decomposition") : j);
  g.initial_index = int_from(require(j, "index"));
  if (j.contains("label")) g.label = j.at("label").get<std::string>();
  return g;
}

json to_json(const TypeNumbers& t) {
  json j = json::object();
  for (const auto& [r, k] : t.by_class) j[std::to_string(r)] = k;
  return j;
}

TypeNumbers types_from(const json& j) {
  if (!j.is_object()) throw FormatError("'types' must map residue classes to tuples");
  TypeNumbers t;
  for (const auto& [key, val] : j.items()) {
    std::size_t used = 0;
    long r = 0;
    try {
      r = std::stol(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw FormatError("residue class key '" + key + "' is not an integer");
    t.by_class[r] = val.get<TypeTuple>();
  }
  return t;
}

json to_json(const DressedGeodesic& dg) {
  json j = to_json(dg.model);
  if (!dg.types.by_class.empty()) j["types"] = to_json(dg.types);
  return j;
}

DressedGeodesic dressed_from(const json& j) {
  DressedGeodesic dg{model_from(j), {}};
  if (j.contains("types")) dg.types = types_from(j.at("types"));
  return dg;
}

std::vector<GeodesicModel> Config::models() const {
  std::vector<GeodesicModel> out;
  for (const auto& dg : geodesics) out.push_back(dg.model);
  return out;
}

Config config_from(const json& j) {
  check_schema(j);
  Config c;
  const json& gs = require(j, "geodesics");
  if (!gs.is_array() || gs.empty()) throw FormatError("'geodesics' must be a non-empty array");
  for (const json& g : gs) c.geodesics.push_back(dressed_from(g));
  c.n = j.contains("n") ? j.at("n").get<int>() : c.geodesics.front().model.n();
  for (const auto& dg : c.geodesics)
    if (dg.model.n() != c.n)
      throw FormatError("geodesic dimension " + std::to_string(dg.model.n()) + " differs from n = " +
                        std::to_string(c.n));
  return c;
}

json to_json(const Config& c) {
  json gs = json::array();
  for (const auto& dg : c.geodesics) gs.push_back(to_json(dg));
  return {{"n", c.n}, {"geodesics", gs}};
}

std::vector<IterWindow> windows_from(const json& j) {
  const json& arr = j.is_object() ? require(j, "windows") : j;
  if (!arr.is_array()) throw FormatError("windows must be an array of {lo, hi}");
  std::vector<IterWindow> out;
  for (const json& w : arr) out.push_back({int_from(require(w, "lo")), int_from(require(w, "hi"))});
  return out;
}

void check_schema(const json& j) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema)
    throw FormatError("unsupported schema " + j.at("schema").dump() + " (expected \"" + kSchema + "\")");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

json to_json(const JumpCertificate& c) {
  return {{"N", to_json(c.N)},
          {"two_N", to_json(Int(2 * c.N))},
          {"M", to_json(c.M)},
          {"eps", exact_json(c.eps)},
          {"m", int_list(c.m)},
          {"xi", c.xi}};
}

json to_json(const JumpVerification& v) {
  json checks = json::array();
  for (const auto& c : v.checks)
    checks.push_back({{"geodesic", c.geodesic + 1},
                      {"name", c.name},
                      {"iterate", to_json(c.iterate)},
                      {"lhs", to_json(c.lhs)},
                      {"relation", c.relation},
                      {"rhs", to_json(c.rhs)},
                      {"ok", c.ok}});
  return {{"ok", v.ok}, {"structural", v.structural}, {"checks", checks}};
}

json to_json(const IndexProfile& p) {
  json rows = json::array();
  for (const auto& r : p.rows) rows.push_back({{"m", to_json(r.m)}, {"index", to_json(r.index)}, {"nullity", r.nullity}});
  return {{"mean_index", exact_json(p.mean_index)},
          {"elliptic_height", p.elliptic_height},
          {"T", to_json(p.period)},
          {"rows", rows}};
}

json to_json(const IdentityReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back({{"chi_hat", exact_json(t.chi_hat)}, {"mean_index", exact_json(t.mean_index)}});
  return {{"terms", terms},
          {"lhs", exact_json(r.lhs)},
          {"rhs", exact_json(r.rhs)},
          {"residue", exact_json(r.residue)},
          {"comparison", r.comparison},
          {"holds", r.holds}};
}

json to_json(const MorseReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"q", row.q},
                    {"M", to_json(row.M)},
                    {"b", to_json(row.b)},
                    {"alt_residue", to_json(row.alt_residue)},
                    {"strong_ok", row.strong_ok},
                    {"alt_ok", row.alt_ok}});
  json j = {{"rows", rows}, {"ok", !r.first_violation.has_value()}};
  if (r.first_violation) {
    j["first_violation"] = *r.first_violation;
    j["violation"] = r.violation;
  }
  return j;
}

json to_json(const EliminationReport& r) {
  json j = {{"case", r.case_label},
            {"status", r.status == Outcome::Eliminated ? "eliminated" : "not-eliminated"},
            {"branches", r.branches},
            {"certificates_tried", r.certificates_tried},
            {"certificates_skipped", r.certificates_skipped},
            {"cap_saturated", r.cap_saturated}};
  if (r.status != Outcome::Eliminated) j["reason"] = {{"kind", r.reason_kind}, {"detail", r.reason}};
  json facts = json::array();
  for (const auto& f : r.facts) facts.push_back({{"name", f.name}, {"value", f.value}, {"anchor", f.anchor}});
  j["facts"] = facts;
  if (r.contradiction) {
    const auto& c = *r.contradiction;
    j["contradiction"] = {{"anchor", c.anchor}, {"constraint", c.constraint}, {"lhs", c.lhs},
                          {"relation", c.relation}, {"rhs", c.rhs}};
  }
  j["branch_failures"] = r.branch_failures;
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

json to_json(const SweepSummary& s, bool details) {
  json j = {{"cells", s.cells},
            {"eliminated", s.eliminated},
            {"not_eliminated", s.not_eliminated},
            {"precondition_skipped", s.precondition_skipped},
            {"errors", s.errors},
            {"by_case", s.by_case},
            {"by_anchor", s.by_anchor}};
  json cells = json::array();
  for (const auto& c : s.cells_detail) {
    const bool interesting = c.report.status != Outcome::Eliminated && c.report.reason_kind != "precondition";
    if (!details && !interesting && c.error.empty()) continue;
    json cell = {{"c2", to_json(c.c2)}, {"report", to_json(c.report)}};
    if (!c.error.empty()) cell["error"] = c.error;
    cells.push_back(cell);
  }
  j[details ? "cells_detail" : "unresolved_cells"] = cells;
  return j;
}

}  // namespace geodex::io
