#include <toml.hpp>

#include "geodex/io.hpp"

namespace geodex::io {

namespace {

std::vector<Turn> turn_list(const toml::array& arr, const std::string& where) {
  std::vector<Turn> out;
  for (const auto& node : arr) {
    if (auto s = node.value<std::string>())
      out.push_back(turn_from(json(*s)));
    else if (auto i = node.value<long long>())
      out.push_back(Turn::rational(Rat(Int(std::to_string(*i)))));
    else
      throw FormatError(where + ": turns must be strings like \"1/3\" or \"(0+1*sqrt(2))/2\"");
  }
  return out;
}

Int toml_int(const toml::node_view<const toml::node>& v, const std::string& where) {
  if (auto i = v.value<long long>()) return Int(std::to_string(*i));
  if (auto s = v.value<std::string>()) return int_from(json(*s));
  throw FormatError(where + " must be an integer");
}

template <class T>
void read_opt(const toml::node_view<const toml::node>& tbl, const char* key, T& dst) {
  if (auto v = tbl[key].value<T>()) dst = *v;
}

}  // namespace

SweepGrid grid_from_toml(const std::string& text) {
  toml::table parsed;
  try {
    parsed = toml::parse(text);
  } catch (const toml::parse_error& e) {
    throw FormatError(std::string("grid: ") + std::string(e.description()));
  }
  if (auto s = parsed["schema"].value<std::string>(); s && *s != kSchema)
    throw FormatError("unsupported schema \"" + *s + "\" (expected \"" + kSchema + "\")");

  const toml::table& t = parsed;
  SweepGrid g;
  const auto c1 = t["c1"];
  if (const toml::array* a = c1["turns"].as_array())
    g.c1_turns = turn_list(*a, "c1.turns");
  else
    throw FormatError("grid: [c1] needs 'turns'");
  if (c1["index"]) g.c1_index = toml_int(c1["index"], "c1.index");

  const auto c2 = t["c2"];
  if (!c2) throw FormatError("grid: missing [c2] table");
  if (auto d = c2["max_den"].value<long long>())
    for (const Rat& q : farey_turns(static_cast<long>(*d))) g.rational_turns.push_back(q);
  if (const toml::array* a = c2["turns"].as_array())
    for (const Turn& x : turn_list(*a, "c2.turns")) {
      if (!x.is_rational()) throw FormatError("c2.turns holds rational turns; use c2.surd_turns");
      g.rational_turns.push_back(x.rat());
    }
  if (const toml::array* a = c2["surd_turns"].as_array()) g.surd_turns = turn_list(*a, "c2.surd_turns");
  if (const toml::array* a = c2["indices"].as_array()) {
    for (const auto& node : *a) {
      auto i = node.value<long long>();
      if (!i) throw FormatError("c2.indices must be integers");
      g.indices.emplace_back(std::to_string(*i));
    }
  } else if (const toml::array* r = c2["index_range"].as_array()) {
    auto lo = (*r)[0].value<long long>(), hi = r->size() == 2 ? (*r)[1].value<long long>() : std::nullopt;
    if (!lo || !hi) throw FormatError("c2.index_range must be [lo, hi]");
    for (long long i = *lo; i <= *hi; ++i) g.indices.emplace_back(std::to_string(i));
  } else {
    throw FormatError("grid: [c2] needs 'indices' or 'index_range'");
  }
  if (const toml::array* a = c2["cases"].as_array())
    for (const auto& node : *a)
      if (auto s = node.value<std::string>()) g.case_filter.push_back(*s);
  read_opt(c2, "include_pm1_blocks", g.include_pm1_blocks);
  read_opt(c2, "include_hyperbolic", g.include_hyperbolic);
  read_opt(c2, "include_n2", g.include_n2);

  const auto o = t["options"];
  if (o) {
    auto& opt = g.options;
    read_opt(o, "k_cap", opt.k_cap);
    if (o["N_bound"]) opt.N_bound = toml_int(o["N_bound"], "options.N_bound");
    if (auto e = o["eps"].value<std::string>()) opt.eps = rat_from(json(*e));
    if (auto x = o["max_certificates"].value<long long>()) opt.max_certificates = static_cast<int>(*x);
    if (auto x = o["max_skipped"].value<long long>()) opt.max_skipped = static_cast<int>(*x);
    read_opt(o, "max_branches", opt.max_branches);
    read_opt(o, "align_c1_top", opt.align_c1_top);
    read_opt(o, "allow_any_c1", opt.allow_any_c1);
  }
  return g;
}

}  // namespace geodex::io
