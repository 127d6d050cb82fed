#include "geodex/cases.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "geodex/homology.hpp"

namespace geodex {

namespace {

constexpr const char* kTypeExclusion = "iteration-type-exclusion";
constexpr const char* kLowerBound = "morse-lower-bound";
constexpr const char* kLowAlternating = "low-degree-alternating";
constexpr const char* kWindowInequality = "window-alternating-inequality";
constexpr const char* kWindowEquality = "window-alternating-equality";
constexpr const char* kIdentity = "mean-index-identity";

int stage_depth(const std::string& anchor) {
  if (anchor == kTypeExclusion) return 0;
  if (anchor == kLowerBound) return 1;
  if (anchor == kLowAlternating) return 2;
  if (anchor == kWindowInequality || anchor == kWindowEquality) return 3;
  return 4;
}

bool is_surd_rotation(const Block& b) { return b.kind == BlockKind::Rotation && b.turn && !b.turn->is_rational(); }

std::string degree_label(long q, const Int& N) {
  Int d = Int(q) - 2 * N;
  if (abs(d) <= 16) {
    if (d == 0) return "2N";
    return "2N" + std::string(d > 0 ? "+" : "") + d.get_str();
  }
  return std::to_string(q);
}

std::string tuple_str(const TypeTuple& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

struct ClassData {
  Int index;  // i(c^r) for the representative r
  int nu = 0;
  int beta = 1;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Per-geodesic data shared by every certificate of one elimination run.
struct GeodesicData {
  const GeodesicModel* model = nullptr;
  ExactReal mean;
  Int period;
  long T = 0;
  std::vector<ClassData> classes;  // index r-1
  std::vector<long> group_of;      // class -> group root (class id), -1 when nondegenerate
};

GeodesicData prepare(const GeodesicModel& g) {
  GeodesicData d;
  d.model = &g;
  d.mean = mean_index(g);
  d.period = minimal_period(g);
  if (d.period > 100000) throw std::runtime_error("minimal period " + d.period.get_str() + " too large");
  d.T = d.period.get_si();
  d.classes.resize(static_cast<std::size_t>(d.T));
  for (long r = 1; r <= d.T; ++r) {
    Int idx = index_at(g, r);
    d.classes[static_cast<std::size_t>(r - 1)] = {idx, nullity_at(g, r), beta_at(g, r)};
  }
  // Iterates c^a | c^b with equal nullity and beta share type numbers; at the
  // level of classes mod T this links r to r' whenever gcd(r, T) | r'.
  UnionFind uf(static_cast<std::size_t>(d.T));
  for (long r = 1; r <= d.T; ++r) {
    const auto& cr = d.classes[static_cast<std::size_t>(r - 1)];
    if (cr.nu == 0) continue;
    const long g_r = std::gcd(r, d.T);
    for (long s = 1; s <= d.T; ++s) {
      if (s == r || s % g_r != 0) continue;
      const auto& cs = d.classes[static_cast<std::size_t>(s - 1)];
      if (cs.nu == cr.nu && cs.beta == cr.beta) uf.unite(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(s - 1));
    }
  }
  d.group_of.assign(static_cast<std::size_t>(d.T), -1);
  for (long r = 1; r <= d.T; ++r)
    if (d.classes[static_cast<std::size_t>(r - 1)].nu > 0)
      d.group_of[static_cast<std::size_t>(r - 1)] = static_cast<long>(uf.find(static_cast<std::size_t>(r - 1)));
  return d;
}

// Iterates whose critical modules can reach a degree in [a, b]; uses
// |i(c^m) - m*mean| <= n-1 and nu <= 2(n-1).
std::vector<Int> contributing_iterates(const GeodesicData& gd, long a, long b) {
  const long n1 = gd.model->n() - 1;
  Int lo = (ExactReal(Rat(a - 3 * n1)) / gd.mean).floor();
  if (lo < 1) lo = 1;
  Int hi = (ExactReal(Rat(b + n1)) / gd.mean).ceil();
  std::vector<Int> out;
  for (Int m = lo; m <= hi; ++m) {
    Int idx = index_at(*gd.model, m);
    if (idx > b) continue;
    if (idx + nullity_at(*gd.model, m) < a) continue;
    out.push_back(m);
  }
  return out;
}

struct Range {
  long lo, hi;
};

struct VarTerm {
  std::size_t var;
  long l;
};

struct BranchFailure {
  std::string anchor;
  Contradiction detail;
};

struct CertificateOutcome {
  bool eliminated = false;
  bool budget = false;
  long branches = 0;
  std::map<std::string, long> failures;
  std::optional<Contradiction> deepest;
  int deepest_depth = -1;
  std::string survivor;
  std::vector<DerivedFact> facts;
  bool cap_saturated = false;
};

struct Variable {
  std::size_t geodesic;
  long group;  // root class id
  int nu;
  int beta;
  std::vector<TypeTuple> tuples;
  std::vector<long> members;  // classes r (1-based) in the group
};

CertificateOutcome analyze_certificate(const std::vector<GeodesicData>& gds, const JumpCertificate& cert,
                                       const EliminateOptions& opt, int n) {
  CertificateOutcome out;
  const Int& N = cert.N;
  const long twoN = Int(2 * N).get_si();
  const long w_lo = twoN - opt.window_below, w_hi = twoN + opt.window_above;
  std::vector<Range> ranges;
  if (opt.low_degree_max + 1 >= w_lo)
    ranges.push_back({0, w_hi});
  else {
    ranges.push_back({0, opt.low_degree_max});
    ranges.push_back({w_lo, w_hi});
  }
  const bool merged = ranges.size() == 1;

  // Degrees covered, and contributions per degree.
  std::map<long, long> base;
  std::map<long, std::vector<VarTerm>> terms;
  for (const auto& r : ranges)
    for (long q = r.lo; q <= r.hi; ++q) {
      base[q] = 0;
      terms[q];
    }

  std::vector<Variable> vars;
  std::map<std::pair<std::size_t, long>, std::size_t> var_of;
  auto variable_for = [&](std::size_t j, long r) -> std::size_t {
    const GeodesicData& gd = gds[j];
    const long grp = gd.group_of[static_cast<std::size_t>(r - 1)];
    auto key = std::make_pair(j, grp);
    auto it = var_of.find(key);
    if (it != var_of.end()) return it->second;
    const auto& cd = gd.classes[static_cast<std::size_t>(r - 1)];
    Variable v{j, grp, cd.nu, cd.beta, enumerate_admissible_types(cd.nu, cd.beta, opt.k_cap), {}};
    for (long s = 1; s <= gd.T; ++s)
      if (gd.group_of[static_cast<std::size_t>(s - 1)] == grp) v.members.push_back(s);
    vars.push_back(std::move(v));
    var_of[key] = vars.size() - 1;
    return vars.size() - 1;
  };

  for (std::size_t j = 0; j < gds.size(); ++j) {
    std::set<Int> iters;
    for (const auto& r : ranges)
      for (const Int& m : contributing_iterates(gds[j], r.lo, r.hi)) iters.insert(m);
    for (const Int& m : iters) {
      const long r = residue_class(m, gds[j].period);
      const Int idx = index_at(*gds[j].model, m);
      const int nu = nullity_at(*gds[j].model, m);
      const int beta = beta_at(*gds[j].model, m);
      if (nu == 0) {
        if (beta == 1 && base.count(idx.get_si())) ++base[idx.get_si()];
        continue;
      }
      const std::size_t v = variable_for(j, r);
      for (long l = 0; l <= nu; ++l) {
        const long q = idx.get_si() + l;
        if (terms.count(q)) terms[q].push_back({v, l});
      }
    }
  }

  // Facts about the jump itself.
  out.facts.push_back({"N", N.get_str(), "common-index-jump"});
  out.facts.push_back({"degree window", "[" + degree_label(w_lo, N) + ", " + degree_label(w_hi, N) + "] = [" +
                                            std::to_string(w_lo) + ", " + std::to_string(w_hi) + "]",
                       "common-index-jump"});
  for (std::size_t j = 0; j < gds.size(); ++j) {
    const std::string c = "c" + std::to_string(j + 1);
    const Int m2 = 2 * cert.m[j];
    out.facts.push_back({"2m_" + std::to_string(j + 1), m2.get_str(), "common-index-jump"});
    out.facts.push_back({"i(" + c + "^{2m})", index_at(*gds[j].model, m2).get_str() + " = " +
                                                  degree_label(index_at(*gds[j].model, m2).get_si(), N),
                         "index-iteration"});
    out.facts.push_back({"nu(" + c + "^{2m})", std::to_string(nullity_at(*gds[j].model, m2)), "index-iteration"});
  }

  // Divisor/multiple pairs for the local-maximum propagation filter.
  struct MaxPair {
    std::size_t var_div, var_mul;
    int nu_div, nu_mul;
  };
  std::vector<MaxPair> max_pairs;
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = 0; b < vars.size(); ++b) {
      if (vars[a].geodesic != vars[b].geodesic || vars[b].nu < vars[a].nu) continue;
      const long T = gds[vars[a].geodesic].T;
      bool linked = false;
      for (long r : vars[a].members) {
        const long g_r = std::gcd(r, T);
        for (long s : vars[b].members)
          if (s % g_r == 0) linked = true;
      }
      if (linked && a != b) max_pairs.push_back({a, b, vars[a].nu, vars[b].nu});
    }

  // Static parts of the mean index bound.
  struct Side {
    Rat fixed;          // forced classes
    Rat free_lo, free_hi;
    bool lo_unbounded = false, hi_unbounded = false;
    ExactReal scale;  // 1 / (T * mean)
  };
  std::vector<Side> sides(gds.size());
  for (std::size_t j = 0; j < gds.size(); ++j) {
    const GeodesicData& gd = gds[j];
    Side& s = sides[j];
    s.scale = (ExactReal(gd.period) * gd.mean).inverse();
    for (long r = 1; r <= gd.T; ++r) {
      const auto& cd = gd.classes[static_cast<std::size_t>(r - 1)];
      if (cd.nu == 0) {
        s.fixed += Rat(tuple_euler(forced_nondegenerate(cd.beta), cd.index));
        continue;
      }
      if (var_of.count({j, gd.group_of[static_cast<std::size_t>(r - 1)]})) continue;
      ChiRange cr = chi_range(cd.nu, cd.beta, cd.index);
      if (cr.lo)
        s.free_lo += Rat(*cr.lo);
      else
        s.lo_unbounded = true;
      if (cr.hi)
        s.free_hi += Rat(*cr.hi);
      else
        s.hi_unbounded = true;
    }
  }
  const Rat B = constant_B(n);

  // Per-variable chi contribution for each tuple (summed over the group's classes).
  std::vector<std::vector<Int>> var_chi(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v)
    for (const auto& t : vars[v].tuples) {
      Int chi = 0;
      for (long r : vars[v].members) chi += tuple_euler(t, gds[vars[v].geodesic].classes[static_cast<std::size_t>(r - 1)].index);
      var_chi[v].push_back(chi);
    }

  // Top class T of the last geodesic, reported as a derived quantity.
  std::optional<std::size_t> top_var;
  {
    const std::size_t j = gds.size() - 1;
    auto it = var_of.find({j, gds[j].group_of[static_cast<std::size_t>(gds[j].T - 1)]});
    if (gds[j].group_of[static_cast<std::size_t>(gds[j].T - 1)] >= 0 && it != var_of.end()) top_var = it->second;
  }
  std::set<std::string> top_chi_values;
  std::set<long> m_at_2N_minus_2;

  long total = 1;
  for (const auto& v : vars) {
    total *= static_cast<long>(v.tuples.size());
    if (total > opt.max_branches) {
      out.budget = true;
      out.survivor = "branch count exceeds " + std::to_string(opt.max_branches);
      return out;
    }
  }

  std::map<std::vector<Int>, std::optional<Contradiction>> identity_cache;
  std::vector<std::size_t> pick(vars.size(), 0);
  std::map<long, long> M;
  for (long b = 0; b < total; ++b) {
    {
      long rem = b;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        pick[v] = static_cast<std::size_t>(rem % static_cast<long>(vars[v].tuples.size()));
        rem /= static_cast<long>(vars[v].tuples.size());
      }
    }
    ++out.branches;
    std::optional<BranchFailure> fail;

    for (const auto& mp : max_pairs) {
      const TypeTuple& mul = vars[mp.var_mul].tuples[pick[mp.var_mul]];
      const TypeTuple& div = vars[mp.var_div].tuples[pick[mp.var_div]];
      if (static_cast<long>(mul.size()) > mp.nu_mul && mul[static_cast<std::size_t>(mp.nu_mul)] == 1) {
        for (int l = 0; l < mp.nu_div && !fail; ++l)
          if (div[static_cast<std::size_t>(l)] != 0)
            fail = BranchFailure{kTypeExclusion,
                                 {kTypeExclusion,
                                  "top type number 1 at a multiple forces zero lower type numbers at its divisor",
                                  tuple_str(div), "!=", "zeros below nu"}};
      }
      if (fail) break;
    }

    if (!fail) {
      for (auto& [q, base_q] : base) {
        long s = base_q;
        for (const auto& t : terms[q]) {
          const TypeTuple& k = vars[t.var].tuples[pick[t.var]];
          if (t.l < static_cast<long>(k.size())) s += k[static_cast<std::size_t>(t.l)];
        }
        M[q] = s;
      }
      for (const auto& [q, Mq] : M) {
        const int bq = betti(n, q);
        if (Mq < bq) {
          fail = BranchFailure{kLowerBound,
                               {kLowerBound, "M_q >= b_q at q = " + degree_label(q, N) + " (" + std::to_string(q) + ")",
                                std::to_string(Mq), "<", std::to_string(bq)}};
          break;
        }
      }
    }
    if (!fail) {
      long R = 0;
      for (long q = ranges[0].lo; q <= ranges[0].hi && !fail; ++q) {
        const long d = M[q] - betti(n, q);
        R = d - R;
        if (R < 0) {
          const bool low = !merged || q <= opt.low_degree_max;
          const char* anchor = low ? kLowAlternating : (d == 0 ? kWindowEquality : kWindowInequality);
          fail = BranchFailure{anchor,
                               {anchor, "alternating sum of M_i - b_i up to q = " + degree_label(q, N) + " (" +
                                            std::to_string(q) + ") is non-negative",
                                std::to_string(R), "<", "0"}};
        }
      }
    }
    if (!fail && !merged) {
      const Range& w = ranges[1];
      std::optional<long> anchor_q;
      for (long q = w.lo; q <= w.hi; ++q)
        if (M[q] == betti(n, q)) {
          anchor_q = q;
          break;
        }
      if (anchor_q) {
        long D = 0;
        for (long q = *anchor_q + 1; q <= w.hi && !fail; ++q) {
          const long d = M[q] - betti(n, q);
          D = d - D;
          if (D < 0) {
            const char* anchor = d == 0 ? kWindowEquality : kWindowInequality;
            fail = BranchFailure{anchor,
                                 {anchor, "alternating sum of M_i - b_i over (" + degree_label(*anchor_q, N) + ", " +
                                              degree_label(q, N) + "], balanced at M = b in degree " +
                                              degree_label(*anchor_q, N),
                                  std::to_string(D), "<", "0"}};
          }
        }
      }
    }
    if (!fail) {
      if (top_var) top_chi_values.insert(var_chi[*top_var][pick[*top_var]].get_str());
      if (M.count(twoN - 2)) m_at_2N_minus_2.insert(M[twoN - 2]);
      std::vector<Int> key(gds.size(), 0);
      for (std::size_t v = 0; v < vars.size(); ++v) key[vars[v].geodesic] += var_chi[v][pick[v]];
      auto it = identity_cache.find(key);
      if (it == identity_cache.end()) {
        std::optional<Contradiction> c;
        bool hi_ok = true, lo_ok = true;
        ExactReal sup, inf;
        for (std::size_t j = 0; j < gds.size(); ++j) {
          const Side& s = sides[j];
          hi_ok = hi_ok && !s.hi_unbounded;
          lo_ok = lo_ok && !s.lo_unbounded;
          sup += ExactReal(Rat(s.fixed + s.free_hi + Rat(key[j]))) * s.scale;
          inf += ExactReal(Rat(s.fixed + s.free_lo + Rat(key[j]))) * s.scale;
        }
        if (hi_ok && (sup - ExactReal(B)).sign() < 0)
          c = Contradiction{kIdentity, "sum over geodesics of chi_hat/mean_index equals B(n,1); upper bound",
                            sup.str(), "<", rat_str(B)};
        else if (lo_ok && (inf - ExactReal(B)).sign() > 0)
          c = Contradiction{kIdentity, "sum over geodesics of chi_hat/mean_index equals B(n,1); lower bound",
                            inf.str(), ">", rat_str(B)};
        it = identity_cache.emplace(key, c).first;
      }
      if (it->second) {
        fail = BranchFailure{kIdentity, *it->second};
        for (std::size_t v = 0; v < vars.size(); ++v)
          if (vars[v].nu >= 2)
            for (int l = 1; l < vars[v].nu; ++l)
              if (vars[v].tuples[pick[v]][static_cast<std::size_t>(l)] == opt.k_cap) out.cap_saturated = true;
      }
    }

    if (!fail) {
      std::ostringstream w;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        w << (v ? "; " : "") << "c" << vars[v].geodesic + 1 << " classes {";
        for (std::size_t i = 0; i < vars[v].members.size(); ++i) w << (i ? "," : "") << vars[v].members[i];
        w << "} (nu=" << vars[v].nu << ", beta=" << vars[v].beta << "): " << tuple_str(vars[v].tuples[pick[v]]);
      }
      out.survivor = "N = " + N.get_str() + ": " + (vars.empty() ? std::string("no free type numbers") : w.str());
      return out;
    }
    ++out.failures[fail->anchor];
    const int depth = stage_depth(fail->anchor);
    if (depth > out.deepest_depth) {
      out.deepest_depth = depth;
      out.deepest = fail->detail;
    }
  }
  out.eliminated = true;
  if (!top_chi_values.empty()) {
    std::string s;
    for (const auto& v : top_chi_values) s += (s.empty() ? "" : ", ") + v;
    out.facts.push_back({"chi(c" + std::to_string(gds.size()) + "^T) after the Morse checks", "{" + s + "}",
                         kWindowEquality});
  }
  if (!m_at_2N_minus_2.empty()) {
    std::string s;
    for (long v : m_at_2N_minus_2) s += (s.empty() ? "" : ", ") + std::to_string(v);
    out.facts.push_back({"M_{2N-2} after the Morse checks", "{" + s + "}", kLowerBound});
  }
  return out;
}

bool is_two_dim_pm1(BlockKind k) {
  return k == BlockKind::N1_plus_plus || k == BlockKind::IdentityPair || k == BlockKind::N1_plus_minus ||
         k == BlockKind::N1_minus_plus || k == BlockKind::MinusIdentityPair || k == BlockKind::N1_minus_minus;
}

}  // namespace

std::vector<Block> fold_blocks(const Decomposition& d) {
  std::vector<Block> out;
  for (const Block& b : d.blocks) {
    switch (b.kind) {
      case BlockKind::N1_plus_plus:
      case BlockKind::IdentityPair:
        out.push_back(Block::rotation(Turn::rational(1)));
        break;
      case BlockKind::N1_minus_minus:
      case BlockKind::MinusIdentityPair:
        out.push_back(Block::rotation(Turn::rational(Rat(1, 2))));
        break;
      default:
        out.push_back(b);
    }
  }
  return out;
}

std::string classify_case(const GeodesicModel& c2) {
  if (c2.n() != 3) throw std::invalid_argument("case analysis needs n = 3");
  require_valid(c2.decomposition);
  const auto blocks = fold_blocks(c2.decomposition);
  std::vector<const Block*> rational_rot, other;
  for (const Block& b : blocks) {
    if (b.kind == BlockKind::Rotation && b.turn->is_rational())
      rational_rot.push_back(&b);
    else
      other.push_back(&b);
  }
  if (rational_rot.size() == 2) return "Case1";
  if (rational_rot.empty()) return "Case6";
  if (rational_rot.size() == 1 && other.size() == 1) {
    const Block& b = *other.front();
    switch (b.kind) {
      case BlockKind::N1_minus_plus:
        return "Case2";
      case BlockKind::N1_plus_minus:
        return "Case3";
      case BlockKind::Hyperbolic:
        return "Case4";
      case BlockKind::Rotation:
        return "Case5";
      default:
        break;
    }
  }
  throw std::logic_error("no case matches " + c2.decomposition.str());
}

std::vector<std::string> elimination_preconditions(const GeodesicModel& c1, const GeodesicModel& c2,
                                                   bool allow_any_c1) {
  std::vector<std::string> v;
  for (const auto* g : {&c1, &c2}) {
    const std::string tag = g == &c1 ? "c1: " : "c2: ";
    if (g->n() != 3) {
      v.push_back(tag + "the case analysis is for n = 3");
      continue;
    }
    auto errs = validate(g->decomposition);
    for (const auto& e : errs) v.push_back(tag + e);
    if (!errs.empty()) continue;
    auto par = parity_check(*g);
    if (!par.ok) v.push_back(tag + "parity: " + par.message);
    if (g->initial_index < 2) v.push_back(tag + "i(c) = " + g->initial_index.get_str() + " < n-1 = 2");
    const ExactReal mean = mean_index(*g);
    if ((mean - ExactReal(Rat(2))).sign() <= 0) v.push_back(tag + "mean index " + mean.str() + " is not > 2");
  }
  if (!allow_any_c1) {
    const auto& bl = c1.decomposition.blocks;
    if (bl.size() != 2 || !is_surd_rotation(bl[0]) || !is_surd_rotation(bl[1]))
      v.push_back("c1: expected two rotations with irrational turns");
  }
  return v;
}

EliminationReport eliminate(const GeodesicModel& c1, const GeodesicModel& c2, const EliminateOptions& opt) {
  EliminationReport rep;
  const int n = 3;
  auto pre = elimination_preconditions(c1, c2, opt.allow_any_c1);
  try {
    rep.case_label = classify_case(c2);
  } catch (const std::exception& e) {
    rep.case_label = "unclassified";
    if (pre.empty()) pre.push_back(e.what());
  }
  if (!pre.empty()) {
    rep.reason_kind = "precondition";
    for (const auto& p : pre) rep.reason += (rep.reason.empty() ? "" : "; ") + p;
    return rep;
  }
  if (opt.allow_any_c1) rep.notes.push_back("c1 shape not restricted to two irrational rotations");

  std::vector<GeodesicData> gds{prepare(c1), prepare(c2)};
  rep.facts.push_back({"mean index c1", gds[0].mean.str(), "index-iteration"});
  rep.facts.push_back({"mean index c2", gds[1].mean.str(), "index-iteration"});
  rep.facts.push_back({"T(c1)", gds[0].period.get_str(), "minimal-period"});
  rep.facts.push_back({"T(c2)", gds[1].period.get_str(), "minimal-period"});

  JumpOptions jo;
  jo.eps = opt.eps;
  jo.N_bound = opt.N_bound;
  std::string last_survivor;
  std::vector<JumpCertificate> unaligned;
  auto try_certificate = [&](const JumpCertificate& cert) {
    ++rep.certificates_tried;
    CertificateOutcome co = analyze_certificate(gds, cert, opt, n);
    rep.branches += co.branches;
    if (!co.eliminated) {
      last_survivor = co.survivor;
      return false;
    }
    rep.status = Outcome::Eliminated;
    rep.certificate = cert;
    rep.branch_failures = co.failures;
    rep.contradiction = co.deepest;
    rep.cap_saturated = co.cap_saturated;
    rep.facts.insert(rep.facts.end(), co.facts.begin(), co.facts.end());
    return true;
  };
  int aligned = 0;
  while (aligned < opt.max_certificates) {
    JumpSearch js = find_jump({c1, c2}, n, jo);
    if (!js.cert) break;
    jo.N_min = js.cert->N + 1;
    if (opt.align_c1_top) {
      const Int m2 = 2 * js.cert->m[0];
      if (index_at(c1, m2) + nullity_at(c1, m2) != 2 * js.cert->N + 2) {
        if (static_cast<int>(unaligned.size()) < opt.max_certificates) unaligned.push_back(*js.cert);
        if (++rep.certificates_skipped > opt.max_skipped) break;
        continue;
      }
    }
    ++aligned;
    if (try_certificate(*js.cert)) return rep;
  }
  if (aligned == 0 && !unaligned.empty()) {
    rep.notes.push_back("no aligned certificate within budget; used certificates with i + nu of c1^{2m_1} != 2N+2");
    for (const auto& cert : unaligned)
      if (try_certificate(cert)) return rep;
  }
  if (rep.certificates_tried == 0) {
    rep.reason_kind = "budget";
    rep.reason = "no common index jump with N <= " + opt.N_bound.get_str();
  } else {
    rep.reason_kind = "survivor";
    rep.reason = "every tried certificate (" + std::to_string(rep.certificates_tried) +
                 ") leaves a consistent branch; last: " + last_survivor;
  }
  return rep;
}

std::vector<Rat> farey_turns(long max_den) {
  std::vector<Rat> out;
  for (long s = 1; s <= max_den; ++s)
    for (long r = 1; r <= s; ++r)
      if (std::gcd(r, s) == 1) out.emplace_back(r, s);
  return out;
}

std::vector<GeodesicModel> grid_models(const SweepGrid& grid) {
  std::vector<Block> two;
  for (const Rat& t : grid.rational_turns) two.push_back(Block::rotation(Turn::rational(t)));
  for (const Turn& t : grid.surd_turns) two.push_back(Block::rotation(t));
  if (grid.include_pm1_blocks)
    for (BlockKind k : {BlockKind::N1_plus_plus, BlockKind::IdentityPair, BlockKind::N1_plus_minus,
                        BlockKind::N1_minus_plus, BlockKind::MinusIdentityPair, BlockKind::N1_minus_minus})
      two.push_back(Block::of(k));
  if (grid.include_hyperbolic) two.push_back(Block::hyperbolic(2));

  std::vector<std::vector<Block>> shapes;
  for (std::size_t a = 0; a < two.size(); ++a)
    for (std::size_t b = a; b < two.size(); ++b) shapes.push_back({two[a], two[b]});
  if (grid.include_n2) {
    auto add_n2 = [&](const Turn& t) {
      shapes.push_back({Block::n2_trivial(t)});
      shapes.push_back({Block::n2_nontrivial(t)});
    };
    for (const Rat& t : grid.rational_turns)
      if (t < 1 && t != Rat(1, 2)) add_n2(Turn::rational(t));
    for (const Turn& t : grid.surd_turns) add_n2(t);
  }
  if (grid.include_hyperbolic) shapes.push_back({Block::hyperbolic(4)});

  std::vector<GeodesicModel> out;
  for (const auto& s : shapes)
    for (const Int& i : grid.indices) {
      GeodesicModel g{Decomposition{3, s}, i, ""};
      if (!validate(g.decomposition).empty() || !parity_check(g).ok) continue;
      if (!grid.case_filter.empty()) {
        const std::string c = classify_case(g);
        if (std::find(grid.case_filter.begin(), grid.case_filter.end(), c) == grid.case_filter.end()) continue;
      }
      g.label = g.decomposition.str() + " i=" + i.get_str();
      out.push_back(std::move(g));
    }
  return out;
}

SweepSummary sweep(const SweepGrid& grid) {
  SweepSummary sum;
  const auto models = grid_models(grid);
  if (models.empty()) return sum;
  if (grid.c1_turns.size() != 2) throw std::invalid_argument("c1 needs exactly two turns");
  const GeodesicModel c1{Decomposition{3, {Block::rotation(grid.c1_turns[0]), Block::rotation(grid.c1_turns[1])}},
                         grid.c1_index, "c1"};
  std::vector<SweepCell> cells(models.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < models.size(); i = next++) {
      cells[i].c2 = models[i];
      try {
        cells[i].report = eliminate(c1, models[i], grid.options);
      } catch (const std::exception& e) {
        cells[i].error = e.what();
        cells[i].report.reason_kind = "error";
        cells[i].report.reason = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, grid.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& c : cells) {
    ++sum.cells;
    const auto& r = c.report;
    if (!c.error.empty())
      ++sum.errors;
    else if (r.reason_kind == "precondition")
      ++sum.precondition_skipped;
    else if (r.status == Outcome::Eliminated) {
      ++sum.eliminated;
      ++sum.by_case[r.case_label];
      if (r.contradiction) ++sum.by_anchor[r.contradiction->anchor];
    } else {
      ++sum.not_eliminated;
      ++sum.by_case[r.case_label];
    }
  }
  sum.cells_detail = std::move(cells);
  return sum;
}

StepOneReport step_one_check(const std::vector<DressedGeodesic>& config, int n, const JumpOptions& opt) {
  StepOneReport rep;
  rep.case_label = n % 2 == 1 ? "StepOne_odd" : "StepOne_even";
  if (config.empty()) rep.precondition_errors.push_back("empty configuration");
  for (std::size_t j = 0; j < config.size(); ++j) {
    const auto& g = config[j].model;
    const std::string tag = "geodesic " + std::to_string(j + 1) + ": ";
    if (g.n() != n) rep.precondition_errors.push_back(tag + "dimension mismatch");
    auto errs = validate(g.decomposition);
    for (const auto& e : errs) rep.precondition_errors.push_back(tag + e);
    if (!errs.empty()) continue;
    if (elliptic_height(g.decomposition) > 2 * n - 4)
      rep.precondition_errors.push_back(tag + "elliptic height " + std::to_string(elliptic_height(g.decomposition)) +
                                        " > 2n-4");
    if (g.initial_index < n - 1)
      rep.precondition_errors.push_back(tag + "i(c) = " + g.initial_index.get_str() + " < n-1");
    for (const auto& e : check_types(config[j])) rep.precondition_errors.push_back(tag + e);
  }
  if (!rep.precondition_errors.empty()) {
    rep.precondition_ok = false;
    return rep;
  }
  std::vector<GeodesicModel> models;
  for (const auto& dg : config) {
    models.push_back(dg.model);
    rep.chi_hats.push_back(average_euler(dg));
  }
  JumpOptions jo = opt;
  if (jo.chi_hats.empty()) jo.chi_hats = rep.chi_hats;
  JumpSearch js = find_jump(models, n, jo);
  if (!js.cert) {
    rep.precondition_ok = false;
    rep.precondition_errors.push_back("no common index jump with N <= " + jo.N_bound.get_str());
    return rep;
  }
  rep.certificate = js.cert;
  const JumpCertificate& c = *js.cert;

  Rat lhs = 0;
  for (std::size_t j = 0; j < config.size(); ++j) lhs += Rat(2 * c.m[j]) * rep.chi_hats[j];
  lhs.canonicalize();
  Rat rhs = Rat(2 * c.N) * constant_B(n);
  rhs.canonicalize();
  if (lhs.get_den() != 1 || rhs.get_den() != 1)
    throw std::logic_error("jump sums are not integral: " + rat_str(lhs) + ", " + rat_str(rhs));
  rep.jump_sum_lhs = lhs.get_num();
  rep.jump_sum_rhs = rhs.get_num();
  rep.jump_sum_holds = rep.jump_sum_lhs == rep.jump_sum_rhs;

  rep.top_degree = Int(2 * c.N + n - 2).get_si();
  std::vector<IterWindow> windows;
  for (std::size_t j = 0; j < config.size(); ++j) {
    const ExactReal mean = mean_index(config[j].model);
    Int hi = (ExactReal(Rat(rep.top_degree + n - 1)) / mean).ceil() + 1;
    windows.push_back({1, hi});
  }
  MorseReport mr = morse_inequalities(config, n, rep.top_degree, windows);
  Int morse = 0;
  for (const auto& row : mr.rows) morse += (row.q % 2 == 0 ? 1 : -1) * row.M;
  rep.morse_side = morse;
  rep.betti_side = alternating_sum(n, rep.top_degree);
  rep.morse_sum_holds = rep.morse_side == rep.jump_sum_lhs;
  // (-1)^q_top * (Morse side - Betti side) must be non-negative.
  const Int signed_gap = (rep.top_degree % 2 == 0 ? 1 : -1) * (rep.morse_side - rep.betti_side);
  rep.contradiction = signed_gap < 0;
  if (rep.contradiction) {
    const bool odd_top = rep.top_degree % 2 != 0;
    const Int m_lhs = odd_top ? Int(-rep.morse_side) : rep.morse_side;
    const Int b_rhs = odd_top ? Int(-rep.betti_side) : rep.betti_side;
    rep.violated = "M_" + std::to_string(rep.top_degree) + " - M_" + std::to_string(rep.top_degree - 1) +
                   " + ... = " + m_lhs.get_str() + " < " + b_rhs.get_str() + " = b_" +
                   std::to_string(rep.top_degree) + " - b_" + std::to_string(rep.top_degree - 1) + " + ...";
  }
  return rep;
}

StructureChecklist elliptic_structure_filter(const Decomposition& d) {
  require_valid(d);
  StructureChecklist c;
  c.i = is_elliptic(d);
  c.ii = c.iii = c.iv = true;
  std::vector<Turn> irrational;
  for (const Block& b : d.blocks) {
    if (b.kind == BlockKind::N1_plus_plus || b.kind == BlockKind::N1_minus_minus || b.kind == BlockKind::N2NonTrivial)
      c.ii = false;
    if (b.kind == BlockKind::N2Trivial && !b.turn->is_rational()) c.iii = false;
    if (b.kind == BlockKind::Rotation && !b.turn->is_rational()) irrational.push_back(*b.turn);
  }
  for (std::size_t a = 0; a < irrational.size(); ++a)
    for (std::size_t b = 0; b < irrational.size(); ++b)
      if (a != b && irrational[b] == (-irrational[a]).plus(1)) c.iv = false;
  c.vi = !irrational.empty();
  return c;
}

HingstonReport hingston_check(const GeodesicModel& g, const TypeNumbers& types, long m_check) {
  require_valid(g.decomposition);
  HingstonReport rep;
  const int n = g.n();
  rep.equality_family = !g.decomposition.blocks.empty();
  for (const Block& b : g.decomposition.blocks)
    if (b.kind != BlockKind::IdentityPair && b.kind != BlockKind::N1_plus_minus) rep.equality_family = false;

  const Int i1 = g.initial_index;
  const int nu1 = nullity_at(g, 1);
  if (nu1 == 0) {
    rep.top_type_nonzero = true;  // nondegenerate: k_0 = 1
  } else {
    auto it = types.by_class.find(1);
    rep.top_type_nonzero = it != types.by_class.end() && static_cast<long>(it->second.size()) > nu1 &&
                           it->second[static_cast<std::size_t>(nu1)] != 0;
  }
  rep.equality_everywhere = true;
  for (long m = 1; m <= m_check; ++m) {
    const Int lhs = index_at(g, m) + nullity_at(g, m);
    const Int rhs = Int(m) * (i1 + nu1) - Int(n - 1) * (m - 1);
    if (lhs != rhs) rep.equality_everywhere = false;
    if (lhs > rhs) {
      rep.first_failure = Int(m);
      break;
    }
  }
  rep.applicable = !rep.first_failure && rep.top_type_nonzero;
  return rep;
}

bool hingston_applicable(const GeodesicModel& g, const TypeNumbers& types, long m_check) {
  return hingston_check(g, types, m_check).applicable;
}

bool elliptic_parabolic_test(const GeodesicModel& g) {
  require_valid(g.decomposition);
  for (const Block& b : g.decomposition.blocks) {
    if (b.kind == BlockKind::Rotation || is_two_dim_pm1(b.kind)) continue;
    if (b.kind == BlockKind::N2Trivial && b.turn->is_rational()) continue;
    return false;
  }
  return true;
}

}  // namespace geodex
