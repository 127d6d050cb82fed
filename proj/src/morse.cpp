#include "geodex/morse.hpp"

#include <algorithm>
#include <stdexcept>

#include "geodex/homology.hpp"

namespace geodex {

namespace {

long get(const TypeTuple& k, long l) {
  if (l < 0 || l >= static_cast<long>(k.size())) return 0;
  return k[static_cast<std::size_t>(l)];
}

int parity_sign(const Int& e) { return mpz_even_p(e.get_mpz_t()) ? 1 : -1; }

struct ClassInfo {
  Int index;
  int nullity;
  int beta;
};

ClassInfo class_info(const GeodesicModel& g, const Int& m) {
  Int idx = index_at(g, m);
  return {idx, nullity_at(g, m), parity_sign(idx - g.initial_index)};
}

// Tuple governing iterate m, given the period.
TypeTuple tuple_for(const DressedGeodesic& dg, const Int& period, const Int& m, const ClassInfo& info) {
  if (info.nullity == 0) return forced_nondegenerate(info.beta);
  const long r = residue_class(m, period);
  auto it = dg.types.by_class.find(r);
  if (it == dg.types.by_class.end())
    throw std::invalid_argument("missing type numbers for degenerate class " + std::to_string(r) + " of " +
                                (dg.model.label.empty() ? "geodesic" : dg.model.label));
  return it->second;
}

}  // namespace

long residue_class(const Int& m, const Int& period) {
  Int r = (m - 1) % period;
  if (r < 0) r += period;
  return Int(r + 1).get_si();
}

TypeTuple forced_nondegenerate(int beta) { return {beta == 1 ? 1L : 0L}; }

bool admissible(const TypeTuple& k, int nu, int beta, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  for (std::size_t l = 0; l < k.size(); ++l) {
    if (k[l] < 0) return fail("negative type number");
    if (static_cast<int>(l) > nu && k[l] != 0) return fail("type number beyond the nullity");
  }
  const long k0 = get(k, 0), kn = get(k, nu);
  if (nu == 0) {
    if (k0 != (beta == 1 ? 1 : 0)) return fail("nondegenerate iterate has a forced type");
    return true;
  }
  if (k0 > 1 || kn > 1) return fail("k_0 and k_nu take values 0 or 1");
  if (beta == -1 && k0 != 0) return fail("k_0 vanishes when beta = -1");
  long interior_nonzero = 0, nonzero = 0;
  for (int l = 0; l <= nu; ++l) {
    if (get(k, l) != 0) {
      ++nonzero;
      if (l > 0 && l < nu) ++interior_nonzero;
    }
  }
  if (k0 == 1 && nonzero > 1) return fail("k_0 = 1 excludes all other type numbers");
  if (kn == 1 && nonzero > 1) return fail("k_nu = 1 excludes all other type numbers");
  if (interior_nonzero > 0 && (k0 != 0 || kn != 0)) return fail("interior type numbers exclude k_0 and k_nu");
  if (nu <= 2 && nonzero > 1) return fail("at most one nonzero type number when nu <= 2");
  return true;
}

std::vector<TypeTuple> enumerate_admissible_types(int nu, int beta, long cap) {
  if (nu < 0) throw std::invalid_argument("negative nullity");
  if (nu == 0) return {forced_nondegenerate(beta)};
  std::vector<TypeTuple> out;
  TypeTuple zero(static_cast<std::size_t>(nu) + 1, 0);
  out.push_back(zero);
  if (beta == 1) {
    TypeTuple t = zero;
    t[0] = 1;
    out.push_back(t);
  }
  {
    TypeTuple t = zero;
    t[static_cast<std::size_t>(nu)] = 1;
    out.push_back(t);
  }
  const int inner = nu - 1;
  if (inner > 0 && cap > 0) {
    std::vector<long> digits(static_cast<std::size_t>(inner), 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < digits.size() && digits[pos] == cap) digits[pos++] = 0;
      if (pos == digits.size()) break;
      ++digits[pos];
      TypeTuple t = zero;
      for (int l = 0; l < inner; ++l) t[static_cast<std::size_t>(l) + 1] = digits[static_cast<std::size_t>(l)];
      if (admissible(t, nu, beta)) out.push_back(t);
    }
  }
  return out;
}

Int tuple_euler(const TypeTuple& k, const Int& index) {
  Int chi = 0;
  for (std::size_t l = 0; l < k.size(); ++l) {
    if (k[l] == 0) continue;
    chi += parity_sign(index + static_cast<long>(l)) * Int(k[l]);
  }
  return chi;
}

ChiRange chi_range(int nu, int beta, const Int& index) {
  if (nu == 0) {
    Int v = tuple_euler(forced_nondegenerate(beta), index);
    return {v, v};
  }
  std::vector<Int> finite{Int(0), Int(parity_sign(index + nu))};
  if (beta == 1) finite.emplace_back(parity_sign(index));
  ChiRange r;
  r.lo = *std::min_element(finite.begin(), finite.end());
  r.hi = *std::max_element(finite.begin(), finite.end());
  for (int l = 1; l < nu; ++l) {
    if (parity_sign(index + l) > 0)
      r.hi.reset();
    else
      r.lo.reset();
  }
  return r;
}

std::vector<std::string> check_types(const DressedGeodesic& dg) {
  std::vector<std::string> out;
  const Int T = minimal_period(dg.model);
  for (const auto& [r, k] : dg.types.by_class) {
    if (r < 1 || Int(r) > T) {
      out.push_back("class " + std::to_string(r) + " outside 1.." + T.get_str());
      continue;
    }
    ClassInfo info = class_info(dg.model, r);
    std::string why;
    if (!admissible(k, info.nullity, info.beta, &why))
      out.push_back("class " + std::to_string(r) + " (nu=" + std::to_string(info.nullity) +
                    ", beta=" + std::to_string(info.beta) + "): " + why);
  }
  return out;
}

Int critical_dim(const DressedGeodesic& dg, const Int& m, const Int& q) {
  ClassInfo info = class_info(dg.model, m);
  if (info.nullity == 0) return (q == info.index && info.beta == 1) ? 1 : 0;
  const Int T = minimal_period(dg.model);
  TypeTuple k = tuple_for(dg, T, m, info);
  Int l = q - info.index;
  if (l < 0 || l > info.nullity) return 0;
  return get(k, l.get_si());
}

Int euler_char(const DressedGeodesic& dg, const Int& m) {
  ClassInfo info = class_info(dg.model, m);
  if (info.nullity == 0) return tuple_euler(forced_nondegenerate(info.beta), info.index);
  const Int T = minimal_period(dg.model);
  return tuple_euler(tuple_for(dg, T, m, info), info.index);
}

Rat average_euler(const DressedGeodesic& dg) {
  const Int T = minimal_period(dg.model);
  Int sum = 0;
  for (Int m = 1; m <= T; ++m) {
    ClassInfo info = class_info(dg.model, m);
    sum += tuple_euler(tuple_for(dg, T, m, info), info.index);
  }
  return make_rat(sum, T);
}

IdentityReport mean_index_identity(const std::vector<IdentityTerm>& terms, int n) {
  IdentityReport r;
  r.terms = terms;
  r.rhs = constant_B(n);
  for (const auto& t : terms) {
    if (t.mean_index.sign() <= 0)
      throw std::domain_error("mean index identity needs positive mean indices; got " + t.mean_index.str());
    r.lhs += ExactReal(t.chi_hat) * t.mean_index.inverse();
  }
  r.residue = r.lhs - ExactReal(r.rhs);
  r.comparison = r.residue.sign();
  r.holds = r.residue.is_zero();
  return r;
}

IdentityReport mean_index_identity(const std::vector<DressedGeodesic>& config, int n) {
  std::vector<IdentityTerm> terms;
  for (const auto& dg : config) terms.push_back({average_euler(dg), mean_index(dg.model)});
  return mean_index_identity(terms, n);
}

Int morse_count(const std::vector<DressedGeodesic>& config, const Int& q, const std::vector<IterWindow>& windows) {
  if (windows.size() != config.size()) throw std::invalid_argument("one iterate window per geodesic required");
  Int total = 0;
  for (std::size_t j = 0; j < config.size(); ++j)
    for (Int m = windows[j].lo; m <= windows[j].hi; ++m) total += critical_dim(config[j], m, q);
  return total;
}

MorseReport morse_inequalities(const std::vector<Int>& M, int n, long first_degree) {
  MorseReport rep;
  Int alt = 0;
  for (std::size_t i = 0; i < M.size(); ++i) {
    const long q = first_degree + static_cast<long>(i);
    MorseRow row;
    row.q = q;
    row.M = M[i];
    row.b = betti(n, q);
    alt = (row.M - row.b) - alt;
    row.alt_residue = alt;
    row.strong_ok = row.M >= row.b;
    row.alt_ok = alt >= 0;
    if (!rep.first_violation && (!row.strong_ok || !row.alt_ok)) {
      rep.first_violation = q;
      rep.violation = !row.strong_ok
                          ? "M_" + std::to_string(q) + " = " + row.M.get_str() + " < b_" + std::to_string(q) + " = " +
                                row.b.get_str()
                          : "alternating sum up to degree " + std::to_string(q) + " falls short by " +
                                Int(-alt).get_str();
    }
    rep.rows.push_back(row);
  }
  return rep;
}

MorseReport morse_inequalities(const std::vector<DressedGeodesic>& config, int n, long q_max,
                               const std::vector<IterWindow>& windows) {
  if (windows.size() != config.size()) throw std::invalid_argument("one iterate window per geodesic required");
  std::vector<Int> M(static_cast<std::size_t>(std::max(0L, q_max + 1)), 0);
  for (std::size_t j = 0; j < config.size(); ++j) {
    const auto& dg = config[j];
    const Int T = minimal_period(dg.model);
    for (Int m = windows[j].lo; m <= windows[j].hi; ++m) {
      ClassInfo info = class_info(dg.model, m);
      TypeTuple k = tuple_for(dg, T, m, info);
      for (long l = 0; l <= info.nullity; ++l) {
        Int q = info.index + l;
        if (q < 0 || q > q_max || get(k, l) == 0) continue;
        M[q.get_ui()] += get(k, l);
      }
    }
  }
  return morse_inequalities(M, n, 0);
}

std::optional<BridgeResidues> balanced_degree_bridge(const std::vector<Int>& M, const std::vector<Int>& b, long k,
                                             long first) {
  if (M.size() != b.size()) throw std::invalid_argument("M and b lists differ in length");
  const long idx = k - first;
  if (idx < 0 || idx >= static_cast<long>(M.size())) return std::nullopt;
  if (M[static_cast<std::size_t>(idx)] != b[static_cast<std::size_t>(idx)]) return std::nullopt;
  Int prev = 0, cur = 0;
  for (long i = 0; i <= idx; ++i) {
    prev = cur;
    cur = (M[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]) - cur;
  }
  return BridgeResidues{cur, prev};
}

}  // namespace geodex
