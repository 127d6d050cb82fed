#include "geodex/jump.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "geodex/homology.hpp"

namespace geodex {

namespace {

// Denominators of 2t over every rational eigen-turn t of the model.
void collect_angle_denominators(const GeodesicModel& g, Int& acc) {
  for (const Block& b : g.decomposition.blocks) {
    if (!b.turn || !b.turn->is_rational()) continue;
    Rat two_t = Rat(2) * b.turn->rat();
    two_t.canonicalize();
    acc = lcm(acc, two_t.get_den());
  }
}

Int family_divisor(int n) {
  const int k = n / 2;
  return n % 2 == 1 ? Int(k) : Int(2 * k - 1);
}

void check_config(const std::vector<GeodesicModel>& config, int n) {
  if (config.empty()) throw std::invalid_argument("empty configuration");
  for (const auto& g : config) {
    if (g.n() != n) throw std::invalid_argument("geodesic dimension " + std::to_string(g.n()) + " != n = " +
                                                std::to_string(n));
    require_valid(g.decomposition);
    if (mean_index(g).sign() <= 0) throw std::domain_error("mean index must be positive: " + mean_index(g).str());
  }
}

JumpCheck make_check(std::size_t j, std::string name, std::string rel, const Int& m, const Int& lhs,
                     const Int& rhs) {
  JumpCheck c;
  c.geodesic = j;
  c.name = std::move(name);
  c.relation = std::move(rel);
  c.iterate = m;
  c.lhs = lhs;
  c.rhs = rhs;
  if (c.relation == ">=") {
    c.slack = lhs - rhs;
    c.ok = c.slack >= 0;
  } else if (c.relation == "<=") {
    c.slack = rhs - lhs;
    c.ok = c.slack >= 0;
  } else {
    c.slack = lhs - rhs;
    c.ok = c.slack == 0;
  }
  return c;
}

// floor(2^64 * frac(y)) for an exact real y, computed from a tight enclosure.
std::uint64_t fixed_point_fraction(const ExactReal& y) {
  auto [lo, hi] = y.enclose(128);
  Rat frac = lo - Rat(rat_floor(lo));
  Int scaled = rat_floor(frac * Rat(Int(1) << 64));
  if (scaled >= (Int(1) << 64)) scaled = (Int(1) << 64) - 1;
  Int hi_part = scaled >> 32, lo_part = scaled - (hi_part << 32);
  return (static_cast<std::uint64_t>(hi_part.get_ui()) << 32) | static_cast<std::uint64_t>(lo_part.get_ui());
}

}  // namespace

Int choose_modulus(const std::vector<GeodesicModel>& config) {
  Int M = 1;
  for (const auto& g : config) collect_angle_denominators(g, M);
  return M;
}

Rat default_epsilon(const std::vector<Rat>& chi_hats, const Int& M) {
  if (chi_hats.empty()) return Rat(1, 1000);
  Rat denom = 1;
  for (const Rat& c : chi_hats) denom += Rat(4 * M) * abs(c);
  Rat e = 1 / denom;
  e.canonicalize();
  return e;
}

Int jump_lattice_step(int n) {
  Rat twoB = Rat(2) * constant_B(n);
  twoB.canonicalize();
  return lcm(twoB.get_den(), family_divisor(n));
}

JumpSearch find_jump(const std::vector<GeodesicModel>& config, int n, const JumpOptions& opt) {
  check_config(config, n);
  JumpSearch out;
  const Int M = choose_modulus(config);
  const Rat eps = opt.eps ? *opt.eps : default_epsilon(opt.chi_hats, M);
  if (eps <= 0 || eps > 1) throw std::invalid_argument("eps must lie in (0, 1]");
  const Int step = jump_lattice_step(n);
  if (opt.N_bound >= (Int(1) << 60)) throw std::invalid_argument("N_bound must stay below 2^60");
  Int N0 = ceil_div(opt.N_min < 1 ? Int(1) : opt.N_min, step) * step;
  if (N0 > opt.N_bound) return out;

  const std::size_t p = config.size();
  std::vector<ExactReal> y(p);
  std::vector<std::uint64_t> yfrac(p), acc(p);
  for (std::size_t j = 0; j < p; ++j) {
    y[j] = (ExactReal(M) * mean_index(config[j])).inverse();
    yfrac[j] = fixed_point_fraction(y[j]);
  }
  const std::uint64_t step_u = step.get_ui();
  const std::uint64_t n0_u = N0.get_ui();
  for (std::size_t j = 0; j < p; ++j) acc[j] = n0_u * yfrac[j];

  // Prefilter threshold: eps plus the accumulated fixed-point error, in units of 2^-64.
  const long double margin = std::ldexp(static_cast<long double>(opt.N_bound.get_d()) + 4.0L, -60);
  const long double thr = std::min<long double>(0.5L, eps.get_d() + margin);
  const std::uint64_t T = thr >= 0.5L ? (std::uint64_t(1) << 63) : static_cast<std::uint64_t>(std::ldexp(thr, 64));
  const std::uint64_t top = ~std::uint64_t(0) - T;

  for (Int N = N0; N <= opt.N_bound; N += step) {
    ++out.stats.lattice_points;
    bool near = true;
    for (std::size_t j = 0; j < p && near; ++j) near = acc[j] <= T || acc[j] >= top;
    for (std::size_t j = 0; j < p; ++j) acc[j] += step_u * yfrac[j];
    if (!near) continue;
    ++out.stats.approx_hits;

    JumpCertificate cert{N, M, eps, {}, {}};
    bool good = true;
    try {
      for (std::size_t j = 0; j < p && good; ++j) {
        const ExactReal x = ExactReal(N) * y[j];
        const Int f = x.floor();
        const ExactReal frac = x - ExactReal(f);
        int xi;
        if ((frac - ExactReal(eps)).sign() < 0)
          xi = 0;
        else if ((ExactReal(Rat(1)) - frac - ExactReal(eps)).sign() < 0)
          xi = 1;
        else {
          good = false;
          break;
        }
        Int m = (f + xi) * M;
        if (m < 1) {
          good = false;
          break;
        }
        cert.m.push_back(m);
        cert.xi.push_back(xi);
      }
    } catch (const PrecisionError& e) {
      ++out.stats.undecided;
      if (out.warnings.size() < 16) out.warnings.push_back("skipped N = " + N.get_str() + ": " + e.what());
      continue;
    }
    if (!good) continue;
    ++out.stats.exact_hits;
    if (opt.require_verified && !verify_jump(config, n, cert).ok) {
      ++out.stats.verification_rejects;
      continue;
    }
    out.cert = std::move(cert);
    return out;
  }
  return out;
}

std::vector<std::string> certificate_violations(const std::vector<GeodesicModel>& config, int n,
                                                const JumpCertificate& cert) {
  std::vector<std::string> v;
  if (cert.m.size() != config.size() || cert.xi.size() != config.size())
    return {"certificate has " + std::to_string(cert.m.size()) + " iterates for " + std::to_string(config.size()) +
            " geodesics"};
  if (cert.N < 1) v.push_back("N must be positive");
  if (cert.N % jump_lattice_step(n) != 0)
    v.push_back("N = " + cert.N.get_str() + " is not a multiple of " + jump_lattice_step(n).get_str());
  if (cert.M < 1 || cert.M % choose_modulus(config) != 0)
    v.push_back("M = " + cert.M.get_str() + " does not clear the rational angle denominators");
  for (std::size_t j = 0; j < config.size(); ++j) {
    const std::string tag = "geodesic " + std::to_string(j + 1) + ": ";
    if (cert.xi[j] != 0 && cert.xi[j] != 1) {
      v.push_back(tag + "xi must be 0 or 1");
      continue;
    }
    const ExactReal x = ExactReal(cert.N) * (ExactReal(cert.M) * mean_index(config[j])).inverse();
    const Int f = x.floor();
    if (cert.m[j] != (f + cert.xi[j]) * cert.M)
      v.push_back(tag + "m = " + cert.m[j].get_str() + " but ([N/(M*mean)] + xi)*M = " +
                  Int((f + cert.xi[j]) * cert.M).get_str());
    ExactReal dev = x - ExactReal(f) - ExactReal(Rat(cert.xi[j]));
    if (dev.sign() < 0) dev = -dev;
    if ((dev - ExactReal(cert.eps)).sign() >= 0)
      v.push_back(tag + "fractional deviation " + dev.str() + " is not below eps = " + rat_str(cert.eps));
  }
  return v;
}

JumpVerification verify_jump(const std::vector<GeodesicModel>& config, int n, const JumpCertificate& cert,
                             bool full_window) {
  JumpVerification rep;
  rep.structural = certificate_violations(config, n, cert);
  if (cert.m.size() != config.size()) {
    rep.ok = false;
    return rep;
  }
  const Int twoN = 2 * cert.N;
  for (std::size_t j = 0; j < config.size(); ++j) {
    const GeodesicModel& g = config[j];
    const int e = elliptic_height(g.decomposition);
    const Int m2 = 2 * cert.m[j];
    const Int i2 = index_at(g, m2);
    const int nu2 = nullity_at(g, m2);
    rep.checks.push_back(make_check(j, "index-lower", ">=", m2, i2, twoN - e / 2));
    rep.checks.push_back(make_check(j, "index-plus-nullity-upper", "<=", m2, i2 + nu2, twoN + e / 2));
    rep.checks.push_back(make_check(j, "odd-iterate-index", "=", m2 + 1, index_at(g, m2 + 1), twoN + g.initial_index));
    rep.checks.push_back(make_check(j, "odd-iterate-nullity", "=", m2 + 1, nullity_at(g, m2 + 1),
                                    nullity_at(g, 1)));
    if (g.initial_index < n - 1) continue;
    if (full_window) {
      for (Int m = 1; m < m2; ++m)
        rep.checks.push_back(make_check(j, "below-window", "<=", m, index_at(g, m) + nullity_at(g, m), i2));
      for (Int m = m2 + 1; m <= 2 * m2 + 2; ++m)
        rep.checks.push_back(make_check(j, "above-window", ">=", m, index_at(g, m), twoN + n - 1));
    } else {
      if (m2 > 1)
        rep.checks.push_back(
            make_check(j, "below-window", "<=", m2 - 1, index_at(g, m2 - 1) + nullity_at(g, m2 - 1), i2));
      for (Int m = m2 + 1; m <= m2 + 2; ++m)
        rep.checks.push_back(make_check(j, "above-window", ">=", m, index_at(g, m), twoN + n - 1));
    }
    if (e <= 2 * n - 4) rep.checks.push_back(make_check(j, "window-top", "<=", m2, i2 + nu2, twoN + n - 2));
  }
  rep.ok = rep.structural.empty();
  for (const auto& c : rep.checks) rep.ok = rep.ok && c.ok;
  return rep;
}

}  // namespace geodex
