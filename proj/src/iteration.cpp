#include "geodex/iteration.hpp"

#include <stdexcept>

namespace geodex {

namespace {

bool is_even(const Int& m) { return mpz_even_p(m.get_mpz_t()) != 0; }

}  // namespace

Int index_at(const GeodesicModel& g, const Int& m) {
  if (m < 1) throw std::invalid_argument("index_at needs m >= 1");
  const auto c = g.decomposition.counts();
  const long r = static_cast<long>(c.rotations.size());
  const long r_star = static_cast<long>(c.nontrivial.size());
  Int i = m * (g.initial_index + c.p_minus + c.p_zero - r);
  for (const Turn& t : c.rotations) i += 2 * t.scaled(m).ceil();
  i -= r + c.p_minus + c.p_zero;
  if (is_even(m)) i -= c.q_zero + c.q_plus;
  Int phis = 0;
  for (const Turn& t : c.nontrivial) phis += t.scaled(m).phi();
  i += 2 * (phis - r_star);
  return i;
}

int nullity_at(const GeodesicModel& g, const Int& m) {
  if (m < 1) throw std::invalid_argument("nullity_at needs m >= 1");
  const auto c = g.decomposition.counts();
  int v = c.p_minus + 2 * c.p_zero + c.p_plus;
  if (is_even(m)) v += c.q_minus + 2 * c.q_zero + c.q_plus;
  v += 2 * static_cast<int>(c.rotations.size() + c.nontrivial.size() + c.trivial.size());
  int phis = 0;
  for (const Turn& t : c.rotations) phis += t.scaled(m).phi();
  for (const Turn& t : c.nontrivial) phis += t.scaled(m).phi();
  for (const Turn& t : c.trivial) phis += t.scaled(m).phi();
  return v - 2 * phis;
}

ExactReal mean_index(const GeodesicModel& g) {
  const auto c = g.decomposition.counts();
  ExactReal v(Rat(g.initial_index + c.p_minus + c.p_zero - static_cast<long>(c.rotations.size())));
  for (const Turn& t : c.rotations) v += ExactReal(Rat(2)) * t.value();
  return v;
}

ParityResult parity_check(const GeodesicModel& g) {
  ParityResult res;
  int odd = 0;
  for (const Block& b : g.decomposition.blocks) {
    switch (b.kind) {
      case BlockKind::Hyperbolic:
        res.constrained = false;
        break;
      case BlockKind::N1_plus_minus:
      case BlockKind::N2NonTrivial:
      case BlockKind::N2Trivial:
        break;
      default:
        ++odd;
    }
  }
  if (!res.constrained) {
    res.message = "hyperbolic part present: parity unconstrained";
    return res;
  }
  res.required = odd % 2;
  const int actual = is_even(g.initial_index) ? 0 : 1;
  res.ok = actual == res.required;
  res.message = std::to_string(odd) + " odd-forcing block(s) require " + (res.required ? "odd" : "even") +
                " i(c); got " + g.initial_index.get_str();
  return res;
}

int beta_at(const GeodesicModel& g, const Int& m) {
  return is_even(index_at(g, m) - g.initial_index) ? 1 : -1;
}

Int minimal_period(const GeodesicModel& g) {
  Int t = 1;
  for (const Int& s : rational_spectrum_denominators(g.decomposition)) t = lcm(t, s);
  for (Int p = 1; p <= t; ++p) {
    if (!is_even(index_at(g, p + t) - index_at(g, p))) {
      t *= 2;
      break;
    }
  }
  for (Int p = 1; p <= t; ++p) {
    if (nullity_at(g, p + t) != nullity_at(g, p) || !is_even(index_at(g, p + t) - index_at(g, p)))
      throw std::logic_error("period " + t.get_str() + " fails the periodicity check at p = " + p.get_str());
  }
  return t;
}

IndexProfile index_profile(const GeodesicModel& g, long m_max) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  if (m_max > kMaxProfileLength) throw std::invalid_argument("m_max above 10^7 is refused");
  IndexProfile p;
  p.mean_index = mean_index(g);
  p.elliptic_height = elliptic_height(g.decomposition);
  p.period = minimal_period(g);
  const ExactReal bound(Rat(g.n() - 1));
  p.rows.reserve(static_cast<std::size_t>(m_max));
  for (long k = 1; k <= m_max; ++k) {
    Int m = k;
    IndexRow row{m, index_at(g, m), nullity_at(g, m)};
    ExactReal dev = ExactReal(Rat(row.index)) - ExactReal(Rat(m)) * p.mean_index;
    if ((dev - bound).sign() > 0 || (dev + bound).sign() < 0)
      throw std::logic_error("|i(c^m) - m*mean| exceeds n-1 at m = " + m.get_str());
    p.rows.push_back(std::move(row));
  }
  return p;
}

}  // namespace geodex
