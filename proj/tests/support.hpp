#pragma once

// Hand-rolled generators for property tests.

#include <random>
#include <string>
#include <vector>

#include "geodex/iteration.hpp"
#include "geodex/normal_forms.hpp"
#include "oracle/oracle.hpp"

namespace testgen {

using geodex::Block;
using geodex::BlockKind;
using geodex::Decomposition;
using geodex::GeodesicModel;
using geodex::Int;
using geodex::Rat;
using geodex::Turn;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))]; }
};

// Paired geodex and oracle descriptions of one turn.
struct TurnPair {
  Turn turn;
  oracle::Turn plain;
};

inline TurnPair rational_turn(Rng& r, long max_den, bool allow_one, bool allow_half) {
  while (true) {
    long s = r.uniform(1, max_den);
    long p = r.uniform(1, s);
    Rat q(p, s);
    q.canonicalize();
    if (q == 1 && !allow_one) continue;
    if (q == Rat(1, 2) && !allow_half) continue;
    return {Turn::rational(q), {q.get_num().get_si(), 0, q.get_den().get_si(), 0}};
  }
}

// (a + b sqrt(d)) / c strictly inside (0, 1).
inline TurnPair surd_turn(Rng& r) {
  static const std::vector<long> radicands{2, 3, 5, 6, 7, 10, 11, 13};
  while (true) {
    long d = r.pick(radicands), b = r.uniform(1, 3) * (r.coin() ? 1 : -1), a = r.uniform(-4, 4), c = r.uniform(1, 9);
    Turn t = Turn::surd(a, b, c, d);
    auto v = t.value();
    if (v.sign() <= 0 || (v - geodex::ExactReal(1)).sign() >= 0) continue;
    return {t, {t.a().get_si(), t.b().get_si(), t.c().get_si(), t.d().get_si()}};
  }
}

struct ModelPair {
  GeodesicModel model;
  oracle::Model plain;
};

inline bool odd_forcing(BlockKind k) {
  switch (k) {
    case BlockKind::N1_plus_minus:
    case BlockKind::N2NonTrivial:
    case BlockKind::N2Trivial:
    case BlockKind::Hyperbolic:
      return false;
    default:
      return true;
  }
}

inline oracle::Kind plain_kind(BlockKind k) {
  switch (k) {
    case BlockKind::N1_plus_plus: return oracle::Kind::PP;
    case BlockKind::IdentityPair: return oracle::Kind::I2;
    case BlockKind::N1_plus_minus: return oracle::Kind::PM;
    case BlockKind::N1_minus_plus: return oracle::Kind::MP;
    case BlockKind::MinusIdentityPair: return oracle::Kind::MI2;
    case BlockKind::N1_minus_minus: return oracle::Kind::MM;
    case BlockKind::Rotation: return oracle::Kind::Rot;
    case BlockKind::N2NonTrivial: return oracle::Kind::N2Non;
    case BlockKind::N2Trivial: return oracle::Kind::N2Triv;
    case BlockKind::Hyperbolic: return oracle::Kind::Hyp;
  }
  return oracle::Kind::Hyp;
}

struct ModelSpec {
  int n = 3;
  long max_den = 12;
  double surd_probability = 0.0;
  bool allow_hyperbolic = true;
  bool allow_n2 = true;
  long index_lo = 0, index_hi = 8;
};

// Random valid model with parity-consistent initial index.
inline ModelPair random_model(Rng& r, const ModelSpec& spec) {
  static const std::vector<BlockKind> two_dim{BlockKind::N1_plus_plus,  BlockKind::IdentityPair,
                                              BlockKind::N1_plus_minus, BlockKind::N1_minus_plus,
                                              BlockKind::MinusIdentityPair, BlockKind::N1_minus_minus,
                                              BlockKind::Rotation,      BlockKind::Rotation};
  ModelPair out;
  Decomposition d;
  d.n = spec.n;
  out.plain.n = spec.n;
  int left = 2 * (spec.n - 1);
  bool hyperbolic = false;
  int odd = 0;
  while (left > 0) {
    const long roll = r.uniform(0, 9);
    if (spec.allow_hyperbolic && roll == 0 && !hyperbolic) {
      int dim = 2 * static_cast<int>(r.uniform(1, left / 2));
      d.blocks.push_back(Block::hyperbolic(dim));
      out.plain.blocks.push_back({oracle::Kind::Hyp, {}, dim});
      left -= dim;
      hyperbolic = true;
      continue;
    }
    if (spec.allow_n2 && roll <= 2 && left >= 4) {
      TurnPair t = r.coin(spec.surd_probability) ? surd_turn(r) : rational_turn(r, spec.max_den, false, false);
      const bool non = r.coin();
      d.blocks.push_back(non ? Block::n2_nontrivial(t.turn) : Block::n2_trivial(t.turn));
      out.plain.blocks.push_back({non ? oracle::Kind::N2Non : oracle::Kind::N2Triv, t.plain, 4});
      left -= 4;
      continue;
    }
    BlockKind k = r.pick(two_dim);
    if (k == BlockKind::Rotation) {
      TurnPair t = r.coin(spec.surd_probability) ? surd_turn(r) : rational_turn(r, spec.max_den, true, true);
      d.blocks.push_back(Block::rotation(t.turn));
      out.plain.blocks.push_back({oracle::Kind::Rot, t.plain, 2});
    } else {
      d.blocks.push_back(Block::of(k));
      out.plain.blocks.push_back({plain_kind(k), {}, 2});
    }
    if (odd_forcing(k)) ++odd;
    left -= 2;
  }
  long idx = r.uniform(spec.index_lo, spec.index_hi);
  if (!hyperbolic && (idx - odd) % 2 != 0) ++idx;
  out.model = GeodesicModel{d, idx, ""};
  out.plain.index = idx;
  return out;
}

inline GeodesicModel two_rotations(const Turn& a, const Turn& b, long index) {
  return GeodesicModel{Decomposition{3, {Block::rotation(a), Block::rotation(b)}}, index, ""};
}

inline Turn surd(long a, long b, long c, long d) { return Turn::surd(a, b, c, d); }
inline Turn rat(long p, long q) { return Turn::rational(Rat(p, q)); }

inline long long to_ll(const Int& v) { return std::stoll(v.get_str()); }

}  // namespace testgen
