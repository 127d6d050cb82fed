#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodex/exact.hpp"

namespace geodex {

enum class BlockKind {
  N1_plus_plus,       // N1(1,1)
  IdentityPair,       // I_2
  N1_plus_minus,      // N1(1,-1)
  N1_minus_plus,      // N1(-1,1)
  MinusIdentityPair,  // -I_2
  N1_minus_minus,     // N1(-1,-1)
  Rotation,
  N2NonTrivial,
  N2Trivial,
  Hyperbolic,
};

std::string kind_name(BlockKind k);
BlockKind parse_kind(const std::string& s);

/// One basic normal form of a symplectic matrix.
struct Block {
  BlockKind kind = BlockKind::IdentityPair;
  std::optional<Turn> turn;  // Rotation / N2 blocks
  int hyperbolic_dim = 0;    // Hyperbolic blocks

  static Block of(BlockKind k) { return Block{k, std::nullopt, 0}; }
  static Block rotation(const Turn& t) { return Block{BlockKind::Rotation, t, 0}; }
  static Block n2_trivial(const Turn& t) { return Block{BlockKind::N2Trivial, t, 0}; }
  static Block n2_nontrivial(const Turn& t) { return Block{BlockKind::N2NonTrivial, t, 0}; }
  static Block hyperbolic(int dim) { return Block{BlockKind::Hyperbolic, std::nullopt, dim}; }

  int real_dim() const;
  bool has_turn() const;
  std::string str() const;
  friend bool operator==(const Block& a, const Block& b);
};

struct BlockCounts {
  int p_minus = 0, p_zero = 0, p_plus = 0;
  int q_minus = 0, q_zero = 0, q_plus = 0;
  std::vector<Turn> rotations, nontrivial, trivial;
  int hyperbolic_dim = 0;
};

/// Basic normal form decomposition of a linearized Poincare map in Sp(2n-2).
struct Decomposition {
  int n = 3;
  std::vector<Block> blocks;

  BlockCounts counts() const;
  int total_dim() const;
  std::string str() const;
  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.n == b.n && a.blocks == b.blocks;
  }
};

/// Empty when valid; otherwise one message per violated invariant.
std::vector<std::string> validate(const Decomposition& d);
void require_valid(const Decomposition& d);

int elliptic_height(const Decomposition& d);
bool is_elliptic(const Decomposition& d);
int nullity_at_one(const Decomposition& d);
/// 2 S^+(1) - nu(1), summed per block.
int splitting_defect(const Decomposition& d);
int splitting_defect(const Block& b);
/// Denominators s of the rational eigen-turns r/s; ±1 blocks give 1 or 2.
std::vector<Int> rational_spectrum_denominators(const Decomposition& d);

}  // namespace geodex
