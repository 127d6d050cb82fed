#include "geodex/normal_forms.hpp"

#include <stdexcept>

namespace geodex {

namespace {

struct KindEntry {
  BlockKind kind;
  const char* name;
};

constexpr KindEntry kKinds[] = {
    {BlockKind::N1_plus_plus, "N1_plus_plus"},
    {BlockKind::IdentityPair, "IdentityPair"},
    {BlockKind::N1_plus_minus, "N1_plus_minus"},
    {BlockKind::N1_minus_plus, "N1_minus_plus"},
    {BlockKind::MinusIdentityPair, "MinusIdentityPair"},
    {BlockKind::N1_minus_minus, "N1_minus_minus"},
    {BlockKind::Rotation, "Rotation"},
    {BlockKind::N2NonTrivial, "N2NonTrivial"},
    {BlockKind::N2Trivial, "N2Trivial"},
    {BlockKind::Hyperbolic, "Hyperbolic"},
};

bool in_open_unit(const Turn& t) { return t.value().sign() > 0 && (t.value() - ExactReal(1)).sign() < 0; }

}  // namespace

std::string kind_name(BlockKind k) {
  for (const auto& e : kKinds)
    if (e.kind == k) return e.name;
  throw std::logic_error("unknown block kind");
}

BlockKind parse_kind(const std::string& s) {
  for (const auto& e : kKinds)
    if (s == e.name) return e.kind;
  throw std::invalid_argument("unknown block kind '" + s + "'");
}

int Block::real_dim() const {
  switch (kind) {
    case BlockKind::N2NonTrivial:
    case BlockKind::N2Trivial:
      return 4;
    case BlockKind::Hyperbolic:
      return hyperbolic_dim;
    default:
      return 2;
  }
}

bool Block::has_turn() const {
  return kind == BlockKind::Rotation || kind == BlockKind::N2NonTrivial || kind == BlockKind::N2Trivial;
}

std::string Block::str() const {
  std::string s = kind_name(kind);
  if (has_turn() && turn) s += "(" + turn->str() + ")";
  if (kind == BlockKind::Hyperbolic) s += "(" + std::to_string(hyperbolic_dim) + ")";
  return s;
}

bool operator==(const Block& a, const Block& b) {
  return a.kind == b.kind && a.turn == b.turn && a.hyperbolic_dim == b.hyperbolic_dim;
}

BlockCounts Decomposition::counts() const {
  BlockCounts c;
  for (const Block& b : blocks) {
    switch (b.kind) {
      case BlockKind::N1_plus_plus: ++c.p_minus; break;
      case BlockKind::IdentityPair: ++c.p_zero; break;
      case BlockKind::N1_plus_minus: ++c.p_plus; break;
      case BlockKind::N1_minus_plus: ++c.q_minus; break;
      case BlockKind::MinusIdentityPair: ++c.q_zero; break;
      case BlockKind::N1_minus_minus: ++c.q_plus; break;
      case BlockKind::Rotation: c.rotations.push_back(*b.turn); break;
      case BlockKind::N2NonTrivial: c.nontrivial.push_back(*b.turn); break;
      case BlockKind::N2Trivial: c.trivial.push_back(*b.turn); break;
      case BlockKind::Hyperbolic: c.hyperbolic_dim += b.hyperbolic_dim; break;
    }
  }
  return c;
}

int Decomposition::total_dim() const {
  int s = 0;
  for (const Block& b : blocks) s += b.real_dim();
  return s;
}

std::string Decomposition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ", ";
    s += blocks[i].str();
  }
  return s + "]";
}

std::vector<std::string> validate(const Decomposition& d) {
  std::vector<std::string> out;
  if (d.n < 2) out.push_back("sphere dimension n = " + std::to_string(d.n) + " must be at least 2");
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const Block& b = d.blocks[i];
    const std::string where = "block " + std::to_string(i) + " (" + kind_name(b.kind) + ")";
    if (b.has_turn()) {
      if (!b.turn) {
        out.push_back(where + ": missing turn");
        continue;
      }
      const Turn& t = *b.turn;
      if (b.kind == BlockKind::Rotation) {
        const bool ok = in_open_unit(t) || t == Turn::rational(Rat(1));
        if (!ok) out.push_back(where + ": rotation turn " + t.str() + " outside (0, 1]");
      } else {
        if (!in_open_unit(t)) out.push_back(where + ": N2 turn " + t.str() + " outside (0, 1)");
        if (t == Turn::rational(Rat(1, 2))) out.push_back(where + ": N2 turn must differ from 1/2");
      }
    } else if (b.turn) {
      out.push_back(where + ": unexpected turn");
    }
    if (b.kind == BlockKind::Hyperbolic) {
      if (b.hyperbolic_dim <= 0 || b.hyperbolic_dim % 2 != 0)
        out.push_back(where + ": hyperbolic dimension " + std::to_string(b.hyperbolic_dim) + " must be positive and even");
    } else if (b.hyperbolic_dim != 0) {
      out.push_back(where + ": dimension field only allowed on Hyperbolic blocks");
    }
  }
  const int dim = d.total_dim();
  if (dim != 2 * (d.n - 1))
    out.push_back("dimension " + std::to_string(dim) + " != " + std::to_string(2 * (d.n - 1)) + " = 2(n-1)");
  return out;
}

void require_valid(const Decomposition& d) {
  auto v = validate(d);
  if (v.empty()) return;
  std::string msg = "invalid decomposition " + d.str() + ":";
  for (const auto& s : v) msg += " " + s + ";";
  throw std::invalid_argument(msg);
}

int elliptic_height(const Decomposition& d) {
  int e = 0;
  for (const Block& b : d.blocks)
    if (b.kind != BlockKind::Hyperbolic) e += b.real_dim();
  return e;
}

bool is_elliptic(const Decomposition& d) { return elliptic_height(d) == 2 * (d.n - 1); }

int nullity_at_one(const Decomposition& d) {
  auto c = d.counts();
  int v = c.p_minus + 2 * c.p_zero + c.p_plus;
  // R(1) is I2 written as a rotation.
  for (const Block& b : d.blocks)
    if (b.turn && b.turn->phi() == 0) v += 2;
  return v;
}

int splitting_defect(const Block& b) {
  switch (b.kind) {
    case BlockKind::N1_plus_plus: return 1;
    case BlockKind::N1_plus_minus: return -1;
    default: return 0;
  }
}

int splitting_defect(const Decomposition& d) {
  int s = 0;
  for (const Block& b : d.blocks) s += splitting_defect(b);
  if (s < -(d.n - 1)) throw std::logic_error("splitting defect below -(n-1)");
  return s;
}

std::vector<Int> rational_spectrum_denominators(const Decomposition& d) {
  std::vector<Int> out;
  for (const Block& b : d.blocks) {
    switch (b.kind) {
      case BlockKind::N1_plus_plus:
      case BlockKind::IdentityPair:
      case BlockKind::N1_plus_minus:
        out.emplace_back(1);
        break;
      case BlockKind::N1_minus_plus:
      case BlockKind::MinusIdentityPair:
      case BlockKind::N1_minus_minus:
        out.emplace_back(2);
        break;
      case BlockKind::Rotation:
      case BlockKind::N2NonTrivial:
      case BlockKind::N2Trivial:
        if (b.turn && b.turn->is_rational()) out.push_back(b.turn->rat().get_den());
        break;
      case BlockKind::Hyperbolic:
        break;
    }
  }
  return out;
}

}  // namespace geodex
