#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geodex/exact.hpp"
#include "geodex/iteration.hpp"

namespace geodex {

/// Critical type numbers (k_0, ..., k_nu) of one iterate class; entries past
/// the nullity are implicitly zero.
using TypeTuple = std::vector<long>;

/// One tuple per residue class r in 1..T(c). Nondegenerate classes may be
/// omitted: their tuple is forced.
struct TypeNumbers {
  std::map<long, TypeTuple> by_class;
};

struct DressedGeodesic {
  GeodesicModel model;
  TypeNumbers types;
};

/// Residue class of the m-th iterate, in 1..T.
long residue_class(const Int& m, const Int& period);

/// Tuple of a nondegenerate iterate: (1) when beta = +1, (0) otherwise.
TypeTuple forced_nondegenerate(int beta);

/// Type-number bounds, the beta = -1 rule and all four exclusion clauses.
bool admissible(const TypeTuple& k, int nu, int beta, std::string* why = nullptr);

/// Every admissible tuple of length nu+1, interior entries capped at `cap`.
std::vector<TypeTuple> enumerate_admissible_types(int nu, int beta, long cap = 2);

/// Sum_l (-1)^(index+l) k_l.
Int tuple_euler(const TypeTuple& k, const Int& index);

/// Range of tuple_euler over all admissible tuples (no cap); nullopt = unbounded.
struct ChiRange {
  std::optional<Int> lo, hi;
};
ChiRange chi_range(int nu, int beta, const Int& index);

/// Checks every supplied tuple against its class's nullity and beta.
std::vector<std::string> check_types(const DressedGeodesic& dg);

Int critical_dim(const DressedGeodesic& dg, const Int& m, const Int& q);
Int euler_char(const DressedGeodesic& dg, const Int& m);
Rat average_euler(const DressedGeodesic& dg);

struct IdentityTerm {
  Rat chi_hat;
  ExactReal mean_index;
};

struct IdentityReport {
  std::vector<IdentityTerm> terms;
  ExactReal lhs;
  Rat rhs;
  bool holds = false;
  ExactReal residue;  // lhs - rhs; its irrational part is reported separately
  int comparison = 0; // sign of residue
};

IdentityReport mean_index_identity(const std::vector<IdentityTerm>& terms, int n);
IdentityReport mean_index_identity(const std::vector<DressedGeodesic>& config, int n);

/// Inclusive iterate range per geodesic; lo > hi means empty.
struct IterWindow {
  Int lo = 1, hi = 0;
};

Int morse_count(const std::vector<DressedGeodesic>& config, const Int& q, const std::vector<IterWindow>& windows);

struct MorseRow {
  long q = 0;
  Int M, b;
  Int alt_residue;  // sum_{i<=q} (-1)^(q-i) (M_i - b_i), must be >= 0
  bool strong_ok = true, alt_ok = true;
};

struct MorseReport {
  std::vector<MorseRow> rows;
  std::optional<long> first_violation;
  std::string violation;
};

MorseReport morse_inequalities(const std::vector<DressedGeodesic>& config, int n, long q_max,
                               const std::vector<IterWindow>& windows);
MorseReport morse_inequalities(const std::vector<Int>& M, int n, long first_degree = 0);

/// When M_k = b_k, both truncated alternating sums ending at k and k-1 must vanish.
/// Lists start at degree `first`; the sums treat everything below `first` as
/// already balanced (pass an anchor degree + 1 where M = b held).
struct BridgeResidues {
  Int at_k, at_k_minus_1;
};
std::optional<BridgeResidues> balanced_degree_bridge(const std::vector<Int>& M, const std::vector<Int>& b, long k,
                                             long first = 0);

}  // namespace geodex
