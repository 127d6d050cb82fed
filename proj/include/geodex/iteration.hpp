#pragma once

#include <string>
#include <vector>

#include "geodex/exact.hpp"
#include "geodex/normal_forms.hpp"

namespace geodex {

/// A closed geodesic as seen by index theory: its normal form plus i(c).
struct GeodesicModel {
  Decomposition decomposition;
  Int initial_index = 0;
  std::string label;

  int n() const { return decomposition.n; }
};

Int index_at(const GeodesicModel& g, const Int& m);
int nullity_at(const GeodesicModel& g, const Int& m);
ExactReal mean_index(const GeodesicModel& g);

struct ParityResult {
  bool ok = true;
  bool constrained = true;  // false when a hyperbolic block frees the parity
  int required = 0;         // 0 even, 1 odd (meaningful when constrained)
  std::string message;
};

ParityResult parity_check(const GeodesicModel& g);

/// +1 or -1: (-1)^(i(c^m) - i(c)).
int beta_at(const GeodesicModel& g, const Int& m);

/// T(c): lcm of the rational eigen-turn denominators, doubled when the index
/// jumps by an odd amount over one such period.
Int minimal_period(const GeodesicModel& g);

struct IndexRow {
  Int m;
  Int index;
  int nullity = 0;
};

struct IndexProfile {
  std::vector<IndexRow> rows;
  ExactReal mean_index;
  int elliptic_height = 0;
  Int period;
};

inline constexpr long kMaxProfileLength = 10'000'000;

/// Rows for m = 1..m_max; throws if some row breaks |i(c^m) - m î| <= n-1.
IndexProfile index_profile(const GeodesicModel& g, long m_max);

}  // namespace geodex
