#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodex/exact.hpp"
#include "geodex/iteration.hpp"

namespace geodex {

/// Level 2N and iterates 2m_j at which all geodesics' index windows align.
struct JumpCertificate {
  Int N;
  Int M;
  Rat eps;
  std::vector<Int> m;
  std::vector<int> xi;
};

/// Smallest M with M*theta/pi integral for every rational eigen-angle theta.
Int choose_modulus(const std::vector<GeodesicModel>& config);

/// 1/(1 + sum 4M|chi_hat|); 1/1000 when no averages are known.
Rat default_epsilon(const std::vector<Rat>& chi_hats, const Int& M);

/// Admissible N are the multiples of this step: 2N*B(n,1) integral, and
/// k | N for n = 2k+1, (2k-1) | N for n = 2k.
Int jump_lattice_step(int n);

struct JumpOptions {
  std::optional<Rat> eps;
  Int N_bound = 1'000'000;
  Int N_min = 1;
  std::vector<Rat> chi_hats;  // only used to derive the default eps
  bool require_verified = true;
};

struct JumpSearchStats {
  unsigned long lattice_points = 0;
  unsigned long approx_hits = 0;
  unsigned long exact_hits = 0;
  unsigned long verification_rejects = 0;
  unsigned long undecided = 0;
};

struct JumpSearch {
  std::optional<JumpCertificate> cert;
  JumpSearchStats stats;
  std::vector<std::string> warnings;
};

JumpSearch find_jump(const std::vector<GeodesicModel>& config, int n, const JumpOptions& opt = {});

struct JumpCheck {
  std::size_t geodesic = 0;
  std::string name;
  std::string relation;  // ">=", "<=", "="
  Int iterate;
  Int lhs, rhs;
  Int slack;  // >= 0 iff satisfied (equality: 0 iff satisfied)
  bool ok = true;
};

struct JumpVerification {
  std::vector<JumpCheck> checks;
  std::vector<std::string> structural;  // certificate invariants that fail
  bool ok = true;
};

/// With `full_window`, every iterate below 2m_j and those in (2m_j, 4m_j+2]
/// are checked; otherwise only the iterates adjacent to 2m_j (enough when
/// i(c) >= n-1, where i and i+nu are nondecreasing along iterates).
JumpVerification verify_jump(const std::vector<GeodesicModel>& config, int n, const JumpCertificate& cert,
                             bool full_window = false);

/// Whether every structural invariant of the certificate holds.
std::vector<std::string> certificate_violations(const std::vector<GeodesicModel>& config, int n,
                                                const JumpCertificate& cert);

}  // namespace geodex
