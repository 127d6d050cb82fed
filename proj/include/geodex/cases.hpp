#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geodex/exact.hpp"
#include "geodex/iteration.hpp"
#include "geodex/jump.hpp"
#include "geodex/morse.hpp"

namespace geodex {

/// Shape of the second geodesic on S^3 after folding N1(1,1), I2 into R(1)
/// and N1(-1,-1), -I2 into R(1/2).
std::string classify_case(const GeodesicModel& c2);

/// Block list with the folding above applied.
std::vector<Block> fold_blocks(const Decomposition& d);

struct DerivedFact {
  std::string name;
  std::string value;
  std::string anchor;
};

struct Contradiction {
  std::string anchor;
  std::string constraint;
  std::string lhs;
  std::string relation;  // how lhs fails against rhs, e.g. "<"
  std::string rhs;
};

enum class Outcome { Eliminated, NotEliminated };

struct EliminationReport {
  std::string case_label;
  Outcome status = Outcome::NotEliminated;
  std::string reason_kind;  // precondition | budget | survivor | error (empty when eliminated)
  std::string reason;
  std::vector<DerivedFact> facts;
  std::optional<Contradiction> contradiction;
  std::map<std::string, long> branch_failures;  // anchor -> branch count
  long branches = 0;
  int certificates_tried = 0;
  int certificates_skipped = 0;
  std::optional<JumpCertificate> certificate;
  bool cap_saturated = false;
  std::vector<std::string> notes;
};

struct EliminateOptions {
  long k_cap = 2;
  Int N_bound = 1'000'000;
  // Window facts are recomputed exactly, so a loose eps only widens the scan.
  std::optional<Rat> eps = Rat(1, 20);
  int max_certificates = 16;
  long window_below = 3;  // degrees [2N - below, 2N + above]
  long window_above = 2;
  long low_degree_max = 3;
  bool allow_any_c1 = false;
  long max_branches = 2'000'000;
  // Only use certificates with i + nu of c1^{2m_1} equal to 2N+2, the
  // alignment a genuine pair must exhibit at every jump.
  bool align_c1_top = true;
  int max_skipped = 4096;
};

/// Tries to rule out a two-geodesic S^3 configuration: every admissible
/// allocation of unknown type numbers must violate the Morse inequalities
/// near a common index jump or the mean index identity.
EliminationReport eliminate(const GeodesicModel& c1, const GeodesicModel& c2, const EliminateOptions& opt = {});

/// Preconditions of `eliminate`; empty when satisfied.
std::vector<std::string> elimination_preconditions(const GeodesicModel& c1, const GeodesicModel& c2,
                                                   bool allow_any_c1);

struct SweepGrid {
  std::vector<Turn> c1_turns;  // exactly two
  Int c1_index = 2;
  std::vector<Rat> rational_turns;
  std::vector<Turn> surd_turns;
  std::vector<Int> indices;
  std::vector<std::string> case_filter;  // empty = all cases
  bool include_pm1_blocks = true;
  bool include_hyperbolic = true;
  bool include_n2 = true;
  unsigned jobs = 1;
  EliminateOptions options;
};

/// Rational turns r/s in (0, 1] with s <= max_den, ordered by (s, r).
std::vector<Rat> farey_turns(long max_den);

/// Every valid c2 model on S^3 the grid describes (before preconditions).
std::vector<GeodesicModel> grid_models(const SweepGrid& grid);

struct SweepCell {
  GeodesicModel c2;
  EliminationReport report;
  std::string error;
};

struct SweepSummary {
  long cells = 0;
  long eliminated = 0;
  long not_eliminated = 0;
  long precondition_skipped = 0;
  long errors = 0;
  std::map<std::string, long> by_case;
  std::map<std::string, long> by_anchor;
  std::vector<SweepCell> cells_detail;
};

SweepSummary sweep(const SweepGrid& grid);

struct StepOneReport {
  std::string case_label;  // StepOne_odd | StepOne_even
  bool precondition_ok = true;
  std::vector<std::string> precondition_errors;
  std::optional<JumpCertificate> certificate;
  std::vector<Rat> chi_hats;
  Int jump_sum_lhs, jump_sum_rhs;  // sum 2 m_j chi_hat_j, 2 N B(n,1)
  Int morse_side, betti_side;  // alternating sums up to degree 2N+n-2
  long top_degree = 0;
  bool jump_sum_holds = false;
  bool morse_sum_holds = false;
  bool contradiction = false;
  std::string violated;
};

StepOneReport step_one_check(const std::vector<DressedGeodesic>& config, int n, const JumpOptions& opt = {});

struct StructureChecklist {
  bool i = false, ii = false, iii = false, iv = false, vi = false;
  // item (v) concerns type numbers and is not decided structurally
};

StructureChecklist elliptic_structure_filter(const Decomposition& d);

struct HingstonReport {
  bool applicable = false;
  bool equality_family = false;  // I2^p0 (+) N1(1,-1)^p+ shape
  bool top_type_nonzero = false;
  std::optional<Int> first_failure;  // iterate where the growth bound fails
  bool equality_everywhere = false;  // equality held at every checked iterate
};

HingstonReport hingston_check(const GeodesicModel& g, const TypeNumbers& types, long m_check = 1000);
bool hingston_applicable(const GeodesicModel& g, const TypeNumbers& types, long m_check = 1000);

bool elliptic_parabolic_test(const GeodesicModel& g);

}  // namespace geodex
