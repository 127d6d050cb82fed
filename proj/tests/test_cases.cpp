#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "geodex/cases.hpp"
#include "geodex/homology.hpp"
#include "support.hpp"

using namespace geodex;
using testgen::rat;
using testgen::surd;
using testgen::two_rotations;

namespace {

GeodesicModel model(std::vector<Block> blocks, long index) { return GeodesicModel{Decomposition{3, std::move(blocks)}, index, ""}; }

const GeodesicModel kC1 = two_rotations(surd(0, 1, 2, 2), surd(0, 1, 2, 3), 2);

// Independent replay of an elimination at its certificate: every allocation
// of type numbers to the degenerate class groups touching degrees 0..3 and
// [2N-3, 2N+2] must break a Morse inequality or the mean index identity.
struct Replay {
  bool feasible = true;  // false when the allocation space is too large to replay
  long allocations = 0;
  long survivors = 0;
};

struct IterateData {
  long r;
  Int index;
  int nu, beta;
};

Replay replay(const GeodesicModel& c1, const GeodesicModel& c2, const JumpCertificate& cert, long cap) {
  const int n = 3;
  const std::vector<const GeodesicModel*> gs{&c1, &c2};
  const long twoN = Int(2 * cert.N).get_si();
  const long lo_w = twoN - 3, hi_w = twoN + 2;
  auto covered = [&](long q) { return (q >= 0 && q <= 3) || (q >= lo_w && q <= hi_w); };

  struct Geo {
    long T;
    std::vector<IterateData> cls;         // by r-1
    std::vector<IterateData> iterates;    // touching covered degrees
    std::vector<long> group;              // by r-1
  };
  std::vector<Geo> geo(2);
  for (std::size_t j = 0; j < 2; ++j) {
    const GeodesicModel& g = *gs[j];
    Geo& d = geo[j];
    d.T = minimal_period(g).get_si();
    for (long r = 1; r <= d.T; ++r) d.cls.push_back({r, index_at(g, r), nullity_at(g, r), beta_at(g, r)});
    // Scan every iterate until the index clears the window for good.
    const ExactReal mean = mean_index(g);
    const long m_hi = (ExactReal(Rat(hi_w + 8)) / mean).ceil().get_si() + 2;
    for (long m = 1; m <= m_hi; ++m) {
      const Int i = index_at(g, m);
      const int nu = nullity_at(g, m);
      bool hit = false;
      for (long q = i.get_si(); q <= i.get_si() + nu && !hit; ++q) hit = covered(q);
      if (hit) d.iterates.push_back({(m - 1) % d.T + 1, i, nu, beta_at(g, m)});
    }
    d.group.resize(static_cast<std::size_t>(d.T));
    std::iota(d.group.begin(), d.group.end(), 0);
    auto find = [&](long x) {
      while (d.group[static_cast<std::size_t>(x)] != x) x = d.group[static_cast<std::size_t>(x)];
      return x;
    };
    for (long r = 1; r <= d.T; ++r)
      for (long s = 1; s <= d.T; ++s) {
        const auto &a = d.cls[static_cast<std::size_t>(r - 1)], &b = d.cls[static_cast<std::size_t>(s - 1)];
        if (a.nu == 0 || s % std::gcd(r, d.T) != 0 || a.nu != b.nu || a.beta != b.beta) continue;
        long x = find(r - 1), y = find(s - 1);
        if (x != y) d.group[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
      }
    for (long r = 0; r < d.T; ++r) d.group[static_cast<std::size_t>(r)] = find(r);
  }

  // Tuples from the admissibility predicate over a capped box.
  auto tuples_for = [&](int nu, int beta) {
    std::vector<TypeTuple> out;
    TypeTuple k(static_cast<std::size_t>(nu + 1), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t l) {
      if (l == k.size()) {
        if (admissible(k, nu, beta)) out.push_back(k);
        return;
      }
      const long top = (l == 0 || l + 1 == k.size()) ? 1 : cap;
      for (long v = 0; v <= top; ++v) {
        k[l] = v;
        rec(l + 1);
      }
    };
    rec(0);
    return out;
  };

  struct Var {
    std::size_t j;
    long group;
    int nu, beta;
    std::vector<TypeTuple> tuples;
  };
  std::vector<Var> vars;
  std::map<std::pair<std::size_t, long>, std::size_t> var_index;
  for (std::size_t j = 0; j < 2; ++j)
    for (const auto& it : geo[j].iterates) {
      if (it.nu == 0) continue;
      const long grp = geo[j].group[static_cast<std::size_t>(it.r - 1)];
      if (var_index.count({j, grp})) continue;
      const auto& c = geo[j].cls[static_cast<std::size_t>(it.r - 1)];
      var_index[{j, grp}] = vars.size();
      vars.push_back({j, grp, c.nu, c.beta, tuples_for(c.nu, c.beta)});
    }
  Replay out;
  long total = 1;
  for (const auto& v : vars) {
    total *= static_cast<long>(v.tuples.size());
    if (total > 200000) {
      out.feasible = false;
      return out;
    }
  }

  const Rat B = constant_B(n);
  std::vector<std::size_t> pick(vars.size());
  for (long b = 0; b < total; ++b) {
    long rem = b;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      pick[v] = static_cast<std::size_t>(rem % static_cast<long>(vars[v].tuples.size()));
      rem /= static_cast<long>(vars[v].tuples.size());
    }
    ++out.allocations;
    auto tuple_of = [&](std::size_t j, long r) -> const TypeTuple* {
      auto it = var_index.find({j, geo[j].group[static_cast<std::size_t>(r - 1)]});
      return it == var_index.end() ? nullptr : &vars[it->second].tuples[pick[it->second]];
    };

    // A top type number 1 at a multiple forces zeros below the nullity at its divisor.
    bool dead = false;
    for (std::size_t j = 0; j < 2 && !dead; ++j)
      for (long r = 1; r <= geo[j].T && !dead; ++r)
        for (long s = 1; s <= geo[j].T && !dead; ++s) {
          const auto &a = geo[j].cls[static_cast<std::size_t>(r - 1)], &c = geo[j].cls[static_cast<std::size_t>(s - 1)];
          if (r == s || a.nu == 0 || c.nu < a.nu || s % std::gcd(r, geo[j].T) != 0) continue;
          const TypeTuple *ka = tuple_of(j, r), *kc = tuple_of(j, s);
          if (!ka || !kc || geo[j].group[static_cast<std::size_t>(r - 1)] == geo[j].group[static_cast<std::size_t>(s - 1)])
            continue;
          if ((*kc)[static_cast<std::size_t>(c.nu)] != 1) continue;
          for (int l = 0; l < a.nu; ++l)
            if ((*ka)[static_cast<std::size_t>(l)] != 0) dead = true;
        }
    if (dead) continue;

    std::map<long, long> M;
    for (long q = 0; q <= 3; ++q) M[q] = 0;
    for (long q = lo_w; q <= hi_w; ++q) M[q] = 0;
    for (std::size_t j = 0; j < 2; ++j)
      for (const auto& it : geo[j].iterates) {
        TypeTuple k = it.nu == 0 ? forced_nondegenerate(it.beta) : *tuple_of(j, it.r);
        for (std::size_t l = 0; l < k.size(); ++l) {
          const long q = it.index.get_si() + static_cast<long>(l);
          if (M.count(q)) M[q] += k[l];
        }
      }
    for (const auto& [q, m] : M)
      if (m < betti(n, q)) dead = true;
    if (dead) continue;

    // Alternating sums from degree 0 over the low degrees (or the whole range
    // when it is contiguous).
    const long low_top = lo_w <= 4 ? hi_w : 3;
    long S = 0;
    for (long q = 0; q <= low_top && !dead; ++q) {
      S = (M[q] - betti(n, q)) - S;
      if (S < 0) dead = true;
    }
    if (dead) continue;
    // Balanced degree inside the window: S vanishes there, so sums restart.
    if (lo_w > 4) {
      long k = lo_w;
      while (k <= hi_w && M[k] != betti(n, k)) ++k;
      long D = 0;
      for (long q = k + 1; q <= hi_w && !dead; ++q) {
        D = (M[q] - betti(n, q)) - D;
        if (D < 0) dead = true;
      }
      if (dead) continue;
    }

    // Mean index identity with interval bounds for the unconstrained classes.
    ExactReal lo_sum, hi_sum;
    bool lo_ok = true, hi_ok = true;
    for (std::size_t j = 0; j < 2; ++j) {
      Rat lo = 0, hi = 0;
      for (long r = 1; r <= geo[j].T; ++r) {
        const auto& c = geo[j].cls[static_cast<std::size_t>(r - 1)];
        const TypeTuple* k = c.nu == 0 ? nullptr : tuple_of(j, r);
        if (c.nu == 0 || k) {
          TypeTuple t = k ? *k : forced_nondegenerate(c.beta);
          Int chi = 0;
          for (std::size_t l = 0; l < t.size(); ++l)
            chi += ((c.index.get_si() + static_cast<long>(l)) % 2 == 0 ? 1 : -1) * t[l];
          lo += Rat(chi);
          hi += Rat(chi);
          continue;
        }
        ChiRange cr = chi_range(c.nu, c.beta, c.index);
        if (cr.lo) lo += Rat(*cr.lo); else lo_ok = false;
        if (cr.hi) hi += Rat(*cr.hi); else hi_ok = false;
      }
      const ExactReal w = (ExactReal(geo[j].T) * mean_index(*gs[j])).inverse();
      lo_sum += ExactReal(lo) * w;
      hi_sum += ExactReal(hi) * w;
    }
    if (hi_ok && (hi_sum - ExactReal(B)).sign() < 0) continue;
    if (lo_ok && (lo_sum - ExactReal(B)).sign() > 0) continue;
    ++out.survivors;
  }
  return out;
}

}  // namespace

TEST(ClassifyCase, Examples) {
  EXPECT_EQ(classify_case(two_rotations(rat(1, 3), rat(2, 5), 4)), "Case1");
  EXPECT_EQ(classify_case(model({Block::rotation(rat(1, 3)), Block::of(BlockKind::N1_minus_plus)}, 3)), "Case2");
  EXPECT_EQ(classify_case(model({Block::rotation(rat(1, 4)), Block::of(BlockKind::N1_plus_minus)}, 3)), "Case3");
  EXPECT_EQ(classify_case(model({Block::rotation(rat(1, 3)), Block::hyperbolic(2)}, 3)), "Case4");
  EXPECT_EQ(classify_case(two_rotations(rat(1, 3), surd(0, 1, 2, 2), 2)), "Case5");
  EXPECT_EQ(classify_case(model({Block::hyperbolic(4)}, 3)), "Case6");
  EXPECT_EQ(classify_case(model({Block::n2_trivial(rat(1, 3))}, 3)), "Case6");
  // Folding: N1(1,1) acts as R(1), -I2 as R(1/2).
  EXPECT_EQ(classify_case(model({Block::of(BlockKind::N1_plus_plus), Block::of(BlockKind::MinusIdentityPair)}, 2)),
            "Case1");
  EXPECT_EQ(classify_case(model({Block::of(BlockKind::IdentityPair), Block::of(BlockKind::N1_plus_minus)}, 3)),
            "Case3");
  EXPECT_THROW(classify_case(GeodesicModel{Decomposition{4, {Block::hyperbolic(6)}}, 3, ""}), std::exception);
}

TEST(ClassifyCase, EveryShapeHasExactlyOneCase) {
  std::vector<Block> two;
  for (BlockKind k : {BlockKind::N1_plus_plus, BlockKind::IdentityPair, BlockKind::N1_plus_minus, BlockKind::N1_minus_plus,
                      BlockKind::MinusIdentityPair, BlockKind::N1_minus_minus})
    two.push_back(Block::of(k));
  for (const Turn& t : {rat(1, 3), rat(1, 2), rat(1, 1), surd(0, 1, 2, 2)}) two.push_back(Block::rotation(t));
  two.push_back(Block::hyperbolic(2));
  std::vector<std::vector<Block>> shapes;
  for (std::size_t a = 0; a < two.size(); ++a)
    for (std::size_t b = a; b < two.size(); ++b) shapes.push_back({two[a], two[b]});
  for (const Turn& t : {rat(1, 3), surd(0, 1, 2, 2)}) {
    shapes.push_back({Block::n2_trivial(t)});
    shapes.push_back({Block::n2_nontrivial(t)});
  }
  shapes.push_back({Block::hyperbolic(4)});
  std::map<std::string, int> seen;
  for (const auto& s : shapes) {
    GeodesicModel g = model(s, 3);
    ASSERT_TRUE(validate(g.decomposition).empty());
    std::string c;
    ASSERT_NO_THROW(c = classify_case(g)) << g.decomposition.str();
    ++seen[c];
    // The label agrees with a direct count of rational rotations after folding.
    int rational = 0;
    for (const Block& b : fold_blocks(g.decomposition))
      if (b.kind == BlockKind::Rotation && b.turn->is_rational()) ++rational;
    if (rational == 2) EXPECT_EQ(c, "Case1");
    if (rational == 0) EXPECT_EQ(c, "Case6");
    if (rational == 1) EXPECT_NE(c, "Case1");
  }
  EXPECT_EQ(seen.size(), 6u);
}

TEST(Eliminate, RationalPairByLowerBound) {
  EliminationReport r = eliminate(kC1, two_rotations(rat(1, 3), rat(2, 5), 4));
  EXPECT_EQ(r.case_label, "Case1");
  ASSERT_EQ(r.status, Outcome::Eliminated) << r.reason;
  ASSERT_TRUE(r.contradiction);
  EXPECT_EQ(r.contradiction->anchor, "morse-lower-bound");
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(verify_jump({kC1, two_rotations(rat(1, 3), rat(2, 5), 4)}, 3, *r.certificate, true).ok);
}

TEST(Eliminate, RationalIrrationalPair) {
  EliminationReport r = eliminate(kC1, two_rotations(rat(1, 3), surd(0, 1, 2, 2), 2));
  EXPECT_EQ(r.case_label, "Case5");
  ASSERT_EQ(r.status, Outcome::Eliminated) << r.reason;
  ASSERT_TRUE(r.contradiction);
  EXPECT_EQ(r.contradiction->anchor, "morse-lower-bound");
}

TEST(Eliminate, RotationWithN1ByIdentity) {
  EliminationReport r = eliminate(kC1, model({Block::rotation(rat(1, 4)), Block::of(BlockKind::N1_plus_minus)}, 3));
  EXPECT_EQ(r.case_label, "Case3");
  ASSERT_EQ(r.status, Outcome::Eliminated) << r.reason;
  ASSERT_TRUE(r.contradiction);
  EXPECT_EQ(r.contradiction->anchor, "mean-index-identity");
  EXPECT_EQ(r.contradiction->rhs, "1");
}

TEST(Eliminate, Preconditions) {
  // Mean index 2 - 1/3 - 1/5 is not above 2.
  EliminationReport low = eliminate(kC1, two_rotations(rat(1, 3), rat(2, 5), 2));
  EXPECT_EQ(low.reason_kind, "precondition");
  EXPECT_NE(low.reason.find("mean index"), std::string::npos);
  // Parity violation.
  EliminationReport par = eliminate(kC1, model({Block::rotation(rat(1, 3)), Block::of(BlockKind::N1_plus_minus)}, 2));
  EXPECT_EQ(par.reason_kind, "precondition");
  // c1 must be two irrational rotations unless relaxed.
  GeodesicModel rc1 = two_rotations(rat(1, 3), surd(0, 1, 2, 2), 2);
  EXPECT_EQ(eliminate(rc1, two_rotations(rat(1, 3), rat(2, 5), 4)).reason_kind, "precondition");
  EXPECT_FALSE(elimination_preconditions(rc1, two_rotations(rat(1, 3), rat(2, 5), 4), true).size() > 0);
  // Index below n-1.
  EXPECT_EQ(eliminate(kC1, model({Block::hyperbolic(4)}, 1)).reason_kind, "precondition");
}

TEST(Eliminate, ReplayConfirmsEliminations) {
  SweepGrid grid;
  grid.c1_turns = {surd(0, 1, 2, 2), surd(0, 1, 2, 3)};
  grid.rational_turns = farey_turns(4);
  grid.surd_turns = {surd(0, 1, 2, 2)};
  grid.indices = {2, 3, 4, 5};
  auto models = grid_models(grid);
  ASSERT_FALSE(models.empty());
  int replayed = 0;
  std::map<std::string, int> by_case;
  for (std::size_t i = 0; i < models.size() && replayed < 40; i += 3) {
    EliminationReport r = eliminate(kC1, models[i], grid.options);
    if (r.reason_kind == "precondition") continue;
    ASSERT_EQ(r.status, Outcome::Eliminated) << models[i].label << ": " << r.reason;
    ASSERT_TRUE(r.certificate);
    if (r.certificate->N > 3000) continue;
    Replay rp = replay(kC1, models[i], *r.certificate, grid.options.k_cap);
    if (!rp.feasible) continue;
    ++replayed;
    ++by_case[r.case_label];
    EXPECT_GT(rp.allocations, 0);
    EXPECT_EQ(rp.survivors, 0) << models[i].label << " N=" << r.certificate->N;
  }
  EXPECT_GE(replayed, 15);
  EXPECT_GE(by_case.size(), 3u);
}

TEST(Sweep, DeterministicAcrossJobCounts) {
  SweepGrid grid;
  grid.c1_turns = {surd(0, 1, 2, 2), surd(0, 1, 2, 3)};
  grid.rational_turns = farey_turns(3);
  grid.indices = {3, 4};
  grid.include_n2 = false;
  grid.jobs = 1;
  SweepSummary a = sweep(grid);
  grid.jobs = 4;
  SweepSummary b = sweep(grid);
  EXPECT_GT(a.cells, 0);
  EXPECT_EQ(a.cells, b.cells);
  EXPECT_EQ(a.eliminated, b.eliminated);
  EXPECT_EQ(a.by_anchor, b.by_anchor);
  ASSERT_EQ(a.cells_detail.size(), b.cells_detail.size());
  for (std::size_t i = 0; i < a.cells_detail.size(); ++i) {
    EXPECT_EQ(a.cells_detail[i].c2.label, b.cells_detail[i].c2.label);
    EXPECT_EQ(a.cells_detail[i].report.status, b.cells_detail[i].report.status);
    if (a.cells_detail[i].report.certificate)
      EXPECT_EQ(a.cells_detail[i].report.certificate->N, b.cells_detail[i].report.certificate->N);
  }
}

TEST(Sweep, EmptyGrid) {
  SweepGrid grid;
  SweepSummary s = sweep(grid);
  EXPECT_EQ(s.cells, 0);
  EXPECT_TRUE(s.cells_detail.empty());
}

TEST(FareyTurns, Count) {
  EXPECT_EQ(farey_turns(1).size(), 1u);
  EXPECT_EQ(farey_turns(7).size(), 18u);
  EXPECT_EQ(farey_turns(7).front(), Rat(1));
}

namespace {

DressedGeodesic dressed(int n, std::vector<Block> blocks, long index) {
  return DressedGeodesic{GeodesicModel{Decomposition{n, std::move(blocks)}, index, ""}, {}};
}

}  // namespace

// Copies of one geodesic needed for the mean index identity to hold exactly.
std::vector<DressedGeodesic> identity_copies(const DressedGeodesic& g, int n) {
  const ExactReal one = mean_index_identity({g}, n).lhs;
  Rat copies = constant_B(n) / one.rational_part();
  copies.canonicalize();
  if (!one.is_rational() || copies.get_den() != 1 || copies <= 0) return {};
  return std::vector<DressedGeodesic>(copies.get_num().get_ui(), g);
}

TEST(StepOne, OddDimensionClash) {
  auto cfg = identity_copies(dressed(3, {Block::hyperbolic(4)}, 2), 3);
  ASSERT_EQ(cfg.size(), 2u);
  StepOneReport r = step_one_check(cfg, 3);
  ASSERT_TRUE(r.precondition_ok);
  EXPECT_EQ(r.case_label, "StepOne_odd");
  EXPECT_TRUE(r.jump_sum_holds);
  EXPECT_TRUE(r.morse_sum_holds);
  EXPECT_TRUE(r.contradiction);
  ASSERT_TRUE(r.certificate);
  const Int m = r.certificate->N;  // k = 1
  EXPECT_EQ(r.morse_side, 2 * m);
  EXPECT_EQ(r.betti_side, 2 * m - 1);
}

TEST(StepOne, EvenDimensionClash) {
  auto cfg = identity_copies(dressed(4, {Block::hyperbolic(6)}, 3), 4);
  ASSERT_FALSE(cfg.empty());
  StepOneReport r = step_one_check(cfg, 4);
  ASSERT_TRUE(r.precondition_ok);
  EXPECT_EQ(r.case_label, "StepOne_even");
  EXPECT_TRUE(r.jump_sum_holds);
  EXPECT_TRUE(r.morse_sum_holds);
  EXPECT_TRUE(r.contradiction);
  ASSERT_TRUE(r.certificate);
  const Int m = r.certificate->N / 3;  // N = (2k-1) m, k = 2
  EXPECT_EQ(r.morse_side, -4 * m);
  EXPECT_EQ(r.betti_side, -4 * m + 1);
}

TEST(StepOne, IdentityFailureBreaksJumpSum) {
  StepOneReport r = step_one_check({dressed(3, {Block::hyperbolic(4)}, 2)}, 3);
  ASSERT_TRUE(r.precondition_ok);
  EXPECT_FALSE(r.jump_sum_holds);
}

TEST(StepOne, EllipticIsRejected) {
  StepOneReport r = step_one_check({dressed(3, {Block::rotation(rat(1, 3)), Block::rotation(rat(2, 5))}, 4)}, 3);
  EXPECT_FALSE(r.precondition_ok);
  EXPECT_FALSE(r.precondition_errors.empty());
}

TEST(EllipticStructureFilter, Examples) {
  StructureChecklist a = elliptic_structure_filter(Decomposition{3, {Block::rotation(rat(1, 3)), Block::rotation(surd(0, 1, 2, 2))}});
  EXPECT_TRUE(a.i && a.ii && a.iii && a.iv && a.vi);
  StructureChecklist b = elliptic_structure_filter(Decomposition{3, {Block::of(BlockKind::N1_plus_plus), Block::rotation(rat(1, 3))}});
  EXPECT_FALSE(b.ii);
  EXPECT_FALSE(b.vi);
  // Conjugate irrational turns t and 1 - t.
  StructureChecklist c = elliptic_structure_filter(Decomposition{3, {Block::rotation(surd(0, 1, 2, 2)), Block::rotation(surd(2, -1, 2, 2))}});
  EXPECT_FALSE(c.iv);
  StructureChecklist d = elliptic_structure_filter(Decomposition{3, {Block::n2_trivial(surd(0, 1, 2, 2))}});
  EXPECT_FALSE(d.iii);
  EXPECT_FALSE(elliptic_structure_filter(Decomposition{3, {Block::hyperbolic(4)}}).i);
}

TEST(Hingston, Examples) {
  GeodesicModel fam{Decomposition{3, {Block::of(BlockKind::IdentityPair), Block::of(BlockKind::N1_plus_minus)}}, 3, ""};
  TypeNumbers types;
  types.by_class[1] = {0, 0, 0, 1};
  HingstonReport h = hingston_check(fam, types, 500);
  EXPECT_TRUE(h.equality_family);
  EXPECT_TRUE(h.equality_everywhere);
  EXPECT_TRUE(h.top_type_nonzero);
  EXPECT_TRUE(h.applicable);
  types.by_class[1] = {1, 0, 0, 0};
  EXPECT_FALSE(hingston_applicable(fam, types, 500));
  HingstonReport rot = hingston_check(two_rotations(rat(1, 3), rat(2, 5), 4), {}, 100);
  EXPECT_FALSE(rot.equality_family);
  EXPECT_TRUE(rot.top_type_nonzero);
  // Index grows faster than m(i + nu) - (n-1)(m-1) allows.
  EXPECT_TRUE(rot.first_failure);
  EXPECT_FALSE(rot.applicable);
}

TEST(EllipticParabolic, Examples) {
  EXPECT_TRUE(elliptic_parabolic_test(two_rotations(rat(1, 3), surd(0, 1, 2, 2), 2)));
  EXPECT_TRUE(elliptic_parabolic_test(model({Block::n2_trivial(rat(1, 3))}, 3)));
  EXPECT_FALSE(elliptic_parabolic_test(model({Block::n2_trivial(surd(0, 1, 2, 2))}, 3)));
  EXPECT_FALSE(elliptic_parabolic_test(model({Block::n2_nontrivial(rat(1, 3))}, 3)));
  EXPECT_FALSE(elliptic_parabolic_test(model({Block::rotation(rat(1, 3)), Block::hyperbolic(2)}, 3)));
}
