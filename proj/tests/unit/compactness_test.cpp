#include <gtest/gtest.h>

#include "noether/compactness.hpp"
#include "noether/gallery.hpp"
#include "oracles.hpp"

using namespace noether;
using noether::testing::random_operator;
using noether::testing::random_tail_zero;
using noether::testing::Rng;

TEST(Compactness, ZeroProfile) {
  const TailNormProfile p = tail_norm_profile(AOperator::zero(make_sequence_space(3)), 5);
  ASSERT_EQ(p.m_values.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(p.m_values[i], static_cast<int>(i));
    EXPECT_EQ(p.qk_norms[i].hi, 0.0);
    EXPECT_EQ(p.qkq_norms[i].hi, 0.0);
    EXPECT_EQ(p.kq_norms[i].hi, 0.0);
  }
}

TEST(Compactness, RankOneFamilyProfile) {
  for (int m_trunc : {4, 8, 16}) {
    const NamedFamily fam = make_eqAA(m_trunc);
    const TailNormProfile p = tail_norm_profile(fam.op, m_trunc - 1);
    EXPECT_DOUBLE_EQ(p.qk_norms[0].lo, 1.0);
    for (int m = 1; m < m_trunc; ++m) {
      EXPECT_EQ(p.qk_norms[static_cast<std::size_t>(m)].hi, 0.0) << m;
      EXPECT_DOUBLE_EQ(p.kq_norms[static_cast<std::size_t>(m)].lo, 1.0) << m;
      EXPECT_DOUBLE_EQ(p.kq_norms[static_cast<std::size_t>(m)].hi, 1.0) << m;
    }
  }
}

TEST(Compactness, DiagonalFamilyProfile) {
  for (int m_trunc : {4, 8, 16}) {
    const TailNormProfile p = tail_norm_profile(make_eq50(m_trunc).op, m_trunc - 1);
    for (int m = 0; m < m_trunc; ++m) {
      EXPECT_DOUBLE_EQ(p.qk_norms[static_cast<std::size_t>(m)].lo, 1.0) << m;
      EXPECT_DOUBLE_EQ(p.qk_norms[static_cast<std::size_t>(m)].hi, 1.0) << m;
    }
  }
}

TEST(Compactness, FinitelyGeneratedIsCompactAtItsSupport) {
  Rng rng(41);
  const SpaceRef sp = make_sequence_space(3);
  for (int s = 1; s <= 8; ++s) {
    const AOperator k = random_tail_zero(rng, sp, s);
    const CompactnessVerdict v = is_compact(k);
    EXPECT_EQ(v.kind, compactness_kind::compact);
    EXPECT_EQ(v.witness, s);
    const CompactnessVerdict va = is_adjointable_compact(k);
    EXPECT_EQ(va.kind, compactness_kind::compact);
    EXPECT_EQ(va.witness, s);
  }
}

TEST(Compactness, ZeroIsCompactAtZero) {
  const AOperator z = AOperator::zero(make_sequence_space(2));
  EXPECT_EQ(is_compact(z).witness, 0);
  EXPECT_EQ(is_adjointable_compact(z).kind, compactness_kind::compact);
  EXPECT_EQ(is_adjointable_compact(z).witness, 0);
}

TEST(Compactness, IdentityAndShiftsAreNotCompact) {
  const SpaceRef sp = make_sequence_space(3);
  for (const AOperator& t :
       {AOperator::identity(sp), AOperator::shift(sp, 2), AOperator::shift(sp, -1)}) {
    const CompactnessVerdict v = is_compact(t);
    EXPECT_EQ(v.kind, compactness_kind::not_compact_at_scale);
    EXPECT_DOUBLE_EQ(v.lower_bound, 1.0);
    EXPECT_EQ(describe(v), "NotCompactAtScale(1)");
  }
}

TEST(Compactness, NamedFamilies) {
  for (int m : {8, 16, 32}) {
    const NamedFamily d = make_eq50(m);
    const CompactnessVerdict v = is_compact(d.op, 1e-8, d.m_max());
    EXPECT_EQ(describe(v), "NotCompactAtScale(1)");
    const NamedFamily r = make_eqAA(m);
    EXPECT_EQ(describe(is_compact(r.op, 1e-8, r.m_max())), "Compact(1)");
    EXPECT_EQ(is_adjointable_compact(r.op, 1e-8, r.m_max()).kind,
              compactness_kind::not_compact_at_scale);
  }
}

TEST(Compactness, TailBelowEpsCountsAsCompact) {
  const SpaceRef sp = make_sequence_space(2);
  const AOperator t = complex_t(1e-9) * AOperator::identity(sp) + AOperator::head_projector(sp, 2);
  EXPECT_EQ(is_compact(t).kind, compactness_kind::compact);
  std::vector<complex_t> mixed(sp->size(), 1.0);
  mixed[0] = 1e-9;
  const AOperator u = AOperator::scalar(AlgebraElement(sp, mixed));
  EXPECT_EQ(is_compact(u).kind, compactness_kind::not_compact_at_scale);
}

TEST(Compactness, ProfileInvariants) {
  Rng rng(42);
  const SpaceRef sp = make_sequence_space(3);
  for (int trial = 0; trial < 60; ++trial) {
    const AOperator k = trial % 2 == 0
                            ? random_tail_zero(rng, sp, 1 + trial % 6)
                            : random_operator(rng, sp, 1 + trial % 4, trial % 5 - 2);
    const TailNormProfile p = tail_norm_profile(k, 8);
    for (std::size_t i = 0; i < p.m_values.size(); ++i) {
      EXPECT_GE(p.qk_norms[i].lo, 0.0);
      EXPECT_LE(p.qk_norms[i].lo, p.qk_norms[i].hi);
      EXPECT_LE(p.qkq_norms[i].hi, p.qk_norms[i].hi * (1 + 1e-12) + 1e-15);
      if (i > 0) {
        EXPECT_LE(p.qk_norms[i].lo, p.qk_norms[i - 1].lo * (1 + 1e-12) + 1e-15);
        EXPECT_LE(p.qk_norms[i].hi, p.qk_norms[i - 1].hi * (1 + 1e-12) + 1e-15);
        EXPECT_LE(p.kq_norms[i].hi, p.kq_norms[i - 1].hi * (1 + 1e-12) + 1e-15);
      }
    }
  }
}

TEST(Compactness, TwoSidedIdeal) {
  Rng rng(43);
  const SpaceRef sp = make_sequence_space(3);
  for (int trial = 0; trial < 40; ++trial) {
    const AOperator k = random_tail_zero(rng, sp, 1 + trial % 5);
    const AOperator t = random_operator(rng, sp, 1 + trial % 3, trial % 5 - 2);
    EXPECT_EQ(is_compact(compose(t, k)).kind, compactness_kind::compact);
    EXPECT_EQ(is_compact(compose(k, t)).kind, compactness_kind::compact);
  }
}

TEST(Compactness, AdjointableImpliesCompact) {
  Rng rng(44);
  const SpaceRef sp = make_sequence_space(3);
  for (int trial = 0; trial < 60; ++trial) {
    AOperator k = random_tail_zero(rng, sp, 1 + trial % 5);
    if (trial % 3 == 1) k = compose(AOperator::shift(sp, 1), k);
    if (trial % 3 == 2) k = k + AOperator::identity(sp);
    if (is_adjointable_compact(k).kind == compactness_kind::compact) {
      EXPECT_EQ(is_compact(k).kind, compactness_kind::compact);
    }
  }
  const NamedFamily r = make_eqAA(6);
  EXPECT_EQ(is_compact(r.op, 1e-8, r.m_max()).kind, compactness_kind::compact);
}

TEST(Compactness, ScalingStudy) {
  const std::vector<int> levels{8, 16, 32, 64};
  const ScalingReport zero = scaling_study(
      [](int m) { return AOperator::zero(make_sequence_space(m)); }, levels);
  EXPECT_EQ(zero.verdict, scaling_kind::uniformly_compact);
  EXPECT_EQ(zero.witness, 0);

  const ScalingReport rank_one = scaling_study([](int m) { return make_eqAA(m).op; }, levels);
  EXPECT_EQ(rank_one.verdict, scaling_kind::uniformly_compact);
  EXPECT_EQ(rank_one.witness, 1);

  const ScalingReport diag = scaling_study([](int m) { return make_eq50(m).op; }, levels);
  EXPECT_EQ(diag.verdict, scaling_kind::escaping);
  EXPECT_DOUBLE_EQ(diag.plateau, 1.0);
  ASSERT_EQ(diag.norms.size(), levels.size());
  for (std::size_t li = 0; li < levels.size(); ++li) {
    ASSERT_EQ(diag.norms[li].size(), diag.m_grid.size());
    for (std::size_t mi = 0; mi < diag.m_grid.size(); ++mi) {
      const double want = diag.m_grid[mi] < levels[li] ? 1.0 : 0.0;
      EXPECT_DOUBLE_EQ(diag.norms[li][mi].hi, want);
    }
  }
}

TEST(Compactness, KindNames) {
  EXPECT_EQ(to_string(compactness_kind::compact), "Compact");
  EXPECT_EQ(to_string(scaling_kind::escaping), "Escaping");
}
