#include <gtest/gtest.h>

#include "expect.hpp"
#include "noether/gallery.hpp"

using namespace noether;

TEST(Gallery, SingleDiagonalEntry) {
  const NamedFamily d = make_eq50(1);
  ASSERT_EQ(d.space->size(), 2u);
  EXPECT_TRUE(d.op.tail().is_zero());
  EXPECT_TRUE(d.op.block(0).isZero());
  EXPECT_EQ(d.op.block(1)(0, 0), complex_t(-1.0));
}

TEST(Gallery, FamilyPatterns) {
  const int m = 6;
  const NamedFamily d = make_eq50(m);
  const NamedFamily r = make_eqAA(m);
  for (int i = 1; i <= m; ++i) {
    const ComplexMatrix di = d.family()[static_cast<std::size_t>(i)];
    const ComplexMatrix ri = r.family()[static_cast<std::size_t>(i)];
    ComplexMatrix want_d = ComplexMatrix::Zero(m, m);
    want_d(i - 1, i - 1) = -1.0;
    ComplexMatrix want_r = ComplexMatrix::Zero(m, m);
    want_r(0, i - 1) = 1.0;
    EXPECT_EQ(di, want_d);
    EXPECT_EQ(ri, want_r);
    // The diagonal family is minus the Gram family of the rank-one one.
    EXPECT_EQ(di, -(ri.adjoint() * ri));
  }
  EXPECT_TRUE(d.family()[0].isZero());
  EXPECT_TRUE(r.family()[0].isZero());
}

TEST(Gallery, FredholmFamilyAddsIdentity) {
  const NamedFamily r = make_eqAA(4);
  const Family f = r.family();
  const Family g = r.fredholm_family();
  for (std::size_t p = 0; p < f.size(); ++p) EXPECT_EQ(g[p], f[p] + ComplexMatrix::Identity(4, 4));
}

TEST(Gallery, NamedOperators) {
  const SpaceRef sp = make_sequence_space(4);
  EXPECT_EQ(named_operator("id", 4), AOperator::identity(sp));
  EXPECT_EQ(named_operator("zero", 4), AOperator::zero(sp));
  EXPECT_EQ(named_operator("shift3", 4), AOperator::shift(sp, 3));
  EXPECT_EQ(named_operator("shiftm1", 4), AOperator::shift(sp, -1));
  EXPECT_EQ(named_operator("id+eqAA", 4), AOperator::identity(sp) + make_eqAA(4).op);
  EXPECT_EQ(named_operator("id-eq50", 4), AOperator::identity(sp) - make_eq50(4).op);
  EXPECT_ERRC(named_operator("shift", 4), errc::input_parse);
  EXPECT_ERRC(make_named_family("eq51", 4), errc::input_parse);
  EXPECT_ERRC(make_eq50(0), errc::out_of_range);
}

TEST(Gallery, DocumentedVerdictsReproduce) {
  for (int m : {8, 16}) {
    for (const char* name : {"eq50", "eqAA"}) {
      const GalleryReport rep = verify_expectations(make_named_family(name, m));
      for (const auto& c : rep.checks) {
        EXPECT_TRUE(c.ok) << name << " M=" << m << ' ' << c.what << ": expected " << c.expected
                          << ", observed " << c.observed;
      }
      EXPECT_TRUE(rep.ok);
    }
  }
}

TEST(Gallery, DiagonalFamilyFBound) {
  const GalleryReport rep = verify_expectations(make_eq50(16));
  EXPECT_NEAR(rep.continuity[2].bound, 1.0, 1e-12);
  EXPECT_EQ(rep.compactness.lower_bound, 1.0);
}

TEST(Gallery, SquaredRankOneFamilyLivesAtOnePoint) {
  const NamedFamily r = make_eqAA(8);
  const AOperator k2 = compose(r.op, r.op);
  for (point_index p = 0; p < k2.points(); ++p) {
    const ComplexMatrix b = k2.materialize(p, 8, 8);
    if (p == 1) {
      EXPECT_EQ(b(0, 0), complex_t(1.0));
      EXPECT_NEAR(b.norm(), 1.0, 0.0);
    } else {
      EXPECT_TRUE(b.isZero()) << p;
    }
  }
}

TEST(Gallery, FredPrimePair) {
  const FredPrimeReport rep = fredprime_compare(16);
  EXPECT_TRUE(rep.im_acceptable);
  EXPECT_TRUE(rep.f_continuous);
  EXPECT_TRUE(rep.fredholm) << rep.fredholm_error;
  EXPECT_EQ(rep.index, std::vector<int>(17, 0));
  EXPECT_EQ(describe(rep.ab_compact), "Compact(1)");
  EXPECT_EQ(describe(rep.ba_compact), "Compact(1)");
  EXPECT_ERRC(fredprime_compare(1), errc::out_of_range);
}
