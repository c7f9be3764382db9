#include <gtest/gtest.h>

#include "expect.hpp"
#include "noether/base_space.hpp"

using namespace noether;
using complex_t = AlgebraElement::value_type;

namespace {

// phi_i of the rank-one family: 1 at 1/i, 0 elsewhere.
AlgebraElement phi(const SpaceRef& sp, int i) { return AlgebraElement::delta(sp, static_cast<point_index>(i)); }

}  // namespace

TEST(SequentialSpace, SequenceSpaceLayout) {
  const SpaceRef sp = make_sequence_space(3);
  ASSERT_EQ(sp->size(), 4u);
  EXPECT_EQ(sp->name(0), "0");
  EXPECT_EQ(sp->name(3), "1/3");
  ASSERT_EQ(sp->nets().size(), 1u);
  EXPECT_EQ(sp->nets()[0].limit, 0u);
  EXPECT_EQ(sp->nets()[0].sequence, (std::vector<point_index>{1, 2, 3}));
  EXPECT_EQ(sp->index_of("1/2"), 2u);
  EXPECT_ERRC(sp->index_of("1/4"), errc::out_of_range);
  EXPECT_ERRC(make_sequence_space(0), errc::out_of_range);
}

TEST(SequentialSpace, ValidatesNets) {
  const std::vector<std::string> pts{"a", "b", "c"};
  EXPECT_NO_THROW(SequentialSpace(pts, {Net{{1, 2}, 0}, Net{{0, 2}, 1}}));
  EXPECT_ERRC(SequentialSpace(pts, {Net{{1, 0}, 0}}), errc::out_of_range);
  EXPECT_ERRC(SequentialSpace(pts, {Net{{1, 1}, 0}}), errc::out_of_range);
  EXPECT_ERRC(SequentialSpace(pts, {Net{{5}, 0}}), errc::out_of_range);
  EXPECT_ERRC(SequentialSpace(pts, {Net{{1}, 7}}), errc::out_of_range);
  EXPECT_ERRC(SequentialSpace({"a", "a"}, {}), errc::out_of_range);
}

TEST(SequentialSpace, EqualSpacesAreInterchangeable) {
  EXPECT_TRUE(same_space(make_sequence_space(4), make_sequence_space(4)));
  EXPECT_FALSE(same_space(make_sequence_space(4), make_sequence_space(5)));
}

TEST(AlgebraElement, Norms) {
  const SpaceRef sp = make_sequence_space(5);
  EXPECT_DOUBLE_EQ(algebra_norm(AlgebraElement::constant(sp, 1.0)), 1.0);
  EXPECT_DOUBLE_EQ(algebra_norm(AlgebraElement::zero(sp)), 0.0);
  EXPECT_DOUBLE_EQ(algebra_norm(phi(sp, 2)), 1.0);
  EXPECT_DOUBLE_EQ(algebra_norm(AlgebraElement(sp, {0.0, complex_t(3, 4), 1.0, 0.0, 0.0, 0.0})),
                   5.0);
}

TEST(AlgebraElement, PointwiseOperations) {
  const SpaceRef sp = make_sequence_space(4);
  const AlgebraElement a(sp, {complex_t(1, 2), 0.5, complex_t(0, -1), 3.0, -2.0});
  const AlgebraElement sq = a * a.conj();
  for (point_index p = 0; p < sp->size(); ++p) {
    EXPECT_DOUBLE_EQ(sq(p).real(), std::norm(a(p)));
    EXPECT_DOUBLE_EQ(sq(p).imag(), 0.0);
  }
  EXPECT_EQ(a + AlgebraElement::zero(sp), a);
  EXPECT_TRUE((phi(sp, 1) * phi(sp, 2)).is_zero());
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE(AlgebraElement::constant(sp, 2.0).is_constant(2.0));
}

TEST(AlgebraElement, RejectsForeignSpaces) {
  const AlgebraElement a = AlgebraElement::constant(make_sequence_space(2), 1.0);
  const AlgebraElement b = AlgebraElement::constant(make_sequence_space(3), 1.0);
  EXPECT_ERRC(a + b, errc::space_mismatch);
  EXPECT_ERRC(a * b, errc::space_mismatch);
  EXPECT_ERRC(AlgebraElement(make_sequence_space(2), {1.0}), errc::shape_mismatch);
}
