#pragma once
//
// Bounded A-operators on l2(A) of the form
//
//     T(x) = t(x) * Shift^k  +  finite corner,
//
// one dense corner per point of X. The corner is stored "full": corner(p)
// holds the s x s upper-left block of T(x) including whatever the tail
// contributes there, and outside that block T(x) acts exactly as the tail.
// This keeps to_family/from_family and reassembly bit-exact. The
// "finite block" F(x) = T(x) - t(x) Shift^k is available through block().
//
// Invariant: support() >= |offset|; a tail whose scale vanishes identically
// is normalised to offset 0.
//

#include <vector>

#include "noether/base_space.hpp"
#include "noether/hilbert_module.hpp"
#include "noether/numerics.hpp"

namespace noether {

using Family = std::vector<ComplexMatrix>;  // indexed by point

struct TailDescriptor {
  AlgebraElement scale;
  int offset = 0;

  static TailDescriptor zero(const SpaceRef& space) { return {AlgebraElement::zero(space), 0}; }
  static TailDescriptor identity(const SpaceRef& space) {
    return {AlgebraElement::constant(space, 1.0), 0};
  }
  static TailDescriptor shift(const SpaceRef& space, int k) {
    return {AlgebraElement::constant(space, 1.0), k};
  }

  bool is_zero() const noexcept { return scale.is_zero(); }

  friend bool operator==(const TailDescriptor&, const TailDescriptor&) = default;
};

class AOperator {
 public:
  // corners: one square matrix per point, all of the same size. A corner
  // smaller than |offset| is grown with the tail pattern.
  AOperator(SpaceRef space, TailDescriptor tail, Family corners);

  static AOperator zero(const SpaceRef& space);
  static AOperator identity(const SpaceRef& space);
  static AOperator shift(const SpaceRef& space, int k);
  // Multiplication operator a(x) * id.
  static AOperator scalar(const AlgebraElement& a);
  // Tail Zero operator with the given corners.
  static AOperator finite(const SpaceRef& space, Family corners);
  // p_m: orthogonal projector onto L_m = span(e_1..e_m).
  static AOperator head_projector(const SpaceRef& space, int m);
  // q_m = id - p_m.
  static AOperator tail_projector(const SpaceRef& space, int m);

  const SpaceRef& space() const noexcept { return space_; }
  const TailDescriptor& tail() const noexcept { return tail_; }
  int offset() const noexcept { return tail_.offset; }
  int support() const noexcept { return support_; }
  std::size_t points() const noexcept { return corners_.size(); }
  const ComplexMatrix& corner(point_index p) const { return corners_.at(p); }
  const Family& corners() const noexcept { return corners_; }

  // F(x) = T(x) - t(x) Shift^k restricted to the support corner.
  ComplexMatrix block(point_index p) const;

  // rows x cols upper-left block of T(x); rows, cols >= support().
  ComplexMatrix materialize(point_index p, int rows, int cols) const;

  // Same operator, corner grown to d >= support().
  AOperator with_support(int d) const;

  // Drops trailing corner rows/columns that only repeat the tail pattern.
  AOperator normalized() const;

  AOperator& operator+=(const AOperator& other);
  AOperator& operator-=(const AOperator& other);
  AOperator& operator*=(complex_t c);
  friend AOperator operator+(AOperator a, const AOperator& b) { return a += b; }
  friend AOperator operator-(AOperator a, const AOperator& b) { return a -= b; }
  friend AOperator operator*(complex_t c, AOperator a) { return a *= c; }
  AOperator operator-() const { return complex_t(-1.0) * *this; }

  // Exact equality as operators (representations may differ in support).
  friend bool operator==(const AOperator& a, const AOperator& b);

 private:
  SpaceRef space_;
  TailDescriptor tail_;
  int support_ = 0;
  Family corners_;
};

// Pointwise multiplication a(x) T(x).
AOperator multiply(const AlgebraElement& a, const AOperator& t);

// Pointwise adjoint T(x)^*.
AOperator adjoint(const AOperator& t);

// Requires x.truncation() >= support + |offset|; result truncation
// N + max(offset, 0).
ModuleVector apply(const AOperator& t, const ModuleVector& x);

// S o T, exact; support grows to at most max(s_S, s_T) + |k_S| + |k_T|.
AOperator compose(const AOperator& s, const AOperator& t);

struct NormEnclosure {
  double lo = 0.0;
  double hi = 0.0;
};

// sup_x ||T(x)||. The rectangular corner (support + k+) x (support + k-)
// captures every column whose image is not a pure tail image, and the
// remaining columns map isometrically (times |t|) onto an orthogonal range,
// so the enclosure is tight for every offset.
NormEnclosure op_norm(const AOperator& t);

// inf_x inf_{|v|=1} ||T(x) v||, same splitting as op_norm.
double injectivity_modulus(const AOperator& t);

// T^{-1} for offset-0 operators with sigma_min(T(x)) > tol * sigma_max(T(x))
// at every point. Throws errc::not_invertible otherwise.
AOperator invert(const AOperator& t, double tol = default_invertibility_tol);

struct BlockDecomposition {
  int m = 0;
  AOperator f1;  // q_m T q_m (carries the tail)
  AOperator f2;  // q_m T p_m
  AOperator f3;  // p_m T q_m
  AOperator f4;  // p_m T p_m

  AOperator reassemble() const { return f1 + f2 + f3 + f4; }
};

BlockDecomposition block_decompose(const AOperator& t, int m);

// The D map: dim x dim corner of T(x) at every point. dim >= support().
Family to_family(const AOperator& t, int dim);

// The E map: operator equal to family(x) on the corner and to the tail
// outside it.
AOperator from_family(const SpaceRef& space, const Family& family, const TailDescriptor& tail);

}  // namespace noether
