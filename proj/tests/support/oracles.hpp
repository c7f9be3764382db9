#pragma once
//
// Seeded generators and independent oracles shared by the unit and
// acceptance tests. The dense oracle rebuilds T(x) entry by entry from the
// finite block and the tail pattern, without going through materialize().
//

#include <random>

#include <Eigen/SVD>

#include "noether/a_operator.hpp"

namespace noether::testing {

using Rng = std::mt19937_64;

inline ComplexMatrix random_matrix(Rng& rng, int rows, int cols, double scale = 1.0) {
  std::normal_distribution<double> g;
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = scale * complex_t(g(rng), g(rng));
  return m;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Spectral norm by one-sided Jacobi, a different algorithm from the
// library's divide-and-conquer SVD.
inline double jacobi_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

inline double jacobi_min(const ComplexMatrix& m) {
  const Eigen::VectorXd s = Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
  return s(s.size() - 1);
}

// rows x cols upper-left block of T(x): block(p) plus t(x) on the k-th
// subdiagonal.
inline ComplexMatrix dense_oracle(const AOperator& t, point_index p, int rows, int cols) {
  ComplexMatrix d = ComplexMatrix::Zero(rows, cols);
  const ComplexMatrix b = t.block(p);
  for (int i = 0; i < std::min<int>(rows, b.rows()); ++i)
    for (int j = 0; j < std::min<int>(cols, b.cols()); ++j) d(i, j) = b(i, j);
  const complex_t s = t.tail().scale(p);
  for (int j = 0; j < cols; ++j) {
    const int i = j + t.offset();
    if (i >= 0 && i < rows) d(i, j) += s;
  }
  return d;
}

inline Family random_family(Rng& rng, std::size_t points, int s, double scale = 1.0) {
  Family f;
  for (std::size_t p = 0; p < points; ++p) f.push_back(random_matrix(rng, s, s, scale));
  return f;
}

// Tail-zero operator with support s and largest Frobenius norm `norm`, so
// the operator norm is at most `norm`.
inline AOperator random_tail_zero(Rng& rng, const SpaceRef& sp, int s, double norm = 1.0) {
  Family f = random_family(rng, sp->size(), s);
  double top = 0.0;
  for (const auto& m : f) top = std::max(top, m.norm());
  if (top > 0.0)
    for (auto& m : f) m *= norm / top;
  return AOperator::finite(sp, std::move(f));
}

inline AlgebraElement random_scale(Rng& rng, const SpaceRef& sp, double lo = 0.5, double hi = 2.0) {
  std::vector<complex_t> v;
  for (std::size_t p = 0; p < sp->size(); ++p)
    v.push_back(std::polar(uniform_real(rng, lo, hi), uniform_real(rng, 0.0, 6.283185307179586)));
  return AlgebraElement(sp, v);
}

// General operator: random corner of size s (>= |k|), tail t S_k.
inline AOperator random_operator(Rng& rng, const SpaceRef& sp, int s, int k) {
  return AOperator(sp, TailDescriptor{random_scale(rng, sp), k},
                   random_family(rng, sp->size(), std::max(s, std::abs(k))));
}

struct FredholmPair {
  AOperator f;
  AOperator g;
  int offset;
};

// F = U1 (t S_k) U2 and G = U2^{-1} (t^{-1} S_{-k}) U1^{-1} with
// U = id + (small tail-zero).
inline FredholmPair random_fredholm_pair(Rng& rng, const SpaceRef& sp, int s, int k) {
  const AOperator id = AOperator::identity(sp);
  const AOperator u1 = id + random_tail_zero(rng, sp, s, 0.4);
  const AOperator u2 = id + random_tail_zero(rng, sp, s, 0.4);
  const AlgebraElement t = random_scale(rng, sp);
  std::vector<complex_t> inv;
  for (const auto& v : t.values()) inv.push_back(1.0 / v);
  const AOperator core = AOperator::scalar(t);
  const AOperator core_inv = AOperator::scalar(AlgebraElement(sp, inv));
  const AOperator f = compose(u1, compose(compose(core, AOperator::shift(sp, k)), u2));
  const AOperator g = compose(invert(u2),
                              compose(compose(core_inv, AOperator::shift(sp, -k)), invert(u1)));
  return {f, g, k};
}

}  // namespace noether::testing
