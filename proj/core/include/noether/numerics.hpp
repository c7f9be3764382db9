#pragma once
//
// Dense complex linear algebra kernel. Everything above this layer talks
// to matrices only through these functions, so the rank and invertibility
// cutoffs live in one place.
//

#include <complex>

#include <Eigen/Dense>

namespace noether {

using complex_t = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Default relative cutoff for "invertible": sigma_min > tau * sigma_max.
inline constexpr double default_invertibility_tol = 1e-8;

// Throws errc::shape_mismatch on NaN/Inf entries.
void require_finite(const ComplexMatrix& m, const char* what);

double spectral_norm(const ComplexMatrix& m);

// Smallest singular value; 0 for an empty matrix with cols > rows
// (an injective map from a nonzero space into a smaller one is impossible).
double min_singular_value(const ComplexMatrix& m);

Eigen::VectorXd singular_values(const ComplexMatrix& m);

bool is_invertible(const ComplexMatrix& m, double tol = default_invertibility_tol);

// Solves m X = b. Throws errc::singular when sigma_min <= tol * sigma_max,
// errc::shape_mismatch when m is not square or row counts disagree.
ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& b,
                    double tol = default_invertibility_tol);

ComplexMatrix inverse(const ComplexMatrix& m, double tol = default_invertibility_tol);

// Minimum-norm minimizer of ||m X - b||_F.
ComplexMatrix least_squares(const ComplexMatrix& m, const ComplexMatrix& b);

// Orthonormal basis of the numerical column space: left singular vectors
// with sigma > tol * sigma_max.
ComplexMatrix column_space_basis(const ComplexMatrix& m,
                                 double tol = default_invertibility_tol);

// Orthonormal basis of the range of a (possibly oblique) projector. Nonzero
// singular values of an idempotent are >= 1, so the cut is absolute at 1/2.
ComplexMatrix projector_range(const ComplexMatrix& p);

// Orthonormal basis of the numerical null space (right singular vectors
// with sigma <= tol * sigma_max, plus the cols - rows surplus).
ComplexMatrix null_space_basis(const ComplexMatrix& m,
                               double tol = default_invertibility_tol);

// Orthonormal completion: columns spanning the orthogonal complement of
// the (orthonormal) columns of q inside C^n.
ComplexMatrix orthogonal_complement(const ComplexMatrix& q);

int numerical_rank(const ComplexMatrix& m, double tol = default_invertibility_tol);

}  // namespace noether
