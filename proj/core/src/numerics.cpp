#include "noether/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "noether/error.hpp"

namespace noether {

std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::singular: return "Singular";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::space_mismatch: return "SpaceMismatch";
    case errc::out_of_range: return "OutOfRange";
    case errc::not_invertible: return "NotInvertible";
    case errc::unrepresentable: return "Unrepresentable";
    case errc::no_cut_found: return "NoCutFound";
    case errc::degenerate_external: return "DegenerateExternal";
    case errc::not_a_parametrix: return "NotAParametrix";
    case errc::projector_defect: return "ProjectorDefect";
    case errc::not_locally_constant: return "NotLocallyConstant";
    case errc::singular_s: return "SingularS";
    case errc::not_unitary: return "NotUnitary";
    case errc::input_parse: return "InputParse";
    case errc::io: return "Io";
  }
  return "Unknown";
}

namespace {

using svd_t = Eigen::BDCSVD<ComplexMatrix>;

svd_t full_svd(const ComplexMatrix& m) {
  return svd_t(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

}  // namespace

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw error(errc::shape_mismatch, std::string(what) + " has non-finite entries");
  }
}

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  return svd_t(m).singularValues();
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  // Zero rows and columns do not change the singular values; dropping them
  // keeps the sparse corners produced by tail cuts cheap.
  std::vector<Eigen::Index> rows, cols;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (!m.row(i).isZero(0.0)) rows.push_back(i);
  }
  if (rows.empty()) return 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (!m.col(j).isZero(0.0)) cols.push_back(j);
  }
  if (rows.size() == 1 || cols.size() == 1) {
    return m(rows, cols).norm();
  }
  ComplexMatrix b = m(rows, cols);
  const double scale = b.cwiseAbs().maxCoeff();
  b /= scale;
  // Largest eigenvalue of the smaller Gram matrix; backward stable, so the
  // norm keeps full relative accuracy.
  const ComplexMatrix g = b.rows() <= b.cols() ? ComplexMatrix(b * b.adjoint())
                                               : ComplexMatrix(b.adjoint() * b);
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(g, Eigen::EigenvaluesOnly);
  return scale * std::sqrt(std::max(eig.eigenvalues().maxCoeff(), 0.0));
}

double min_singular_value(const ComplexMatrix& m) {
  if (m.cols() == 0) return std::numeric_limits<double>::infinity();
  if (m.rows() < m.cols()) return 0.0;
  const Eigen::VectorXd s = singular_values(m);
  return s(s.size() - 1);
}

bool is_invertible(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  const Eigen::VectorXd s = singular_values(m);
  return s(s.size() - 1) > tol * s(0);
}

ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& b, double tol) {
  if (m.rows() != m.cols()) {
    throw error(errc::shape_mismatch, "solve: matrix is " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
  if (b.rows() != m.rows()) throw error(errc::shape_mismatch, "solve: right-hand side rows");
  if (m.size() == 0) return ComplexMatrix(0, b.cols());
  const svd_t svd = full_svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smin > tol * smax)) {
    throw error(errc::singular, "sigma_min=" + std::to_string(smin) +
                                    " sigma_max=" + std::to_string(smax));
  }
  // LU is accurate once conditioning has been vetted; one refinement step
  // brings the residual to working precision.
  const Eigen::PartialPivLU<ComplexMatrix> lu(m);
  ComplexMatrix x = lu.solve(b);
  x += lu.solve(b - m * x);
  return x;
}

ComplexMatrix inverse(const ComplexMatrix& m, double tol) {
  return solve(m, ComplexMatrix::Identity(m.rows(), m.cols()), tol);
}

ComplexMatrix least_squares(const ComplexMatrix& m, const ComplexMatrix& b) {
  if (b.rows() != m.rows()) throw error(errc::shape_mismatch, "least_squares: rows");
  if (m.size() == 0 || m.isZero(0.0)) return ComplexMatrix::Zero(m.cols(), b.cols());
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(m);
  return cod.solve(b);
}

ComplexMatrix column_space_basis(const ComplexMatrix& m, double tol) {
  if (m.size() == 0 || m.isZero(0.0)) return ComplexMatrix(m.rows(), 0);
  const svd_t svd = full_svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cut = tol * s(0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

ComplexMatrix projector_range(const ComplexMatrix& p) {
  if (p.size() == 0) return ComplexMatrix(p.rows(), 0);
  const svd_t svd = full_svd(p);
  const Eigen::VectorXd& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > 0.5) ++r;
  return svd.matrixU().leftCols(r);
}

ComplexMatrix null_space_basis(const ComplexMatrix& m, double tol) {
  const Eigen::Index n = m.cols();
  if (n == 0) return ComplexMatrix(0, 0);
  if (m.rows() == 0 || m.isZero(0.0)) return ComplexMatrix::Identity(n, n);
  const svd_t svd = full_svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cut = tol * s(0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  return svd.matrixV().rightCols(n - r);
}

ComplexMatrix orthogonal_complement(const ComplexMatrix& q) {
  const Eigen::Index n = q.rows();
  if (q.cols() == 0) return ComplexMatrix::Identity(n, n);
  const ComplexMatrix proj =
      ComplexMatrix::Identity(n, n) - q * q.adjoint();
  return column_space_basis(proj, 1e-6);
}

int numerical_rank(const ComplexMatrix& m, double tol) {
  return static_cast<int>(column_space_basis(m, tol).cols());
}

}  // namespace noether
