#include "noether/a_operator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "noether/error.hpp"

namespace noether {

namespace {

int positive_part(int k) { return std::max(k, 0); }
int negative_part(int k) { return std::max(-k, 0); }

void require_same_space(const AOperator& a, const AOperator& b, const char* what) {
  if (!same_space(a.space(), b.space())) throw error(errc::space_mismatch, what);
}

// Tail entry of row i, column j (0-based) at point p.
complex_t tail_entry(const TailDescriptor& tail, point_index p, int i, int j) {
  return (i == j + tail.offset) ? tail.scale(p) : complex_t(0.0);
}

TailDescriptor canonical(TailDescriptor tail) {
  if (tail.scale.is_zero()) tail.offset = 0;
  return tail;
}

}  // namespace

AOperator::AOperator(SpaceRef space, TailDescriptor tail, Family corners)
    : space_(std::move(space)), tail_(canonical(std::move(tail))), corners_(std::move(corners)) {
  if (!space_) throw error(errc::space_mismatch, "operator without a space");
  if (!same_space(space_, tail_.scale.space())) {
    throw error(errc::space_mismatch, "tail scale over a different space");
  }
  if (corners_.size() != space_->size()) {
    throw error(errc::shape_mismatch, "one corner per point required");
  }
  const Eigen::Index s = corners_.empty() ? 0 : corners_.front().rows();
  for (const auto& c : corners_) {
    if (c.rows() != s || c.cols() != s) {
      throw error(errc::shape_mismatch, "corners must be square and of equal size");
    }
    require_finite(c, "corner");
  }
  support_ = static_cast<int>(s);
  const int need = std::abs(tail_.offset);
  if (support_ < need) {
    // Grow with the tail pattern so that support >= |offset| holds.
    for (point_index p = 0; p < corners_.size(); ++p) {
      ComplexMatrix grown(need, need);
      for (int i = 0; i < need; ++i) {
        for (int j = 0; j < need; ++j) {
          grown(i, j) = (i < support_ && j < support_) ? corners_[p](i, j)
                                                       : tail_entry(tail_, p, i, j);
        }
      }
      corners_[p] = std::move(grown);
    }
    support_ = need;
  }
}

AOperator AOperator::zero(const SpaceRef& space) {
  return AOperator(space, TailDescriptor::zero(space), Family(space->size(), ComplexMatrix(0, 0)));
}

AOperator AOperator::identity(const SpaceRef& space) {
  return AOperator(space, TailDescriptor::identity(space),
                   Family(space->size(), ComplexMatrix(0, 0)));
}

AOperator AOperator::shift(const SpaceRef& space, int k) {
  return AOperator(space, TailDescriptor::shift(space, k),
                   Family(space->size(), ComplexMatrix(0, 0)));
}

AOperator AOperator::scalar(const AlgebraElement& a) {
  return AOperator(a.space(), TailDescriptor{a, 0}, Family(a.size(), ComplexMatrix(0, 0)));
}

AOperator AOperator::finite(const SpaceRef& space, Family corners) {
  return AOperator(space, TailDescriptor::zero(space), std::move(corners));
}

AOperator AOperator::head_projector(const SpaceRef& space, int m) {
  if (m < 0) throw error(errc::out_of_range, "head_projector: m < 0");
  return finite(space, Family(space->size(), ComplexMatrix::Identity(m, m)));
}

AOperator AOperator::tail_projector(const SpaceRef& space, int m) {
  if (m < 0) throw error(errc::out_of_range, "tail_projector: m < 0");
  return AOperator(space, TailDescriptor::identity(space),
                   Family(space->size(), ComplexMatrix::Zero(m, m)));
}

ComplexMatrix AOperator::block(point_index p) const {
  ComplexMatrix b = corners_.at(p);
  for (int j = 0; j < support_; ++j) {
    const int i = j + tail_.offset;
    if (i >= 0 && i < support_) b(i, j) -= tail_.scale(p);
  }
  return b;
}

ComplexMatrix AOperator::materialize(point_index p, int rows, int cols) const {
  if (rows < support_ || cols < support_) {
    throw error(errc::shape_mismatch, "materialize below the support (" +
                                          std::to_string(support_) + ")");
  }
  ComplexMatrix m = ComplexMatrix::Zero(rows, cols);
  m.topLeftCorner(support_, support_) = corners_.at(p);
  const complex_t t = tail_.scale(p);
  if (t == complex_t(0.0)) return m;
  for (int j = 0; j < cols; ++j) {
    const int i = j + tail_.offset;
    if (i < 0 || i >= rows) continue;
    if (i < support_ && j < support_) continue;
    m(i, j) = t;
  }
  return m;
}

AOperator AOperator::with_support(int d) const {
  if (d == support_) return *this;
  Family grown;
  grown.reserve(corners_.size());
  for (point_index p = 0; p < corners_.size(); ++p) grown.push_back(materialize(p, d, d));
  return AOperator(space_, tail_, std::move(grown));
}

AOperator AOperator::normalized() const {
  int s = support_;
  const int floor = std::abs(tail_.offset);
  auto edge_is_tail = [&](int n) {
    const int e = n - 1;
    for (point_index p = 0; p < corners_.size(); ++p) {
      const ComplexMatrix& c = corners_[p];
      for (int j = 0; j < n; ++j) {
        if (c(e, j) != tail_entry(tail_, p, e, j)) return false;
        if (c(j, e) != tail_entry(tail_, p, j, e)) return false;
      }
    }
    return true;
  };
  while (s > floor && edge_is_tail(s)) --s;
  if (s == support_) return *this;
  Family trimmed;
  trimmed.reserve(corners_.size());
  for (const auto& c : corners_) trimmed.push_back(c.topLeftCorner(s, s));
  return AOperator(space_, tail_, std::move(trimmed));
}

AOperator& AOperator::operator+=(const AOperator& other) {
  require_same_space(*this, other, "operator +");
  auto summed = [&]() -> TailDescriptor {
    if (other.tail_.is_zero()) return tail_;
    if (tail_.is_zero()) return other.tail_;
    if (tail_.offset == other.tail_.offset) {
      return TailDescriptor{tail_.scale + other.tail_.scale, tail_.offset};
    }
    throw error(errc::unrepresentable, "sum of tails with different offsets");
  };
  TailDescriptor sum = summed();
  const int d = std::max(support_, other.support_);
  Family corners;
  corners.reserve(corners_.size());
  for (point_index p = 0; p < corners_.size(); ++p) {
    corners.push_back(materialize(p, d, d) + other.materialize(p, d, d));
  }
  *this = AOperator(space_, std::move(sum), std::move(corners));
  return *this;
}

AOperator& AOperator::operator-=(const AOperator& other) { return *this += -other; }

AOperator& AOperator::operator*=(complex_t c) {
  tail_ = canonical(TailDescriptor{tail_.scale * c, tail_.offset});
  for (auto& m : corners_) m *= c;
  return *this;
}

bool operator==(const AOperator& a, const AOperator& b) {
  if (!same_space(a.space_, b.space_) || !(a.tail_ == b.tail_)) return false;
  const int d = std::max(a.support_, b.support_);
  for (point_index p = 0; p < a.corners_.size(); ++p) {
    if (a.materialize(p, d, d) != b.materialize(p, d, d)) return false;
  }
  return true;
}

AOperator multiply(const AlgebraElement& a, const AOperator& t) {
  if (!same_space(a.space(), t.space())) throw error(errc::space_mismatch, "multiply");
  Family corners = t.corners();
  for (point_index p = 0; p < corners.size(); ++p) corners[p] *= a(p);
  return AOperator(t.space(), TailDescriptor{a * t.tail().scale, t.offset()}, std::move(corners));
}

AOperator adjoint(const AOperator& t) {
  Family corners;
  corners.reserve(t.points());
  for (const auto& c : t.corners()) corners.push_back(c.adjoint());
  return AOperator(t.space(), TailDescriptor{t.tail().scale.conj(), -t.offset()},
                   std::move(corners));
}

ModuleVector apply(const AOperator& t, const ModuleVector& x) {
  if (!same_space(t.space(), x.space())) throw error(errc::space_mismatch, "apply");
  const int n = x.truncation();
  if (n < t.support()) {
    throw error(errc::shape_mismatch, "apply: truncation " + std::to_string(n) +
                                          " below operator support " +
                                          std::to_string(t.support()));
  }
  const int rows = n + positive_part(t.offset());
  std::vector<ComplexVector> slices;
  slices.reserve(t.points());
  for (point_index p = 0; p < t.points(); ++p) {
    slices.push_back(t.materialize(p, rows, n) * x.point(p));
  }
  return ModuleVector::from_points(t.space(), slices);
}

AOperator compose(const AOperator& s, const AOperator& t) {
  require_same_space(s, t, "compose");
  const int ks = s.offset();
  const int kt = t.offset();
  const int d = std::max(s.support(), t.support()) + std::abs(ks) + std::abs(kt);
  // Columns 1..d of T land in rows 1..d + kt+, so this slice of S suffices.
  const int inner = d + positive_part(kt);
  Family corners;
  corners.reserve(s.points());
  for (point_index p = 0; p < s.points(); ++p) {
    corners.push_back(s.materialize(p, d, inner) * t.materialize(p, inner, d));
  }
  TailDescriptor tail{s.tail().scale * t.tail().scale, ks + kt};
  return AOperator(s.space(), std::move(tail), std::move(corners)).normalized();
}

namespace {

// Rows/cols of the rectangular corner whose complement acts as a pure,
// orthogonally-placed tail.
std::pair<int, int> norm_corner(const AOperator& t) {
  return {t.support() + positive_part(t.offset()), t.support() + negative_part(t.offset())};
}

}  // namespace

NormEnclosure op_norm(const AOperator& t) {
  const auto [rows, cols] = norm_corner(t);
  double best = algebra_norm(t.tail().scale);
  for (point_index p = 0; p < t.points(); ++p) {
    best = std::max(best, spectral_norm(t.materialize(p, rows, cols)));
  }
  return {best, best};
}

double injectivity_modulus(const AOperator& t) {
  const auto [rows, cols] = norm_corner(t);
  double worst = std::numeric_limits<double>::infinity();
  for (point_index p = 0; p < t.points(); ++p) {
    worst = std::min(worst, std::abs(t.tail().scale(p)));
    if (cols > 0) worst = std::min(worst, min_singular_value(t.materialize(p, rows, cols)));
  }
  return worst;
}

AOperator invert(const AOperator& t, double tol) {
  if (t.offset() != 0) throw error(errc::not_invertible, "shift tails are not invertible");
  Family inverses;
  inverses.reserve(t.points());
  std::vector<complex_t> inv_scale(t.points());
  for (point_index p = 0; p < t.points(); ++p) {
    const complex_t tp = t.tail().scale(p);
    const ComplexMatrix& c = t.corner(p);
    double smax = std::abs(tp);
    double smin = std::abs(tp);
    if (c.size() > 0) {
      const Eigen::VectorXd sv = singular_values(c);
      smax = std::max(smax, sv(0));
      smin = std::min(smin, sv(sv.size() - 1));
    }
    if (!(smin > tol * smax)) {
      throw error(errc::not_invertible, "at point " + t.space()->name(p) +
                                            ": sigma_min=" + std::to_string(smin));
    }
    inv_scale[p] = 1.0 / tp;
    inverses.push_back(c.size() > 0 ? inverse(c, tol) : c);
  }
  return AOperator(t.space(), TailDescriptor{AlgebraElement(t.space(), inv_scale), 0},
                   std::move(inverses));
}

BlockDecomposition block_decompose(const AOperator& t, int m) {
  if (m < 0) throw error(errc::out_of_range, "block_decompose: m < 0");
  const int d = std::max(t.support(), m + std::abs(t.offset()));
  Family q1, q2, q3, q4;
  for (point_index p = 0; p < t.points(); ++p) {
    const ComplexMatrix full = t.materialize(p, d, d);
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    ComplexMatrix b = a, c = a, e = a;
    a.bottomRightCorner(d - m, d - m) = full.bottomRightCorner(d - m, d - m);
    b.bottomLeftCorner(d - m, m) = full.bottomLeftCorner(d - m, m);
    c.topRightCorner(m, d - m) = full.topRightCorner(m, d - m);
    e.topLeftCorner(m, m) = full.topLeftCorner(m, m);
    q1.push_back(std::move(a));
    q2.push_back(std::move(b));
    q3.push_back(std::move(c));
    q4.push_back(std::move(e));
  }
  const SpaceRef& sp = t.space();
  return BlockDecomposition{m, AOperator(sp, t.tail(), std::move(q1)),
                            AOperator::finite(sp, std::move(q2)),
                            AOperator::finite(sp, std::move(q3)),
                            AOperator::finite(sp, std::move(q4))};
}

Family to_family(const AOperator& t, int dim) {
  if (dim < t.support()) {
    throw error(errc::shape_mismatch, "to_family: dim " + std::to_string(dim) +
                                          " below support " + std::to_string(t.support()));
  }
  Family out;
  out.reserve(t.points());
  for (point_index p = 0; p < t.points(); ++p) out.push_back(t.materialize(p, dim, dim));
  return out;
}

AOperator from_family(const SpaceRef& space, const Family& family, const TailDescriptor& tail) {
  if (!space || family.size() != space->size()) {
    throw error(errc::shape_mismatch, "from_family: one matrix per point required");
  }
  for (const auto& m : family) {
    if (m.rows() != m.cols() || m.rows() != family.front().rows()) {
      throw error(errc::shape_mismatch, "from_family: matrices must be square, same shape");
    }
  }
  if (!tail.is_zero() && family.front().rows() < std::abs(tail.offset)) {
    throw error(errc::shape_mismatch, "from_family: corner smaller than the tail offset");
  }
  return AOperator(space, tail, family);
}

}  // namespace noether
