#pragma once
//
// The compact parameter space X, truncated to a finite point set that
// remembers which sequences converge to which limit, and the commutative
// algebra A = C(X) of complex functions on it.
//

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace noether {

using point_index = std::size_t;

struct Net {
  std::vector<point_index> sequence;
  point_index limit = 0;

  friend bool operator==(const Net&, const Net&) = default;
};

class SequentialSpace {
 public:
  // Validates: unique point names, net members in range, pairwise distinct
  // and distinct from the limit. Throws errc::out_of_range otherwise.
  SequentialSpace(std::vector<std::string> points, std::vector<Net> nets);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<Net>& nets() const noexcept { return nets_; }
  const std::string& name(point_index i) const { return points_.at(i); }

  // Throws errc::out_of_range for an unknown name.
  point_index index_of(const std::string& name) const;

  friend bool operator==(const SequentialSpace&, const SequentialSpace&) = default;

 private:
  std::vector<std::string> points_;
  std::vector<Net> nets_;
};

using SpaceRef = std::shared_ptr<const SequentialSpace>;

// X = {0} u {1/i : 1 <= i <= count}; point 0 is the limit, points are named
// "0", "1/1", ..., "1/count", and a single net 1/1, 1/2, ... -> 0.
SpaceRef make_sequence_space(int count);

bool same_space(const SpaceRef& a, const SpaceRef& b);

class AlgebraElement {
 public:
  using value_type = std::complex<double>;

  AlgebraElement(SpaceRef space, std::vector<value_type> values);

  static AlgebraElement constant(SpaceRef space, value_type c);
  static AlgebraElement zero(SpaceRef space) { return constant(std::move(space), 0.0); }
  // Indicator of a single point.
  static AlgebraElement delta(SpaceRef space, point_index p);

  const SpaceRef& space() const noexcept { return space_; }
  const std::vector<value_type>& values() const noexcept { return values_; }
  value_type operator()(point_index p) const { return values_.at(p); }
  std::size_t size() const noexcept { return values_.size(); }

  AlgebraElement conj() const;
  bool is_zero() const noexcept;
  bool is_constant(value_type c) const noexcept;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const AlgebraElement& other);
  AlgebraElement& operator*=(value_type s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const AlgebraElement& b) { return a *= b; }
  friend AlgebraElement operator*(AlgebraElement a, value_type s) { return a *= s; }
  friend AlgebraElement operator*(value_type s, AlgebraElement a) { return a *= s; }
  AlgebraElement operator-() const { return *this * value_type(-1.0); }

  // Exact comparison, used for the algebraic identities of the operator layer.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void check_compatible(const AlgebraElement& other) const;

  SpaceRef space_;
  std::vector<value_type> values_;
};

// C*-norm of C(X): max over points of |a(x)|.
double algebra_norm(const AlgebraElement& a);

}  // namespace noether
