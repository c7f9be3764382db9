#include "noether/base_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "noether/error.hpp"

namespace noether {

SequentialSpace::SequentialSpace(std::vector<std::string> points, std::vector<Net> nets)
    : points_(std::move(points)), nets_(std::move(nets)) {
  std::set<std::string> seen(points_.begin(), points_.end());
  if (seen.size() != points_.size()) {
    throw error(errc::out_of_range, "duplicate point identifier");
  }
  for (const Net& net : nets_) {
    if (net.limit >= points_.size()) throw error(errc::out_of_range, "net limit not a point");
    std::set<point_index> members;
    for (point_index p : net.sequence) {
      if (p >= points_.size()) throw error(errc::out_of_range, "net member not a point");
      if (p == net.limit) throw error(errc::out_of_range, "net member equals its limit");
      if (!members.insert(p).second) throw error(errc::out_of_range, "net members repeat");
    }
  }
}

point_index SequentialSpace::index_of(const std::string& name) const {
  const auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) throw error(errc::out_of_range, "unknown point '" + name + "'");
  return static_cast<point_index>(it - points_.begin());
}

SpaceRef make_sequence_space(int count) {
  if (count < 1) throw error(errc::out_of_range, "make_sequence_space: count must be >= 1");
  std::vector<std::string> points;
  points.reserve(static_cast<std::size_t>(count) + 1);
  points.emplace_back("0");
  Net net;
  net.limit = 0;
  for (int i = 1; i <= count; ++i) {
    points.push_back("1/" + std::to_string(i));
    net.sequence.push_back(static_cast<point_index>(i));
  }
  return std::make_shared<const SequentialSpace>(std::move(points), std::vector<Net>{net});
}

bool same_space(const SpaceRef& a, const SpaceRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

AlgebraElement::AlgebraElement(SpaceRef space, std::vector<value_type> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw error(errc::space_mismatch, "algebra element without a space");
  if (values_.size() != space_->size()) {
    throw error(errc::shape_mismatch, "algebra element must be defined at every point");
  }
}

AlgebraElement AlgebraElement::constant(SpaceRef space, value_type c) {
  const std::size_t n = space ? space->size() : 0;
  return AlgebraElement(std::move(space), std::vector<value_type>(n, c));
}

AlgebraElement AlgebraElement::delta(SpaceRef space, point_index p) {
  AlgebraElement a = zero(std::move(space));
  a.values_.at(p) = 1.0;
  return a;
}

AlgebraElement AlgebraElement::conj() const {
  AlgebraElement out = *this;
  for (auto& v : out.values_) v = std::conj(v);
  return out;
}

bool AlgebraElement::is_zero() const noexcept { return is_constant(0.0); }

bool AlgebraElement::is_constant(value_type c) const noexcept {
  return std::all_of(values_.begin(), values_.end(), [c](value_type v) { return v == c; });
}

void AlgebraElement::check_compatible(const AlgebraElement& other) const {
  if (!same_space(space_, other.space_)) {
    throw error(errc::space_mismatch, "algebra elements over different spaces");
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const AlgebraElement& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(value_type s) {
  for (auto& v : values_) v *= s;
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return same_space(a.space_, b.space_) && a.values_ == b.values_;
}

double algebra_norm(const AlgebraElement& a) {
  double best = 0.0;
  for (const auto& v : a.values()) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace noether
