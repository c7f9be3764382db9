#include "noether/hilbert_module.hpp"

#include <cmath>

#include "noether/error.hpp"

namespace noether {

ModuleVector::ModuleVector(SpaceRef space, std::vector<AlgebraElement> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
  if (!space_) throw error(errc::space_mismatch, "module vector without a space");
  for (const auto& c : coords_) {
    if (!same_space(space_, c.space())) {
      throw error(errc::space_mismatch, "coordinate over a different space");
    }
  }
}

ModuleVector ModuleVector::zero(SpaceRef space, int n) {
  if (n < 0) throw error(errc::out_of_range, "negative truncation");
  std::vector<AlgebraElement> coords(static_cast<std::size_t>(n), AlgebraElement::zero(space));
  return ModuleVector(std::move(space), std::move(coords));
}

ModuleVector ModuleVector::from_points(SpaceRef space, const std::vector<ComplexVector>& slices) {
  if (!space || slices.size() != space->size()) {
    throw error(errc::shape_mismatch, "one slice per point required");
  }
  const Eigen::Index n = slices.empty() ? 0 : slices.front().size();
  std::vector<AlgebraElement> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    std::vector<complex_t> values(space->size());
    for (std::size_t p = 0; p < space->size(); ++p) {
      if (slices[p].size() != n) throw error(errc::shape_mismatch, "ragged slices");
      values[p] = slices[p](k);
    }
    coords.emplace_back(space, std::move(values));
  }
  return ModuleVector(std::move(space), std::move(coords));
}

ComplexVector ModuleVector::point(point_index p) const {
  ComplexVector v(truncation());
  for (int k = 0; k < truncation(); ++k) v(k) = coords_[static_cast<std::size_t>(k)](p);
  return v;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  if (other.truncation() != truncation()) throw error(errc::shape_mismatch, "truncations differ");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y) {
  if (!same_space(x.space(), y.space())) throw error(errc::space_mismatch, "inner_product");
  if (x.truncation() != y.truncation()) throw error(errc::shape_mismatch, "inner_product");
  AlgebraElement acc = AlgebraElement::zero(x.space());
  for (int k = 0; k < x.truncation(); ++k) acc += x.coord(k) * y.coord(k).conj();
  return acc;
}

double vector_norm(const ModuleVector& x) {
  return std::sqrt(algebra_norm(inner_product(x, x)));
}

ModuleVector basis_vector(int k, int n, SpaceRef space) {
  if (k < 1 || k > n) {
    throw error(errc::out_of_range,
                "basis_vector: k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  std::vector<AlgebraElement> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) coords.push_back(AlgebraElement::constant(space, j == k ? 1.0 : 0.0));
  return ModuleVector(std::move(space), std::move(coords));
}

ModuleVector project(const ModuleVector& x, int m, part which) {
  if (m < 0 || m > x.truncation()) {
    throw error(errc::out_of_range, "project: m=" + std::to_string(m));
  }
  std::vector<AlgebraElement> coords = x.coords();
  for (int k = 0; k < x.truncation(); ++k) {
    const bool in_head = k < m;
    if (in_head != (which == part::head)) {
      coords[static_cast<std::size_t>(k)] = AlgebraElement::zero(x.space());
    }
  }
  return ModuleVector(x.space(), std::move(coords));
}

ModuleVector apply_generated_map(const std::vector<ModuleVector>& images,
                                 const std::vector<AlgebraElement>& a) {
  if (images.size() != a.size() || images.empty()) {
    throw error(errc::shape_mismatch, "apply_generated_map: one coefficient per generator");
  }
  ModuleVector out = ModuleVector::zero(images.front().space(), images.front().truncation());
  for (std::size_t k = 0; k < images.size(); ++k) {
    std::vector<AlgebraElement> scaled;
    scaled.reserve(images[k].coords().size());
    for (const auto& c : images[k].coords()) scaled.push_back(c * a[k]);
    out += ModuleVector(images[k].space(), std::move(scaled));
  }
  return out;
}

double generated_map_bound(const std::vector<ModuleVector>& images) {
  double c = 0.0;
  for (const auto& yk : images) {
    for (const auto& yj : images) c = std::max(c, algebra_norm(inner_product(yk, yj)));
  }
  return static_cast<double>(images.size()) * std::sqrt(c);
}

}  // namespace noether
