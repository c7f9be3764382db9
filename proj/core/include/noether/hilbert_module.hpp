#pragma once

#include <vector>

#include "noether/base_space.hpp"
#include "noether/numerics.hpp"

namespace noether {

/// Element x = sum_k x_k e^k of the standard module l2(A), truncated to N
/// coordinates. Coordinates are algebra elements; point() gives the
/// point-major slice x(p) in C^N.
class ModuleVector {
 public:
  ModuleVector(SpaceRef space, std::vector<AlgebraElement> coords);

  static ModuleVector zero(SpaceRef space, int n);
  // Builds a vector from its per-point slices (one C^N vector per point).
  static ModuleVector from_points(SpaceRef space, const std::vector<ComplexVector>& slices);

  const SpaceRef& space() const noexcept { return space_; }
  int truncation() const noexcept { return static_cast<int>(coords_.size()); }
  const std::vector<AlgebraElement>& coords() const noexcept { return coords_; }
  const AlgebraElement& coord(int k) const { return coords_.at(static_cast<std::size_t>(k)); }

  ComplexVector point(point_index p) const;

  ModuleVector& operator+=(const ModuleVector& other);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }

  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return same_space(a.space_, b.space_) && a.coords_ == b.coords_;
  }

 private:
  SpaceRef space_;
  std::vector<AlgebraElement> coords_;
};

// <x, y> = sum_k x_k y_k^*. Throws errc::shape_mismatch on differing N.
AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y);

// ||x|| = ||<x, x>||^{1/2}.
double vector_norm(const ModuleVector& x);

// e^k with 1-based k; throws errc::out_of_range unless 1 <= k <= n.
ModuleVector basis_vector(int k, int n, SpaceRef space);

enum class part { head, tail };

// head: p_m x (coordinates 1..m kept); tail: q_m x (coordinates > m kept).
ModuleVector project(const ModuleVector& x, int m, part which);

// The A-linear map A^n -> l2(A) determined by the images y_k = f(e^k):
// f(a) = sum_k a_k y_k.
ModuleVector apply_generated_map(const std::vector<ModuleVector>& images,
                                 const std::vector<AlgebraElement>& a);

// n * sqrt(C) with C = max_{k,j} ||<y_k, y_j>||; bounds ||f(a)|| / ||a||.
double generated_map_bound(const std::vector<ModuleVector>& images);

}  // namespace noether
