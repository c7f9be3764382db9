#pragma once
//
// Membership oracles for the subbase sets of the F- and IM-topologies on
// operators in H, and continuity diagnostics for point families along the
// nets of a sequential space.
//
// The oracles are sound in both directions: Member carries a verified
// invertible R, NotMember carries a vector certificate (a unit v with
// B v = 0, which bounds ||R B - A|| >= ||A v|| for every R). Anything else
// is Inconclusive.
//

#include <cstdint>
#include <string>
#include <vector>

#include "noether/a_operator.hpp"

namespace noether {

enum class membership { member, not_member, inconclusive };

std::string_view to_string(membership kind) noexcept;

struct TopologyVerdict {
  membership kind = membership::inconclusive;
  ComplexMatrix certificate;  // R, member only
  double residual = 0.0;      // member: achieved; inconclusive: best found
  double bound = 0.0;         // not_member: certified lower bound
  ComplexVector witness;      // not_member: the certifying vector
  std::string query;
};

// Member iff ||(B - A) a_i|| < eps for every i; R = I.
TopologyVerdict pointwise_member(const ComplexMatrix& b, const ComplexMatrix& a, double eps,
                                 const std::vector<ComplexVector>& vectors);

// Exists R invertible with R(V) in V and ||R B - A|| < eps. V has orthonormal
// columns. The search is a block upper-triangular least-squares fit in a
// basis adapted to V + V^perp, re-checked in the spectral norm.
TopologyVerdict f_subspace_member(const ComplexMatrix& b, const ComplexMatrix& a, double eps,
                                  const ComplexMatrix& v);

// Exists R invertible with ||R (S + Q_n B) - (S + Q_n K)|| < eps, where Q_n
// drops the first n coordinates. Throws errc::singular_s.
TopologyVerdict im_member(const ComplexMatrix& b, const ComplexMatrix& k, double eps,
                          const ComplexMatrix& s, int n);

// Conjunction of im_member over n = 0..n_max.
TopologyVerdict im_full_member(const ComplexMatrix& b, const ComplexMatrix& k, double eps,
                               const ComplexMatrix& s, int n_max);

enum class topology { uniform, strong, f, im };
enum class continuity { continuous, discontinuous, inconclusive };

std::string_view to_string(topology t) noexcept;
std::string_view to_string(continuity c) noexcept;
// Throws errc::input_parse for an unknown name.
topology parse_topology(const std::string& name);

struct NetDiagnostic {
  std::size_t net = 0;
  continuity verdict = continuity::inconclusive;
  double bound = 0.0;           // discontinuous: certified bound over the last half
  std::vector<double> trace;    // per net element: residual, or bound when not a member
  std::vector<membership> kinds;
};

struct ContinuityDiagnostic {
  topology which = topology::uniform;
  continuity verdict = continuity::inconclusive;
  double bound = 0.0;
  std::vector<NetDiagnostic> nets;
};

inline constexpr std::uint64_t default_battery_seed = 20040117;

// Batteries, on corners of size n with h = max(1, n / 2):
//  strong   e_1..e_h plus 8 seeded random unit vectors supported on the
//           first h coordinates;
//  F        the strong battery plus V = span(e_1..e_d), d in {1, 2, 4, ...} <= n;
//  IM       the strong battery plus im_full_member for S in
//           {I, 2I, 2I + E} with E seeded, ||E|| <= 0.5, n_max = n.
// A net is continuous when every element of its last half is a member, and
// discontinuous when every element there is certified not a member.
ContinuityDiagnostic family_continuity(const Family& family, const SpaceRef& space,
                                       topology which, double eps,
                                       std::uint64_t seed = default_battery_seed);

struct ConjugationReport {
  ContinuityDiagnostic u_strong;
  ContinuityDiagnostic u_inverse_strong;
  Family conjugated;
  ContinuityDiagnostic conjugated_f;
};

// U F U^{-1} pointwise, with the continuity checks around it. Throws
// errc::not_unitary when ||U^* U - I|| > 1e-10 at some point.
ConjugationReport conjugation_check(const Family& u, const Family& f, const SpaceRef& space,
                                    double eps, std::uint64_t seed = default_battery_seed);

}  // namespace noether
