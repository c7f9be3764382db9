#pragma once
//
// Tail-norm compactness criteria: K is compact iff ||q_m K|| -> 0, and
// adjointable-compact (K*) iff ||K q_m|| -> 0. At finite truncation these
// are three-valued verdicts backed by exact norm profiles.
//

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "noether/a_operator.hpp"

namespace noether {

inline constexpr double default_compactness_eps = 1e-8;

struct TailNormProfile {
  std::vector<int> m_values;
  std::vector<NormEnclosure> qk_norms;   // ||q_m K||
  std::vector<NormEnclosure> qkq_norms;  // ||q_m K q_m||
  std::vector<NormEnclosure> kq_norms;   // ||K q_m||
};

// Profile for m = 0..m_max.
TailNormProfile tail_norm_profile(const AOperator& k, int m_max);

enum class compactness_kind { compact, not_compact_at_scale, inconclusive };

std::string_view to_string(compactness_kind kind) noexcept;

struct CompactnessVerdict {
  compactness_kind kind = compactness_kind::inconclusive;
  int witness = -1;          // set for compact
  double lower_bound = 0.0;  // set for not_compact_at_scale: min over m of the norm lows
  TailNormProfile profile;
};

// "Compact(1)", "NotCompactAtScale(1)", "Inconclusive".
std::string describe(const CompactnessVerdict& v);

// Default scan depth: support + 4.
int default_m_max(const AOperator& k);

// compact(m): smallest m <= m_max with ||q_m K||.hi <= eps.
// not_compact_at_scale(c): ||q_m K||.lo >= c > eps for every m <= m_max.
// Otherwise inconclusive.
CompactnessVerdict is_compact(const AOperator& k, double eps = default_compactness_eps,
                              std::optional<int> m_max = std::nullopt);

// Same decision rule on ||K q_m||.
CompactnessVerdict is_adjointable_compact(const AOperator& k,
                                          double eps = default_compactness_eps,
                                          std::optional<int> m_max = std::nullopt);

enum class scaling_kind { uniformly_compact, escaping, inconclusive };

std::string_view to_string(scaling_kind kind) noexcept;

struct ScalingReport {
  std::vector<int> levels;
  std::vector<int> m_grid;
  // norms[level][m] = ||q_m K_level||
  std::vector<std::vector<NormEnclosure>> norms;
  scaling_kind verdict = scaling_kind::inconclusive;
  int witness = -1;      // uniformly_compact
  double plateau = 0.0;  // escaping: c
};

using OperatorGenerator = std::function<AOperator(int level)>;

// Runs the tail criterion at each truncation level. A witness m only counts
// if it sits strictly below every level (below the truncation horizon):
//  - uniformly_compact(m*): one m* < min(levels) has ||q_m* K_M|| <= eps at
//    every level;
//  - escaping(c): for every m < max(levels), the norm at the largest level
//    exceeding m is >= c > eps.
ScalingReport scaling_study(const OperatorGenerator& generator, const std::vector<int>& levels,
                            double eps = default_compactness_eps);

}  // namespace noether
