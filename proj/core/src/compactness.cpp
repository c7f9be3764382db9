#include "noether/compactness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "noether/error.hpp"

namespace noether {

std::string_view to_string(compactness_kind kind) noexcept {
  switch (kind) {
    case compactness_kind::compact: return "Compact";
    case compactness_kind::not_compact_at_scale: return "NotCompactAtScale";
    case compactness_kind::inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view to_string(scaling_kind kind) noexcept {
  switch (kind) {
    case scaling_kind::uniformly_compact: return "UniformlyCompact";
    case scaling_kind::escaping: return "Escaping";
    case scaling_kind::inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string describe(const CompactnessVerdict& v) {
  char buf[64];
  switch (v.kind) {
    case compactness_kind::compact:
      std::snprintf(buf, sizeof buf, "Compact(%d)", v.witness);
      return buf;
    case compactness_kind::not_compact_at_scale:
      std::snprintf(buf, sizeof buf, "NotCompactAtScale(%.6g)", v.lower_bound);
      return buf;
    case compactness_kind::inconclusive: break;
  }
  return "Inconclusive";
}

namespace {

// Corner of K large enough that, for every m <= m_max, q_m K, K q_m and
// q_m K q_m split into this corner plus an orthogonally placed pure tail.
struct ProfileCorner {
  int rows = 0;
  int cols = 0;
  Family slices;
  // Per slice: scale, S S^* / scale^2 and S^* S / scale^2. The trailing blocks
  // are the Gram matrices of the row and column cuts.
  std::vector<double> scales;
  Family row_grams;
  Family col_grams;
};

double trailing_norm(const ComplexMatrix& gram, double scale, int keep) {
  if (keep <= 0 || scale == 0.0) return 0.0;
  const auto block = gram.bottomRightCorner(keep, keep);
  if (block.isZero(0.0)) return 0.0;
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(block, Eigen::EigenvaluesOnly);
  return scale * std::sqrt(std::max(eig.eigenvalues().maxCoeff(), 0.0));
}

ProfileCorner profile_corner(const AOperator& k, int m_max) {
  const int off = k.offset();
  const int d = std::max(k.support(), m_max + std::abs(off));
  ProfileCorner pc;
  pc.rows = d + std::max(off, 0);
  pc.cols = d + std::max(-off, 0);
  pc.slices.reserve(k.points());
  for (point_index p = 0; p < k.points(); ++p) {
    pc.slices.push_back(k.materialize(p, pc.rows, pc.cols));
    const ComplexMatrix& sl = pc.slices.back();
    const double scale = sl.size() == 0 ? 0.0 : sl.cwiseAbs().maxCoeff();
    const ComplexMatrix u = scale > 0.0 ? ComplexMatrix(sl / scale) : sl;
    pc.scales.push_back(scale);
    pc.row_grams.push_back(u * u.adjoint());
    pc.col_grams.push_back(u.adjoint() * u);
  }
  return pc;
}

enum class side { rows, cols, both };

double cut_norm(const ProfileCorner& pc, const AOperator& k, int m, side which) {
  double best = algebra_norm(k.tail().scale);
  for (std::size_t i = 0; i < pc.slices.size(); ++i) {
    const ComplexMatrix& s = pc.slices[i];
    double n = 0.0;
    switch (which) {
      case side::rows:
        n = pc.rows - m <= pc.cols ? trailing_norm(pc.row_grams[i], pc.scales[i], pc.rows - m)
                                   : spectral_norm(s.bottomRows(pc.rows - m));
        break;
      case side::cols:
        n = pc.cols - m <= pc.rows ? trailing_norm(pc.col_grams[i], pc.scales[i], pc.cols - m)
                                   : spectral_norm(s.rightCols(pc.cols - m));
        break;
      case side::both: n = spectral_norm(s.bottomRightCorner(pc.rows - m, pc.cols - m)); break;
    }
    best = std::max(best, n);
  }
  return best;
}

CompactnessVerdict decide(const std::vector<NormEnclosure>& norms, double eps,
                          TailNormProfile profile) {
  CompactnessVerdict v;
  v.profile = std::move(profile);
  double min_lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (norms[i].hi <= eps) {
      v.kind = compactness_kind::compact;
      v.witness = v.profile.m_values[i];
      return v;
    }
    min_lo = std::min(min_lo, norms[i].lo);
  }
  if (!norms.empty() && min_lo > eps) {
    v.kind = compactness_kind::not_compact_at_scale;
    v.lower_bound = min_lo;
  }
  return v;
}

void require_eps(double eps) {
  if (!(eps > 0.0)) throw error(errc::out_of_range, "eps must be positive");
}

}  // namespace

TailNormProfile tail_norm_profile(const AOperator& k, int m_max) {
  if (m_max < 0) throw error(errc::out_of_range, "m_max < 0");
  const ProfileCorner pc = profile_corner(k, m_max);
  TailNormProfile prof;
  for (int m = 0; m <= m_max; ++m) {
    prof.m_values.push_back(m);
    const double qk = cut_norm(pc, k, m, side::rows);
    const double kq = cut_norm(pc, k, m, side::cols);
    const double qkq = cut_norm(pc, k, m, side::both);
    prof.qk_norms.push_back({qk, qk});
    prof.kq_norms.push_back({kq, kq});
    prof.qkq_norms.push_back({qkq, qkq});
  }
  return prof;
}

int default_m_max(const AOperator& k) { return k.support() + 4; }

CompactnessVerdict is_compact(const AOperator& k, double eps, std::optional<int> m_max) {
  require_eps(eps);
  TailNormProfile prof = tail_norm_profile(k, m_max.value_or(default_m_max(k)));
  const auto norms = prof.qk_norms;
  return decide(norms, eps, std::move(prof));
}

CompactnessVerdict is_adjointable_compact(const AOperator& k, double eps,
                                          std::optional<int> m_max) {
  require_eps(eps);
  TailNormProfile prof = tail_norm_profile(k, m_max.value_or(default_m_max(k)));
  const auto norms = prof.kq_norms;
  return decide(norms, eps, std::move(prof));
}

ScalingReport scaling_study(const OperatorGenerator& generator, const std::vector<int>& levels,
                            double eps) {
  require_eps(eps);
  if (levels.empty()) throw error(errc::out_of_range, "scaling_study: no levels");
  if (!std::is_sorted(levels.begin(), levels.end()) ||
      std::adjacent_find(levels.begin(), levels.end()) != levels.end()) {
    throw error(errc::out_of_range, "scaling_study: levels must be increasing");
  }
  ScalingReport rep;
  rep.levels = levels;
  const int top = levels.back();
  for (int m = 0; m < std::max(top, 1); ++m) rep.m_grid.push_back(m);

  for (int level : levels) {
    const AOperator k = generator(level);
    const ProfileCorner pc = profile_corner(k, rep.m_grid.back());
    std::vector<NormEnclosure> row;
    row.reserve(rep.m_grid.size());
    for (int m : rep.m_grid) {
      const double n = cut_norm(pc, k, m, side::rows);
      row.push_back({n, n});
    }
    rep.norms.push_back(std::move(row));
  }

  for (int m : rep.m_grid) {
    if (m >= levels.front()) break;
    bool all = true;
    for (const auto& row : rep.norms) all = all && row[static_cast<std::size_t>(m)].hi <= eps;
    if (all) {
      rep.verdict = scaling_kind::uniformly_compact;
      rep.witness = m;
      return rep;
    }
  }

  double c = std::numeric_limits<double>::infinity();
  for (int m : rep.m_grid) {
    // Largest level whose horizon lies beyond m.
    for (std::size_t li = levels.size(); li-- > 0;) {
      if (levels[li] > m) {
        c = std::min(c, rep.norms[li][static_cast<std::size_t>(m)].lo);
        break;
      }
    }
  }
  if (c > eps && std::isfinite(c)) {
    rep.verdict = scaling_kind::escaping;
    rep.plateau = c;
  }
  return rep;
}

}  // namespace noether
