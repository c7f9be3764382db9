#include "noether/topologies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include "noether/error.hpp"

namespace noether {

std::string_view to_string(membership kind) noexcept {
  switch (kind) {
    case membership::member: return "Member";
    case membership::not_member: return "NotMember";
    case membership::inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view to_string(topology t) noexcept {
  switch (t) {
    case topology::uniform: return "uniform";
    case topology::strong: return "strong";
    case topology::f: return "F";
    case topology::im: return "IM";
  }
  return "uniform";
}

std::string_view to_string(continuity c) noexcept {
  switch (c) {
    case continuity::continuous: return "Continuous";
    case continuity::discontinuous: return "Discontinuous";
    case continuity::inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

topology parse_topology(const std::string& name) {
  if (name == "uniform" || name == "u") return topology::uniform;
  if (name == "strong" || name == "s") return topology::strong;
  if (name == "F" || name == "f") return topology::f;
  if (name == "IM" || name == "im") return topology::im;
  throw error(errc::input_parse, "unknown topology '" + name + "'");
}

namespace {

constexpr double kernel_tol = 1e-12;

ComplexMatrix eye(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

void require_square_pair(const ComplexMatrix& b, const ComplexMatrix& a, const char* what) {
  if (b.rows() != b.cols() || a.rows() != a.cols() || a.rows() != b.rows()) {
    throw error(errc::shape_mismatch, what);
  }
}

TopologyVerdict member_with(ComplexMatrix r, double residual, std::string query) {
  TopologyVerdict v;
  v.kind = membership::member;
  v.certificate = std::move(r);
  v.residual = residual;
  v.query = std::move(query);
  return v;
}

// Unit v with x v = 0 maximising ||y v||: exact zero columns of x first,
// then the numerical kernel.
std::optional<std::pair<ComplexVector, double>> kernel_certificate(const ComplexMatrix& x,
                                                                   const ComplexMatrix& y) {
  std::optional<std::pair<ComplexVector, double>> best;
  auto offer = [&](ComplexVector v, double value) {
    if (!best || value > best->second) best.emplace(std::move(v), value);
  };
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    if (x.col(j).isZero(0.0)) {
      offer(ComplexVector::Unit(x.cols(), j), y.col(j).norm());
    }
  }
  if (best) return best;
  const ComplexMatrix kernel = null_space_basis(x, kernel_tol);
  if (kernel.cols() == 0) return best;
  const Eigen::BDCSVD<ComplexMatrix> svd(y * kernel, Eigen::ComputeThinV);
  ComplexVector v = kernel * svd.matrixV().col(0);
  v.normalize();
  offer(v, (y * v).norm());
  return best;
}

TopologyVerdict certified_or_inconclusive(const ComplexMatrix& x, const ComplexMatrix& y,
                                          double eps, double best_residual, std::string query) {
  TopologyVerdict v;
  v.query = std::move(query);
  if (auto cert = kernel_certificate(x, y); cert && cert->second >= eps) {
    v.kind = membership::not_member;
    v.bound = cert->second;
    v.witness = std::move(cert->first);
    return v;
  }
  v.kind = membership::inconclusive;
  v.residual = best_residual;
  return v;
}

bool admissible(const ComplexMatrix& r) { return r.allFinite() && is_invertible(r); }

}  // namespace

TopologyVerdict pointwise_member(const ComplexMatrix& b, const ComplexMatrix& a, double eps,
                                 const std::vector<ComplexVector>& vectors) {
  if (b.rows() != a.rows() || b.cols() != a.cols()) {
    throw error(errc::shape_mismatch, "pointwise_member: B and A differ in shape");
  }
  const ComplexMatrix diff = b - a;
  double worst = 0.0;
  ComplexVector worst_v;
  for (const auto& x : vectors) {
    if (x.size() != a.cols()) throw error(errc::shape_mismatch, "pointwise_member: vector size");
    const double r = (diff * x).norm();
    if (worst_v.size() == 0 || r > worst) {
      worst = r;
      worst_v = x;
    }
  }
  const std::string query = "pointwise, " + std::to_string(vectors.size()) + " vectors";
  if (worst < eps) return member_with(eye(a.cols()), worst, query);
  TopologyVerdict v;
  v.kind = membership::not_member;
  v.bound = worst;
  v.witness = worst_v;
  v.query = query;
  return v;
}

TopologyVerdict f_subspace_member(const ComplexMatrix& b, const ComplexMatrix& a, double eps,
                                  const ComplexMatrix& v) {
  require_square_pair(b, a, "f_subspace_member: B and A must be square of equal size");
  const Eigen::Index n = a.rows();
  if (v.rows() != n || v.cols() > n) throw error(errc::shape_mismatch, "f_subspace_member: V");
  const std::string query = "F subspace, dim V = " + std::to_string(v.cols());

  const double ball = spectral_norm(b - a);
  if (ball < eps) return member_with(eye(n), ball, query);

  if (auto cert = kernel_certificate(b, a); cert && cert->second >= eps) {
    TopologyVerdict out;
    out.kind = membership::not_member;
    out.bound = cert->second;
    out.witness = std::move(cert->first);
    out.query = query;
    return out;
  }

  // W = [V, V^perp]; R~ = W^* R W is block upper-triangular, so rows of R~
  // decouple: rows on V are free, rows on V^perp only use the V^perp columns.
  const Eigen::Index dv = v.cols();
  ComplexMatrix w(n, n);
  w << v, orthogonal_complement(v);
  const ComplexMatrix bt = w.adjoint() * b * w;
  const ComplexMatrix at = w.adjoint() * a * w;
  ComplexMatrix rt = ComplexMatrix::Zero(n, n);
  if (dv > 0) {
    rt.topRows(dv) = least_squares(bt.adjoint(), at.topRows(dv).adjoint()).adjoint();
  }
  if (dv < n) {
    rt.bottomRightCorner(n - dv, n - dv) =
        least_squares(bt.bottomRows(n - dv).adjoint(), at.bottomRows(n - dv).adjoint())
            .adjoint();
  }
  const ComplexMatrix r = w * rt * w.adjoint();
  const double residual = spectral_norm(r * b - a);
  if (residual < eps && admissible(r)) return member_with(r, residual, query);
  TopologyVerdict out;
  out.kind = membership::inconclusive;
  out.residual = std::min(ball, residual);
  out.query = query;
  return out;
}

TopologyVerdict im_member(const ComplexMatrix& b, const ComplexMatrix& k, double eps,
                          const ComplexMatrix& s, int n) {
  require_square_pair(b, k, "im_member: B and K must be square of equal size");
  require_square_pair(s, k, "im_member: S must match K");
  if (n < 0) throw error(errc::out_of_range, "im_member: n < 0");
  if (!is_invertible(s)) throw error(errc::singular_s, "S fails the invertibility threshold");
  const Eigen::Index dim = k.rows();
  const Eigen::Index keep = std::max<Eigen::Index>(dim - n, 0);
  const std::string query = "IM, n = " + std::to_string(n);

  ComplexMatrix x = s;
  ComplexMatrix y = s;
  x.bottomRows(keep) += b.bottomRows(keep);
  y.bottomRows(keep) += k.bottomRows(keep);
  if (x == y) return member_with(eye(dim), 0.0, query);

  if (is_invertible(x) && is_invertible(y)) {
    // R = Y X^{-1}, refined once.
    ComplexMatrix r = solve(x.adjoint(), y.adjoint()).adjoint();
    r += solve(x.adjoint(), (y - r * x).adjoint()).adjoint();
    const double residual = spectral_norm(r * x - y);
    if (residual < eps) return member_with(r, residual, query);
  }

  const double ball = spectral_norm(x - y);
  if (ball < eps) return member_with(eye(dim), ball, query);

  const ComplexMatrix r = least_squares(x.adjoint(), y.adjoint()).adjoint();
  const double residual = spectral_norm(r * x - y);
  if (residual < eps && admissible(r)) return member_with(r, residual, query);
  return certified_or_inconclusive(x, y, eps, std::min(ball, residual), query);
}

TopologyVerdict im_full_member(const ComplexMatrix& b, const ComplexMatrix& k, double eps,
                               const ComplexMatrix& s, int n_max) {
  if (n_max < 0) throw error(errc::out_of_range, "im_full_member: n_max < 0");
  TopologyVerdict worst;
  bool have = false;
  std::optional<TopologyVerdict> inconclusive;
  std::optional<TopologyVerdict> last;
  for (int n = 0; n <= n_max; ++n) {
    // Dropping a row that is zero in both B and K leaves X and Y unchanged.
    const bool same = last && n - 1 < b.rows() && b.row(n - 1).isZero(0.0) &&
                      k.row(n - 1).isZero(0.0);
    TopologyVerdict v = same ? *last : im_member(b, k, eps, s, n);
    if (same) v.query = "IM, n = " + std::to_string(n);
    last = v;
    if (v.kind == membership::not_member) return v;
    if (v.kind == membership::inconclusive) {
      if (!inconclusive) inconclusive = std::move(v);
      continue;
    }
    if (!have || v.residual > worst.residual) {
      worst = std::move(v);
      have = true;
    }
  }
  if (inconclusive) return *inconclusive;
  worst.query = "IM, n = 0.." + std::to_string(n_max);
  return worst;
}

namespace {

struct Battery {
  std::vector<ComplexVector> vectors;
  std::vector<ComplexMatrix> subspaces;
  std::vector<ComplexMatrix> s_choices;
};

ComplexVector random_unit(std::mt19937_64& rng, Eigen::Index n, Eigen::Index head) {
  std::normal_distribution<double> gauss;
  ComplexVector v = ComplexVector::Zero(n);
  for (Eigen::Index i = 0; i < head; ++i) v(i) = complex_t(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

Battery make_battery(Eigen::Index n, topology which, std::uint64_t seed) {
  Battery bat;
  if (which == topology::uniform || n == 0) return bat;
  std::mt19937_64 rng(seed);
  const Eigen::Index h = std::max<Eigen::Index>(1, n / 2);
  for (Eigen::Index j = 0; j < h; ++j) bat.vectors.push_back(ComplexVector::Unit(n, j));
  for (int r = 0; r < 8; ++r) bat.vectors.push_back(random_unit(rng, n, h));
  if (which == topology::f) {
    for (Eigen::Index d = 1; d <= n; d *= 2) bat.subspaces.push_back(eye(n).leftCols(d));
  }
  if (which == topology::im) {
    std::normal_distribution<double> gauss;
    ComplexMatrix e(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) e(i, j) = complex_t(gauss(rng), gauss(rng));
    }
    e *= 0.5 / spectral_norm(e);
    bat.s_choices = {eye(n), 2.0 * eye(n), 2.0 * eye(n) + e};
  }
  return bat;
}

struct Evaluation {
  membership kind = membership::member;
  double value = 0.0;
};

// Members report their worst residual, non-members their best bound.
void absorb(Evaluation& acc, const TopologyVerdict& v) {
  switch (v.kind) {
    case membership::not_member:
      if (acc.kind != membership::not_member) acc = {membership::not_member, v.bound};
      else acc.value = std::max(acc.value, v.bound);
      break;
    case membership::inconclusive:
      if (acc.kind == membership::member) acc = {membership::inconclusive, v.residual};
      else if (acc.kind == membership::inconclusive) acc.value = std::max(acc.value, v.residual);
      break;
    case membership::member:
      if (acc.kind == membership::member) acc.value = std::max(acc.value, v.residual);
      break;
  }
}

Evaluation evaluate(const ComplexMatrix& b, const ComplexMatrix& a, topology which, double eps,
                    const Battery& bat) {
  Evaluation acc;
  if (which == topology::uniform) {
    const double d = spectral_norm(b - a);
    return {d < eps ? membership::member : membership::not_member, d};
  }
  absorb(acc, pointwise_member(b, a, eps, bat.vectors));
  for (const auto& v : bat.subspaces) absorb(acc, f_subspace_member(b, a, eps, v));
  for (const auto& s : bat.s_choices) {
    absorb(acc, im_full_member(b, a, eps, s, static_cast<int>(a.rows())));
  }
  return acc;
}

}  // namespace

ContinuityDiagnostic family_continuity(const Family& family, const SpaceRef& space,
                                       topology which, double eps, std::uint64_t seed) {
  if (!space || family.size() != space->size()) {
    throw error(errc::shape_mismatch, "family_continuity: one matrix per point required");
  }
  if (!(eps > 0.0)) throw error(errc::out_of_range, "eps must be positive");
  for (const auto& m : family) {
    if (m.rows() != family.front().rows() || m.cols() != family.front().cols()) {
      throw error(errc::shape_mismatch, "family_continuity: matrices differ in shape");
    }
  }
  ContinuityDiagnostic diag;
  diag.which = which;
  const Battery bat =
      family.empty() ? Battery{} : make_battery(family.front().rows(), which, seed);

  bool all_continuous = true;
  for (std::size_t ni = 0; ni < space->nets().size(); ++ni) {
    const Net& net = space->nets()[ni];
    NetDiagnostic nd;
    nd.net = ni;
    const ComplexMatrix& limit = family[net.limit];
    for (point_index p : net.sequence) {
      const Evaluation e = evaluate(family[p], limit, which, eps, bat);
      nd.trace.push_back(e.value);
      nd.kinds.push_back(e.kind);
    }
    const std::size_t start = nd.kinds.size() / 2;
    bool all_member = true;
    bool all_certified = start < nd.kinds.size();
    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t i = start; i < nd.kinds.size(); ++i) {
      all_member = all_member && nd.kinds[i] == membership::member;
      all_certified = all_certified && nd.kinds[i] == membership::not_member;
      bound = std::min(bound, nd.trace[i]);
    }
    if (all_member) {
      nd.verdict = continuity::continuous;
    } else if (all_certified) {
      nd.verdict = continuity::discontinuous;
      nd.bound = bound;
    }
    all_continuous = all_continuous && nd.verdict == continuity::continuous;
    if (nd.verdict == continuity::discontinuous) {
      diag.verdict = continuity::discontinuous;
      diag.bound = std::max(diag.bound, nd.bound);
    }
    diag.nets.push_back(std::move(nd));
  }
  if (diag.verdict != continuity::discontinuous && all_continuous) {
    diag.verdict = continuity::continuous;
  }
  return diag;
}

ConjugationReport conjugation_check(const Family& u, const Family& f, const SpaceRef& space,
                                    double eps, std::uint64_t seed) {
  if (!space || u.size() != space->size() || f.size() != space->size()) {
    throw error(errc::shape_mismatch, "conjugation_check: one matrix per point required");
  }
  Family u_inv;
  ConjugationReport rep;
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p].rows() != u[p].cols() || u[p].rows() != f[p].rows() || f[p].rows() != f[p].cols()) {
      throw error(errc::shape_mismatch, "conjugation_check: shapes at " + space->name(p));
    }
    const double defect = spectral_norm(u[p].adjoint() * u[p] - eye(u[p].cols()));
    if (defect > 1e-10) {
      throw error(errc::not_unitary, "at " + space->name(p) + ": ||U*U - I|| = " +
                                         std::to_string(defect));
    }
    u_inv.push_back(u[p].adjoint());
    rep.conjugated.push_back(u[p] * f[p] * u_inv.back());
  }
  rep.u_strong = family_continuity(u, space, topology::strong, eps, seed);
  rep.u_inverse_strong = family_continuity(u_inv, space, topology::strong, eps, seed);
  rep.conjugated_f = family_continuity(rep.conjugated, space, topology::f, eps, seed);
  return rep;
}

}  // namespace noether
