#include "noether/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "noether/error.hpp"

namespace noether {

namespace {

constexpr double rank_tol = 1e-8;
constexpr double iso_floor = 1e-10;

void require_same_space(const AOperator& a, const AOperator& b, const char* what) {
  if (!same_space(a.space(), b.space())) throw error(errc::space_mismatch, what);
}

AOperator projector_from(const SpaceRef& space, Family corners) {
  return AOperator(space, TailDescriptor::identity(space), std::move(corners));
}

ComplexMatrix eye(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

// Common tail of every constructor: corners, bases, blocks and the checks
// that F restricts to an isomorphism M1 -> M2 with (id - Pi2) F Pi1 = 0.
NoetherDecomposition finalize(const AOperator& f, const AOperator& pdom, const AOperator& pcod,
                              int m) {
  require_same_space(f, pdom, "decomposition: domain projector");
  require_same_space(f, pcod, "decomposition: codomain projector");
  const int k = f.offset();
  const int ak = std::abs(k);
  const int d_in = std::max({f.support() + ak, pdom.support(), pcod.support() + ak});
  const int d_out = d_in + k;

  Family n1_basis, n2_basis;
  double margin = std::numeric_limits<double>::infinity();
  for (point_index p = 0; p < f.points(); ++p) {
    const ComplexMatrix pd = pdom.materialize(p, d_in, d_in);
    const ComplexMatrix pc = pcod.materialize(p, d_out, d_out);
    n1_basis.push_back(projector_range(eye(d_in) - pd));
    n2_basis.push_back(projector_range(eye(d_out) - pc));
    const ComplexMatrix m1 = projector_range(pd);
    const Eigen::Index dim_m1 = d_in - n1_basis.back().cols();
    const Eigen::Index dim_m2 = d_out - n2_basis.back().cols();
    if (m1.cols() != dim_m1 || dim_m1 != dim_m2) {
      throw error(errc::not_invertible, "at point " + f.space()->name(p) + ": dim M1 = " +
                                            std::to_string(dim_m1) + ", dim M2 = " +
                                            std::to_string(dim_m2));
    }
    const ComplexMatrix fc = f.materialize(p, d_out, d_in);
    margin = std::min(margin, std::abs(f.tail().scale(p)));
    if (m1.cols() > 0) margin = std::min(margin, min_singular_value(fc * m1));
  }
  if (!(margin > iso_floor)) {
    throw error(errc::not_invertible, "F is not injective on M1 (margin " +
                                          std::to_string(margin) + ")");
  }

  const AOperator id = AOperator::identity(f.space());
  const AOperator rest_dom = id - pdom;
  const AOperator rest_cod = id - pcod;
  DecompositionResiduals residuals;
  residuals.lower_left = op_norm(compose(rest_cod, compose(f, pdom))).hi;
  return NoetherDecomposition{m,
                              f,
                              pdom,
                              pcod,
                              d_in,
                              d_out,
                              std::move(n1_basis),
                              std::move(n2_basis),
                              compose(pcod, compose(f, pdom)),
                              compose(pcod, compose(f, rest_dom)),
                              compose(rest_cod, compose(f, rest_dom)),
                              margin,
                              residuals,
                              std::nullopt};
}

void check_locally_constant(const SpaceRef& space, const std::vector<int>& values) {
  for (const Net& net : space->nets()) {
    const int at_limit = values.at(net.limit);
    for (std::size_t i = net.sequence.size() / 2; i < net.sequence.size(); ++i) {
      const point_index p = net.sequence[i];
      if (values.at(p) != at_limit) {
        throw error(errc::not_locally_constant,
                    "index " + std::to_string(values.at(p)) + " at " + space->name(p) +
                        " but " + std::to_string(at_limit) + " at " + space->name(net.limit));
      }
    }
  }
}

}  // namespace

std::vector<int> NoetherDecomposition::n1_dims() const {
  std::vector<int> out;
  for (const auto& b : n1_basis) out.push_back(static_cast<int>(b.cols()));
  return out;
}

std::vector<int> NoetherDecomposition::n2_dims() const {
  std::vector<int> out;
  for (const auto& b : n2_basis) out.push_back(static_cast<int>(b.cols()));
  return out;
}

ParametrixReport check_parametrix(const AOperator& f, const AOperator& g, double eps) {
  require_same_space(f, g, "check_parametrix");
  const bool f_tail = !f.tail().is_zero();
  const bool g_tail = !g.tail().is_zero();
  if (f_tail != g_tail || (f_tail && f.offset() + g.offset() != 0)) {
    throw error(errc::not_a_parametrix, "tail offsets do not cancel (" +
                                            std::to_string(f.offset()) + ", " +
                                            std::to_string(g.offset()) + ")");
  }
  const AOperator id = AOperator::identity(f.space());
  ParametrixReport rep{id - compose(f, g), id - compose(g, f), {}, {}, false};
  rep.fg_verdict = is_compact(rep.defect_fg, eps);
  rep.gf_verdict = is_compact(rep.defect_gf, eps);
  rep.accepted = rep.fg_verdict.kind == compactness_kind::compact &&
                 rep.gf_verdict.kind == compactness_kind::compact;
  return rep;
}

NoetherDecomposition decompose_id_plus_K(const AOperator& k, double margin,
                                         std::optional<int> m_max, double eps) {
  if (!(margin > 0.0 && margin < 1.0)) {
    throw error(errc::out_of_range, "margin must lie in (0, 1)");
  }
  const CompactnessVerdict v = is_compact(k, eps, m_max);
  if (v.kind != compactness_kind::compact) {
    throw error(errc::no_cut_found,
                "K is not accepted compact (" + std::string(to_string(v.kind)) + ")");
  }
  int m = -1;
  for (std::size_t i = 0; i < v.profile.m_values.size(); ++i) {
    if (v.profile.qkq_norms[i].hi <= margin) {
      m = v.profile.m_values[i];
      break;
    }
  }
  if (m < 0) throw error(errc::no_cut_found, "no m with ||q_m K q_m|| <= margin");

  const SpaceRef& sp = k.space();
  const AOperator id = AOperator::identity(sp);
  const AOperator f = id + k;
  const BlockDecomposition bd = block_decompose(f, m);
  const AOperator qm = AOperator::tail_projector(sp, m);
  const AOperator f1_full = bd.f1 + AOperator::head_projector(sp, m);
  const AOperator f1_inv = compose(qm, compose(invert(f1_full), qm));

  const AOperator x = compose(bd.f3, f1_inv);
  const AOperator y = compose(f1_inv, bd.f2);
  LduFactors ldu{id + x, bd.f1 + (bd.f4 - compose(x, bd.f2)), id + y, f1_inv,
                 v.profile.qkq_norms[static_cast<std::size_t>(m)].hi, op_norm(f1_inv).hi};

  NoetherDecomposition dec = finalize(f, qm, compose(ldu.lower, qm), m);
  const double scale = std::max(op_norm(f).hi, std::numeric_limits<double>::min());
  dec.residuals.ldu =
      op_norm(compose(ldu.lower, compose(ldu.diagonal, ldu.upper)) - f).hi / scale;
  dec.ldu = std::move(ldu);
  return dec;
}

ExternalDecomposition make_external(const AOperator& f, Family e2, Family e3, int domain_corner,
                                    int m_split) {
  const int k = f.offset();
  if (domain_corner < f.support() + std::abs(k)) {
    throw error(errc::shape_mismatch, "external: corner below support + |offset|");
  }
  if (e2.size() != f.points() || e3.size() != f.points()) {
    throw error(errc::shape_mismatch, "external: one E2 and one E3 block per point");
  }
  const int d_in = domain_corner;
  const int d_out = domain_corner + k;
  ExternalDecomposition ext{m_split, f, d_in, d_out, {}, {}, {}, {}, {}, {}, true, 0.0};
  for (point_index p = 0; p < f.points(); ++p) {
    if (e2[p].rows() != d_out || e3[p].cols() != d_in) {
      throw error(errc::shape_mismatch, "external: E2/E3 do not match the corner at " +
                                            f.space()->name(p));
    }
    const Eigen::Index x1 = e2[p].cols();
    const Eigen::Index x2 = e3[p].rows();
    ext.x1_dims.push_back(static_cast<int>(x1));
    ext.x2_dims.push_back(static_cast<int>(x2));
    ComplexMatrix f0 = ComplexMatrix::Zero(d_out + x2, d_in + x1);
    f0.topLeftCorner(d_out, d_in) = f.materialize(p, d_out, d_in);
    f0.topRightCorner(d_out, x1) = e2[p];
    f0.bottomLeftCorner(x2, d_in) = e3[p];
    ext.f0.push_back(std::move(f0));
  }
  for (const auto& f0 : ext.f0) ext.invertible = ext.invertible && is_invertible(f0);
  if (ext.invertible) {
    for (const auto& f0 : ext.f0) {
      ComplexMatrix g0 = inverse(f0);
      ext.identity_residual =
          std::max({ext.identity_residual, spectral_norm(f0 * g0 - eye(f0.rows())),
                    spectral_norm(g0 * f0 - eye(f0.cols()))});
      ext.g0.push_back(std::move(g0));
    }
  }
  ext.e2 = std::move(e2);
  ext.e3 = std::move(e3);
  return ext;
}

ExternalDecomposition inner_to_external(const NoetherDecomposition& dec) {
  const int d_in = dec.domain_corner;
  Family e2 = dec.n2_basis;
  Family e3;
  for (point_index p = 0; p < dec.op.points(); ++p) {
    const ComplexMatrix pd = dec.domain_projector.materialize(p, d_in, d_in);
    e3.push_back(dec.n1_basis[p].adjoint() * (eye(d_in) - pd));
  }
  ExternalDecomposition ext = make_external(dec.op, std::move(e2), std::move(e3), d_in,
                                            dec.m_split);
  if (!ext.invertible) throw error(errc::degenerate_external, "F0 is singular");
  return ext;
}

NoetherDecomposition external_to_inner(const ExternalDecomposition& ext) {
  if (!ext.invertible) throw error(errc::degenerate_external, "F0 is not invertible");
  const int d_in = ext.domain_corner;
  const int d_out = ext.codomain_corner;
  Family pd, pc;
  double identities = 0.0;
  for (point_index p = 0; p < ext.op.points(); ++p) {
    const Eigen::Index x1 = ext.x1_dims[p];
    const Eigen::Index x2 = ext.x2_dims[p];
    const std::string where = " at " + ext.op.space()->name(p);
    if (numerical_rank(ext.e3[p], rank_tol) != x2) {
      throw error(errc::degenerate_external, "E3 is not onto" + where);
    }
    const ComplexMatrix& g0 = ext.g0[p];
    const ComplexMatrix g3 = g0.bottomLeftCorner(x1, d_out);
    if (numerical_rank(g3, rank_tol) != x1) {
      throw error(errc::degenerate_external, "G3 is not onto" + where);
    }
    const ComplexMatrix qe = column_space_basis(ext.e3[p].adjoint(), rank_tol);
    const ComplexMatrix qg = column_space_basis(g3.adjoint(), rank_tol);
    pd.push_back(eye(d_in) - qe * qe.adjoint());
    pc.push_back(eye(d_out) - qg * qg.adjoint());

    // The eight block identities of F0 G0 = id and G0 F0 = id.
    const ComplexMatrix& f0 = ext.f0[p];
    const ComplexMatrix fg = f0 * g0 - eye(f0.rows());
    const ComplexMatrix gf = g0 * f0 - eye(f0.cols());
    identities = std::max({identities, spectral_norm(fg.topLeftCorner(d_out, d_out)),
                           spectral_norm(fg.topRightCorner(d_out, x2)),
                           spectral_norm(fg.bottomLeftCorner(x2, d_out)),
                           spectral_norm(fg.bottomRightCorner(x2, x2)),
                           spectral_norm(gf.topLeftCorner(d_in, d_in)),
                           spectral_norm(gf.topRightCorner(d_in, x1)),
                           spectral_norm(gf.bottomLeftCorner(x1, d_in)),
                           spectral_norm(gf.bottomRightCorner(x1, x1))});
  }
  const SpaceRef& sp = ext.op.space();
  NoetherDecomposition dec = finalize(ext.op, projector_from(sp, std::move(pd)),
                                      projector_from(sp, std::move(pc)), ext.m_split);
  dec.residuals.identities = identities;
  return dec;
}

NoetherDecomposition decompose_fredholm(const AOperator& f, const AOperator& g, double eps,
                                        double margin) {
  const ParametrixReport rep = check_parametrix(f, g, eps);
  if (!rep.accepted) {
    throw error(errc::not_a_parametrix,
                "id - FG: " + std::string(to_string(rep.fg_verdict.kind)) +
                    ", id - GF: " + std::string(to_string(rep.gf_verdict.kind)));
  }
  const SpaceRef& sp = f.space();
  const AOperator gf = compose(g, f);
  const NoetherDecomposition inner =
      decompose_id_plus_K(gf - AOperator::identity(sp), margin, std::nullopt, eps);
  const int m = inner.m_split;
  const AOperator proj = compose(f, compose(inner.ldu->f1_inverse, g));
  const double pn = op_norm(proj).hi;
  const double defect = op_norm(compose(proj, proj) - proj).hi;
  if (defect > 1e-8 * std::max(1.0, pn * pn)) {
    throw error(errc::projector_defect, "||P^2 - P|| = " + std::to_string(defect));
  }
  NoetherDecomposition dec = finalize(f, AOperator::tail_projector(sp, m), proj, m);
  dec.residuals.projector = defect;
  return dec;
}

std::vector<int> IndexElement::classical() const {
  std::vector<int> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(), [](int v) { return -v; });
  return out;
}

IndexElement index(const NoetherDecomposition& dec) {
  IndexElement ind{dec.op.space(), {}};
  const auto n1 = dec.n1_dims();
  const auto n2 = dec.n2_dims();
  for (std::size_t p = 0; p < n1.size(); ++p) ind.values.push_back(n2[p] - n1[p]);
  check_locally_constant(ind.space, ind.values);
  return ind;
}

IndexElement index(const ExternalDecomposition& ext) {
  IndexElement ind{ext.op.space(), {}};
  for (std::size_t p = 0; p < ext.x1_dims.size(); ++p) {
    ind.values.push_back(ext.x1_dims[p] - ext.x2_dims[p]);
  }
  check_locally_constant(ind.space, ind.values);
  return ind;
}

}  // namespace noether
