#include "noether/json_io.hpp"

#include <map>

#include "noether/error.hpp"

namespace noether {

namespace {

[[noreturn]] void bad(const std::string& what) { throw error(errc::input_parse, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

json per_point(const SequentialSpace& space, const std::vector<int>& values) {
  json out = json::object();
  for (std::size_t p = 0; p < values.size(); ++p) out[space.name(p)] = values[p];
  return out;
}

}  // namespace

json complex_to_json(complex_t z) { return json::array({z.real(), z.imag()}); }

complex_t complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  bad("complex number must be a number or [re, im]");
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) bad("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json space_to_json(const SequentialSpace& space) {
  json nets = json::array();
  for (const Net& n : space.nets()) {
    json seq = json::array();
    for (point_index p : n.sequence) seq.push_back(space.name(p));
    nets.push_back({{"sequence", seq}, {"limit", space.name(n.limit)}});
  }
  return {{"points", space.points()}, {"nets", nets}};
}

SpaceRef space_from_json(const json& j) {
  if (j.is_object() && j.contains("sequence_space")) {
    return make_sequence_space(as_int(j.at("sequence_space"), "sequence_space"));
  }
  const json& pts = member(j, "points");
  if (!pts.is_array()) bad("points must be an array of names");
  std::vector<std::string> names;
  for (const auto& p : pts) {
    if (!p.is_string()) bad("point names must be strings");
    names.push_back(p.get<std::string>());
  }
  std::map<std::string, point_index> where;
  for (std::size_t i = 0; i < names.size(); ++i) where[names[i]] = i;
  auto lookup = [&](const json& name) {
    if (!name.is_string() || !where.count(name.get<std::string>())) bad("unknown point in net");
    return where.at(name.get<std::string>());
  };
  std::vector<Net> nets;
  if (j.contains("nets")) {
    for (const auto& n : j.at("nets")) {
      Net net;
      for (const auto& p : member(n, "sequence")) net.sequence.push_back(lookup(p));
      net.limit = lookup(member(n, "limit"));
      nets.push_back(std::move(net));
    }
  }
  try {
    return std::make_shared<const SequentialSpace>(std::move(names), std::move(nets));
  } catch (const error& e) {
    bad(e.what());
  }
}

json operator_to_json(const AOperator& op) {
  const SequentialSpace& sp = *op.space();
  json scale = json::object();
  json blocks = json::object();
  for (point_index p = 0; p < op.points(); ++p) {
    scale[sp.name(p)] = complex_to_json(op.tail().scale(p));
    blocks[sp.name(p)] = matrix_to_json(op.block(p));
  }
  return {{"space", space_to_json(sp)},
          {"tail", {{"scale", scale}, {"offset", op.offset()}}},
          {"blocks", blocks}};
}

AOperator operator_from_json(const json& j) {
  const SpaceRef sp = space_from_json(member(j, "space"));
  std::vector<complex_t> scale(sp->size(), 0.0);
  int offset = 0;
  if (j.contains("tail")) {
    const json& t = j.at("tail");
    if (t.contains("offset")) offset = as_int(t.at("offset"), "tail offset");
    if (t.contains("scale")) {
      const json& s = t.at("scale");
      if (s.is_object()) {
        for (const auto& [name, z] : s.items()) {
          try {
            scale[sp->index_of(name)] = complex_from_json(z);
          } catch (const error&) {
            bad("tail scale at unknown point '" + name + "'");
          }
        }
      } else {
        std::fill(scale.begin(), scale.end(), complex_from_json(s));
      }
    }
  }
  Family corners(sp->size());
  Eigen::Index size = -1;
  if (j.contains("blocks")) {
    const json& b = j.at("blocks");
    if (!b.is_object()) bad("blocks must map point names to matrices");
    for (const auto& [name, mj] : b.items()) {
      point_index p = 0;
      try {
        p = sp->index_of(name);
      } catch (const error&) {
        bad("block at unknown point '" + name + "'");
      }
      corners[p] = matrix_from_json(mj);
      if (corners[p].rows() != corners[p].cols()) bad("block at '" + name + "' is not square");
      if (size >= 0 && corners[p].rows() != size) bad("blocks differ in size");
      size = corners[p].rows();
    }
  }
  if (size < 0) size = 0;
  for (auto& c : corners) {
    if (c.size() == 0) c = ComplexMatrix::Zero(size, size);
  }
  try {
    const AOperator tail(sp, TailDescriptor{AlgebraElement(sp, scale), offset},
                         Family(sp->size(), ComplexMatrix(0, 0)));
    return tail + AOperator::finite(sp, std::move(corners));
  } catch (const error& e) {
    bad(e.what());
  }
}

json to_json(const NormEnclosure& n) { return {{"lo", n.lo}, {"hi", n.hi}}; }

json to_json(const CompactnessVerdict& v) {
  json out = {{"verdict", to_string(v.kind)}, {"summary", describe(v)}};
  if (v.kind == compactness_kind::compact) out["witness"] = v.witness;
  if (v.kind == compactness_kind::not_compact_at_scale) out["lower_bound"] = v.lower_bound;
  json prof = json::array();
  for (std::size_t i = 0; i < v.profile.m_values.size(); ++i) {
    prof.push_back({{"m", v.profile.m_values[i]},
                    {"qK", to_json(v.profile.qk_norms[i])},
                    {"qKq", to_json(v.profile.qkq_norms[i])},
                    {"Kq", to_json(v.profile.kq_norms[i])}});
  }
  out["profile"] = prof;
  return out;
}

json to_json(const ScalingReport& r) {
  json out = {{"levels", r.levels}, {"m_grid", r.m_grid}, {"verdict", to_string(r.verdict)}};
  if (r.verdict == scaling_kind::uniformly_compact) out["witness"] = r.witness;
  if (r.verdict == scaling_kind::escaping) out["plateau"] = r.plateau;
  json norms = json::array();
  for (const auto& row : r.norms) {
    json jr = json::array();
    for (const auto& n : row) jr.push_back(n.hi);
    norms.push_back(jr);
  }
  out["norms"] = norms;
  return out;
}

json to_json(const TopologyVerdict& v) {
  json out = {{"verdict", to_string(v.kind)}, {"query", v.query}};
  switch (v.kind) {
    case membership::member:
      out["residual"] = v.residual;
      out["certificate"] = matrix_to_json(v.certificate);
      break;
    case membership::not_member:
      out["bound"] = v.bound;
      out["witness"] = matrix_to_json(v.witness);
      break;
    case membership::inconclusive: out["best_residual"] = v.residual; break;
  }
  return out;
}

json to_json(const ContinuityDiagnostic& d, const SequentialSpace& space) {
  json nets = json::array();
  for (const auto& n : d.nets) {
    json trace = json::array();
    const Net& net = space.nets().at(n.net);
    for (std::size_t i = 0; i < n.trace.size(); ++i) {
      trace.push_back({{"point", space.name(net.sequence[i])},
                       {"membership", to_string(n.kinds[i])},
                       {"value", n.trace[i]}});
    }
    json jn = {{"net", n.net}, {"limit", space.name(net.limit)}, {"verdict", to_string(n.verdict)}};
    if (n.verdict == continuity::discontinuous) jn["bound"] = n.bound;
    jn["trace"] = trace;
    nets.push_back(jn);
  }
  json out = {{"topology", to_string(d.which)}, {"verdict", to_string(d.verdict)}};
  if (d.verdict == continuity::discontinuous) out["bound"] = d.bound;
  out["nets"] = nets;
  return out;
}

json to_json(const IndexElement& ind) {
  return {{"convention", "N2 - N1"},
          {"index", per_point(*ind.space, ind.values)},
          {"classical", per_point(*ind.space, ind.classical())}};
}

json to_json(const NoetherDecomposition& dec) {
  const SequentialSpace& sp = *dec.op.space();
  const auto n1 = dec.n1_dims();
  const auto n2 = dec.n2_dims();
  json dims = json::object();
  json ind = json::object();
  for (std::size_t p = 0; p < n1.size(); ++p) {
    dims[sp.name(p)] = {{"N1", n1[p]}, {"N2", n2[p]}};
    ind[sp.name(p)] = n2[p] - n1[p];
  }
  json out = {{"m_split", dec.m_split},
              {"dims", dims},
              {"index", ind},
              {"residuals",
               {{"ldu", dec.residuals.ldu},
                {"projector", dec.residuals.projector},
                {"lower_left", dec.residuals.lower_left}}},
              {"iso_margin", dec.iso_margin},
              {"domain_corner", dec.domain_corner},
              {"codomain_corner", dec.codomain_corner}};
  if (dec.ldu) {
    out["neumann"] = {{"qKq", dec.ldu->qkq_norm}, {"f1_inverse", dec.ldu->f1_inverse_norm}};
  }
  return out;
}

json to_json(const ExternalDecomposition& ext) {
  const SequentialSpace& sp = *ext.op.space();
  json dims = json::object();
  for (std::size_t p = 0; p < ext.x1_dims.size(); ++p) {
    dims[sp.name(p)] = {{"X1", ext.x1_dims[p]}, {"X2", ext.x2_dims[p]}};
  }
  return {{"m_split", ext.m_split},
          {"dims", dims},
          {"invertible", ext.invertible},
          {"identity_residual", ext.identity_residual}};
}

json to_json(const GalleryReport& r, const SequentialSpace& space) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"check", c.what}, {"expected", c.expected}, {"observed", c.observed}, {"ok", c.ok}});
  }
  json cont = json::array();
  for (const auto& d : r.continuity) cont.push_back(to_json(d, space));
  return {{"family", r.family},
          {"M", r.truncation},
          {"ok", r.ok},
          {"checks", checks},
          {"compactness", to_json(r.compactness)},
          {"adjointable", to_json(r.adjointable)},
          {"continuity", cont}};
}

json to_json(const FredPrimeReport& r, const SequentialSpace& space) {
  json out = {{"M", r.truncation},
              {"witness", r.witness},
              {"im_acceptable", r.im_acceptable},
              {"fails_uniform", r.fails_uniform},
              {"f_continuous", r.f_continuous},
              {"fredholm", r.fredholm}};
  if (r.fredholm) out["index"] = per_point(space, r.index);
  else out["fredholm_error"] = r.fredholm_error;
  out["defects"] = {{"AB-I", {{"compactness", describe(r.ab_compact)},
                              {"IM", to_json(r.ab_im, space)},
                              {"uniform", to_json(r.ab_uniform, space)}}},
                    {"BA-I", {{"compactness", describe(r.ba_compact)},
                              {"IM", to_json(r.ba_im, space)},
                              {"uniform", to_json(r.ba_uniform, space)}}}};
  out["F"] = {{"A", to_json(r.a_f, space)}, {"B", to_json(r.b_f, space)}};
  return out;
}

}  // namespace noether
