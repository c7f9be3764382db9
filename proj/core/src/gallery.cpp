#include "noether/gallery.hpp"

#include <algorithm>
#include <cstdio>
#include <regex>

#include "noether/error.hpp"

namespace noether {

namespace {

void require_truncation(int m, int least, const char* what) {
  if (m < least) {
    throw error(errc::out_of_range,
                std::string(what) + ": M must be >= " + std::to_string(least));
  }
}

// One M x M corner per point, zero at the limit, `entry(i)` filled at 1/i.
template <class Fill>
AOperator pointwise_pattern(const SpaceRef& space, int m, Fill fill) {
  Family corners(space->size(), ComplexMatrix::Zero(m, m));
  for (int i = 1; i <= m; ++i) fill(corners[static_cast<std::size_t>(i)], i - 1);
  return AOperator::finite(space, std::move(corners));
}

std::string describe(const ContinuityDiagnostic& d) {
  if (d.verdict != continuity::discontinuous) return std::string(to_string(d.verdict));
  char buf[64];
  std::snprintf(buf, sizeof buf, "Discontinuous(%.6g)", d.bound);
  return buf;
}

GalleryCheck check_kind(std::string what, compactness_kind want, const CompactnessVerdict& got) {
  return {std::move(what), std::string(to_string(want)), describe(got), want == got.kind};
}

GalleryCheck check_kind(std::string what, continuity want, const ContinuityDiagnostic& got) {
  return {std::move(what), std::string(to_string(want)), describe(got), want == got.verdict};
}

}  // namespace

Family NamedFamily::family() const { return to_family(op, truncation); }

Family NamedFamily::fredholm_family() const {
  return to_family(AOperator::identity(space) + op, truncation);
}

NamedFamily make_eq50(int m) {
  require_truncation(m, 1, "make_eq50");
  const SpaceRef sp = make_sequence_space(m);
  AOperator op = pointwise_pattern(sp, m, [](ComplexMatrix& c, int i) { c(i, i) = -1.0; });
  ExpectedVerdicts ev;
  ev.compactness = compactness_kind::not_compact_at_scale;
  ev.adjointable = compactness_kind::not_compact_at_scale;
  ev.uniform = continuity::discontinuous;
  ev.strong = continuity::continuous;
  ev.f = continuity::discontinuous;
  ev.im = continuity::discontinuous;
  return NamedFamily{"eq50", m, sp, std::move(op), ev};
}

NamedFamily make_eqAA(int m) {
  require_truncation(m, 1, "make_eqAA");
  const SpaceRef sp = make_sequence_space(m);
  AOperator op = pointwise_pattern(sp, m, [](ComplexMatrix& c, int i) { c(0, i) = 1.0; });
  ExpectedVerdicts ev;
  ev.compactness = compactness_kind::compact;
  ev.compact_witness = 1;
  ev.adjointable = compactness_kind::not_compact_at_scale;
  ev.uniform = continuity::discontinuous;
  ev.strong = continuity::continuous;
  ev.f = continuity::continuous;
  ev.im = continuity::continuous;
  return NamedFamily{"eqAA", m, sp, std::move(op), ev};
}

NamedFamily make_named_family(const std::string& name, int m) {
  if (name == "eq50") return make_eq50(m);
  if (name == "eqAA") return make_eqAA(m);
  throw error(errc::input_parse, "unknown family '" + name + "' (expected eq50 or eqAA)");
}

AOperator named_operator(const std::string& name, int m) {
  require_truncation(m, 1, "named_operator");
  static const std::regex shift_re("shift(m?)([0-9]+)");
  static const std::regex combo_re("id([+-])(eq50|eqAA)");
  const SpaceRef sp = make_sequence_space(m);
  std::smatch match;
  if (name == "id") return AOperator::identity(sp);
  if (name == "zero") return AOperator::zero(sp);
  if (std::regex_match(name, match, shift_re)) {
    const int k = std::stoi(match[2].str());
    return AOperator::shift(sp, match[1].length() > 0 ? -k : k);
  }
  auto family_on = [&](const std::string& fam) {
    // Rebuild on the shared space so the result composes with the others.
    const NamedFamily nf = make_named_family(fam, m);
    return AOperator(sp, TailDescriptor::zero(sp), nf.op.corners());
  };
  if (name == "eq50" || name == "eqAA") return family_on(name);
  if (std::regex_match(name, match, combo_re)) {
    const AOperator k = family_on(match[2].str());
    return match[1].str() == "+" ? AOperator::identity(sp) + k : AOperator::identity(sp) - k;
  }
  throw error(errc::input_parse, "unknown operator '" + name + "'");
}

GalleryReport verify_expectations(const NamedFamily& fam, double eps, std::uint64_t seed) {
  GalleryReport rep;
  rep.family = fam.name;
  rep.truncation = fam.truncation;
  rep.compactness = is_compact(fam.op, eps, fam.m_max());
  rep.adjointable = is_adjointable_compact(fam.op, eps, fam.m_max());
  const Family k = fam.family();
  const Family fk = fam.fredholm_family();
  rep.continuity.push_back(family_continuity(k, fam.space, topology::uniform, eps, seed));
  rep.continuity.push_back(family_continuity(k, fam.space, topology::strong, eps, seed));
  rep.continuity.push_back(family_continuity(fk, fam.space, topology::f, eps, seed));
  rep.continuity.push_back(family_continuity(k, fam.space, topology::im, eps, seed));

  const ExpectedVerdicts& ev = fam.expected;
  rep.checks.push_back(check_kind("compactness", ev.compactness, rep.compactness));
  if (ev.compact_witness >= 0) {
    rep.checks.push_back({"compact witness", std::to_string(ev.compact_witness),
                          std::to_string(rep.compactness.witness),
                          ev.compact_witness == rep.compactness.witness});
  }
  rep.checks.push_back(check_kind("adjointable compactness", ev.adjointable, rep.adjointable));
  rep.checks.push_back(check_kind("uniform continuity", ev.uniform, rep.continuity[0]));
  rep.checks.push_back(check_kind("strong continuity", ev.strong, rep.continuity[1]));
  rep.checks.push_back(check_kind("F continuity of id + K", ev.f, rep.continuity[2]));
  rep.checks.push_back(check_kind("IM continuity", ev.im, rep.continuity[3]));
  rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                       [](const GalleryCheck& c) { return c.ok; });
  return rep;
}

FredPrimeReport fredprime_compare(int m, double eps, std::uint64_t seed) {
  require_truncation(m, 2, "fredprime_compare");
  const NamedFamily fam = make_eqAA(m);
  const SpaceRef& sp = fam.space;
  const AOperator id = AOperator::identity(sp);
  const AOperator a = id + fam.op;
  const AOperator b = id - fam.op;
  const AOperator ab = compose(a, b) - id;
  const AOperator ba = compose(b, a) - id;

  FredPrimeReport rep;
  rep.truncation = m;
  rep.ab_compact = is_compact(ab, eps, fam.m_max());
  rep.ba_compact = is_compact(ba, eps, fam.m_max());
  const Family ab_fam = to_family(ab, m);
  const Family ba_fam = to_family(ba, m);
  rep.ab_im = family_continuity(ab_fam, sp, topology::im, eps, seed);
  rep.ba_im = family_continuity(ba_fam, sp, topology::im, eps, seed);
  rep.ab_uniform = family_continuity(ab_fam, sp, topology::uniform, eps, seed);
  rep.ba_uniform = family_continuity(ba_fam, sp, topology::uniform, eps, seed);
  rep.a_f = family_continuity(to_family(a, m), sp, topology::f, eps, seed);
  rep.b_f = family_continuity(to_family(b, m), sp, topology::f, eps, seed);

  try {
    rep.index = index(decompose_fredholm(a, b, eps)).values;
    rep.fredholm = true;
  } catch (const error& e) {
    rep.fredholm_error = e.what();
  }

  const auto compact = [](const CompactnessVerdict& v) {
    return v.kind == compactness_kind::compact;
  };
  rep.im_acceptable = compact(rep.ab_compact) && compact(rep.ba_compact) &&
                      rep.ab_im.verdict == continuity::continuous &&
                      rep.ba_im.verdict == continuity::continuous;
  rep.fails_uniform = rep.ab_uniform.verdict == continuity::discontinuous ||
                      rep.ba_uniform.verdict == continuity::discontinuous;
  rep.f_continuous = rep.a_f.verdict == continuity::continuous &&
                     rep.b_f.verdict == continuity::continuous;
  const bool index_zero = rep.fredholm && std::all_of(rep.index.begin(), rep.index.end(),
                                                      [](int v) { return v == 0; });
  rep.witness = rep.im_acceptable && rep.fails_uniform && rep.f_continuous && index_zero;
  return rep;
}

}  // namespace noether
