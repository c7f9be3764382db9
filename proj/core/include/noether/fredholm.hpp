#pragma once
//
// Fredholm A-operators: parametrix checks, inner and external Noether
// decompositions, the LDU factorisation of id + K, the projector pipeline
// that decomposes a general Fredholm operator, and the index.
//
// Index convention: index F = [N2] - [N1] (equivalently [X1] - [X2]). This
// is the negative of the classical dim ker - dim coker; IndexElement keeps
// both available.
//
// Subspaces are stored as per-point data on a finite corner. Beyond the
// corner every decomposition here is "standard": M1 and M2 contain all far
// basis vectors and F maps them as its tail does. The corner sizes
// domain_corner / codomain_corner are chosen so that this holds exactly.
//

#include <optional>
#include <vector>

#include "noether/a_operator.hpp"
#include "noether/compactness.hpp"

namespace noether {

inline constexpr double default_margin = 0.9;

struct ParametrixReport {
  AOperator defect_fg;  // id - FG
  AOperator defect_gf;  // id - GF
  CompactnessVerdict fg_verdict;
  CompactnessVerdict gf_verdict;
  bool accepted = false;
};

ParametrixReport check_parametrix(const AOperator& f, const AOperator& g,
                                  double eps = default_compactness_eps);

// F = L D U with F1 = q_m F q_m invertible on (L_m)^perp.
struct LduFactors {
  AOperator lower;       // id + F3 F1^{-1}
  AOperator diagonal;    // F1 + (F4 - F3 F1^{-1} F2)
  AOperator upper;       // id + F1^{-1} F2
  AOperator f1_inverse;  // F1^{-1} on (L_m)^perp, zero on L_m
  double qkq_norm = 0.0;         // ||q_m K q_m||
  double f1_inverse_norm = 0.0;  // ||F1^{-1}||
};

struct DecompositionResiduals {
  double ldu = 0.0;         // ||LDU - F|| / ||F||
  double projector = 0.0;   // ||P^2 - P||
  double lower_left = 0.0;  // ||(id - Pi2) F Pi1||
  double identities = 0.0;  // max residual of the F0/G0 block identities
};

struct NoetherDecomposition {
  int m_split = 0;
  AOperator op;
  AOperator domain_projector;    // onto M1 along N1
  AOperator codomain_projector;  // onto M2 along N2
  int domain_corner = 0;
  int codomain_corner = 0;
  Family n1_basis;  // per point, domain_corner x dim N1
  Family n2_basis;  // per point, codomain_corner x dim N2
  AOperator iso;           // Pi2 F Pi1 : M1 -> M2
  AOperator off_diagonal;  // Pi2 F (id - Pi1)
  AOperator corner_block;  // (id - Pi2) F (id - Pi1)
  double iso_margin = 0.0;  // inf over unit v in M1 of ||F v||
  DecompositionResiduals residuals;
  std::optional<LduFactors> ldu;

  std::vector<int> n1_dims() const;
  std::vector<int> n2_dims() const;
};

// Inner decomposition of id + K. Picks the smallest m <= m_max with
// ||q_m K q_m|| <= margin. Throws errc::no_cut_found when K is not
// accepted compact or no m qualifies.
NoetherDecomposition decompose_id_plus_K(const AOperator& k, double margin = default_margin,
                                         std::optional<int> m_max = std::nullopt,
                                         double eps = default_compactness_eps);

struct ExternalDecomposition {
  int m_split = 0;
  AOperator op;
  int domain_corner = 0;
  int codomain_corner = 0;
  std::vector<int> x1_dims;
  std::vector<int> x2_dims;
  Family e2;  // codomain_corner x dim X1: X1 -> l2''
  Family e3;  // dim X2 x domain_corner: l2' -> X2
  Family f0;  // (codomain_corner + x2) x (domain_corner + x1)
  Family g0;  // inverse of f0, empty when f0 is singular
  bool invertible = false;
  double identity_residual = 0.0;  // max(||F0 G0 - I||, ||G0 F0 - I||)
};

// Assembles F0 = [[F, E2], [E3, 0]] on the given corner. domain_corner must
// be at least support(F) + |offset(F)|.
ExternalDecomposition make_external(const AOperator& f, Family e2, Family e3, int domain_corner,
                                    int m_split = 0);

// F0 of the form [[F1, F2, 0], [0, F4, id], [0, id, 0]] with X1 = N2, X2 = N1.
ExternalDecomposition inner_to_external(const NoetherDecomposition& dec);

// M1 = ker E3, M2 = ker G3. Throws errc::degenerate_external when E3 or G3
// is not onto, or F0 is not invertible.
NoetherDecomposition external_to_inner(const ExternalDecomposition& ext);

// Decomposition of a Fredholm F from its parametrix G through the
// projector P = F K1^{-1} p2 G. Throws errc::not_a_parametrix or
// errc::projector_defect.
NoetherDecomposition decompose_fredholm(const AOperator& f, const AOperator& g,
                                        double eps = default_compactness_eps,
                                        double margin = default_margin);

struct IndexElement {
  SpaceRef space;
  std::vector<int> values;  // [N2] - [N1] per point

  std::vector<int> classical() const;
  friend bool operator==(const IndexElement& a, const IndexElement& b) {
    return a.values == b.values;
  }
};

// Throws errc::not_locally_constant when the index along the second half of
// some net differs from its value at the limit.
IndexElement index(const NoetherDecomposition& dec);
IndexElement index(const ExternalDecomposition& ext);

}  // namespace noether
