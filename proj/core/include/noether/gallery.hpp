#pragma once
//
// Named operator families with their documented verdicts, and the
// comparison against pairs admitted by the uniform-defect (Fred') class.
//
// Families live on make_sequence_space(M) and are materialised on M x M
// corners. Uniform, strong and IM diagnostics run on D(K); the F diagnosis
// runs on the Fredholm family D(id + K). Compactness scans stop at
// m_max = M - 1 so that every witness sits below the truncation horizon.
//

#include <cstdint>
#include <string>
#include <vector>

#include "noether/compactness.hpp"
#include "noether/fredholm.hpp"
#include "noether/topologies.hpp"

namespace noether {

struct ExpectedVerdicts {
  compactness_kind compactness = compactness_kind::inconclusive;
  int compact_witness = -1;
  compactness_kind adjointable = compactness_kind::inconclusive;
  continuity uniform = continuity::inconclusive;
  continuity strong = continuity::inconclusive;
  continuity f = continuity::inconclusive;
  continuity im = continuity::inconclusive;
};

struct NamedFamily {
  std::string name;
  int truncation = 0;
  SpaceRef space;
  AOperator op;
  ExpectedVerdicts expected;

  int m_max() const { return truncation - 1; }
  Family family() const;           // D(K)
  Family fredholm_family() const;  // D(id + K)
};

// Block at 1/i is -e_i e_i^T; zero at 0; tail zero. Requires M >= 1.
NamedFamily make_eq50(int m);
// Block at 1/i is e_1 e_i^T; zero at 0; tail zero. Requires M >= 1.
NamedFamily make_eqAA(int m);
// "eq50" or "eqAA"; throws errc::input_parse otherwise.
NamedFamily make_named_family(const std::string& name, int m);

// Operators by name on make_sequence_space(M): id, zero, shiftK, shiftmK
// (e.g. shift1, shiftm2), eq50, eqAA, and id+NAME / id-NAME for the two
// families. Throws errc::input_parse for an unknown name.
AOperator named_operator(const std::string& name, int m);

struct GalleryCheck {
  std::string what;
  std::string expected;
  std::string observed;
  bool ok = false;
};

struct GalleryReport {
  std::string family;
  int truncation = 0;
  CompactnessVerdict compactness;
  CompactnessVerdict adjointable;
  std::vector<ContinuityDiagnostic> continuity;  // uniform, strong, F, IM
  std::vector<GalleryCheck> checks;
  bool ok = false;
};

GalleryReport verify_expectations(const NamedFamily& fam, double eps = default_compactness_eps,
                                  std::uint64_t seed = default_battery_seed);

// The pair A = id + K, B = id - K with K = eqAA.
struct FredPrimeReport {
  int truncation = 0;
  CompactnessVerdict ab_compact;  // AB - I
  CompactnessVerdict ba_compact;  // BA - I
  ContinuityDiagnostic ab_im, ba_im;
  ContinuityDiagnostic ab_uniform, ba_uniform;
  ContinuityDiagnostic a_f, b_f;
  bool fredholm = false;
  std::vector<int> index;
  std::string fredholm_error;

  bool im_acceptable = false;     // defects compact and IM-continuous
  bool fails_uniform = false;     // some defect is not uniformly continuous
  bool f_continuous = false;      // A and B are F-continuous
  bool witness = false;           // all of the above, index 0
};

// Requires M >= 2.
FredPrimeReport fredprime_compare(int m, double eps = default_compactness_eps,
                                  std::uint64_t seed = default_battery_seed);

}  // namespace noether
