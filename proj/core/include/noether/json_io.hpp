#pragma once
//
// JSON encodings for spaces, operators and every report type.
//
// Complex numbers are [re, im] pairs (a bare number is accepted on input).
// Matrices are arrays of rows. An operator reads
//
//   {"space": {"points": [...], "nets": [{"sequence": [...], "limit": "0"}]}
//             or {"sequence_space": M},
//    "tail":  {"scale": z | {point: z}, "offset": k},
//    "blocks": {point: matrix}}
//
// where a block is the finite part T(x) - t(x) Shift^k on the leading
// corner, missing blocks are zero and every block has the same size.
//

#include <nlohmann/json.hpp>

#include "noether/compactness.hpp"
#include "noether/fredholm.hpp"
#include "noether/gallery.hpp"
#include "noether/topologies.hpp"

namespace noether {

using json = nlohmann::ordered_json;

json complex_to_json(complex_t z);
json matrix_to_json(const ComplexMatrix& m);
json space_to_json(const SequentialSpace& space);
json operator_to_json(const AOperator& op);

// All parsers throw errc::input_parse on malformed input.
complex_t complex_from_json(const json& j);
ComplexMatrix matrix_from_json(const json& j);
SpaceRef space_from_json(const json& j);
AOperator operator_from_json(const json& j);

json to_json(const NormEnclosure& n);
json to_json(const CompactnessVerdict& v);
json to_json(const ScalingReport& r);
json to_json(const TopologyVerdict& v);
json to_json(const ContinuityDiagnostic& d, const SequentialSpace& space);
json to_json(const IndexElement& ind);
// {"m_split", "dims": {point: {"N1", "N2"}}, "index", "residuals", ...}
json to_json(const NoetherDecomposition& dec);
json to_json(const ExternalDecomposition& ext);
json to_json(const GalleryReport& r, const SequentialSpace& space);
json to_json(const FredPrimeReport& r, const SequentialSpace& space);

}  // namespace noether
