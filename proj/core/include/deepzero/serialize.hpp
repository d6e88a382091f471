#pragma once

// JSON and CSV encodings of the library's value types.
//
//   FockVector      {"degree": N, "re": [...], "im": [...]}
//   OperatorMatrix  {"rows": M, "cols": N, "re": [...], "im": [...], "tail_leak": x}
//                   with row-major re/im arrays
//   SeminormForm    {"E": "even", "beta": b, "degree": N, "pad": p,
//                    "tail_leak": x, "matrix": <OperatorMatrix-style block>}
//   L2Function      CSV columns t,re,im,weight

#include <ostream>

#include <nlohmann/json.hpp>

#include "deepzero/bargmann.hpp"
#include "deepzero/deep_zero.hpp"
#include "deepzero/fock.hpp"
#include "deepzero/operators.hpp"

namespace deepzero {

nlohmann::json to_json(const FockVector& v);
FockVector fock_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OperatorMatrix& m);
OperatorMatrix operator_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SeminormForm& form);

void write_csv(std::ostream& os, const L2Function& f);

}  // namespace deepzero
