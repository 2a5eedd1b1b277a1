#pragma once

#include <string>

#include <json.hpp>

#include "curv4/operator.hpp"
#include "curv4/tensor.hpp"

namespace curv4 {

using Json = nlohmann::json;

// {"kind":"curvature_tensor","components":[{"ijkl":[i,j,k,l],"value":v},...]}
// Canonical 1-based indices only (i<j, k<l, (i,j) <= (k,l)); unlisted
// canonical components are zero; zero components are not written.
Json tensor_to_json(const CurvatureTensor& t);

// Throws std::invalid_argument on wrong kind, malformed or non-canonical
// entries, duplicate quadruples, or a Bianchi violation.
CurvatureTensor tensor_from_json(const Json& j, double bianchi_tol = kBianchiTol);

// {"kind":"curvature_operator","A":[[...]],"B":[[...]],"C":[[...]]}
Json operator_to_json(const CurvatureOperator& op);

// Throws std::invalid_argument on wrong kind or malformed blocks; the
// returned operator has R recomputed from the traces.  Symmetry and trace
// admissibility are checked (same contract as from_operator's input).
CurvatureOperator operator_from_json(const Json& j, double sym_tol = kSymTol,
                                     double trace_tol = kTraceTol);

// Reads either kind from a parsed document and returns an operator
// (tensors are decomposed).  Throws std::invalid_argument otherwise.
CurvatureOperator operator_from_any_json(const Json& j);

Json read_json_file(const std::string& path);      // throws on I/O or parse error
void write_text_file(const std::string& path, const std::string& text);

} // namespace curv4
