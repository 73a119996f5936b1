// JSON wire formats.
//
// Scalars are exact: a decimal integer or a "p/q" string with q > 0 on
// input, and always a string on output. Sequences never serialize the fixed
// endpoints.
//
//   sequence   {"n": N, "vectors": [["a","b"], ...]}
//   matrix     {"order": N, "entries": [[...], ...]}
//   tridiag    {"diag": [...], "super": [...]}
//   label      {"n": N, "interior_signs": [+-1, ...], "signature": s}

#pragma once

#include <json.hpp>

#include "pvseq/tridiag.hpp"

namespace pvseq {

using json = nlohmann::json;

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

VectorSequence sequence_from_json(const json& j);
json sequence_to_json(const VectorSequence& v);

SymMatrix matrix_from_json(const json& j);
json matrix_to_json(const SymMatrix& a);

TriDiagSym tridiag_from_json(const json& j);
json tridiag_to_json(const TriDiagSym& b);

ComponentLabel label_from_json(const json& j, std::size_t& n_out);
json label_to_json(std::size_t n, const ComponentLabel& label);

}  // namespace pvseq
