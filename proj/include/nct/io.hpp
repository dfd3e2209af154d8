#pragma once

#include <string>

#include <json.hpp>

#include "nct/covering.hpp"
#include "nct/element.hpp"
#include "nct/moyal.hpp"
#include "nct/operators.hpp"

namespace nct::io {

using json = nlohmann::json;

// Raised for malformed or semantically invalid input documents; the CLI
// maps it to its parse-error exit code.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"n": int, "theta": [[float]]}
json theta_to_json(const SkewMatrix& theta);
SkewMatrix theta_from_json(const json& j);

// {"n": int, "theta": [[float]], "coeffs": [{"k": [int], "re": f, "im": f}]}
// Coefficients are written in lexicographic index order; input order is free
// but duplicate keys are rejected.
json element_to_json(const TorusElement& a);
TorusElement element_from_json(const json& j);

// {"dim": int, "rows": [[[re, im], ...], ...]}
json operator_to_json(const TruncatedOperator& op);
CMatrix matrix_from_json(const json& j);

// {"eigenvalues": [float], "window": int, "n": int}
json spectrum_to_json(const SpectrumReport& rep);

// {"k": [int], "base_theta": [[float]], "cover_theta": [[float]]}
json covering_to_json(const CoveringSpec& spec);
CoveringSpec covering_from_json(const json& j);

// {"theta": f, "M": int, "N": int, "factors": [[[[re, im], ...], ...], ...]}
json moyal_to_json(const MoyalMatrix& x);
MoyalMatrix moyal_from_json(const json& j);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

}  // namespace nct::io
