#pragma once

#include <filesystem>
#include <string_view>

#include "json.hpp"

#include "daectl/criteria.hpp"
#include "daectl/experiment.hpp"
#include "daectl/matrix.hpp"
#include "daectl/poly.hpp"
#include "daectl/triple.hpp"

// JSON forms of the library's values. Rationals are exact strings "num/den"
// (or "num" when integral), polynomials are coefficient arrays in ascending
// degree, matrices are arrays of rows.
namespace daectl {

using json = nlohmann::json;

json to_json(const Rational& r);
/// Accepts a rational string or a JSON integer. Throws ParseError.
Rational rational_from_json(const json& j);

json to_json(const Poly& p);
Poly poly_from_json(const json& j);

json to_json(const RatMatrix& m);
/// `block` names the matrix in error messages.
RatMatrix matrix_from_json(const json& j, std::string_view block = "matrix");

json to_json(const DaeTriple& t);
/// Object with fields "E", "A", "B". Throws ParseError or DimensionError naming the block.
DaeTriple triple_from_json(const json& j);
DaeTriple load_triple(const std::filesystem::path& path);

json to_json(const ConceptReport& r);
json to_json(const FrequencyRow& row);
json to_json(const CrossValidation& cv);

}  // namespace daectl
