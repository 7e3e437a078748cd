#include "daectl/serialize.hpp"

#include <fstream>
#include <string>

#include "daectl/errors.hpp"

namespace daectl {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Poly(std::move(coeffs));
}

json to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& e : m.row(i)) row.push_back(to_json(e));
    out.push_back(std::move(row));
  }
  return out;
}

RatMatrix matrix_from_json(const json& j, std::string_view block) {
  const std::string name(block);
  if (!j.is_array()) throw ParseError("block " + name + " must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw ParseError("block " + name + ": row " + std::to_string(i) + " is not an array");
    std::vector<Rational> row;
    for (const auto& e : j[i]) {
      try {
        row.push_back(rational_from_json(e));
      } catch (const ParseError& err) {
        throw ParseError("block " + name + ", row " + std::to_string(i) + ": " + err.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw DimensionError("block " + name + ": row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  return RatMatrix::from_rows(rows);
}

json to_json(const DaeTriple& t) { return {{"E", to_json(t.E())}, {"A", to_json(t.A())}, {"B", to_json(t.B())}}; }

DaeTriple triple_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("triple must be an object with fields E, A, B");
  for (const char* key : {"E", "A", "B"}) {
    if (!j.contains(key)) throw ParseError(std::string("triple is missing block ") + key);
  }
  return DaeTriple(matrix_from_json(j.at("E"), "E"), matrix_from_json(j.at("A"), "A"),
                   matrix_from_json(j.at("B"), "B"));
}

DaeTriple load_triple(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open triple file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw ParseError(path.string() + ": " + err.what());
  }
  return triple_from_json(j);
}

json to_json(const ConceptReport& r) {
  json out{{"concept", std::string(to_string(r.kind))}, {"verdict", r.verdict}, {"ranks", r.ranks}};
  if (r.drop_polynomial) out["drop_polynomial"] = to_json(*r.drop_polynomial);
  if (r.variant) out["variant"] = std::string(to_string(*r.variant));
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

json to_json(const FrequencyRow& row) {
  return {{"concept", row.label()},
          {"l", row.dims.l},
          {"n", row.dims.n},
          {"m", row.dims.m},
          {"trials", row.trials},
          {"hits", row.hits},
          {"frequency", format_decimal(row.frequency(), 6)},
          {"frequency_exact", row.frequency().str()},
          {"predicted_generic", row.predicted_generic},
          {"agrees", row.agrees()}};
}

json to_json(const CrossValidation& cv) {
  json checks = json::array();
  for (const auto& c : cv.rank_checks) {
    json entry{{"block", c.block}, {"elimination", c.elimination}};
    entry["by_minors"] = c.by_minors ? json(*c.by_minors) : json(nullptr);
    checks.push_back(std::move(entry));
  }
  return {{"kernel_compared", cv.kernel_compared},
          {"kernel_agrees", cv.kernel_agrees},
          {"kernel_basis_valid", cv.kernel_basis_valid},
          {"rank_checks", std::move(checks)},
          {"strong_as_written", cv.strong_as_written},
          {"strong_with_e", cv.strong_with_e},
          {"discrepancies", cv.discrepancies},
          {"ok", cv.ok()}};
}

}  // namespace daectl
