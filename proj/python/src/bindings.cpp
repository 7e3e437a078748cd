#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "daectl/criteria.hpp"
#include "daectl/errors.hpp"
#include "daectl/experiment.hpp"
#include "daectl/pencil.hpp"
#include "daectl/poly.hpp"
#include "daectl/serialize.hpp"

namespace py = pybind11;

namespace {

// Values cross the boundary as plain Python data: rationals as "num/den"
// strings (ints accepted on input), polynomials as coefficient lists,
// matrices as lists of rows.
daectl::json to_json_value(const py::handle& obj) {
  py::module_ json = py::module_::import("json");
  return daectl::json::parse(py::str(json.attr("dumps")(obj)).cast<std::string>());
}

py::object to_py(const daectl::json& value) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(value.dump());
}

daectl::Poly to_poly(const py::handle& obj) { return daectl::poly_from_json(to_json_value(obj)); }
daectl::RatMatrix to_matrix(const py::handle& obj) { return daectl::matrix_from_json(to_json_value(obj)); }
daectl::DaeTriple to_triple(const py::handle& obj) { return daectl::triple_from_json(to_json_value(obj)); }

std::vector<daectl::Concept> to_concepts(const std::optional<std::vector<std::string>>& names) {
  if (!names) return {daectl::kDaeConcepts.begin(), daectl::kDaeConcepts.end()};
  std::vector<daectl::Concept> out;
  for (const auto& n : *names) out.push_back(daectl::parse_concept(n));
  return out;
}

daectl::SampleSpec make_spec(std::size_t trials, std::uint64_t seed, std::uint64_t bound) {
  daectl::SampleSpec spec;
  spec.distribution = daectl::RationalUniform{bound};
  spec.seed = seed;
  spec.trials = trials;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_daectl, m) {
  m.doc() = "Exact controllability and stabilizability criteria for linear DAEs";

  py::register_exception<daectl::DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<daectl::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<daectl::DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("poly_eval", [](const py::object& p, const py::object& x) {
    return daectl::poly_eval(to_poly(p), daectl::rational_from_json(to_json_value(x))).str();
  });
  m.def("poly_gcd", [](const py::object& p, const py::object& q) {
    return to_py(daectl::to_json(daectl::poly_gcd(to_poly(p), to_poly(q))));
  });
  m.def("sylvester", [](const py::object& p, const py::object& q) {
    return to_py(daectl::to_json(daectl::sylvester(to_poly(p), to_poly(q))));
  });
  m.def("resultant", [](const py::object& p, const py::object& q) {
    return daectl::resultant(to_poly(p), to_poly(q)).str();
  });
  m.def("hurwitz_stable", [](const py::object& p) { return daectl::hurwitz_stable(to_poly(p)); });

  m.def("det", [](const py::object& mat) { return daectl::det(to_matrix(mat)).str(); });
  m.def("rank", [](const py::object& mat) { return daectl::rank(to_matrix(mat)); });
  m.def("kernel_basis", [](const py::object& mat) {
    const daectl::RatMatrix k = daectl::kernel_basis(to_matrix(mat));
    return py::make_tuple(k.rows(), k.cols(), to_py(daectl::to_json(k)));
  }, "Returns (rows, cols, entries); entries is a list of rows.");

  m.def("check", [](const py::object& triple, std::optional<std::vector<std::string>> concepts,
                    const std::string& strong_variant) {
    const daectl::DaeTriple t = to_triple(triple);
    const auto variant = daectl::parse_strong_variant(strong_variant);
    daectl::json out = daectl::json::array();
    for (auto c : to_concepts(concepts)) out.push_back(daectl::to_json(daectl::evaluate(c, t, variant)));
    return to_py(out);
  }, py::arg("triple"), py::arg("concepts") = py::none(), py::arg("strong_variant") = "as-written");

  m.def("kalman_controllable", [](const py::object& a, const py::object& b) {
    return daectl::kalman_controllable(to_matrix(a), to_matrix(b)).verdict;
  });

  m.def("genericity_predicted", [](const std::string& concept_name, std::size_t l, std::size_t n, std::size_t mm,
                                   const std::string& strong_variant) {
    return daectl::genericity_predicted(daectl::parse_concept(concept_name), l, n, mm,
                                        daectl::parse_strong_variant(strong_variant));
  }, py::arg("concept"), py::arg("l"), py::arg("n"), py::arg("m"), py::arg("strong_variant") = "as-written");

  m.def("sample_triple", [](std::size_t l, std::size_t n, std::size_t mm, std::uint64_t seed,
                            std::uint64_t stream_index, std::uint64_t bound) {
    return to_py(daectl::to_json(daectl::sample_triple(make_spec(1, seed, bound), {l, n, mm}, stream_index)));
  }, py::arg("l"), py::arg("n"), py::arg("m"), py::arg("seed") = 0, py::arg("stream_index") = 0,
     py::arg("bound") = 100);

  m.def("estimate_frequency", [](const std::string& concept_name, std::size_t l, std::size_t n, std::size_t mm,
                                 std::size_t trials, std::uint64_t seed, std::uint64_t bound,
                                 const std::string& strong_variant, std::size_t jobs) {
    const auto c = daectl::parse_concept(concept_name);
    const auto variant = daectl::parse_strong_variant(strong_variant);
    daectl::FrequencyRow row;
    {
      py::gil_scoped_release release;
      row = daectl::estimate_frequency(c, {l, n, mm}, make_spec(trials, seed, bound), variant, jobs);
    }
    return to_py(daectl::to_json(row));
  }, py::arg("concept"), py::arg("l"), py::arg("n"), py::arg("m"), py::arg("trials") = 200, py::arg("seed") = 0,
     py::arg("bound") = 100, py::arg("strong_variant") = "as-written", py::arg("jobs") = 1);

  m.def("survey", [](std::size_t lmax, std::size_t nmax, std::size_t mmax,
                     std::optional<std::vector<std::string>> concepts, std::size_t trials, std::uint64_t seed,
                     std::uint64_t bound) {
    daectl::RunConfig config;
    config.lmax = lmax;
    config.nmax = nmax;
    config.mmax = mmax;
    config.concepts = to_concepts(concepts);
    config.sample = make_spec(trials, seed, bound);
    std::vector<daectl::FrequencyRow> rows;
    {
      py::gil_scoped_release release;
      rows = daectl::run_survey(config);
    }
    daectl::json out = daectl::json::array();
    for (const auto& r : rows) out.push_back(daectl::to_json(r));
    return to_py(out);
  }, py::arg("lmax"), py::arg("nmax"), py::arg("mmax"), py::arg("concepts") = py::none(), py::arg("trials") = 200,
     py::arg("seed") = 0, py::arg("bound") = 100);

  m.def("cross_validate", [](const py::object& triple) {
    return to_py(daectl::to_json(daectl::cross_validate(to_triple(triple))));
  });
}
