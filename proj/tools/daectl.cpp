// daectl: controllability and stabilizability checks for linear DAEs, plus
// Monte Carlo genericity surveys over dimension grids.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "daectl/criteria.hpp"
#include "daectl/errors.hpp"
#include "daectl/experiment.hpp"
#include "daectl/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

std::vector<daectl::Concept> parse_concept_list(const std::string& text) {
  if (text == "all") return {daectl::kDaeConcepts.begin(), daectl::kDaeConcepts.end()};
  std::vector<daectl::Concept> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "ode" || item == "kalman") {
      out.push_back(daectl::Concept::OdeControllable);
    } else {
      out.push_back(daectl::parse_concept(item));
    }
  }
  return out;
}

std::vector<daectl::StrongVariant> parse_variant_list(const std::string& text) {
  if (text == "both") return {daectl::StrongVariant::AsWritten, daectl::StrongVariant::WithE};
  return {daectl::parse_strong_variant(text)};
}

void print_text(std::ostream& os, const daectl::ConceptReport& r) {
  std::string name(daectl::to_string(r.kind));
  if (r.variant) name += " (" + std::string(daectl::to_string(*r.variant)) + ")";
  os << name << ": " << (r.verdict ? "true" : "false");
  for (const auto& [key, value] : r.ranks) os << "  " << key << "=" << value;
  if (r.drop_polynomial) os << "  drop_polynomial=" << *r.drop_polynomial;
  os << '\n';
  for (const auto& note : r.notes) os << "  note: " << note << '\n';
}

struct CheckOptions {
  std::string input;
  std::string concepts = "all";
  std::string strong_variant = "as-written";
  std::string format = "text";
};

int run_check(const CheckOptions& opt) {
  const daectl::DaeTriple t = daectl::load_triple(opt.input);
  const auto concepts = parse_concept_list(opt.concepts);
  const auto variant = daectl::parse_strong_variant(opt.strong_variant);
  if (opt.format != "text" && opt.format != "json") throw daectl::ParseError("unknown format " + opt.format);

  std::vector<daectl::ConceptReport> reports;
  reports.reserve(concepts.size());
  for (auto c : concepts) reports.push_back(daectl::evaluate(c, t, variant));

  if (opt.format == "json") {
    daectl::json out{{"l", t.l()}, {"n", t.n()}, {"m", t.m()}, {"reports", daectl::json::array()}};
    for (const auto& r : reports) out["reports"].push_back(daectl::to_json(r));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "system: l=" << t.l() << " n=" << t.n() << " m=" << t.m() << '\n';
    for (const auto& r : reports) print_text(std::cout, r);
  }
  return kExitOk;
}

struct SurveyOptions {
  std::size_t lmax = 1, nmax = 1, mmax = 1;
  std::string concepts = "all";
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::uint64_t bound = 100;
  std::string distribution = "uniform";
  std::uint64_t denominator_scale = 1000;
  std::string out;
  std::string format = "csv";
  std::string strong_variant = "as-written";
  std::size_t jobs = 1;
};

int run_survey(const SurveyOptions& opt) {
  daectl::RunConfig config;
  config.lmax = opt.lmax;
  config.nmax = opt.nmax;
  config.mmax = opt.mmax;
  config.concepts = parse_concept_list(opt.concepts);
  config.sample.seed = opt.seed;
  config.sample.trials = opt.trials;
  if (opt.distribution == "uniform") {
    config.sample.distribution = daectl::RationalUniform{opt.bound};
  } else if (opt.distribution == "normal") {
    config.sample.distribution = daectl::FloatNormalRationalized{opt.denominator_scale};
  } else {
    throw daectl::ParseError("unknown distribution " + opt.distribution);
  }
  config.format = daectl::parse_output_format(opt.format);
  config.strong_variants = parse_variant_list(opt.strong_variant);
  config.jobs = opt.jobs;
  if (!opt.out.empty()) config.out = opt.out;

  const auto rows = daectl::run_survey(config);
  if (!config.out) daectl::write_rows(std::cout, rows, config.format);
  return kExitOk;
}

int run_validate(const std::string& input) {
  const daectl::DaeTriple t = daectl::load_triple(input);
  const daectl::CrossValidation cv = daectl::cross_validate(t);
  std::cout << daectl::to_json(cv).dump(2) << '\n';
  return cv.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Controllability and stabilizability of linear DAEs d/dt(Ex) = Ax + Bu"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Analyze one triple (E, A, B)");
  check_cmd->add_option("--input", check.input, "Triple file (JSON with E, A, B)")->required();
  check_cmd->add_option("--concepts", check.concepts, "all, or a comma list of concept names (ode for Kalman)");
  check_cmd->add_option("--strong-variant", check.strong_variant, "as-written | with-e");
  check_cmd->add_option("--format", check.format, "json | text");

  SurveyOptions survey;
  auto* survey_cmd = app.add_subcommand("survey", "Monte Carlo genericity survey over a dimension grid");
  survey_cmd->add_option("--lmax", survey.lmax, "Largest l")->required()->check(CLI::PositiveNumber);
  survey_cmd->add_option("--nmax", survey.nmax, "Largest n")->required()->check(CLI::PositiveNumber);
  survey_cmd->add_option("--mmax", survey.mmax, "Largest m")->required()->check(CLI::PositiveNumber);
  survey_cmd->add_option("--concepts", survey.concepts, "all, or a comma list of concept names");
  survey_cmd->add_option("--trials", survey.trials, "Samples per cell")->check(CLI::PositiveNumber);
  survey_cmd->add_option("--seed", survey.seed, "Base seed");
  survey_cmd->add_option("--bound", survey.bound, "Entry bound for the uniform distribution")
      ->check(CLI::PositiveNumber);
  survey_cmd->add_option("--distribution", survey.distribution, "uniform | normal");
  survey_cmd->add_option("--denominator-scale", survey.denominator_scale, "Grid scale for the normal distribution")
      ->check(CLI::PositiveNumber);
  survey_cmd->add_option("--out", survey.out, "Output path (stdout when omitted)");
  survey_cmd->add_option("--format", survey.format, "csv | json");
  survey_cmd->add_option("--strong-variant", survey.strong_variant, "as-written | with-e | both");
  survey_cmd->add_option("--jobs", survey.jobs, "Worker threads per cell")->check(CLI::PositiveNumber);

  std::string validate_input;
  auto* validate_cmd = app.add_subcommand("validate", "Cross-validate kernels and ranks for one triple");
  validate_cmd->add_option("--input", validate_input, "Triple file (JSON with E, A, B)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (check_cmd->parsed()) return run_check(check);
    if (survey_cmd->parsed()) return run_survey(survey);
    if (validate_cmd->parsed()) return run_validate(validate_input);
  } catch (const daectl::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const daectl::DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
