#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "daectl/criteria.hpp"
#include "daectl/triple.hpp"

namespace daectl {

/// Entries p/q with p uniform on [-bound, bound] and q uniform on [1, bound].
struct RationalUniform {
  std::uint64_t bound = 100;
};

/// Standard normal draws rounded to the grid (1/denominator_scale) Z.
struct FloatNormalRationalized {
  std::uint64_t denominator_scale = 1000;
};

using Distribution = std::variant<RationalUniform, FloatNormalRationalized>;

struct SampleSpec {
  Distribution distribution = RationalUniform{};
  std::uint64_t seed = 0;
  std::size_t trials = 1;

  /// Throws DomainError when trials, bound or scale is zero.
  void validate() const;
};

/// Random triple; a pure function of (spec.distribution, spec.seed, dims, stream_index).
/// Each stream owns its own engine, so results do not depend on evaluation order.
DaeTriple sample_triple(const SampleSpec& spec, const Dims& dims, std::uint64_t stream_index);

struct FrequencyRow {
  Concept kind{};
  StrongVariant variant = StrongVariant::AsWritten;
  Dims dims;
  std::size_t trials = 0;
  std::size_t hits = 0;
  bool predicted_generic = false;

  Rational frequency() const { return {static_cast<long>(hits), static_cast<long>(trials)}; }
  /// Frequency at least 1 - 1/trials exactly when the set is predicted generic.
  bool agrees() const { return (hits + 1 >= trials) == predicted_generic; }
  /// Concept name, suffixed "WithE" for the with-E strong-controllability variant.
  std::string label() const;
};

/// Runs the concept test on stream indices 0..trials-1 with `jobs` workers.
FrequencyRow estimate_frequency(Concept c, const Dims& dims, const SampleSpec& spec,
                                StrongVariant variant = StrongVariant::AsWritten, std::size_t jobs = 1);

enum class OutputFormat { Csv, Json };
OutputFormat parse_output_format(std::string_view name);

struct RunConfig {
  std::size_t lmax = 1;
  std::size_t nmax = 1;
  std::size_t mmax = 1;
  std::vector<Concept> concepts;
  SampleSpec sample;
  OutputFormat format = OutputFormat::Csv;
  /// StronglyControllable rows are emitted once per listed variant.
  std::vector<StrongVariant> strong_variants = {StrongVariant::AsWritten};
  std::size_t jobs = 1;
  std::optional<std::filesystem::path> out;
};

/// Iterates l, n, m (outermost to innermost), then the concept list, then
/// strong variants. OdeControllable is only evaluated on cells with l == n.
/// Writes the rows to config.out when set.
std::vector<FrequencyRow> run_survey(const RunConfig& config);

/// Decimal expansion rounded half-up to `places` digits, e.g. "0.995000".
std::string format_decimal(const Rational& value, int places);

void write_csv(std::ostream& os, std::span<const FrequencyRow> rows);
void write_json(std::ostream& os, std::span<const FrequencyRow> rows);
void write_rows(std::ostream& os, std::span<const FrequencyRow> rows, OutputFormat format);

struct RankCheck {
  std::string block;
  std::size_t elimination = 0;
  /// Unset when the block is too large for minor enumeration.
  std::optional<std::size_t> by_minors;
};

struct CrossValidation {
  /// The staircase kernel applies (l < n and E in the restricted elimination domain).
  bool kernel_compared = false;
  bool kernel_agrees = false;
  bool kernel_basis_valid = false;
  std::vector<RankCheck> rank_checks;
  bool strong_as_written = false;
  bool strong_with_e = false;
  std::vector<std::string> discrepancies;

  bool ok() const { return discrepancies.empty(); }
};

CrossValidation cross_validate(const DaeTriple& t);

}  // namespace daectl
