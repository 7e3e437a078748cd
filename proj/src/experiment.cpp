#include "daectl/experiment.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <random>
#include <thread>

#include "daectl/errors.hpp"
#include "daectl/gauss.hpp"
#include "daectl/serialize.hpp"

namespace daectl {

namespace {

// Uniform integer on [lo, hi] by rejection; independent of the standard
// library's distribution implementation.
long uniform_int(std::mt19937_64& engine, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = 0;
  do {
    draw = engine();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % span);
}

std::mt19937_64 stream_engine(std::uint64_t seed, const Dims& dims, std::uint64_t stream_index) {
  const std::array<std::uint64_t, 5> words = {seed, stream_index, dims.l, dims.n, dims.m};
  std::vector<std::uint32_t> halves;
  for (std::uint64_t w : words) {
    halves.push_back(static_cast<std::uint32_t>(w));
    halves.push_back(static_cast<std::uint32_t>(w >> 32));
  }
  std::seed_seq seq(halves.begin(), halves.end());
  return std::mt19937_64(seq);
}

struct EntrySampler {
  std::mt19937_64& engine;
  std::normal_distribution<double> normal{0.0, 1.0};

  Rational operator()(const RationalUniform& d) {
    const long b = static_cast<long>(d.bound);
    const long num = uniform_int(engine, -b, b);
    const long den = uniform_int(engine, 1, b);
    return {num, den};
  }

  Rational operator()(const FloatNormalRationalized& d) {
    const double scale = static_cast<double>(d.denominator_scale);
    const double rounded = std::nearbyint(normal(engine) * scale);
    return {static_cast<long>(rounded), static_cast<long>(d.denominator_scale)};
  }
};

RatMatrix sample_matrix(EntrySampler& sampler, const Distribution& dist, std::size_t rows, std::size_t cols) {
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(std::visit(sampler, dist));
  return {rows, cols, std::move(entries)};
}

}  // namespace

void SampleSpec::validate() const {
  if (trials == 0) throw DomainError("trials must be >= 1");
  std::visit(
      [](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, RationalUniform>) {
          if (d.bound == 0) throw DomainError("bound must be >= 1");
          if (d.bound > static_cast<std::uint64_t>(std::numeric_limits<long>::max() / 2)) {
            throw DomainError("bound too large");
          }
        } else {
          if (d.denominator_scale == 0) throw DomainError("denominator scale must be >= 1");
        }
      },
      distribution);
}

DaeTriple sample_triple(const SampleSpec& spec, const Dims& dims, std::uint64_t stream_index) {
  spec.validate();
  if (dims.l == 0 || dims.n == 0 || dims.m == 0) throw DomainError("dimensions must be >= 1");
  std::mt19937_64 engine = stream_engine(spec.seed, dims, stream_index);
  EntrySampler sampler{engine};
  RatMatrix e = sample_matrix(sampler, spec.distribution, dims.l, dims.n);
  RatMatrix a = sample_matrix(sampler, spec.distribution, dims.l, dims.n);
  RatMatrix b = sample_matrix(sampler, spec.distribution, dims.l, dims.m);
  return {std::move(e), std::move(a), std::move(b)};
}

std::string FrequencyRow::label() const {
  std::string name(to_string(kind));
  if (kind == Concept::StronglyControllable && variant == StrongVariant::WithE) name += "WithE";
  return name;
}

FrequencyRow estimate_frequency(Concept c, const Dims& dims, const SampleSpec& spec, StrongVariant variant,
                                std::size_t jobs) {
  spec.validate();
  FrequencyRow row;
  row.kind = c;
  row.variant = variant;
  row.dims = dims;
  row.trials = spec.trials;
  row.predicted_generic = genericity_predicted(c, dims.l, dims.n, dims.m, variant);

  auto count = [&](std::size_t first, std::size_t stride) {
    std::size_t hits = 0;
    for (std::size_t k = first; k < spec.trials; k += stride) {
      if (evaluate(c, sample_triple(spec, dims, k), variant).verdict) ++hits;
    }
    return hits;
  };

  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, spec.trials);
  if (workers == 1) {
    row.hits = count(0, 1);
    return row;
  }
  std::vector<std::size_t> partial(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          partial[w] = count(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  for (std::size_t h : partial) row.hits += h;
  return row;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ParseError("unknown output format \"" + std::string(name) + "\"");
}

std::vector<FrequencyRow> run_survey(const RunConfig& config) {
  if (config.concepts.empty()) throw DomainError("no concepts selected");
  if (config.lmax == 0 || config.nmax == 0 || config.mmax == 0) throw DomainError("dimension grid is empty");
  if (config.strong_variants.empty()) throw DomainError("no strong-controllability variant selected");
  config.sample.validate();

  std::vector<FrequencyRow> rows;
  for (std::size_t l = 1; l <= config.lmax; ++l) {
    for (std::size_t n = 1; n <= config.nmax; ++n) {
      for (std::size_t m = 1; m <= config.mmax; ++m) {
        const Dims dims{l, n, m};
        for (Concept c : config.concepts) {
          if (c == Concept::OdeControllable && l != n) continue;
          if (c == Concept::StronglyControllable) {
            for (StrongVariant v : config.strong_variants)
              rows.push_back(estimate_frequency(c, dims, config.sample, v, config.jobs));
          } else {
            rows.push_back(estimate_frequency(c, dims, config.sample, StrongVariant::AsWritten, config.jobs));
          }
        }
      }
    }
  }

  if (config.out) {
    std::ofstream out(*config.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + config.out->string());
    write_rows(out, rows, config.format);
    out.flush();
    if (!out) throw std::runtime_error("failed writing output file " + config.out->string());
  }
  return rows;
}

std::string format_decimal(const Rational& value, int places) {
  if (places < 0) throw DomainError("negative decimal places");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const mpz_class num = value.numerator();
  const mpz_class den = value.denominator();
  // round half away from zero on |value| * 10^places
  mpz_class magnitude = (2 * abs(num) * scale + den) / (2 * den);
  std::string digits = magnitude.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out = (num < 0 && magnitude != 0) ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
  return out;
}

void write_csv(std::ostream& os, std::span<const FrequencyRow> rows) {
  os << "concept,l,n,m,trials,hits,frequency,predicted_generic,agrees\n";
  for (const auto& r : rows) {
    os << r.label() << ',' << r.dims.l << ',' << r.dims.n << ',' << r.dims.m << ',' << r.trials << ',' << r.hits
       << ',' << format_decimal(r.frequency(), 6) << ',' << (r.predicted_generic ? "true" : "false") << ','
       << (r.agrees() ? "true" : "false") << '\n';
  }
}

void write_json(std::ostream& os, std::span<const FrequencyRow> rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  os << out.dump(2) << '\n';
}

void write_rows(std::ostream& os, std::span<const FrequencyRow> rows, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    write_csv(os, rows);
  } else {
    write_json(os, rows);
  }
}

namespace {

bool same_column_space(const RatMatrix& k1, const RatMatrix& k2) {
  const std::size_t r1 = rank(k1);
  return r1 == rank(k2) && r1 == rank(hconcat({k1, k2}));
}

void add_rank_check(CrossValidation& cv, const std::string& name, const RatMatrix& m) {
  RankCheck check{name, rank(m), std::nullopt};
  if (std::min(m.rows(), m.cols()) <= 4 && std::max(m.rows(), m.cols()) <= 12) {
    check.by_minors = rank_by_minors(m);
    if (*check.by_minors != check.elimination) {
      cv.discrepancies.push_back("rank of " + name + ": elimination " + std::to_string(check.elimination) +
                                 " vs minors " + std::to_string(*check.by_minors));
    }
  }
  cv.rank_checks.push_back(std::move(check));
}

}  // namespace

CrossValidation cross_validate(const DaeTriple& t) {
  CrossValidation cv;
  const RatMatrix& e = t.E();
  const RatMatrix kernel = kernel_basis(e);

  cv.kernel_basis_valid = (e * kernel).is_zero() && kernel.cols() == e.cols() - rank(e) && rank(kernel) == kernel.cols();
  if (!cv.kernel_basis_valid) cv.discrepancies.push_back("kernel_basis fails E*K = 0 or rank-nullity");

  if (e.rows() < e.cols() && gauss::eliminate_without_swaps(e).report.in_restricted_domain) {
    cv.kernel_compared = true;
    const RatMatrix z = gauss::staircase_kernel(e);
    cv.kernel_agrees = (e * z).is_zero() && z.cols() == e.cols() - e.rows() && same_column_space(z, kernel);
    if (!cv.kernel_agrees) cv.discrepancies.push_back("staircase kernel does not span ker E");
  }

  const RatMatrix az = t.A() * kernel;
  add_rank_check(cv, "E", e);
  add_rank_check(cv, "A", t.A());
  add_rank_check(cv, "B", t.B());
  add_rank_check(cv, "[E,B]", hconcat({e, t.B()}));
  add_rank_check(cv, "[E,A,B]", hconcat({e, t.A(), t.B()}));
  add_rank_check(cv, "[E,AZ,B]", hconcat({e, az, t.B()}));
  add_rank_check(cv, "[AZ,B]", hconcat({az, t.B()}));

  cv.strong_as_written = strongly_controllable(t, StrongVariant::AsWritten).verdict;
  cv.strong_with_e = strongly_controllable(t, StrongVariant::WithE).verdict;
  return cv;
}

}  // namespace daectl
