#include "daectl/criteria.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "daectl/errors.hpp"
#include "daectl/pencil.hpp"

namespace daectl {

namespace {

struct ConceptName {
  Concept kind;
  std::string_view camel;
  std::string_view kebab;
};

constexpr std::array<ConceptName, 9> kConceptNames = {{
    {Concept::FreelyInitializable, "FreelyInitializable", "freely-initializable"},
    {Concept::ImpulseControllable, "ImpulseControllable", "impulse-controllable"},
    {Concept::CompletelyControllable, "CompletelyControllable", "completely-controllable"},
    {Concept::BehaviourallyControllable, "BehaviourallyControllable", "behaviourally-controllable"},
    {Concept::StronglyControllable, "StronglyControllable", "strongly-controllable"},
    {Concept::CompletelyStabilizable, "CompletelyStabilizable", "completely-stabilizable"},
    {Concept::StronglyStabilizable, "StronglyStabilizable", "strongly-stabilizable"},
    {Concept::BehaviourallyStabilizable, "BehaviourallyStabilizable", "behaviourally-stabilizable"},
    {Concept::OdeControllable, "OdeControllable", "ode-controllable"},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

RatMatrix times_kernel(const DaeTriple& t, const RatMatrix& kernel) {
  if (kernel.rows() != t.n()) throw DimensionError("kernel basis must have n rows");
  return t.A() * kernel;
}

ConceptReport make_report(Concept c) {
  ConceptReport r;
  r.kind = c;
  return r;
}

// rank pencil(lambda) = r on the region; records the generic rank and the
// drop polynomial. The minor gcd is only formed when the generic rank is r.
bool pencil_rank_constant(const DaeTriple& t, std::size_t r, bool closed_rhp_only, ConceptReport& report) {
  const PolyMatrix pencil = build_pencil(t);
  const std::size_t g = generic_rank(pencil);
  report.ranks[rank_name::kPencil] = g;
  if (g != r) return false;
  Poly drop = minor_gcd(pencil, r);
  const bool ok = drop.is_zero() ? false : (closed_rhp_only ? hurwitz_stable(drop) : drop.is_constant());
  report.drop_polynomial = std::move(drop);
  return ok;
}

bool pencil_rank_generic_everywhere(const DaeTriple& t, bool closed_rhp_only, ConceptReport& report) {
  const PolyMatrix pencil = build_pencil(t);
  const std::size_t g = generic_rank(pencil);
  report.ranks[rank_name::kPencil] = g;
  if (g == 0) return true;
  Poly drop = minor_gcd(pencil, g);
  const bool ok = closed_rhp_only ? hurwitz_stable(drop) : drop.is_constant();
  report.drop_polynomial = std::move(drop);
  return ok;
}

}  // namespace

std::string_view to_string(Concept c) {
  for (const auto& n : kConceptNames)
    if (n.kind == c) return n.camel;
  return "Unknown";
}

Concept parse_concept(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& n : kConceptNames) {
    if (key == lower(n.camel) || key == n.kebab) return n.kind;
  }
  throw ParseError("unknown concept \"" + std::string(name) + "\"");
}

std::string_view to_string(StrongVariant v) { return v == StrongVariant::AsWritten ? "as-written" : "with-e"; }

StrongVariant parse_strong_variant(std::string_view name) {
  const std::string key = lower(name);
  if (key == "as-written") return StrongVariant::AsWritten;
  if (key == "with-e") return StrongVariant::WithE;
  throw ParseError("unknown strong-controllability variant \"" + std::string(name) + "\"");
}

ConceptReport freely_initializable(const DaeTriple& t) {
  ConceptReport r = make_report(Concept::FreelyInitializable);
  const std::size_t eb = rank(hconcat({t.E(), t.B()}));
  const std::size_t eab = rank(hconcat({t.E(), t.A(), t.B()}));
  r.ranks[rank_name::kEB] = eb;
  r.ranks[rank_name::kEAB] = eab;
  r.verdict = eb == eab;
  return r;
}

ConceptReport impulse_controllable(const DaeTriple& t) { return impulse_controllable(t, kernel_basis(t.E())); }

ConceptReport impulse_controllable(const DaeTriple& t, const RatMatrix& kernel) {
  ConceptReport r = make_report(Concept::ImpulseControllable);
  const RatMatrix az = times_kernel(t, kernel);
  const std::size_t eab = rank(hconcat({t.E(), t.A(), t.B()}));
  const std::size_t eazb = rank(hconcat({t.E(), az, t.B()}));
  r.ranks[rank_name::kEAB] = eab;
  r.ranks[rank_name::kEAZB] = eazb;
  r.verdict = eab == eazb;
  return r;
}

ConceptReport completely_controllable(const DaeTriple& t) {
  ConceptReport r = make_report(Concept::CompletelyControllable);
  const std::size_t eab = rank(hconcat({t.E(), t.A(), t.B()}));
  const std::size_t eb = rank(hconcat({t.E(), t.B()}));
  r.ranks[rank_name::kEAB] = eab;
  r.ranks[rank_name::kEB] = eb;
  const bool pencil_ok = pencil_rank_constant(t, eab, /*closed_rhp_only=*/false, r);
  r.verdict = eb == eab && pencil_ok;
  return r;
}

ConceptReport behaviourally_controllable(const DaeTriple& t) {
  ConceptReport r = make_report(Concept::BehaviourallyControllable);
  r.verdict = pencil_rank_generic_everywhere(t, /*closed_rhp_only=*/false, r);
  return r;
}

ConceptReport strongly_controllable(const DaeTriple& t, StrongVariant variant) {
  return strongly_controllable(t, variant, kernel_basis(t.E()));
}

ConceptReport strongly_controllable(const DaeTriple& t, StrongVariant variant, const RatMatrix& kernel) {
  ConceptReport r = make_report(Concept::StronglyControllable);
  r.variant = variant;
  const RatMatrix az = times_kernel(t, kernel);
  const std::size_t eab = rank(hconcat({t.E(), t.A(), t.B()}));
  const std::size_t azb = rank(hconcat({az, t.B()}));
  const std::size_t eazb = rank(hconcat({t.E(), az, t.B()}));
  r.ranks[rank_name::kEAB] = eab;
  r.ranks[rank_name::kAZB] = azb;
  r.ranks[rank_name::kEAZB] = eazb;
  const bool pencil_ok = pencil_rank_constant(t, eab, /*closed_rhp_only=*/false, r);
  const bool as_written = pencil_ok && azb == eab;
  const bool with_e = pencil_ok && eazb == eab;
  r.verdict = variant == StrongVariant::AsWritten ? as_written : with_e;
  if (as_written != with_e) {
    r.notes.push_back(std::string("variants disagree: as-written ") + (as_written ? "true" : "false") +
                      ", with-e " + (with_e ? "true" : "false"));
  }
  return r;
}

ConceptReport completely_stabilizable(const DaeTriple& t) {
  ConceptReport r = make_report(Concept::CompletelyStabilizable);
  const std::size_t eab = rank(hconcat({t.E(), t.A(), t.B()}));
  const std::size_t eb = rank(hconcat({t.E(), t.B()}));
  r.ranks[rank_name::kEAB] = eab;
  r.ranks[rank_name::kEB] = eb;
  const bool pencil_ok = pencil_rank_constant(t, eab, /*closed_rhp_only=*/true, r);
  r.verdict = eb == eab && pencil_ok;
  return r;
}

ConceptReport strongly_stabilizable(const DaeTriple& t) { return strongly_stabilizable(t, kernel_basis(t.E())); }

ConceptReport strongly_stabilizable(const DaeTriple& t, const RatMatrix& kernel) {
  ConceptReport r = make_report(Concept::StronglyStabilizable);
  const RatMatrix az = times_kernel(t, kernel);
  const std::size_t eab = rank(hconcat({t.E(), t.A(), t.B()}));
  const std::size_t eazb = rank(hconcat({t.E(), az, t.B()}));
  r.ranks[rank_name::kEAB] = eab;
  r.ranks[rank_name::kEAZB] = eazb;
  const bool pencil_ok = pencil_rank_constant(t, eab, /*closed_rhp_only=*/true, r);
  r.verdict = eazb == eab && pencil_ok;
  return r;
}

ConceptReport behaviourally_stabilizable(const DaeTriple& t) {
  ConceptReport r = make_report(Concept::BehaviourallyStabilizable);
  r.verdict = pencil_rank_generic_everywhere(t, /*closed_rhp_only=*/true, r);
  return r;
}

RatMatrix controllability_matrix(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square()) throw DimensionError("Kalman test needs a square A");
  if (b.rows() != a.rows()) throw DimensionError("B must have as many rows as A");
  std::vector<RatMatrix> blocks;
  blocks.reserve(a.rows());
  RatMatrix power_times_b = b;
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (k > 0) power_times_b = a * power_times_b;
    blocks.push_back(power_times_b);
  }
  if (blocks.empty()) return RatMatrix(0, 0);
  return hconcat(std::span<const RatMatrix>(blocks));
}

ConceptReport kalman_controllable(const RatMatrix& a, const RatMatrix& b) {
  ConceptReport r = make_report(Concept::OdeControllable);
  const std::size_t k = rank(controllability_matrix(a, b));
  r.ranks[rank_name::kKalman] = k;
  r.verdict = k == a.rows();
  return r;
}

ConceptReport evaluate(Concept c, const DaeTriple& t, StrongVariant variant) {
  switch (c) {
    case Concept::FreelyInitializable:
      return freely_initializable(t);
    case Concept::ImpulseControllable:
      return impulse_controllable(t);
    case Concept::CompletelyControllable:
      return completely_controllable(t);
    case Concept::BehaviourallyControllable:
      return behaviourally_controllable(t);
    case Concept::StronglyControllable:
      return strongly_controllable(t, variant);
    case Concept::CompletelyStabilizable:
      return completely_stabilizable(t);
    case Concept::StronglyStabilizable:
      return strongly_stabilizable(t);
    case Concept::BehaviourallyStabilizable:
      return behaviourally_stabilizable(t);
    case Concept::OdeControllable:
      if (t.l() != t.n()) throw DimensionError("OdeControllable needs l == n");
      return kalman_controllable(t.A(), t.B());
  }
  throw DomainError("unknown concept");
}

bool genericity_predicted(Concept c, std::size_t l, std::size_t n, std::size_t m, StrongVariant variant) {
  if (l == 0 || n == 0 || m == 0) throw DomainError("dimensions must be >= 1");
  const std::size_t nm = n + m;
  switch (c) {
    case Concept::FreelyInitializable:
    case Concept::ImpulseControllable:
      return l <= nm;
    case Concept::CompletelyControllable:
    case Concept::CompletelyStabilizable:
    case Concept::StronglyStabilizable:
      return l < nm;
    case Concept::BehaviourallyControllable:
    case Concept::BehaviourallyStabilizable:
      return l != nm;
    case Concept::StronglyControllable:
      if (variant == StrongVariant::WithE) return l < nm;
      return ((n <= l && l <= m) || (l < n && 2 * l <= nm)) && l != nm;
    case Concept::OdeControllable:
      return true;
  }
  return false;
}

}  // namespace daectl
