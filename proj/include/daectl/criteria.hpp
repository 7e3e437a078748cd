#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "daectl/matrix.hpp"
#include "daectl/poly.hpp"
#include "daectl/triple.hpp"

namespace daectl {

enum class Concept {
  FreelyInitializable,
  ImpulseControllable,
  CompletelyControllable,
  BehaviourallyControllable,
  StronglyControllable,
  CompletelyStabilizable,
  StronglyStabilizable,
  BehaviourallyStabilizable,
  OdeControllable,
};

/// The eight DAE concepts, in declaration order.
inline constexpr std::array<Concept, 8> kDaeConcepts = {
    Concept::FreelyInitializable,    Concept::ImpulseControllable,       Concept::CompletelyControllable,
    Concept::BehaviourallyControllable, Concept::StronglyControllable,   Concept::CompletelyStabilizable,
    Concept::StronglyStabilizable,   Concept::BehaviourallyStabilizable,
};

std::string_view to_string(Concept c);
/// Case-insensitive; accepts the CamelCase name or its kebab-case form
/// ("strongly-controllable"). Throws ParseError.
Concept parse_concept(std::string_view name);

/// Middle block of the strong-controllability rank test: [AZ, B] as the
/// criterion is usually written, or [E, AZ, B] as in strong stabilizability.
enum class StrongVariant { AsWritten, WithE };

std::string_view to_string(StrongVariant v);
StrongVariant parse_strong_variant(std::string_view name);

/// Names of the ranks recorded in a ConceptReport.
namespace rank_name {
inline constexpr const char* kEAB = "rk[E,A,B]";
inline constexpr const char* kEB = "rk[E,B]";
inline constexpr const char* kEAZB = "rk[E,AZ,B]";
inline constexpr const char* kAZB = "rk[AZ,B]";
inline constexpr const char* kPencil = "rk_generic[xE-A,B]";
inline constexpr const char* kKalman = "rk[B,AB,...,A^(n-1)B]";
}  // namespace rank_name

struct ConceptReport {
  Concept kind{};
  bool verdict = false;
  std::map<std::string, std::size_t> ranks;
  /// Monic gcd of the pencil minors, when a whole-plane or half-plane test ran.
  std::optional<Poly> drop_polynomial;
  /// Only meaningful for StronglyControllable.
  std::optional<StrongVariant> variant;
  std::vector<std::string> notes;
};

ConceptReport freely_initializable(const DaeTriple& t);

ConceptReport impulse_controllable(const DaeTriple& t);
/// Same criterion with a caller-supplied kernel basis of E.
ConceptReport impulse_controllable(const DaeTriple& t, const RatMatrix& kernel);

ConceptReport completely_controllable(const DaeTriple& t);
ConceptReport behaviourally_controllable(const DaeTriple& t);

ConceptReport strongly_controllable(const DaeTriple& t, StrongVariant variant = StrongVariant::AsWritten);
ConceptReport strongly_controllable(const DaeTriple& t, StrongVariant variant, const RatMatrix& kernel);

ConceptReport completely_stabilizable(const DaeTriple& t);

ConceptReport strongly_stabilizable(const DaeTriple& t);
ConceptReport strongly_stabilizable(const DaeTriple& t, const RatMatrix& kernel);

ConceptReport behaviourally_stabilizable(const DaeTriple& t);

/// [B, AB, ..., A^(n-1) B] for square A.
RatMatrix controllability_matrix(const RatMatrix& a, const RatMatrix& b);

/// Kalman rank test for d/dt x = Ax + Bu. Throws DimensionError for non-square A.
ConceptReport kalman_controllable(const RatMatrix& a, const RatMatrix& b);

/// Dispatch by concept. OdeControllable runs the Kalman test on (A, B) and
/// requires l == n (DimensionError otherwise); E is ignored.
ConceptReport evaluate(Concept c, const DaeTriple& t, StrongVariant variant = StrongVariant::AsWritten);

/// Whether the set of triples with the property is generic in the
/// parameter space of (l, n, m) systems.
bool genericity_predicted(Concept c, std::size_t l, std::size_t n, std::size_t m,
                          StrongVariant variant = StrongVariant::AsWritten);

}  // namespace daectl
