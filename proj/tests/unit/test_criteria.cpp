#include "doctest.h"

#include "daectl/criteria.hpp"
#include "daectl/errors.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using daectl::Concept;
using daectl::DaeTriple;
using daectl::RatMatrix;
using daectl::Rational;
using daectl::StrongVariant;
using testing::scalar;

namespace {

DaeTriple two_by_one(const RatMatrix& e, const RatMatrix& a, const RatMatrix& b) { return {e, a, b}; }

RatMatrix cyclic_shift(std::size_t n) {
  RatMatrix a(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) a(i + 1, i) = 1;
  a(0, n - 1) = 1;
  return a;
}

// Triples biased toward degenerate structure so that verdicts vary.
DaeTriple random_triple(oracle::Gen& gen, std::size_t l, std::size_t n, std::size_t m) {
  const std::size_t re = static_cast<std::size_t>(gen.integer(0, static_cast<long>(std::min(l, n))));
  RatMatrix e = gen.low_rank(l, n, re, -2, 2);
  RatMatrix a = gen.coin() ? gen.int_matrix(l, n, -3, 3) : gen.low_rank(l, n, 1, -2, 2);
  RatMatrix b = gen.integer(0, 2) == 0 ? RatMatrix(l, m) : gen.int_matrix(l, m, -2, 2);
  return {std::move(e), std::move(a), std::move(b)};
}

}  // namespace

TEST_CASE("concept names") {
  for (Concept c : daectl::kDaeConcepts) CHECK(daectl::parse_concept(daectl::to_string(c)) == c);
  CHECK(daectl::parse_concept("strongly-controllable") == Concept::StronglyControllable);
  CHECK(daectl::parse_concept("freelyinitializable") == Concept::FreelyInitializable);
  CHECK(daectl::parse_concept("OdeControllable") == Concept::OdeControllable);
  CHECK_THROWS_AS(daectl::parse_concept("nonsense"), daectl::ParseError);
  CHECK(daectl::parse_strong_variant("with-e") == StrongVariant::WithE);
  CHECK(daectl::parse_strong_variant("as-written") == StrongVariant::AsWritten);
  CHECK_THROWS_AS(daectl::parse_strong_variant("both"), daectl::ParseError);
}

TEST_CASE("freely_initializable examples") {
  CHECK(daectl::freely_initializable(scalar(1, 0, 0)).verdict);
  const auto r = daectl::freely_initializable(
      two_by_one(RatMatrix::unit_column(2, 0), RatMatrix::unit_column(2, 1), RatMatrix(2, 1)));
  CHECK_FALSE(r.verdict);
  CHECK(r.ranks.at(daectl::rank_name::kEB) == 1);
  CHECK(r.ranks.at(daectl::rank_name::kEAB) == 2);
  CHECK_FALSE(daectl::freely_initializable(scalar(0, 1, 0)).verdict);
}

TEST_CASE("impulse_controllable examples") {
  CHECK(daectl::impulse_controllable(scalar(0, 1, 0)).verdict);
  CHECK(daectl::impulse_controllable(scalar(1, 5, 0)).verdict);
  const auto r = daectl::impulse_controllable(
      two_by_one(RatMatrix::unit_column(2, 0), RatMatrix::unit_column(2, 1), RatMatrix(2, 1)));
  CHECK_FALSE(r.verdict);
  CHECK(r.ranks.at(daectl::rank_name::kEAZB) == 1);
}

TEST_CASE("completely_controllable examples") {
  CHECK(daectl::completely_controllable(scalar(1, 2, 1)).verdict);
  const auto r = daectl::completely_controllable(scalar(1, 2, 0));
  CHECK_FALSE(r.verdict);
  REQUIRE(r.drop_polynomial.has_value());
  CHECK(*r.drop_polynomial == daectl::Poly{-2, 1});
  CHECK(daectl::completely_controllable(scalar(0, 1, 1)).verdict);
}

TEST_CASE("behaviourally_controllable examples") {
  CHECK_FALSE(daectl::behaviourally_controllable(scalar(1, 2, 0)).verdict);
  CHECK(daectl::behaviourally_controllable(scalar(1, 2, 1)).verdict);
  const auto r = daectl::behaviourally_controllable(scalar(0, 0, 0));
  CHECK(r.verdict);
  CHECK(r.ranks.at(daectl::rank_name::kPencil) == 0);
}

TEST_CASE("strongly_controllable examples") {
  CHECK(daectl::strongly_controllable(scalar(0, 1, 1)).verdict);
  CHECK(daectl::strongly_controllable(scalar(1, 1, 1)).verdict);
  const auto r = daectl::strongly_controllable(scalar(1, 1, 0));
  CHECK_FALSE(r.verdict);
  CHECK(r.ranks.at(daectl::rank_name::kAZB) == 0);
  CHECK(r.variant == StrongVariant::AsWritten);
}

TEST_CASE("strong controllability variants can disagree") {
  CHECK(daectl::strongly_controllable(scalar(1, 2, 1), StrongVariant::WithE).verdict);
  // E = I, A = swap, B = e1: Z is empty so [AZ,B] = [B] has rank 1 while [E,AZ,B] has rank 2.
  const DaeTriple t(RatMatrix::identity(2), cyclic_shift(2), RatMatrix::unit_column(2, 0));
  const auto as_written = daectl::strongly_controllable(t, StrongVariant::AsWritten);
  const auto with_e = daectl::strongly_controllable(t, StrongVariant::WithE);
  CHECK_FALSE(as_written.verdict);
  CHECK(with_e.verdict);
  CHECK(with_e.variant == StrongVariant::WithE);
  REQUIRE(as_written.notes.size() == 1);
  CHECK(as_written.notes[0] == "variants disagree: as-written false, with-e true");
}

TEST_CASE("completely_stabilizable examples") {
  CHECK(daectl::completely_stabilizable(scalar(1, -2, 0)).verdict);
  CHECK_FALSE(daectl::completely_stabilizable(scalar(1, 2, 0)).verdict);
  CHECK_FALSE(daectl::completely_stabilizable(scalar(1, 0, 0)).verdict);
}

TEST_CASE("strongly_stabilizable examples") {
  CHECK(daectl::strongly_stabilizable(scalar(1, -1, 0)).verdict);
  CHECK_FALSE(daectl::strongly_stabilizable(scalar(1, 1, 0)).verdict);
  CHECK(daectl::strongly_stabilizable(scalar(0, 1, 1)).verdict);
}

TEST_CASE("behaviourally_stabilizable examples") {
  CHECK(daectl::behaviourally_stabilizable(scalar(1, -2, 0)).verdict);
  CHECK_FALSE(daectl::behaviourally_stabilizable(scalar(1, 2, 0)).verdict);
  CHECK(daectl::behaviourally_stabilizable(scalar(1, 2, 1)).verdict);
}

TEST_CASE("kalman examples") {
  const RatMatrix b = daectl::hconcat({RatMatrix::unit_column(3, 0), RatMatrix(3, 1)});
  const RatMatrix block = daectl::controllability_matrix(cyclic_shift(3), b);
  RatMatrix expected(3, 6);
  for (std::size_t i = 0; i < 3; ++i) expected(i, 2 * i) = 1;
  CHECK(block == expected);
  CHECK(daectl::kalman_controllable(cyclic_shift(3), b).verdict);
  CHECK_FALSE(daectl::kalman_controllable(RatMatrix(2, 2), RatMatrix::unit_column(2, 0)).verdict);
  CHECK(daectl::kalman_controllable(RatMatrix(1, 1), RatMatrix{{1}}).verdict);
  CHECK_THROWS_AS(daectl::kalman_controllable(RatMatrix(2, 3), RatMatrix(2, 1)), daectl::DimensionError);
  CHECK_THROWS_AS(daectl::evaluate(Concept::OdeControllable,
                                   DaeTriple(RatMatrix(1, 2), RatMatrix(1, 2), RatMatrix(1, 1))),
                  daectl::DimensionError);
}

TEST_CASE("genericity table examples") {
  CHECK_FALSE(daectl::genericity_predicted(Concept::FreelyInitializable, 3, 1, 1));
  CHECK(daectl::genericity_predicted(Concept::StronglyControllable, 2, 2, 3));
  CHECK_FALSE(daectl::genericity_predicted(Concept::BehaviourallyControllable, 2, 1, 1));
  CHECK(daectl::genericity_predicted(Concept::CompletelyStabilizable, 1, 1, 1));
  CHECK(daectl::genericity_predicted(Concept::ImpulseControllable, 2, 1, 1));
  CHECK_FALSE(daectl::genericity_predicted(Concept::CompletelyControllable, 2, 1, 1));
  CHECK(daectl::genericity_predicted(Concept::BehaviourallyStabilizable, 3, 1, 1));
  CHECK_FALSE(daectl::genericity_predicted(Concept::StronglyControllable, 3, 2, 2));
  CHECK_FALSE(daectl::genericity_predicted(Concept::StronglyControllable, 3, 4, 1));
  CHECK(daectl::genericity_predicted(Concept::StronglyControllable, 2, 3, 1));
  CHECK(daectl::genericity_predicted(Concept::StronglyControllable, 3, 2, 2, StrongVariant::WithE));
  CHECK(daectl::genericity_predicted(Concept::OdeControllable, 4, 4, 1));
  CHECK_THROWS_AS(daectl::genericity_predicted(Concept::FreelyInitializable, 0, 1, 1), daectl::DomainError);
}

TEST_CASE("evaluate dispatches every concept") {
  const DaeTriple t = scalar(1, -2, 1);
  for (Concept c : daectl::kDaeConcepts) CHECK(daectl::evaluate(c, t).kind == c);
  CHECK(daectl::evaluate(Concept::OdeControllable, t).verdict);
}

TEST_CASE("property: Z-dependent verdicts are basis invariant") {
  oracle::Gen gen(51);
  int singular = 0;
  for (int trial = 0; trial < 150 && singular < 50; ++trial) {
    const DaeTriple t = random_triple(gen, static_cast<std::size_t>(gen.integer(1, 3)),
                                      static_cast<std::size_t>(gen.integer(1, 4)),
                                      static_cast<std::size_t>(gen.integer(1, 2)));
    const RatMatrix z = daectl::kernel_basis(t.E());
    if (z.cols() == 0) continue;
    ++singular;
    for (int k = 0; k < 3; ++k) {
      const RatMatrix zu = z * gen.invertible(z.cols(), 5);
      CHECK(daectl::impulse_controllable(t, zu).verdict == daectl::impulse_controllable(t).verdict);
      CHECK(daectl::strongly_stabilizable(t, zu).verdict == daectl::strongly_stabilizable(t).verdict);
      for (auto v : {StrongVariant::AsWritten, StrongVariant::WithE})
        CHECK(daectl::strongly_controllable(t, v, zu).verdict == daectl::strongly_controllable(t, v).verdict);
    }
  }
  CHECK(singular >= 30);
}

TEST_CASE("property: verdicts are invariant under system equivalence") {
  oracle::Gen gen(52);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t l = static_cast<std::size_t>(gen.integer(1, 3));
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const std::size_t m = static_cast<std::size_t>(gen.integer(1, 2));
    const DaeTriple t = random_triple(gen, l, n, m);
    const RatMatrix s = gen.invertible(l, 4);
    const RatMatrix tt = gen.invertible(n, 4);
    const DaeTriple u(s * t.E() * tt, s * t.A() * tt, s * t.B());
    for (Concept c : daectl::kDaeConcepts) {
      CHECK(daectl::evaluate(c, u).verdict == daectl::evaluate(c, t).verdict);
      if (c == Concept::StronglyControllable)
        CHECK(daectl::evaluate(c, u, StrongVariant::WithE).verdict ==
              daectl::evaluate(c, t, StrongVariant::WithE).verdict);
    }
  }
}

TEST_CASE("property: implication chains") {
  oracle::Gen gen(53);
  int cc = 0, cs = 0, bc = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const DaeTriple t = random_triple(gen, static_cast<std::size_t>(gen.integer(1, 3)),
                                      static_cast<std::size_t>(gen.integer(1, 3)),
                                      static_cast<std::size_t>(gen.integer(1, 2)));
    const bool compl_cont = daectl::completely_controllable(t).verdict;
    const bool compl_stab = daectl::completely_stabilizable(t).verdict;
    const bool strong_stab = daectl::strongly_stabilizable(t).verdict;
    const bool strong_cont_e = daectl::strongly_controllable(t, StrongVariant::WithE).verdict;
    const bool beh_cont = daectl::behaviourally_controllable(t).verdict;
    if (compl_cont) {
      ++cc;
      CHECK(compl_stab);
      CHECK(strong_cont_e);
    }
    if (compl_stab) {
      ++cs;
      CHECK(daectl::freely_initializable(t).verdict);
      CHECK(strong_stab);
    }
    if (strong_stab) CHECK(daectl::impulse_controllable(t).verdict);
    if (strong_cont_e) CHECK(strong_stab);
    if (beh_cont) {
      ++bc;
      CHECK(daectl::behaviourally_stabilizable(t).verdict);
    }
  }
  CHECK(cc > 0);
  CHECK(cs > cc);
  CHECK(bc > 0);
}

TEST_CASE("property: complete controllability matches Kalman for invertible E") {
  oracle::Gen gen(54);
  int controllable = 0, uncontrollable = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    const std::size_t m = static_cast<std::size_t>(gen.integer(1, 2));
    const RatMatrix e = gen.invertible(n, 5);
    RatMatrix a = gen.int_matrix(n, n, -3, 3);
    RatMatrix b = gen.coin() ? gen.int_matrix(n, m, -2, 2) : gen.low_rank(n, m, 1, 0, 1);
    if (gen.integer(0, 3) == 0) {
      // plant an uncontrollable mode: E^{-1}A block triangular, E^{-1}B zero in the lower block
      a = RatMatrix(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i + 1 < n || j + 1 == n) a(i, j) = gen.integer(-3, 3);
      b = gen.int_matrix(n, m, -2, 2);
      for (std::size_t j = 0; j < m; ++j) b(n - 1, j) = 0;
      a = e * a;
      b = e * b;
    }
    const DaeTriple t(e, a, b);
    const RatMatrix einv = daectl::inverse(e);
    const bool kalman = daectl::kalman_controllable(einv * a, einv * b).verdict;
    CHECK(daectl::completely_controllable(t).verdict == kalman);
    (kalman ? controllable : uncontrollable)++;
  }
  CHECK(controllable > 0);
  CHECK(uncontrollable > 0);
}
