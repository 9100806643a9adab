#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <variant>

#include "kshift/krein.hpp"

using namespace kshift;

namespace {

DoubledVector pair_of(double plus, double minus, std::int64_t n = 0) {
  return {FinSuppVector::basis(Index(n), plus), FinSuppVector::basis(Index(n), minus)};
}

FinSuppVector random_leg(std::mt19937_64& rng, std::int64_t radius) {
  std::uniform_int_distribution<int> size(0, 5);
  std::uniform_int_distribution<std::int64_t> where(-radius, radius);
  std::uniform_real_distribution<double> value(-2.0, 2.0);
  FinSuppVector x;
  const int k = size(rng);
  for (int i = 0; i < k; ++i) x.add(Index(where(rng)), value(rng));
  return x;
}

DoubledVector random_doubled(std::mt19937_64& rng, std::int64_t radius = 30) {
  return {random_leg(rng, radius), random_leg(rng, radius)};
}

double rel_gap(const DoubledVector& a, const DoubledVector& b) {
  const double scale = std::max(norm(a), norm(b));
  return scale == 0.0 ? 0.0 : norm(a - b) / scale;
}

const DoubledOperator kPaper{WeightSequence::paper(2.0)};

}  // namespace

TEST_CASE("indefinite inner product on the generators at the origin") {
  CHECK(indefinite_inner(pair_of(1, 1), pair_of(1, 1)) == 2.0);
  CHECK(indefinite_inner(pair_of(1, -1), pair_of(1, -1)) == -2.0);
  const DoubledVector f{FinSuppVector::basis(Index(2), 3.0), {}};
  const DoubledVector g{FinSuppVector::basis(Index(2), -5.0), {}};
  CHECK(indefinite_inner(f, g) == 0.0);
}

TEST_CASE("swap form is symmetric and J-invariant") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const DoubledVector x = random_doubled(rng), y = random_doubled(rng);
    CHECK(indefinite_inner(x, y) == doctest::Approx(indefinite_inner(y, x)).epsilon(1e-15));
    CHECK(indefinite_inner(swap_legs(x), swap_legs(y)) == doctest::Approx(indefinite_inner(x, y)).epsilon(1e-15));
    CHECK(swap_legs(swap_legs(x)) == x);
  }
}

TEST_CASE("hat_apply examples") {
  const DoubledVector one = hat_apply(kPaper, Index(1), pair_of(1, 1));
  const double r = std::exp(std::numbers::ln2 + 1.0);
  CHECK(one.plus_leg.at(Index(1)) == doctest::Approx(r).epsilon(1e-15));
  CHECK(one.minus_leg.at(Index(1)) == doctest::Approx(1 / r).epsilon(1e-15));

  std::mt19937_64 rng(2);
  const DoubledVector x = random_doubled(rng);
  CHECK(hat_apply(kPaper, Index(0), x) == x);

  const DoubledVector c = hat_apply(DoubledOperator{WeightSequence::constant()}, Index(3), pair_of(1, 1));
  CHECK(c == pair_of(1, 1, 3));
}

TEST_CASE("J-unitarity on random pairs and on the generators") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> pw(-20, 20);
  std::vector<JUnitarySample> samples;
  for (int t = 0; t < 200; ++t) samples.push_back({random_doubled(rng, 50), random_doubled(rng, 50), pw(rng)});
  for (const DoubledOperator& op :
       {kPaper, DoubledOperator{WeightSequence::geometric(3.0)}, DoubledOperator{WeightSequence::paper(1.0)}}) {
    const JUnitarityReport r = j_unitarity_check(op, samples);
    CHECK(r.samples == 200);
    CHECK(r.max_relative_deviation <= 1e-12);
    CHECK(r.pass);
  }

  for (std::int64_t n : {-9, 0, 4, 20}) {
    const DoubledVector g = hat_apply(kPaper, Index(n), pair_of(1, 1));
    const DoubledVector h = hat_apply(kPaper, Index(n), pair_of(1, -1));
    CHECK(indefinite_inner(g, g) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(indefinite_inner(g, h) == 0.0);
  }
}

TEST_CASE("pairing identity battery") {
  const BatteryReport p = lemma7_battery(kPaper, -20, 20);
  CHECK(p.all_pass);
  REQUIRE(p.identities.size() == 5);
  CHECK(identity_id(p.identities[0].id) == "plus_plus_offdiag");
  CHECK(p.identities[0].pairs == 41 * 40);
  CHECK(p.identities[4].pairs == 41 * 41);
  for (const IdentityResult& r : p.identities) CHECK(r.max_abs_deviation <= 1e-12);

  const BatteryReport g = lemma7_battery(DoubledOperator{WeightSequence::geometric(2.0)}, -10, 10);
  CHECK(g.all_pass);

  // Diagonal values at a single point are +-2 up to rounding of the two reciprocal factors.
  const BatteryReport d = lemma7_battery(kPaper, 0, 0);
  CHECK(d.identities[1].max_abs_deviation == 0.0);
  CHECK(d.identities[3].max_abs_deviation == 0.0);

  CHECK_THROWS_AS(lemma7_battery(kPaper, 3, 2), std::invalid_argument);
}

TEST_CASE("spans are invariant under one step in either direction") {
  for (SpanSign s : {SpanSign::Plus, SpanSign::Minus}) {
    for (std::int64_t n = -10; n <= 10; ++n) {
      const DoubledVector g = generator(kPaper, s, Index(n));
      CHECK(rel_gap(hat_apply(kPaper, Index(1), g), generator(kPaper, s, Index(n + 1))) <= 1e-14);
      CHECK(rel_gap(hat_apply(kPaper, Index(-1), g), generator(kPaper, s, Index(n - 1))) <= 1e-14);
    }
  }
}

TEST_CASE("span membership") {
  const auto plus_member = span_membership(kPaper, SpanSign::Plus, pair_of(1, 1));
  REQUIRE(std::holds_alternative<SpanMember>(plus_member));
  CHECK(std::get<SpanMember>(plus_member).coefficients.at(Index(0)) == 1.0);

  // b_N (+) (v_0/v_N)^2 b_N lies in the plus span.
  const std::int64_t n = 6;
  const double gap = -log_ratio(kPaper.base_weights, Index(0), Index(n)).to_double();
  const DoubledVector x{FinSuppVector::basis(Index(n)), FinSuppVector::basis(Index(n), std::exp(2 * gap))};
  const auto m = span_membership(kPaper, SpanSign::Plus, x);
  REQUIRE(std::holds_alternative<SpanMember>(m));
  CHECK(std::get<SpanMember>(m).coefficients.at(Index(n)) == doctest::Approx(std::exp(gap)).epsilon(1e-14));

  const auto not_member = span_membership(kPaper, SpanSign::Plus, pair_of(1, -1));
  REQUIRE(std::holds_alternative<SpanNonMember>(not_member));
  const DoubledVector& res = std::get<SpanNonMember>(not_member).residual;
  CHECK(res.plus_leg.empty());
  CHECK(res.minus_leg.at(Index(0)) == -2.0);
}

TEST_CASE("combinations of generators are members with their coefficients") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> alpha(-1.0, 1.0);
  for (SpanSign s : {SpanSign::Plus, SpanSign::Minus}) {
    DoubledVector x;
    std::map<Index, double> want;
    for (std::int64_t n = -8; n <= 8; n += 2) {
      const double a = alpha(rng);
      want[Index(n)] = a;
      x = x + scaled(generator(kPaper, s, Index(n)), a);
    }
    const auto m = span_membership(kPaper, s, x);
    REQUIRE(std::holds_alternative<SpanMember>(m));
    for (const auto& [n, a] : want) {
      CHECK(std::get<SpanMember>(m).coefficients.at(n) == doctest::Approx(a).epsilon(1e-13));
    }
  }
}

TEST_CASE("only the zero vector lies in both spans") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const DoubledVector x = random_doubled(rng);
    const bool in_plus = std::holds_alternative<SpanMember>(span_membership(kPaper, SpanSign::Plus, x));
    const bool in_minus = std::holds_alternative<SpanMember>(span_membership(kPaper, SpanSign::Minus, x));
    if (in_plus && in_minus) CHECK(norm(x) == 0.0);
  }
  CHECK(std::holds_alternative<SpanMember>(span_membership(kPaper, SpanSign::Plus, DoubledVector{})));
  CHECK(std::holds_alternative<SpanMember>(span_membership(kPaper, SpanSign::Minus, DoubledVector{})));
}

TEST_CASE("non-degeneracy: every nonzero vector pairs with some generator") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    const DoubledVector x = random_doubled(rng);
    if (norm(x) == 0.0) continue;
    bool found = false;
    std::vector<Index> support;
    for (const auto& [n, v] : x.plus_leg.coefficients()) support.push_back(n);
    for (const auto& [n, v] : x.minus_leg.coefficients()) support.push_back(n);
    for (const Index& n : support) {
      for (SpanSign s : {SpanSign::Plus, SpanSign::Minus}) {
        if (indefinite_inner(generator(kPaper, s, n), x) != 0.0) found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("density decomposition") {
  const DensityWitness zero = density_witness(kPaper, Index(0));
  CHECK(zero.log_plus_leg_coefficient == doctest::Approx(-std::numbers::ln2));
  CHECK(zero.log_minus_leg_coefficient == doctest::Approx(-std::numbers::ln2));
  CHECK(*zero.plus_leg_error == 0.0);
  CHECK(*zero.minus_leg_error == 0.0);

  const DensityWitness five = density_witness(kPaper, Index(5));
  const double gap = -log_ratio(kPaper.base_weights, Index(0), Index(5)).to_double();
  CHECK(five.log_plus_leg_coefficient == doctest::Approx(gap - std::numbers::ln2).epsilon(1e-14));
  CHECK(*five.plus_leg_error <= 1e-12);
  CHECK(*five.minus_leg_error <= 1e-12);

  for (std::int64_t n = -30; n <= 30; ++n) {
    const DensityWitness d = density_witness(kPaper, Index(n));
    CHECK(*d.plus_leg_error <= 1e-12);
    CHECK(*d.minus_leg_error <= 1e-12);
  }

  const DensityWitness huge = density_witness(kPaper, witness_index(WitnessKind::Nk, 1).index);
  CHECK_FALSE(huge.plus_leg_error.has_value());
  CHECK(huge.log_minus_leg_coefficient > 1e9);
}

TEST_CASE("sign definiteness") {
  CHECK(sign_definiteness_check(kPaper, SpanSign::Plus, {{0, 1.0}}) == 2.0);
  CHECK(sign_definiteness_check(kPaper, SpanSign::Plus, {{0, 3.0}, {7, 4.0}}) == doctest::Approx(50.0).epsilon(1e-14));
  CHECK(sign_definiteness_check(kPaper, SpanSign::Minus, {{-2, 1.0}, {3, 1.0}}) == doctest::Approx(-4.0).epsilon(1e-14));
  CHECK_THROWS_AS(sign_definiteness_check(kPaper, SpanSign::Plus, {{1, 0.0}}), std::invalid_argument);
}
