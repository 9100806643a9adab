#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "kshift/weight_spec.hpp"
#include "kshift/weights.hpp"

using namespace kshift;

namespace {

// Reference values from tests/oracles/oracle.py (mpmath, 60 digits).
constexpr long double kPsi3 = 1.05088575777097630816469L;
constexpr long double kSqrtN1 = 46340.95000105198533908879L;
constexpr long double kLambdaN1C2 = 1488568576.16663990717320016962L;

const Index kN1 = Index::pow2(31) - Index(1);
const Index kM1 = Index::pow2(127) - Index(1);

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("phi and psi at the origin") {
  CHECK(phi(Index(0)).is_zero());
  CHECK(psi(Index(0)).is_zero());
}

TEST_CASE("phi is +-identity on the witness schedule") {
  CHECK(phi(kN1) == BigReal(kN1, 200));
  CHECK(phi(kM1) == -BigReal(kM1, 200));
  const OscillationFactor at_n1 = oscillation_factor(kN1);
  CHECK(at_n1.exact);
  CHECK(at_n1.value.to_double() == 1.0);
  const OscillationFactor at_m1 = oscillation_factor(kM1);
  CHECK(at_m1.exact);
  CHECK(at_m1.value.to_double() == -1.0);
}

TEST_CASE("psi matches the multiprecision reference") {
  CHECK(std::abs(psi(kN1).to_long_double() - kSqrtN1) <= 1e-14L);
  CHECK(std::abs(psi(Index(3)).to_long_double() - kPsi3) <= 1e-18L);
}

TEST_CASE("index and real evaluation paths agree") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lg(0.0, 60.0);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::int64_t>(std::exp2(lg(rng)));
    const Index idx(n);
    const BigReal x(idx, 160);
    CHECK(std::abs((phi(idx, 160) - phi(x)).to_double()) <= 1e-20 * std::max(1.0, static_cast<double>(n)));
    CHECK(std::abs((psi(idx, 160) - psi(x)).to_double()) <= 1e-20 * std::max(1.0, std::sqrt(static_cast<double>(n))));
  }
  for (unsigned k = 1; k <= 2; ++k) {
    for (WitnessKind kind : {WitnessKind::Nk, WitnessKind::Mk}) {
      const Index n = witness_index(kind, k).index;
      const BigReal x(n, static_cast<int>(n.bit_length()) + 80);
      CHECK(phi(n) == phi(x));
    }
  }
}

TEST_CASE("log weights of the paper sequence") {
  const WeightSequence w = WeightSequence::paper(2.0);
  CHECK(eval_log_weight(w, Index(0)).log_value.is_zero());
  CHECK(std::abs(eval_log_weight(w, kN1).log_value.to_long_double() - kLambdaN1C2) <= 1e-9L);
  for (std::int64_t n : {1, 5, 12, 1000, 123456789}) {
    CHECK(eval_log_weight(w, Index(n)).log_value == eval_log_weight(w, Index(-n)).log_value);
  }
}

TEST_CASE("witness values of the log weights") {
  for (double c : {1.0, 2.0, 10.0}) {
    const WeightSequence w = WeightSequence::paper(c);
    for (unsigned k = 1; k <= 2; ++k) {
      const Index n = witness_index(WitnessKind::Nk, k).index;
      const Index m = witness_index(WitnessKind::Mk, k).index;
      const int prec = static_cast<int>(m.bit_length()) + 80;
      const BigReal ln_c = log(BigReal(c, prec));
      const BigReal want_n = BigReal(n, prec) * ln_c + sqrt(BigReal(n, prec));
      const BigReal want_m = -(BigReal(m, prec) * ln_c + sqrt(BigReal(m, prec)));
      const BigReal got_n = eval_log_weight(w, n).log_value;
      const BigReal got_m = eval_log_weight(w, m).log_value;
      CHECK((abs(got_n - want_n) / abs(want_n)).to_double() <= 1e-12);
      CHECK((abs(got_m - want_m) / abs(want_m)).to_double() <= 1e-12);
    }
  }
}

TEST_CASE("log ratios") {
  CHECK(log_ratio(WeightSequence::constant(), Index(42), Index(1)).is_zero());
  CHECK(rel(log_ratio(WeightSequence::geometric(2.0), Index(7), Index(3)).to_double(), 3 * std::numbers::ln2) <=
        1e-15);
  CHECK(rel(log_ratio(WeightSequence::paper(2.0), Index(0), Index(1)).to_double(), std::numbers::ln2 + 1.0) <=
        1e-15);

  const WeightSequence w = WeightSequence::paper(2.0);
  for (std::int64_t n : {-40, -3, 0, 17, 500}) {
    for (std::int64_t step : {-7, 1, 9}) {
      const double direct = log_ratio(w, Index(n), Index(step)).to_double();
      CHECK(log_ratio_summed(w, Index(n), step) == doctest::Approx(direct).epsilon(1e-13));
    }
  }
}

TEST_CASE("user rules must produce finite log weights") {
  const WeightSequence bad = WeightSequence::user("bad", [](const Index& n) {
    return n.is_zero() ? -std::numeric_limits<double>::infinity() : 0.0;
  });
  CHECK_THROWS_AS(eval_log_weight(bad, Index(0)), std::domain_error);
  CHECK_NOTHROW(eval_log_weight(bad, Index(1)));
}

TEST_CASE("weight sequence validation") {
  CHECK_THROWS_AS(WeightSequence::paper(0.5), std::invalid_argument);
  CHECK_THROWS_AS(WeightSequence::paper(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(WeightSequence::geometric(0.0), std::invalid_argument);
  CHECK_THROWS_AS(WeightSequence::geometric(-2.0), std::invalid_argument);
  CHECK_THROWS_AS(WeightSequence::constant(40), std::invalid_argument);
  CHECK(WeightSequence::paper(2.0).known_symmetric());
  CHECK(WeightSequence::constant().known_symmetric());
  CHECK_FALSE(WeightSequence::geometric(2.0).known_symmetric());
}

TEST_CASE("tail derivative bound against the reference values") {
  const WeightSequence w = WeightSequence::paper(2.0);
  struct Row {
    Index n_min;
    double phi_slope, psi_slope, per_step;
  };
  const Row rows[] = {
      {Index(1), 1.9163128983410509337, 0.95815644917052546683, 2.2864433317262820185},
      {Index::pow2(40), 1.003174325451033406, 4.828632354836950158e-7, 0.69534793815974427523},
      {Index(1000000), 1.0121249332926260706, 0.00052382901007763475978, 0.70207537289628411936},
  };
  for (const Row& r : rows) {
    const TailBound t = tail_derivative_bound(w, r.n_min);
    CHECK(rel(t.phi_slope, r.phi_slope) <= 1e-14);
    CHECK(rel(t.psi_slope, r.psi_slope) <= 1e-14);
    // Rounded upwards, never below the exact value.
    CHECK(t.per_step_log >= r.per_step);
    CHECK(rel(t.per_step_log, r.per_step) <= 1e-14);
  }
}

TEST_CASE("tail derivative bound: epsilon threshold and large n_min") {
  const WeightSequence w = WeightSequence::paper(2.0);
  const double eps = 0.5;
  const auto threshold = static_cast<std::int64_t>(std::ceil(std::exp2(2 * derivative_constant() / eps) - 1));
  CHECK(threshold == 8644);
  CHECK(tail_derivative_bound(w, Index(threshold)).phi_slope <= 1 + eps / 2);

  const TailBound far = tail_derivative_bound(w, Index::pow2(40));
  CHECK(far.phi_slope <= 1.01);
  CHECK(far.psi_slope <= 1e-2);

  CHECK_THROWS_AS(tail_derivative_bound(w, Index(0)), std::invalid_argument);
  CHECK_THROWS_AS(tail_derivative_bound(WeightSequence::constant(), Index(5)), std::invalid_argument);
}

TEST_CASE("tail derivative bound is monotone and tends to (1, 0)") {
  const WeightSequence w = WeightSequence::paper(3.0);
  TailBound prev = tail_derivative_bound(w, Index(1));
  for (unsigned e = 1; e <= 200; e += 7) {
    const TailBound t = tail_derivative_bound(w, Index::pow2(e));
    CHECK(t.phi_slope <= prev.phi_slope);
    CHECK(t.psi_slope <= prev.psi_slope);
    CHECK(t.per_step_log <= prev.per_step_log);
    prev = t;
  }
  CHECK(prev.phi_slope < 1.0 + 1e-3);
  CHECK(prev.psi_slope < 1e-25);
}

TEST_CASE("finite differences respect the tail bound") {
  const WeightSequence w = WeightSequence::paper(2.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lg(0.0, 60.0);
  for (int i = 0; i < 300; ++i) {
    const auto x = static_cast<std::int64_t>(std::exp2(lg(rng))) + 1;
    const TailBound t = tail_derivative_bound(w, Index(x));
    const double dphi = std::abs((phi(Index(x + 1)) - phi(Index(x))).to_double());
    CHECK(dphi <= t.phi_slope);
    CHECK(std::abs(log_ratio(w, Index(x), Index(1)).to_double()) <= t.per_step_log);
    CHECK(std::abs(log_ratio(w, Index(-x - 1), Index(1)).to_double()) <= t.per_step_log);
  }
}

TEST_CASE("witness indices") {
  CHECK(witness_index(WitnessKind::Nk, 1).index == Index(2147483647));
  CHECK(witness_index(WitnessKind::Mk, 1).index == kM1);
  CHECK(witness_index(WitnessKind::Nk, 2).index == Index::pow2(511) - Index(1));
  CHECK(witness_index(WitnessKind::Mk, 2).index == Index::pow2(2047) - Index(1));
  CHECK_THROWS_AS(witness_index(WitnessKind::Nk, 0), std::invalid_argument);
  CHECK_THROWS_AS(witness_index(WitnessKind::Mk, 40), std::out_of_range);
}

TEST_CASE("weight spec grammar") {
  CHECK(parse_weight_spec("paper:c=2").describe() == "paper:c=2");
  CHECK(parse_weight_spec("paper:c=0x1.8p+1").paper_params()->c == 3.0);
  CHECK(std::get<GeometricWeights>(parse_weight_spec("geom:r=0.5").kind()).ratio == 0.5);
  CHECK(std::holds_alternative<ConstantWeights>(parse_weight_spec("const").kind()));
  CHECK(parse_weight_spec("paper:c=2", 200).precision_bits() == 200);

  const WeightSequence u = parse_weight_spec("user:periodic=0,1,0.5");
  CHECK(u.is_user());
  CHECK(eval_log_weight(u, Index(4)).to_double() == 1.0);
  CHECK(eval_log_weight(u, Index(-1)).to_double() == 0.5);
  CHECK(eval_log_weight(u, Index(-3)).to_double() == 0.0);

  for (const char* bad : {"", "paper", "paper:c=", "paper:r=2", "paper:c=2x", "paper:c=0.5", "geom:r=0",
                          "geom:r=inf", "const:1", "user:periodic=", "user:periodic=1,,2", "weird:c=1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_weight_spec(bad), std::invalid_argument);
  }
}
