#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kshift/campaigns.hpp"
#include "kshift/weight_spec.hpp"

using namespace kshift;

TEST_CASE("outcome ordering") {
  CHECK(combine(Outcome::Pass, Outcome::Pass) == Outcome::Pass);
  CHECK(combine(Outcome::Pass, Outcome::Uncertified) == Outcome::Uncertified);
  CHECK(combine(Outcome::Inconclusive, Outcome::Uncertified) == Outcome::Inconclusive);
  CHECK(combine(Outcome::Inconclusive, Outcome::Fail) == Outcome::Fail);
  CHECK(combine(Outcome::Fail, Outcome::Pass) == Outcome::Fail);
  CHECK(to_string(Outcome::Uncertified) == "uncertified");
  CHECK(static_cast<int>(Outcome::Inconclusive) == 3);
}

TEST_CASE("power bounds: geometric and constant weights") {
  const ShiftBoundReport shrink = shift_bound_check(WeightSequence::geometric(0.5), 1, 3, 1000, 6);
  CHECK(shrink.hypothesis_holds);
  CHECK(shrink.outcome == Outcome::Pass);
  CHECK(shrink.rows.size() == 7);
  for (const ShiftBoundRow& r : shrink.rows) CHECK(r.holds);

  const ShiftBoundReport grow = shift_bound_check(WeightSequence::geometric(2.0), 1, 3, 1000, 6);
  CHECK_FALSE(grow.hypothesis_holds);
  CHECK(grow.outcome == Outcome::Inconclusive);

  const ShiftBoundReport scaled = shift_bound_check(WeightSequence::geometric(2.0), 2, 3, 1000, 6);
  CHECK(scaled.outcome == Outcome::Pass);
  CHECK(scaled.radius_bound_log == doctest::Approx(std::numbers::ln2));

  const ShiftBoundReport back = shift_bound_check(WeightSequence::geometric(2.0), 3, 3, 1000, 6);
  CHECK(back.kind == OperatorKind::Inverse);
  CHECK(back.c0_exponent == 9);
  CHECK(back.outcome == Outcome::Pass);

  for (int lemma = 1; lemma <= 4; ++lemma) {
    CHECK(shift_bound_check(WeightSequence::constant(), lemma, 0, 100, 4).outcome == Outcome::Pass);
  }
}

TEST_CASE("power bounds: paper weights") {
  const WeightSequence w = WeightSequence::paper(2.0);
  // Step ratios exceed 1 on the right tail, so the unscaled hypotheses fail.
  CHECK(shift_bound_check(w, 1, 1000, 100000, 8).outcome == Outcome::Inconclusive);
  CHECK(shift_bound_check(w, 3, 1000, 100000, 8).outcome == Outcome::Inconclusive);

  for (int lemma : {2, 4}) {
    const ShiftBoundReport r = shift_bound_check(w, lemma, 1000, 100000, 8);
    CAPTURE(lemma);
    CHECK(r.hypothesis_certified);
    CHECK(r.slope_log >= std::numbers::ln2);
    CHECK(r.all_rows_certified);
    CHECK(r.outcome == Outcome::Pass);
    CHECK(r.c0_exponent == (lemma == 2 ? 2001 : 2003));
  }

  CHECK_THROWS_AS(shift_bound_check(w, 2, 1, 100, 4), std::invalid_argument);
  CHECK_THROWS_AS(shift_bound_check(w, 5, 10, 100, 4), std::invalid_argument);
  CHECK_THROWS_AS(shift_bound_check(w, 2, 100, 100, 4), std::invalid_argument);
}

TEST_CASE("power bounds: user weights are window evidence only") {
  const ShiftBoundReport r = shift_bound_check(parse_weight_spec("user:periodic=0,0.5,0.25"), 2, 2, 1000, 4);
  CHECK(r.hypothesis_holds);
  CHECK_FALSE(r.hypothesis_certified);
  CHECK(r.outcome == Outcome::Uncertified);
}

TEST_CASE("flip campaign") {
  const FlipCampaign p = flip_campaign(WeightSequence::paper(2.0), 1000, 100000);
  CHECK(p.flip.samples == 2001);
  CHECK(p.flip.max_deviation <= 1e-14);
  CHECK(p.forward_norm_log == doctest::Approx(p.inverse_norm_log));
  CHECK(p.outcome == Outcome::Pass);

  const FlipCampaign g = flip_campaign(WeightSequence::geometric(2.0), 10, 100);
  CHECK(g.outcome == Outcome::Inconclusive);
  CHECK_FALSE(g.note.empty());
}

TEST_CASE("krein campaign") {
  const KreinCampaign k = krein_campaign(WeightSequence::paper(2.0), KreinCampaignOptions{});
  CHECK(k.pass);
  CHECK(k.battery.all_pass);
  CHECK(k.j_unitarity.samples == 200);
  CHECK(k.density_skipped == 0);
  CHECK(k.density_max_error <= 1e-12);
  CHECK(k.sign_samples == 50);
  CHECK(k.sign_max_relative_error <= 1e-12);

  const KreinCampaign again = krein_campaign(WeightSequence::paper(2.0), KreinCampaignOptions{});
  CHECK(again.j_unitarity.max_relative_deviation == k.j_unitarity.max_relative_deviation);
  CHECK(again.sign_max_relative_error == k.sign_max_relative_error);

  KreinCampaignOptions geo;
  geo.range = 10;
  CHECK(krein_campaign(WeightSequence::geometric(3.0), geo).pass);

  KreinCampaignOptions bad;
  bad.range = -1;
  CHECK_THROWS_AS(krein_campaign(WeightSequence::paper(2.0), bad), std::invalid_argument);
}

TEST_CASE("radius campaign and direct sums") {
  const WeightSequence w = WeightSequence::paper(2.0);
  const RadiusCampaign r = radius_campaign(w, 8, 100000, GrowthHorizon{});
  CHECK(r.outcome == Outcome::Pass);
  CHECK(r.expected_log == doctest::Approx(std::numbers::ln2));
  // The adjoint witnesses sit at m_k, where 1/sqrt(m_k) is below double resolution of ln 2.
  for (const SpecRadEstimate& e : r.estimates) {
    CHECK(e.lower_log >= std::numbers::ln2);
    CHECK(e.upper_log >= e.lower_log);
  }
  CHECK(r.growth.all_unbounded);

  CHECK(radius_campaign(WeightSequence::geometric(2.0), 4, 100, GrowthHorizon{}).outcome == Outcome::Inconclusive);

  const SpecRadEstimate two = specrad_bounds(ShiftOperator{WeightSequence::geometric(2.0)}, 4, 100);
  const SpecRadEstimate three = specrad_bounds(ShiftOperator{WeightSequence::geometric(3.0)}, 4, 100);
  const DirectSumRadius d = direct_sum_radius(two, three);
  CHECK(d.upper_certified);
  CHECK(d.upper_log == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(d.lower_log == doctest::Approx(std::log(3.0)).epsilon(1e-14));

  const SpecRadEstimate short_sweep = specrad_bounds(ShiftOperator{WeightSequence::geometric(2.0)}, 2, 100);
  CHECK_THROWS_AS(direct_sum_radius(two, short_sweep), std::invalid_argument);
}

TEST_CASE("theorem campaign") {
  KreinCampaignOptions small;
  small.range = 10;
  const TheoremCampaign t = theorem_campaign(WeightSequence::paper(2.0), 8, 100000, GrowthHorizon{}, small);
  CHECK(t.radius_outcome == Outcome::Pass);
  CHECK(t.growth_outcome == Outcome::Pass);
  CHECK(t.krein_outcome == Outcome::Pass);
  CHECK(t.outcome == Outcome::Pass);
  CHECK(t.hat.lower_log > std::numbers::ln2);
  CHECK(t.hat_inverse.lower_log > std::numbers::ln2);
  CHECK(t.hat.upper_log >= t.hat.lower_log);

  CHECK(theorem_campaign(WeightSequence::constant(), 4, 100, GrowthHorizon{}, small).outcome == Outcome::Inconclusive);
}
