#include "kshift/campaigns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "kshift/kernels.hpp"

namespace kshift {

namespace {

constexpr double kLogSlack = 1e-12;

int severity(Outcome o) {
  switch (o) {
    case Outcome::Pass: return 0;
    case Outcome::Uncertified: return 1;
    case Outcome::Inconclusive: return 2;
    case Outcome::Fail: return 3;
  }
  return 3;
}

/// max of sign * log_ratio(n, 1) over n0 <= |n| <= window.
double windowed_step_max(const WeightSequence& w, std::int64_t n0, std::int64_t window, int sign) {
  const kernels::LogWeightTable table(w, -window - 1, window + 1);
  const auto right = table.max_log_ratio(n0, window, 1, sign);
  const auto left = table.max_log_ratio(-window, -n0, 1, sign);
  return static_cast<double>(std::max(right.value, left.value));
}

FinSuppVector random_vector(std::mt19937_64& rng, std::int64_t radius) {
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_int_distribution<std::int64_t> where(-radius, radius);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  FinSuppVector x;
  const int k = size(rng);
  for (int i = 0; i < k; ++i) x.add(Index(where(rng)), value(rng));
  return x;
}

}  // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Uncertified: return "uncertified";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

Outcome combine(Outcome a, Outcome b) { return severity(a) >= severity(b) ? a : b; }

ShiftBoundReport shift_bound_check(const WeightSequence& w, int lemma, std::int64_t n0, std::int64_t window,
                                   int max_power_exponent) {
  if (lemma < 1 || lemma > 4) throw std::invalid_argument("shift_bound_check: lemma must be 1, 2, 3 or 4");
  if (n0 < 0) throw std::invalid_argument("shift_bound_check: n0 must be >= 0");
  if (window < n0 + 1) throw std::invalid_argument("shift_bound_check: window must exceed n0");
  if (w.is_paper() && n0 < 2) throw std::invalid_argument("shift_bound_check: paper weights need n0 >= 2");

  ShiftBoundReport rep;
  rep.lemma = lemma;
  rep.n0 = n0;
  const bool inverse_side = lemma >= 3;
  const bool scaled = lemma == 2 || lemma == 4;
  rep.kind = inverse_side ? OperatorKind::Inverse : OperatorKind::Forward;
  // Hypothesis in the form sign * ln(v_{n+1}/v_n) <= slope for |n| >= n0.
  const int sign = inverse_side ? -1 : 1;

  if (std::holds_alternative<ConstantWeights>(w.kind())) {
    rep.slope_log = 0.0;
    rep.hypothesis_holds = rep.hypothesis_certified = true;
    rep.hypothesis_argument = "constant weights: every step ratio is 1";
  } else if (const auto* g = std::get_if<GeometricWeights>(&w.kind())) {
    const double step = sign * std::log(g->ratio);
    rep.slope_log = scaled ? step : 0.0;
    rep.hypothesis_holds = step <= rep.slope_log;
    rep.hypothesis_certified = true;
    rep.hypothesis_argument = "geometric weights: every step ratio equals r";
  } else if (w.is_paper() && scaled) {
    // Steps from -n0 reach modulus n0 - 1, so the bound is taken from there.
    rep.slope_log = tail_derivative_bound(w, Index(n0 - 1)).per_step_log;
    rep.hypothesis_holds = rep.hypothesis_certified = true;
    rep.hypothesis_argument = "mean value bound on the log-weight derivative beyond n0 - 1";
  } else {
    const double seen = windowed_step_max(w, n0, window, sign);
    rep.slope_log = scaled ? seen : 0.0;
    rep.hypothesis_holds = seen <= rep.slope_log;
    rep.hypothesis_certified = false;
    rep.hypothesis_argument = rep.hypothesis_holds ? "window scan only; no tail structure"
                                                   : "violated inside the window";
  }

  // c0 (resp. c1): largest rescaled step ratio near the origin.
  const std::int64_t reach = inverse_side ? n0 + 1 : n0;
  rep.c0_exponent = inverse_side ? 2 * n0 + 3 : 2 * n0 + 1;
  const kernels::LogWeightTable near(w, -reach - 1, reach + 1, false);
  const std::int64_t step = inverse_side ? -1 : 1;
  for (std::int64_t n = -reach; n <= reach; ++n) {
    const double r = static_cast<double>(near.at(n + step) - near.at(n)) - rep.slope_log;
    rep.c0_log = std::max(rep.c0_log, r);
  }
  rep.radius_bound_log = rep.slope_log;

  const NormScanner scanner(ShiftOperator{w, rep.kind}, window, std::int64_t{1} << max_power_exponent);
  rep.all_rows_certified = true;
  bool rows_hold = true;
  for (std::int64_t n = 1; n <= (std::int64_t{1} << max_power_exponent); n *= 2) {
    const NormCertificate cert = scanner.certificate(n);
    ShiftBoundRow row;
    row.power = n;
    row.log_norm = cert.log_norm();
    row.bound_log = static_cast<double>(n) * rep.slope_log + static_cast<double>(rep.c0_exponent) * rep.c0_log;
    row.holds = row.log_norm <= row.bound_log + 1e-9 * std::max(1.0, std::abs(row.bound_log));
    rep.all_rows_certified = rep.all_rows_certified && cert.certified();
    rows_hold = rows_hold && row.holds;
    rep.rows.push_back(row);
  }

  if (!rep.hypothesis_holds) {
    rep.outcome = Outcome::Inconclusive;
  } else if (!rows_hold) {
    rep.outcome = Outcome::Fail;
  } else if (!rep.hypothesis_certified || !rep.all_rows_certified) {
    rep.outcome = Outcome::Uncertified;
  } else {
    rep.outcome = Outcome::Pass;
  }
  return rep;
}

FlipCampaign flip_campaign(const WeightSequence& w, std::int64_t radius, std::int64_t window) {
  FlipCampaign out;
  if (!w.known_symmetric()) {
    out.note = "weights " + w.describe() + " are not known to satisfy v_n = v_{-n}";
    out.outcome = Outcome::Inconclusive;
    return out;
  }
  std::vector<Index> sample;
  for (std::int64_t n = -radius; n <= radius; ++n) sample.emplace_back(n);
  out.flip = flip_conjugate_check(w, sample);
  const NormCertificate f = norm_power(ShiftOperator{w, OperatorKind::Forward}, 1, window);
  const NormCertificate i = norm_power(ShiftOperator{w, OperatorKind::Inverse}, 1, window);
  out.forward_norm_log = f.log_norm();
  out.inverse_norm_log = i.log_norm();
  const bool norms_match = std::abs(out.forward_norm_log - out.inverse_norm_log) <= kLogSlack;
  if (!out.flip.pass || !norms_match) {
    out.outcome = Outcome::Fail;
  } else {
    out.outcome = f.certified() && i.certified() ? Outcome::Pass : Outcome::Uncertified;
  }
  return out;
}

KreinCampaign krein_campaign(const WeightSequence& w, const KreinCampaignOptions& opt) {
  if (opt.range < 0) throw std::invalid_argument("krein_campaign: range must be >= 0");
  const DoubledOperator op{w};
  KreinCampaign out;
  out.range = opt.range;
  out.density_range = opt.density_range;
  out.battery = lemma7_battery(op, -opt.range, opt.range, opt.tolerance);

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::int64_t> power(-opt.range, opt.range);
  std::vector<JUnitarySample> samples;
  samples.reserve(opt.j_samples);
  for (std::size_t i = 0; i < opt.j_samples; ++i) {
    JUnitarySample s;
    s.x = {random_vector(rng, opt.support_radius), random_vector(rng, opt.support_radius)};
    s.y = {random_vector(rng, opt.support_radius), random_vector(rng, opt.support_radius)};
    s.power = power(rng);
    samples.push_back(std::move(s));
  }
  out.j_unitarity = j_unitarity_check(op, samples, opt.tolerance);

  for (std::int64_t n = -opt.density_range; n <= opt.density_range; ++n) {
    const DensityWitness d = density_witness(op, Index(n));
    if (!d.plus_leg_error || !d.minus_leg_error) {
      ++out.density_skipped;
      continue;
    }
    out.density_max_error = std::max({out.density_max_error, *d.plus_leg_error, *d.minus_leg_error});
  }

  std::uniform_int_distribution<int> count(1, 10);
  std::uniform_real_distribution<double> alpha(-1.0, 1.0);
  for (std::size_t i = 0; i < opt.sign_samples; ++i) {
    std::map<std::int64_t, double> coefficients;
    const int k = count(rng);
    for (int j = 0; j < k; ++j) coefficients[power(rng)] = alpha(rng);
    double sum_sq = 0.0;
    for (const auto& [n, a] : coefficients) sum_sq += a * a;
    if (sum_sq == 0.0) continue;
    const SpanSign sign = i % 2 == 0 ? SpanSign::Plus : SpanSign::Minus;
    const double want = (sign == SpanSign::Plus ? 2.0 : -2.0) * sum_sq;
    const double got = sign_definiteness_check(op, sign, coefficients);
    out.sign_max_relative_error = std::max(out.sign_max_relative_error, std::abs(got - want) / std::abs(want));
    ++out.sign_samples;
  }

  out.pass = out.battery.all_pass && out.j_unitarity.pass && out.density_max_error <= opt.tolerance &&
             out.sign_max_relative_error <= opt.tolerance;
  return out;
}

RadiusCampaign radius_campaign(const WeightSequence& w, int max_power_exponent, std::int64_t window,
                               const GrowthHorizon& horizon) {
  RadiusCampaign out;
  const PaperWeights* p = w.paper_params();
  if (p == nullptr) {
    out.outcome = Outcome::Inconclusive;
    return out;
  }
  out.expected_log = std::log(p->c);
  bool consistent = true;
  bool certified = true;
  for (std::size_t i = 0; i < 4; ++i) {
    out.estimates[i] = specrad_bounds(ShiftOperator{w, kAllKinds[i]}, max_power_exponent, window,
                                      horizon.witness_k_max);
    const SpecRadEstimate& e = out.estimates[i];
    consistent = consistent && e.lower_log >= out.expected_log - kLogSlack &&
                 e.upper_log >= out.expected_log - kLogSlack;
    certified = certified && e.upper_certified;
  }
  out.growth = s_trivial_all_four(w, p->c, horizon);
  if (!consistent || !out.growth.all_unbounded) {
    out.outcome = Outcome::Fail;
  } else {
    out.outcome = certified ? Outcome::Pass : Outcome::Uncertified;
  }
  return out;
}

DirectSumRadius direct_sum_radius(const SpecRadEstimate& a, const SpecRadEstimate& b) {
  if (a.certificates.size() != b.certificates.size()) {
    throw std::invalid_argument("direct_sum_radius: estimates use different power sweeps");
  }
  DirectSumRadius out;
  out.lower_log = std::max(a.lower_log, b.lower_log);
  out.upper_log = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.certificates.size(); ++i) {
    const NormCertificate& ca = a.certificates[i];
    const NormCertificate& cb = b.certificates[i];
    const double per = std::max(ca.log_norm(), cb.log_norm()) / static_cast<double>(ca.power);
    if (per < out.upper_log) {
      out.upper_log = per;
      out.upper_certified = ca.certified() && cb.certified();
    }
  }
  return out;
}

TheoremCampaign theorem_campaign(const WeightSequence& w, int max_power_exponent, std::int64_t window,
                                 const GrowthHorizon& horizon, const KreinCampaignOptions& krein_options) {
  TheoremCampaign out;
  const PaperWeights* p = w.paper_params();
  if (p == nullptr) {
    out.outcome = Outcome::Inconclusive;
    return out;
  }
  out.c = p->c;
  const double ln_c = std::log(p->c);

  const RadiusCampaign radius = radius_campaign(w, max_power_exponent, window, horizon);
  // kAllKinds order: Forward, Inverse, AdjointInverse, Adjoint.
  out.hat = direct_sum_radius(radius.estimates[0], radius.estimates[2]);
  out.hat_inverse = direct_sum_radius(radius.estimates[1], radius.estimates[3]);
  const auto consistent = [&](const DirectSumRadius& r) {
    return r.lower_log >= ln_c - kLogSlack && r.upper_log >= ln_c - kLogSlack;
  };
  if (!consistent(out.hat) || !consistent(out.hat_inverse)) {
    out.radius_outcome = Outcome::Fail;
  } else {
    out.radius_outcome =
        out.hat.upper_certified && out.hat_inverse.upper_certified ? Outcome::Pass : Outcome::Uncertified;
  }

  out.growth = radius.growth;
  out.growth_outcome = out.growth.all_unbounded ? Outcome::Pass : Outcome::Fail;

  out.krein = krein_campaign(w, krein_options);
  out.krein_outcome = out.krein.pass ? Outcome::Pass : Outcome::Fail;

  out.outcome = combine(combine(out.radius_outcome, out.growth_outcome), out.krein_outcome);
  return out;
}

}  // namespace kshift
