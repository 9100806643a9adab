#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kshift/growth.hpp"
#include "kshift/krein.hpp"
#include "kshift/shift_ops.hpp"

// Verification campaigns that combine the primitives of the other modules.
// Each campaign produces a report and an Outcome mapped onto exit codes.
namespace kshift {

enum class Outcome { Pass = 0, Fail = 1, Uncertified = 2, Inconclusive = 3 };

std::string_view to_string(Outcome outcome);

/// Worst of two outcomes: Fail > Inconclusive > Uncertified > Pass.
Outcome combine(Outcome a, Outcome b);

// ---------------------------------------------------------------------------
// Power bounds from a tail hypothesis on the step ratios.
//
//   1: |v_{n+1}/v_n| <= 1 for |n| >= n0    =>  ||V^N||  <= c0^{2 n0 + 1}
//   2: |v_{n+1}/v_n| <= c for |n| >= n0    =>  ||V^N||  <= c^N c0^{2 n0 + 1}
//   3: |v_{n+1}/v_n| >= 1 for |n| >= n0    =>  ||V^-N|| <= c1^{2 n0 + 3}
//   4: |v_{n+1}/v_n| >= 1/c for |n| >= n0  =>  ||V^-N|| <= c^N c1^{2 n0 + 3}
//
// c0, c1 are the largest rescaled step ratios near the origin (at least 1).

struct ShiftBoundRow {
  std::int64_t power = 1;
  double log_norm = 0.0;  ///< certified (or window) log ||op^N||
  double bound_log = 0.0; ///< N ln c + exponent ln c0
  bool holds = false;
};

struct ShiftBoundReport {
  int lemma = 1;
  OperatorKind kind = OperatorKind::Forward;
  std::int64_t n0 = 0;
  double slope_log = 0.0;  ///< ln c of the hypothesis (0 for lemmas 1 and 3)
  bool hypothesis_holds = false;
  bool hypothesis_certified = false;
  std::string hypothesis_argument;
  double c0_log = 0.0;
  std::int64_t c0_exponent = 0;
  std::vector<ShiftBoundRow> rows;
  bool all_rows_certified = false;
  /// Conclusion r <= c, in log form.
  double radius_bound_log = 0.0;
  Outcome outcome = Outcome::Inconclusive;
};

/// lemma in {1, 2, 3, 4}. For 2 and 4 the hypothesis constant is derived
/// from the weights: the analytic step bound at n0 for the paper weights,
/// the exact ratio for geometric ones, and the windowed maximum otherwise.
ShiftBoundReport shift_bound_check(const WeightSequence& w, int lemma, std::int64_t n0, std::int64_t window,
                                   int max_power_exponent);

// ---------------------------------------------------------------------------

struct FlipCampaign {
  FlipReport flip;
  double forward_norm_log = 0.0;
  double inverse_norm_log = 0.0;
  Outcome outcome = Outcome::Inconclusive;
  std::string note;
};

/// R^-1 V R = V^-1 on |n| <= radius, plus ||V|| = ||V^-1||.
FlipCampaign flip_campaign(const WeightSequence& w, std::int64_t radius, std::int64_t window);

// ---------------------------------------------------------------------------

struct KreinCampaign {
  std::int64_t range = 20;
  BatteryReport battery;
  JUnitarityReport j_unitarity;
  std::int64_t density_range = 30;
  double density_max_error = 0.0;
  std::size_t density_skipped = 0;  ///< powers whose coefficients leave double range
  std::size_t sign_samples = 0;
  double sign_max_relative_error = 0.0;
  bool pass = false;
};

struct KreinCampaignOptions {
  std::int64_t range = 20;
  std::uint64_t seed = 1;
  std::size_t j_samples = 200;
  std::int64_t support_radius = 50;
  std::int64_t density_range = 30;
  std::size_t sign_samples = 50;
  double tolerance = 1e-12;
};

/// Pairing identities over [-range, range], J-unitarity on random pairs,
/// density reconstruction and sign definiteness on random coefficient sets.
KreinCampaign krein_campaign(const WeightSequence& w, const KreinCampaignOptions& options);

// ---------------------------------------------------------------------------

struct RadiusCampaign {
  std::array<SpecRadEstimate, 4> estimates;  ///< kAllKinds order
  AllFourReport growth;
  double expected_log = 0.0;                 ///< ln c
  Outcome outcome = Outcome::Inconclusive;
};

/// For the paper weights: every power family has radius c and S(., c) = {0}.
RadiusCampaign radius_campaign(const WeightSequence& w, int max_power_exponent, std::int64_t window,
                               const GrowthHorizon& horizon);

// ---------------------------------------------------------------------------

/// Spectral-radius interval of a direct sum A (+) B from the certificates of
/// both summands: ||(A (+) B)^N|| = max(||A^N||, ||B^N||).
struct DirectSumRadius {
  double lower_log = 0.0;
  double upper_log = 0.0;
  bool upper_certified = false;
};

DirectSumRadius direct_sum_radius(const SpecRadEstimate& a, const SpecRadEstimate& b);

struct TheoremCampaign {
  double c = 2.0;
  DirectSumRadius hat;          ///< V-hat = V (+) V*^-1
  DirectSumRadius hat_inverse;  ///< V-hat^-1 = V^-1 (+) V*
  Outcome radius_outcome = Outcome::Inconclusive;
  AllFourReport growth;
  Outcome growth_outcome = Outcome::Inconclusive;
  KreinCampaign krein;
  Outcome krein_outcome = Outcome::Inconclusive;
  Outcome outcome = Outcome::Inconclusive;
};

TheoremCampaign theorem_campaign(const WeightSequence& w, int max_power_exponent, std::int64_t window,
                                 const GrowthHorizon& horizon, const KreinCampaignOptions& krein_options);

}  // namespace kshift
