#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kshift/shift_ops.hpp"

namespace kshift {

/// f (+) g in H (+) H.
struct DoubledVector {
  FinSuppVector plus_leg;
  FinSuppVector minus_leg;

  friend bool operator==(const DoubledVector&, const DoubledVector&) = default;
};

DoubledVector operator+(const DoubledVector& a, const DoubledVector& b);
DoubledVector operator-(const DoubledVector& a, const DoubledVector& b);
DoubledVector scaled(const DoubledVector& x, double factor);
double norm(const DoubledVector& x);

/// J swaps the legs: J(f (+) g) = g (+) f.
DoubledVector swap_legs(const DoubledVector& x);

/// {f (+) g, f' (+) g'} = (f, g') + (g, f') = (Jx, y).
double indefinite_inner(const DoubledVector& x, const DoubledVector& y);

/// V-hat = V (+) V*^-1 built from a single weight sequence.
struct DoubledOperator {
  WeightSequence base_weights;
};

/// V-hat^N x: V^N on the plus leg, V*^-N on the minus leg.
DoubledVector hat_apply(const DoubledOperator& op, const Index& power, const DoubledVector& x);

enum class SpanSign { Plus, Minus };

/// V-hat^N (b_0 (+) +-b_0), supported at {N} on both legs.
DoubledVector generator(const DoubledOperator& op, SpanSign sign, const Index& power);

struct JUnitarySample {
  DoubledVector x;
  DoubledVector y;
  std::int64_t power = 0;
};

struct JUnitarityReport {
  std::size_t samples = 0;
  /// |{V^N x, V^N y} - {x, y}| / max(|{x, y}|, sum of |cross products|).
  double max_relative_deviation = 0.0;
  bool pass = false;
};

JUnitarityReport j_unitarity_check(const DoubledOperator& op, const std::vector<JUnitarySample>& samples,
                                   double tolerance = 1e-12);

/// The five pairing identities between the generators of L+ and L-.
enum class Lemma7Identity {
  PlusOffDiagonal,   ///< {g+(N), g+(M)} = 0, M != N
  PlusDiagonal,      ///< {g+(N), g+(N)} = 2
  MinusOffDiagonal,  ///< {g-(N), g-(M)} = 0, M != N
  MinusDiagonal,     ///< {g-(N), g-(N)} = -2
  Cross,             ///< {g+(N), g-(M)} = 0
};

inline constexpr Lemma7Identity kLemma7Identities[] = {
    Lemma7Identity::PlusOffDiagonal, Lemma7Identity::PlusDiagonal, Lemma7Identity::MinusOffDiagonal,
    Lemma7Identity::MinusDiagonal, Lemma7Identity::Cross};

std::string identity_id(Lemma7Identity id);

struct IdentityResult {
  Lemma7Identity id;
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;
  std::size_t pairs = 0;
  double max_abs_deviation = 0.0;
  bool pass = false;
};

struct BatteryReport {
  std::vector<IdentityResult> identities;
  bool all_pass = false;
};

BatteryReport lemma7_battery(const DoubledOperator& op, std::int64_t range_lo, std::int64_t range_hi,
                             double tolerance = 1e-12);

struct SpanMember {
  /// alpha_N with x = sum alpha_N generator(N).
  std::map<Index, double> coefficients;
};
struct SpanNonMember {
  DoubledVector residual;
};
using SpanMembership = std::variant<SpanMember, SpanNonMember>;

/// x is in span{generator(sign, N)} iff minus_leg(n) = +-(v_0/v_n)^2 plus_leg(n) on the joint support.
SpanMembership span_membership(const DoubledOperator& op, SpanSign sign, const DoubledVector& x,
                               double relative_tolerance = 1e-12);

/// b_N (+) 0 = a [g+(N) + g-(N)] and 0 (+) b_N = b [g+(N) - g-(N)], a = v_0/(2 v_N), b = v_N/(2 v_0).
struct DensityWitness {
  Index power;
  double log_plus_leg_coefficient = 0.0;   ///< ln a
  double log_minus_leg_coefficient = 0.0;  ///< ln b
  /// Numeric reconstruction errors, absent when the coefficients leave double range.
  std::optional<double> plus_leg_error;
  std::optional<double> minus_leg_error;
};

DensityWitness density_witness(const DoubledOperator& op, const Index& power);

/// {x, x} for x = sum alpha_N generator(sign, N). Equals +-2 sum alpha_N^2.
double sign_definiteness_check(const DoubledOperator& op, SpanSign sign,
                               const std::map<std::int64_t, double>& coefficients);

}  // namespace kshift
