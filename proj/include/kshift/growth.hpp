#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kshift/shift_ops.hpp"

namespace kshift {

/// How far classify_growth looks before it falls back on analytic arguments.
struct GrowthHorizon {
  std::int64_t dense = 4096;      ///< every N in [0, dense] via the log-weight table
  int dyadic_exponent = 62;       ///< N = 2^j, j <= dyadic_exponent, in multiprecision
  unsigned witness_k_max = 2;     ///< witness schedule n_k / m_k, k = 1..witness_k_max
};

/// Is S(T, a) trivial for T one of V, V^-1, V*^-1, V*?  Decided through the
/// orbit of b_0: S(T, a) != {0} iff ||T^N b_0|| <= M' a^N for all N >= 0.
struct GrowthQuery {
  WeightSequence weights;
  OperatorKind kind = OperatorKind::Forward;
  double rate = 1.0;
  GrowthHorizon horizon{};
};

enum class GrowthStatus { Bounded, Unbounded, Inconclusive };

std::string_view to_string(GrowthStatus status);

struct GrowthWitness {
  Index index;        ///< basis index where T^N b_0 sits
  BigReal excess_log; ///< ln ||T^N b_0|| - N ln a
};

struct GrowthVerdict {
  OperatorKind kind = OperatorKind::Forward;
  double rate_log = 0.0;
  GrowthStatus status = GrowthStatus::Inconclusive;
  /// ln M' for BOUNDED verdicts.
  std::optional<double> log_m_prime;
  /// Strictly increasing excess values for UNBOUNDED verdicts.
  std::vector<GrowthWitness> witnesses;
  double scanned_max_excess = 0.0;
  GrowthHorizon horizon{};
  /// Short description of the argument that settled the verdict.
  std::string argument;
};

/// ln ||T^N b_0|| = ln |v_N / v_0| (and its three siblings).
BigReal orbit_log_norm(const WeightSequence& w, OperatorKind kind, const Index& power);

/// ln ||T^N b_0|| - N ln a.
BigReal orbit_excess(const GrowthQuery& q, const Index& power);

GrowthVerdict classify_growth(const GrowthQuery& q);

struct AllFourReport {
  double rate = 1.0;
  std::array<GrowthVerdict, 4> verdicts;  ///< in kAllKinds order
  bool all_unbounded = false;
};

/// classify_growth for V, V^-1, V*^-1 and V* at the same rate.
AllFourReport s_trivial_all_four(const WeightSequence& w, double rate, const GrowthHorizon& horizon = {});

}  // namespace kshift
