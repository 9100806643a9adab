#pragma once

#include <functional>
#include <string>
#include <variant>

#include "kshift/bigreal.hpp"
#include "kshift/index.hpp"

namespace kshift {

/// Default significand bits for the phi/psi composition. Evaluation adds the
/// bit length of the index on top so that absolute log accuracy is preserved
/// at huge indices.
inline constexpr int kDefaultPrecisionBits = 80;

/// v_n = c^{phi(|n|)} e^{psi(|n|)}, c >= 1.
struct PaperWeights {
  double c = 1.0;
};

/// v_n = r^n.
struct GeometricWeights {
  double ratio = 1.0;
};

/// v_n = 1.
struct ConstantWeights {};

/// Arbitrary rule returning ln v_n. No analytic structure is assumed.
struct UserWeights {
  std::string label;
  std::function<double(const Index&)> log_rule;
  bool symmetric = false;
};

class WeightSequence {
 public:
  using Kind = std::variant<PaperWeights, GeometricWeights, ConstantWeights, UserWeights>;

  static WeightSequence paper(double c, int precision_bits = kDefaultPrecisionBits);
  static WeightSequence geometric(double ratio, int precision_bits = kDefaultPrecisionBits);
  static WeightSequence constant(int precision_bits = kDefaultPrecisionBits);
  static WeightSequence user(std::string label, std::function<double(const Index&)> log_rule,
                             bool symmetric = false, int precision_bits = kDefaultPrecisionBits);

  const Kind& kind() const { return kind_; }
  int precision_bits() const { return precision_bits_; }

  const PaperWeights* paper_params() const { return std::get_if<PaperWeights>(&kind_); }
  bool is_paper() const { return paper_params() != nullptr; }
  bool is_user() const { return std::holds_alternative<UserWeights>(kind_); }

  /// True when v_n = v_{-n} is known to hold for every n.
  bool known_symmetric() const;

  /// Canonical spec string, e.g. "paper:c=2".
  std::string describe() const;

 private:
  WeightSequence(Kind kind, int precision_bits);

  Kind kind_;
  int precision_bits_;
};

/// ln v_n. Weights are real and positive, so only the log magnitude is kept.
struct LogWeight {
  BigReal log_value;

  double to_double() const { return log_value.to_double(); }
};

/// sin((pi/2) log2(1 + log2(1 + x))) together with a flag telling whether
/// both logarithms were exact integers (so the factor is exactly 0 or +-1).
struct OscillationFactor {
  BigReal value;
  bool exact = false;
};

OscillationFactor oscillation_factor(const Index& x, int precision_bits = kDefaultPrecisionBits);
OscillationFactor oscillation_factor(const BigReal& x);

/// phi(x) = x sin((pi/2) log2(1 + log2(1 + x))), x >= 0.
BigReal phi(const Index& x, int precision_bits = kDefaultPrecisionBits);
BigReal phi(const BigReal& x);
/// psi(x) = sqrt(x) sin((pi/2) log2(1 + log2(1 + x))), x >= 0.
BigReal psi(const Index& x, int precision_bits = kDefaultPrecisionBits);
BigReal psi(const BigReal& x);

LogWeight eval_log_weight(const WeightSequence& w, const Index& n);

/// ln v_{n+step} - ln v_n, evaluated at enough precision that the difference
/// keeps its absolute accuracy even when both terms are astronomically large.
BigReal log_ratio(const WeightSequence& w, const Index& n, const Index& step);

/// Cross-check mode: the same quantity accumulated over |step| unit steps.
double log_ratio_summed(const WeightSequence& w, const Index& n, std::int64_t step);

/// Derivative bounds for the paper weights on [n_min, inf):
///   |phi'(x)| <= phi_slope,  |psi'(x)| <= psi_slope.
/// By the mean value theorem every unit step between indices of modulus
/// >= n_min satisfies |log_ratio(n, 1)| <= per_step_log = phi_slope ln c + psi_slope.
struct TailBound {
  Index n_min;
  double phi_slope = 0.0;
  double psi_slope = 0.0;
  double per_step_log = 0.0;
};

TailBound tail_derivative_bound(const WeightSequence& w, const Index& n_min);

/// k = pi / (2 ln^2 2), the constant in the closed-form derivative of phi.
double derivative_constant();

enum class WitnessKind { Nk, Mk };

struct WitnessSchedule {
  WitnessKind kind = WitnessKind::Nk;
  unsigned k = 1;
  Index index;
};

/// n_k = 2^{2^{1+4k}-1} - 1 (phi(n_k) = n_k),  m_k = 2^{2^{3+4k}-1} - 1 (phi(m_k) = -m_k).
WitnessSchedule witness_index(WitnessKind kind, unsigned k);

}  // namespace kshift
