#include "kshift/weights.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace kshift {

namespace {

constexpr int kGuardBits = 16;

// Largest witness exponent we are willing to materialise (2^28 bits = 32 MiB).
constexpr std::uint64_t kMaxWitnessExponent = std::uint64_t{1} << 28;

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

int working_precision(int bits, const Index& x) {
  return bits + static_cast<int>(x.bit_length()) + kGuardBits;
}

/// log2(y) when y is an exact power of two.
std::optional<long> exact_log2(const BigReal& y) {
  if (y.sign() <= 0) return std::nullopt;
  const long e = static_cast<long>(mpfr_get_exp(y.get())) - 1;
  if (mpfr_cmp_ui_2exp(y.get(), 1, e) == 0) return e;
  return std::nullopt;
}

// sin((pi/2) t) for integer t.
double quarter_turn_sine(long t) {
  switch (((t % 4) + 4) % 4) {
    case 1: return 1.0;
    case 3: return -1.0;
    default: return 0.0;
  }
}

/// Shared chain for both input flavours. `one_plus_x` must hold 1 + x exactly
/// when x is an integer so the power-of-two structure is visible.
OscillationFactor oscillation_from(const BigReal& one_plus_x, int prec) {
  const BigReal one(1.0, prec);
  BigReal inner(prec);  // log2(1 + log2(1 + x))
  if (auto j = exact_log2(one_plus_x)) {
    const BigReal one_plus_j(Index(static_cast<std::int64_t>(*j) + 1), prec);
    if (auto t = exact_log2(one_plus_j)) {
      return {BigReal(quarter_turn_sine(*t), prec), true};
    }
    inner = log2(one_plus_j);
  } else {
    inner = log2(one + log2(one_plus_x.with_precision(prec)));
  }
  BigReal half_pi = BigReal::pi(prec) / BigReal(2.0, prec);
  return {sin(half_pi * inner), false};
}

void require_nonnegative(int sign, const char* what) {
  if (sign < 0) throw std::invalid_argument(std::string(what) + ": negative argument");
}

/// Multiplicative nudge upward so the double result stays an upper bound.
double round_up(double v) { return v * (1.0 + 8 * std::numeric_limits<double>::epsilon()); }

}  // namespace

WeightSequence::WeightSequence(Kind kind, int precision_bits)
    : kind_(std::move(kind)), precision_bits_(precision_bits) {
  if (precision_bits_ < 53) throw std::invalid_argument("precision must be at least 53 bits");
}

WeightSequence WeightSequence::paper(double c, int precision_bits) {
  if (!(c >= 1.0) || !std::isfinite(c)) throw std::invalid_argument("paper weights need finite c >= 1");
  return WeightSequence(PaperWeights{c}, precision_bits);
}

WeightSequence WeightSequence::geometric(double ratio, int precision_bits) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) throw std::invalid_argument("geometric ratio must be finite and > 0");
  return WeightSequence(GeometricWeights{ratio}, precision_bits);
}

WeightSequence WeightSequence::constant(int precision_bits) {
  return WeightSequence(ConstantWeights{}, precision_bits);
}

WeightSequence WeightSequence::user(std::string label, std::function<double(const Index&)> log_rule,
                                    bool symmetric, int precision_bits) {
  if (!log_rule) throw std::invalid_argument("user weight rule is empty");
  return WeightSequence(UserWeights{std::move(label), std::move(log_rule), symmetric}, precision_bits);
}

bool WeightSequence::known_symmetric() const {
  return std::visit(
      [](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PaperWeights> || std::is_same_v<K, ConstantWeights>) {
          return true;
        } else if constexpr (std::is_same_v<K, GeometricWeights>) {
          return k.ratio == 1.0;
        } else {
          return k.symmetric;
        }
      },
      kind_);
}

std::string WeightSequence::describe() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PaperWeights>) {
          return "paper:c=" + format_double(k.c);
        } else if constexpr (std::is_same_v<K, GeometricWeights>) {
          return "geom:r=" + format_double(k.ratio);
        } else if constexpr (std::is_same_v<K, ConstantWeights>) {
          return "const";
        } else {
          return "user:" + k.label;
        }
      },
      kind_);
}

OscillationFactor oscillation_factor(const Index& x, int precision_bits) {
  require_nonnegative(x.sign(), "oscillation_factor");
  const int prec = working_precision(precision_bits, x);
  return oscillation_from(BigReal(x + 1, prec), prec);
}

OscillationFactor oscillation_factor(const BigReal& x) {
  require_nonnegative(x.sign(), "oscillation_factor");
  const int prec = x.precision() + kGuardBits;
  return oscillation_from(x.with_precision(prec) + BigReal(1.0, prec), prec);
}

BigReal phi(const Index& x, int precision_bits) {
  const int prec = working_precision(precision_bits, x);
  return BigReal(x, prec) * oscillation_factor(x, precision_bits).value;
}

BigReal phi(const BigReal& x) { return x * oscillation_factor(x).value; }

BigReal psi(const Index& x, int precision_bits) {
  const int prec = working_precision(precision_bits, x);
  return sqrt(BigReal(x, prec)) * oscillation_factor(x, precision_bits).value;
}

BigReal psi(const BigReal& x) { return sqrt(x) * oscillation_factor(x).value; }

LogWeight eval_log_weight(const WeightSequence& w, const Index& n) {
  const int bits = w.precision_bits();
  return std::visit(
      [&](const auto& k) -> LogWeight {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PaperWeights>) {
          const Index m = n.abs();
          const int prec = working_precision(bits, m);
          const OscillationFactor s = oscillation_factor(m, bits);
          const BigReal mag(m, prec);
          BigReal value = mag * s.value * log(BigReal(k.c, prec));
          value += sqrt(mag) * s.value;
          return {std::move(value)};
        } else if constexpr (std::is_same_v<K, GeometricWeights>) {
          const int prec = working_precision(bits, n);
          return {BigReal(n, prec) * log(BigReal(k.ratio, prec))};
        } else if constexpr (std::is_same_v<K, ConstantWeights>) {
          return {BigReal(bits)};
        } else {
          const double v = k.log_rule(n);
          if (!std::isfinite(v)) {
            throw std::domain_error("user weight rule '" + k.label + "' returned a non-finite log weight at n = " +
                                    n.to_string() + " (weights must not vanish)");
          }
          return {BigReal(v, bits)};
        }
      },
      w.kind());
}

BigReal log_ratio(const WeightSequence& w, const Index& n, const Index& step) {
  LogWeight far = eval_log_weight(w, n + step);
  const LogWeight near = eval_log_weight(w, n);
  return far.log_value - near.log_value;
}

double log_ratio_summed(const WeightSequence& w, const Index& n, std::int64_t step) {
  double sum = 0.0;
  const int dir = step >= 0 ? 1 : -1;
  Index at = n;
  for (std::int64_t i = 0; i != step; i += dir) {
    const Index next = at + Index(dir);
    sum += log_ratio(w, at, Index(dir)).to_double();
    at = next;
  }
  return sum;
}

double derivative_constant() {
  const double ln2 = std::log(2.0);
  return std::acos(-1.0) / (2.0 * ln2 * ln2);
}

TailBound tail_derivative_bound(const WeightSequence& w, const Index& n_min) {
  const PaperWeights* p = w.paper_params();
  if (p == nullptr) {
    throw std::invalid_argument("tail_derivative_bound: only the paper weights have a closed-form derivative");
  }
  if (n_min < Index(1)) throw std::invalid_argument("tail_derivative_bound: n_min must be >= 1");

  const int prec = 64 + static_cast<int>(n_min.bit_length());
  const BigReal one(1.0, prec);
  const BigReal x(n_min, prec);
  const BigReal ln2 = BigReal::ln2(prec);
  const BigReal k = BigReal::pi(prec) / (BigReal(2.0, prec) * ln2 * ln2);

  // With A = k / (1 + log2(1 + x)):
  //   phi'(x) = sin z + cos z * A x/(1+x)            => |phi'| <= sqrt(1 + A^2)
  //   psi'(x) = sin z / (2 sqrt x) + cos z * A sqrt(x)/(1+x)
  //                                                  => |psi'| <= hypot of the two amplitudes
  // Every amplitude is non-increasing on [1, inf), so evaluating at n_min bounds the tail.
  const BigReal amp = k / (one + log2(one + x));
  const BigReal phi_slope = sqrt(one + amp * amp);
  const BigReal root = sqrt(x);
  const BigReal p_term = one / (BigReal(2.0, prec) * root);
  const BigReal q_term = amp * root / (one + x);
  const BigReal psi_slope = sqrt(p_term * p_term + q_term * q_term);

  TailBound out;
  out.n_min = n_min;
  out.phi_slope = round_up(phi_slope.to_double());
  out.psi_slope = round_up(psi_slope.to_double());
  out.per_step_log = round_up(out.phi_slope * std::log(p->c) + out.psi_slope);
  return out;
}

WitnessSchedule witness_index(WitnessKind kind, unsigned k) {
  if (k == 0) throw std::invalid_argument("witness_index: k must be >= 1");
  const unsigned shift = (kind == WitnessKind::Nk ? 1u : 3u) + 4u * k;
  if (shift >= 63 || (std::uint64_t{1} << shift) > kMaxWitnessExponent) {
    throw std::out_of_range("witness_index: k = " + std::to_string(k) + " is too large to materialise");
  }
  const std::uint64_t exponent = (std::uint64_t{1} << shift) - 1;
  return {kind, k, Index::pow2(exponent) - Index(1)};
}

}  // namespace kshift
