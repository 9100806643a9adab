#include "kshift/shift_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kshift {

namespace {

// exp() of anything beyond this leaves the normal double range.
constexpr double kMaxDoubleLog = 708.0;

bool displaces_forward(OperatorKind kind) {
  return kind == OperatorKind::Forward || kind == OperatorKind::AdjointInverse;
}

bool is_adjoint(OperatorKind kind) {
  return kind == OperatorKind::Adjoint || kind == OperatorKind::AdjointInverse;
}

/// ||op^N|| = sup_m exp(sign * log_ratio(m, N)).
int norm_sign(OperatorKind kind) {
  return (kind == OperatorKind::Forward || kind == OperatorKind::Adjoint) ? 1 : -1;
}

std::optional<double> analytic_tail(const ShiftOperator& op, std::int64_t power, std::int64_t window) {
  const auto n = static_cast<double>(power);
  return std::visit(
      [&](const auto& k) -> std::optional<double> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PaperWeights>) {
          return n * tail_derivative_bound(op.weights, Index(window)).per_step_log;
        } else if constexpr (std::is_same_v<K, GeometricWeights>) {
          return norm_sign(op.kind) * n * std::log(k.ratio);
        } else if constexpr (std::is_same_v<K, ConstantWeights>) {
          return 0.0;
        } else {
          return std::nullopt;
        }
      },
      op.weights.kind());
}

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Forward: return "forward";
    case OperatorKind::Inverse: return "inverse";
    case OperatorKind::Adjoint: return "adjoint";
    case OperatorKind::AdjointInverse: return "adjoint_inverse";
  }
  return "?";
}

FinSuppVector FinSuppVector::basis(const Index& n, double coefficient) {
  FinSuppVector v;
  v.set(n, coefficient);
  return v;
}

double FinSuppVector::at(const Index& n) const {
  const auto it = coefficients_.find(n);
  return it == coefficients_.end() ? 0.0 : it->second;
}

void FinSuppVector::set(const Index& n, double value) {
  if (value == 0.0) {
    coefficients_.erase(n);
  } else {
    coefficients_[n] = value;
  }
}

void FinSuppVector::add(const Index& n, double value) { set(n, at(n) + value); }

double FinSuppVector::norm_squared() const {
  double s = 0.0;
  for (const auto& [n, v] : coefficients_) s += v * v;
  return s;
}

double FinSuppVector::norm() const {
  double s = 0.0;
  for (const auto& [n, v] : coefficients_) s = std::hypot(s, v);
  return s;
}

FinSuppVector FinSuppVector::scaled(double factor) const {
  FinSuppVector out;
  for (const auto& [n, v] : coefficients_) out.set(n, v * factor);
  return out;
}

FinSuppVector& FinSuppVector::operator+=(const FinSuppVector& rhs) {
  for (const auto& [n, v] : rhs.coefficients_) add(n, v);
  return *this;
}

FinSuppVector& FinSuppVector::operator-=(const FinSuppVector& rhs) {
  for (const auto& [n, v] : rhs.coefficients_) add(n, -v);
  return *this;
}

double inner(const FinSuppVector& x, const FinSuppVector& y) {
  const auto& small = x.support_size() <= y.support_size() ? x : y;
  const auto& large = &small == &x ? y : x;
  double s = 0.0;
  for (const auto& [n, v] : small.coefficients()) s += v * large.at(n);
  return s;
}

BasisImage basis_image(const ShiftOperator& op, const Index& power, const Index& n) {
  const Index target = displaces_forward(op.kind) ? n + power : n - power;
  BigReal log_coef = log_ratio(op.weights, n, target - n);
  if (is_adjoint(op.kind)) log_coef = -log_coef;
  return {target, std::move(log_coef)};
}

FinSuppVector apply_power(const ShiftOperator& op, const Index& power, const FinSuppVector& x) {
  FinSuppVector out;
  for (const auto& [n, v] : x.coefficients()) {
    BasisImage img = basis_image(op, power, n);
    const double log_coef = img.log_coefficient.to_double();
    if (!(std::abs(log_coef) <= kMaxDoubleLog)) {
      throw std::overflow_error("apply_power: coefficient exp(" + img.log_coefficient.to_string(8) + ") at n = " +
                                n.to_string() +
                                " leaves double range; use basis_image / orbit_log_norm for log-domain values");
    }
    out.add(img.target, v * std::exp(log_coef));
  }
  return out;
}

double NormCertificate::log_norm() const {
  return tail_bound_log ? std::max(window_sup_log, *tail_bound_log) : window_sup_log;
}

NormScanner::NormScanner(ShiftOperator op, std::int64_t window, std::int64_t max_power, bool parallel)
    : op_(std::move(op)),
      window_(window),
      max_power_(max_power),
      parallel_(parallel),
      table_(op_.weights, -window - max_power, window + max_power, parallel) {
  if (window < 1) throw std::invalid_argument("norm scan window must be >= 1");
  if (max_power < 1) throw std::invalid_argument("norm scan power must be >= 1");
}

NormCertificate NormScanner::certificate(std::int64_t power) const {
  if (power < 1 || power > max_power_) {
    throw std::out_of_range("power " + std::to_string(power) + " outside scanner range [1, " +
                            std::to_string(max_power_) + "]");
  }
  NormCertificate cert;
  cert.kind = op_.kind;
  cert.power = power;
  cert.window = window_;
  cert.tail_bound_log = analytic_tail(op_, power, window_);
  if (std::holds_alternative<GeometricWeights>(op_.weights.kind()) ||
      std::holds_alternative<ConstantWeights>(op_.weights.kind())) {
    // Every coefficient is the same; the table would only add rounding.
    cert.window_sup_log = *cert.tail_bound_log;
    cert.window_argmax = -window_ - power;
    return cert;
  }
  const kernels::ShiftedMax m =
      table_.max_log_ratio(-window_ - power, window_, power, norm_sign(op_.kind), parallel_);
  cert.window_sup_log = static_cast<double>(m.value);
  cert.window_argmax = m.argmax;
  return cert;
}

NormCertificate norm_power(const ShiftOperator& op, std::int64_t power, std::int64_t window) {
  return NormScanner(op, window, power).certificate(power);
}

SpecRadEstimate specrad_bounds(const ShiftOperator& op, int max_power_exponent, std::int64_t window,
                               unsigned witness_k_max) {
  if (max_power_exponent < 0 || max_power_exponent > 30) {
    throw std::invalid_argument("max_power_exponent must lie in [0, 30]");
  }
  const std::int64_t max_power = std::int64_t{1} << max_power_exponent;
  const NormScanner scanner(op, window, max_power);

  SpecRadEstimate est;
  est.upper_log = std::numeric_limits<double>::infinity();
  for (std::int64_t n = 1; n <= max_power; n *= 2) {
    NormCertificate cert = scanner.certificate(n);
    const double per = cert.log_norm() / static_cast<double>(n);
    if (per < est.upper_log) {
      est.upper_log = per;
      est.upper_certified = cert.certified();
    }
    est.powers_used.push_back(n);
    est.certificates.push_back(std::move(cert));
  }

  if (op.weights.is_paper()) {
    const WitnessKind wk = is_adjoint(op.kind) ? WitnessKind::Mk : WitnessKind::Nk;
    for (unsigned k = 1; k <= witness_k_max; ++k) est.lower_powers.push_back(witness_index(wk, k).index);
  } else {
    est.lower_powers.push_back(Index(max_power));
  }
  est.lower_log = -std::numeric_limits<double>::infinity();
  for (const Index& n : est.lower_powers) {
    const BasisImage img = basis_image(op, n, Index(0));
    const BigReal per = img.log_coefficient / BigReal(n, img.log_coefficient.precision());
    est.lower_log = std::max(est.lower_log, per.to_double());
  }
  return est;
}

FlipReport flip_conjugate_check(const WeightSequence& w, std::span<const Index> sample, double tolerance) {
  if (!w.known_symmetric()) {
    throw std::invalid_argument("flip_conjugate_check: weights " + w.describe() + " do not satisfy v_n = v_{-n}");
  }
  const ShiftOperator forward{w, OperatorKind::Forward};
  const ShiftOperator inverse{w, OperatorKind::Inverse};
  FlipReport report;
  for (const Index& n : sample) {
    // R^-1 V R b_n: flip to b_{-n}, shift, flip back.
    const BasisImage shifted = basis_image(forward, Index(1), -n);
    const Index conj_target = -shifted.target;
    const BasisImage direct = basis_image(inverse, Index(1), n);
    if (conj_target != direct.target) {
      throw std::logic_error("flip_conjugate_check: support mismatch at n = " + n.to_string());
    }
    const double dev = abs(shifted.log_coefficient - direct.log_coefficient).to_double();
    if (report.samples == 0 || dev > report.max_deviation) {
      report.max_deviation = dev;
      report.worst = n;
    }
    ++report.samples;
  }
  report.pass = report.max_deviation <= tolerance;
  return report;
}

}  // namespace kshift
