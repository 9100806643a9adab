#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kshift/kernels.hpp"
#include "kshift/weights.hpp"

namespace kshift {

/// Which power family of the shift V is meant:
///   Forward         V^N    : b_n -> (v_{n+N}/v_n) b_{n+N}
///   Inverse         V^-N   : b_n -> (v_{n-N}/v_n) b_{n-N}
///   Adjoint         V*^N   : b_n -> (v_n/v_{n-N}) b_{n-N}
///   AdjointInverse  V*^-N  : b_n -> (v_n/v_{n+N}) b_{n+N}
enum class OperatorKind { Forward, Inverse, Adjoint, AdjointInverse };

inline constexpr OperatorKind kAllKinds[] = {OperatorKind::Forward, OperatorKind::Inverse,
                                             OperatorKind::AdjointInverse, OperatorKind::Adjoint};

std::string_view to_string(OperatorKind kind);

/// Finitely supported vector over the orthonormal basis {b_n}. Zero
/// coefficients are never stored.
class FinSuppVector {
 public:
  using Map = std::map<Index, double>;

  FinSuppVector() = default;
  static FinSuppVector basis(const Index& n, double coefficient = 1.0);

  double at(const Index& n) const;
  void set(const Index& n, double value);
  void add(const Index& n, double value);

  const Map& coefficients() const { return coefficients_; }
  bool empty() const { return coefficients_.empty(); }
  std::size_t support_size() const { return coefficients_.size(); }

  double norm_squared() const;
  double norm() const;

  FinSuppVector scaled(double factor) const;
  FinSuppVector operator-() const { return scaled(-1.0); }
  FinSuppVector& operator+=(const FinSuppVector& rhs);
  FinSuppVector& operator-=(const FinSuppVector& rhs);
  friend FinSuppVector operator+(FinSuppVector a, const FinSuppVector& b) { return a += b; }
  friend FinSuppVector operator-(FinSuppVector a, const FinSuppVector& b) { return a -= b; }

  friend bool operator==(const FinSuppVector&, const FinSuppVector&) = default;

 private:
  Map coefficients_;
};

/// l2 inner product (real scalars).
double inner(const FinSuppVector& x, const FinSuppVector& y);

struct ShiftOperator {
  WeightSequence weights;
  OperatorKind kind = OperatorKind::Forward;
};

/// op^N b_n = exp(log_coefficient) b_target.
struct BasisImage {
  Index target;
  BigReal log_coefficient;
};

BasisImage basis_image(const ShiftOperator& op, const Index& power, const Index& n);

/// Exact coefficient-wise image op^N x. Throws std::overflow_error when a
/// coefficient leaves double range; use basis_image for log-domain values.
FinSuppVector apply_power(const ShiftOperator& op, const Index& power, const FinSuppVector& x);

/// ||op^N|| = sup_n |coefficient|, certified by an exhaustive window scan plus
/// an analytic bound on the complement of the window.
struct NormCertificate {
  OperatorKind kind = OperatorKind::Forward;
  std::int64_t power = 1;
  std::int64_t window = 1;
  double window_sup_log = 0.0;
  std::int64_t window_argmax = 0;
  std::optional<double> tail_bound_log;

  bool certified() const { return tail_bound_log.has_value(); }
  /// max(window sup, tail bound); the window sup alone when uncertified.
  double log_norm() const;
};

/// Builds one log-weight table and answers norm certificates for every power
/// up to max_power. Scanned indices are n in [-window - N, window]: the
/// left collar covers orbits that enter the window from the left tail.
class NormScanner {
 public:
  NormScanner(ShiftOperator op, std::int64_t window, std::int64_t max_power, bool parallel = true);

  NormCertificate certificate(std::int64_t power) const;

  const ShiftOperator& op() const { return op_; }
  std::int64_t window() const { return window_; }

 private:
  ShiftOperator op_;
  std::int64_t window_;
  std::int64_t max_power_;
  bool parallel_;
  kernels::LogWeightTable table_;
};

NormCertificate norm_power(const ShiftOperator& op, std::int64_t power, std::int64_t window);

struct SpecRadEstimate {
  /// Largest sampled lower term (1/N) ln|coefficient of op^N b_0| over the
  /// asymptotic power sample (the witness schedule for the paper weights,
  /// the top dyadic power otherwise). These terms converge to ln r from above
  /// along the witness schedule.
  double lower_log = 0.0;
  /// min over N in {1, 2, 4, ..., 2^p} of log_norm(N) / N.
  double upper_log = 0.0;
  bool upper_certified = false;
  std::vector<std::int64_t> powers_used;
  std::vector<Index> lower_powers;
  std::vector<NormCertificate> certificates;
};

SpecRadEstimate specrad_bounds(const ShiftOperator& op, int max_power_exponent, std::int64_t window,
                               unsigned witness_k_max = 2);

struct FlipReport {
  std::size_t samples = 0;
  double max_deviation = 0.0;
  Index worst;
  bool pass = false;
};

/// Checks R^-1 V R = V^-1 with R b_n = b_{-n} on each sampled basis vector,
/// comparing log coefficients. Throws std::invalid_argument for weights not
/// known to satisfy v_n = v_{-n}.
FlipReport flip_conjugate_check(const WeightSequence& w, std::span<const Index> sample, double tolerance = 1e-14);

}  // namespace kshift
