#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kshift/weights.hpp"

// Data-parallel inner loops behind the window scans. Every kernel has a plain
// serial reference (`*_serial`) kept for testing and benchmarking; the default
// entry points are OpenMP-parallel and return bit-identical results.
namespace kshift::kernels {

/// ln v_n in x87 extended precision. Accurate to ~1e-19 relative, which is
/// ample for |n| up to ~1e8 where window scans operate.
long double log_weight_fast(const WeightSequence& w, std::int64_t n);

/// out[i] = ln v_{first + i}.
void fill_log_weights_serial(const WeightSequence& w, std::int64_t first, std::span<long double> out);
void fill_log_weights(const WeightSequence& w, std::int64_t first, std::span<long double> out);

struct ShiftedMax {
  long double value = 0;
  std::int64_t argmax = 0;
};

/// max over n in [lo, hi] of sign * (table(n + step) - table(n)), ties broken
/// towards the smaller n. `table` holds ln v_m for m = first, first + 1, ...
ShiftedMax max_shifted_difference_serial(std::span<const long double> table, std::int64_t first,
                                         std::int64_t lo, std::int64_t hi, std::int64_t step, int sign);
ShiftedMax max_shifted_difference(std::span<const long double> table, std::int64_t first, std::int64_t lo,
                                  std::int64_t hi, std::int64_t step, int sign);

/// Contiguous block of log weights over [first, last].
class LogWeightTable {
 public:
  LogWeightTable(const WeightSequence& w, std::int64_t first, std::int64_t last, bool parallel = true);

  std::int64_t first() const { return first_; }
  std::int64_t last() const { return first_ + static_cast<std::int64_t>(values_.size()) - 1; }
  long double at(std::int64_t n) const { return values_[static_cast<std::size_t>(n - first_)]; }
  std::span<const long double> values() const { return values_; }

  /// max over n in [lo, hi] of sign * (ln v_{n+step} - ln v_n).
  ShiftedMax max_log_ratio(std::int64_t lo, std::int64_t hi, std::int64_t step, int sign,
                           bool parallel = true) const;

 private:
  std::int64_t first_;
  std::vector<long double> values_;
};

}  // namespace kshift::kernels
