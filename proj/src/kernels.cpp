#include "kshift/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace kshift::kernels {

namespace {

constexpr long double kHalfPi = 1.570796326794896619231321691639751442L;

long double paper_log_weight(long double c_log, std::int64_t n) {
  const long double m = static_cast<long double>(n < 0 ? -n : n);
  const long double s = std::sin(kHalfPi * std::log2(1.0L + std::log2(1.0L + m)));
  return m * s * c_log + std::sqrt(m) * s;
}

bool better(long double v, std::int64_t n, const ShiftedMax& best) {
  return v > best.value || (v == best.value && n < best.argmax);
}

void check_range(std::span<const long double> table, std::int64_t first, std::int64_t lo, std::int64_t hi,
                 std::int64_t step) {
  const std::int64_t last = first + static_cast<std::int64_t>(table.size()) - 1;
  const std::int64_t need_lo = std::min(lo, lo + step);
  const std::int64_t need_hi = std::max(hi, hi + step);
  if (lo > hi || need_lo < first || need_hi > last) {
    throw std::out_of_range("window scan [" + std::to_string(lo) + ", " + std::to_string(hi) + "] step " +
                            std::to_string(step) + " exceeds the log-weight table");
  }
}

}  // namespace

long double log_weight_fast(const WeightSequence& w, std::int64_t n) {
  return std::visit(
      [n](const auto& k) -> long double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PaperWeights>) {
          return paper_log_weight(std::log(static_cast<long double>(k.c)), n);
        } else if constexpr (std::is_same_v<K, GeometricWeights>) {
          return static_cast<long double>(n) * std::log(static_cast<long double>(k.ratio));
        } else if constexpr (std::is_same_v<K, ConstantWeights>) {
          return 0.0L;
        } else {
          const double v = k.log_rule(Index(n));
          if (!std::isfinite(v)) {
            throw std::domain_error("user weight rule '" + k.label + "' returned a non-finite log weight");
          }
          return v;
        }
      },
      w.kind());
}

void fill_log_weights_serial(const WeightSequence& w, std::int64_t first, std::span<long double> out) {
  if (const PaperWeights* p = w.paper_params()) {
    const long double c_log = std::log(static_cast<long double>(p->c));
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = paper_log_weight(c_log, first + static_cast<std::int64_t>(i));
    }
    return;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = log_weight_fast(w, first + static_cast<std::int64_t>(i));
  }
}

void fill_log_weights(const WeightSequence& w, std::int64_t first, std::span<long double> out) {
  const auto size = static_cast<std::int64_t>(out.size());
  if (const PaperWeights* p = w.paper_params()) {
    const long double c_log = std::log(static_cast<long double>(p->c));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < size; ++i) {
      out[static_cast<std::size_t>(i)] = paper_log_weight(c_log, first + i);
    }
    return;
  }
  // Rules that throw cannot unwind through an OpenMP region; let the serial
  // path surface the exception instead.
  bool failed = false;
#pragma omp parallel for schedule(static) reduction(|| : failed)
  for (std::int64_t i = 0; i < size; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = log_weight_fast(w, first + i);
    } catch (...) {
      failed = true;
    }
  }
  if (failed) fill_log_weights_serial(w, first, out);
}

ShiftedMax max_shifted_difference_serial(std::span<const long double> table, std::int64_t first,
                                         std::int64_t lo, std::int64_t hi, std::int64_t step, int sign) {
  check_range(table, first, lo, hi, step);
  const long double s = sign >= 0 ? 1.0L : -1.0L;
  ShiftedMax best{s * (table[static_cast<std::size_t>(lo + step - first)] - table[static_cast<std::size_t>(lo - first)]),
                  lo};
  for (std::int64_t n = lo + 1; n <= hi; ++n) {
    const long double v = s * (table[static_cast<std::size_t>(n + step - first)] - table[static_cast<std::size_t>(n - first)]);
    if (better(v, n, best)) best = {v, n};
  }
  return best;
}

ShiftedMax max_shifted_difference(std::span<const long double> table, std::int64_t first, std::int64_t lo,
                                  std::int64_t hi, std::int64_t step, int sign) {
  check_range(table, first, lo, hi, step);
  const long double s = sign >= 0 ? 1.0L : -1.0L;
  const int threads = omp_get_max_threads();
  std::vector<ShiftedMax> partial(static_cast<std::size_t>(threads), ShiftedMax{-HUGE_VALL, hi + 1});

#pragma omp parallel num_threads(threads)
  {
    ShiftedMax local{-HUGE_VALL, hi + 1};
#pragma omp for schedule(static) nowait
    for (std::int64_t n = lo; n <= hi; ++n) {
      const long double v = s * (table[static_cast<std::size_t>(n + step - first)] - table[static_cast<std::size_t>(n - first)]);
      if (better(v, n, local)) local = {v, n};
    }
    partial[static_cast<std::size_t>(omp_get_thread_num())] = local;
  }

  // (value, -argmax) is a total order, so the merge is independent of thread order.
  ShiftedMax best = partial.front();
  for (const ShiftedMax& p : partial) {
    if (better(p.value, p.argmax, best)) best = p;
  }
  return best;
}

LogWeightTable::LogWeightTable(const WeightSequence& w, std::int64_t first, std::int64_t last, bool parallel)
    : first_(first) {
  if (last < first) throw std::invalid_argument("LogWeightTable: empty range");
  values_.resize(static_cast<std::size_t>(last - first + 1));
  if (parallel) {
    fill_log_weights(w, first, values_);
  } else {
    fill_log_weights_serial(w, first, values_);
  }
}

ShiftedMax LogWeightTable::max_log_ratio(std::int64_t lo, std::int64_t hi, std::int64_t step, int sign,
                                         bool parallel) const {
  return parallel ? max_shifted_difference(values_, first_, lo, hi, step, sign)
                  : max_shifted_difference_serial(values_, first_, lo, hi, step, sign);
}

}  // namespace kshift::kernels
