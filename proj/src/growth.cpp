#include "kshift/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kshift/kernels.hpp"

namespace kshift {

namespace {

bool adjoint_kind(OperatorKind kind) {
  return kind == OperatorKind::Adjoint || kind == OperatorKind::AdjointInverse;
}

bool orbit_moves_right(OperatorKind kind) {
  return kind == OperatorKind::Forward || kind == OperatorKind::AdjointInverse;
}

/// Dense scan max over N in [0, H] from the extended-precision table.
double dense_scan_max(const GrowthQuery& q) {
  const std::int64_t h = q.horizon.dense;
  const kernels::LogWeightTable table(q.weights, -h, h);
  const long double rate_log = std::log(static_cast<long double>(q.rate));
  const long double base = table.at(0);
  const long double flip = adjoint_kind(q.kind) ? -1.0L : 1.0L;
  const std::int64_t dir = orbit_moves_right(q.kind) ? 1 : -1;
  long double best = 0.0L;  // N = 0
  for (std::int64_t n = 1; n <= h; ++n) {
    const long double ex = flip * (table.at(dir * n) - base) - static_cast<long double>(n) * rate_log;
    best = std::max(best, ex);
  }
  return static_cast<double>(best);
}

double dyadic_scan_max(const GrowthQuery& q) {
  double best = -std::numeric_limits<double>::infinity();
  for (int j = 0; j <= q.horizon.dyadic_exponent; ++j) {
    best = std::max(best, orbit_excess(q, Index::pow2(static_cast<std::uint64_t>(j))).to_double());
  }
  return best;
}

/// Orbit log-norm slope g for weights whose orbit is exactly linear: ln||T^N b_0|| = g N.
std::optional<double> linear_slope(const GrowthQuery& q) {
  double ln_r = 0.0;
  if (const auto* g = std::get_if<GeometricWeights>(&q.weights.kind())) {
    ln_r = std::log(g->ratio);
  } else if (!std::holds_alternative<ConstantWeights>(q.weights.kind())) {
    return std::nullopt;
  }
  const bool flip = (q.kind == OperatorKind::Inverse || q.kind == OperatorKind::AdjointInverse);
  return flip ? -ln_r : ln_r;
}

Index witness_target(OperatorKind kind, const Index& power) {
  return orbit_moves_right(kind) ? power : -power;
}

void classify_paper(const GrowthQuery& q, const PaperWeights& p, GrowthVerdict& v) {
  const double gap = std::log(q.rate) - std::log(p.c);  // ln a - ln c
  if (gap > 0.0) {
    // |phi(N)| <= N and |psi(N)| <= sqrt N give excess(N) <= sqrt N - gap N for all
    // four kinds; that bound peaks at 1/(4 gap^2) with value 1/(4 gap).
    const auto next = static_cast<double>(q.horizon.dense + 1);
    const double tail = next >= 1.0 / (4.0 * gap * gap) ? std::sqrt(next) - gap * next : 1.0 / (4.0 * gap);
    v.status = GrowthStatus::Bounded;
    v.log_m_prime = std::max(v.scanned_max_excess, tail);
    v.argument = "scan to N=" + std::to_string(q.horizon.dense) + " plus excess(N) <= sqrt(N) - N ln(a/c)";
    return;
  }

  const WitnessKind wk = adjoint_kind(q.kind) ? WitnessKind::Mk : WitnessKind::Nk;
  std::vector<GrowthWitness> found;
  for (unsigned k = 1; k <= q.horizon.witness_k_max; ++k) {
    const Index idx = witness_index(wk, k).index;
    BigReal ex = orbit_excess(q, idx);
    // At the witness indices the oscillation factor is exactly +-1, so the
    // excess must equal sqrt(idx) + idx ln(c/a).
    const int prec = ex.precision();
    const BigReal expected = sqrt(BigReal(idx, prec)) - BigReal(idx, prec) * BigReal(gap, prec);
    const double rel = (abs(ex - expected) / abs(expected)).to_double();
    if (!(rel <= 1e-9)) {
      v.argument = "witness excess at k=" + std::to_string(k) + " deviates from the closed form";
      return;
    }
    if (!found.empty() && !(ex > found.back().excess_log)) {
      v.argument = "witness excess not increasing at k=" + std::to_string(k);
      return;
    }
    found.push_back({witness_target(q.kind, idx), std::move(ex)});
  }
  if (found.size() < 2) {
    v.argument = "fewer than two witnesses requested";
    return;
  }
  v.status = GrowthStatus::Unbounded;
  v.witnesses = std::move(found);
  v.argument = std::string("excess along ") + (wk == WitnessKind::Nk ? "n_k" : "m_k") +
               " equals sqrt(index) + index ln(c/a) -> infinity";
}

void classify_linear(const GrowthQuery& q, double slope, GrowthVerdict& v) {
  const double drift = slope - std::log(q.rate);
  if (drift <= 0.0) {
    v.status = GrowthStatus::Bounded;
    v.log_m_prime = std::max(0.0, v.scanned_max_excess);
    v.argument = "excess(N) = N (slope - ln a) is non-increasing";
    return;
  }
  v.status = GrowthStatus::Unbounded;
  for (int j = 0; j <= q.horizon.dyadic_exponent; j += 8) {
    const Index n = Index::pow2(static_cast<std::uint64_t>(j));
    v.witnesses.push_back({witness_target(q.kind, n), orbit_excess(q, n)});
  }
  v.argument = "excess(N) = N (slope - ln a) grows linearly";
}

}  // namespace

std::string_view to_string(GrowthStatus status) {
  switch (status) {
    case GrowthStatus::Bounded: return "BOUNDED";
    case GrowthStatus::Unbounded: return "UNBOUNDED";
    case GrowthStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

BigReal orbit_log_norm(const WeightSequence& w, OperatorKind kind, const Index& power) {
  if (power.sign() < 0) throw std::invalid_argument("orbit_log_norm: N must be >= 0");
  return basis_image(ShiftOperator{w, kind}, power, Index(0)).log_coefficient;
}

BigReal orbit_excess(const GrowthQuery& q, const Index& power) {
  BigReal orbit = orbit_log_norm(q.weights, q.kind, power);
  const int prec = orbit.precision();
  return orbit - BigReal(power, prec) * log(BigReal(q.rate, prec));
}

GrowthVerdict classify_growth(const GrowthQuery& q) {
  if (!(q.rate > 0.0) || !std::isfinite(q.rate)) throw std::invalid_argument("growth rate must be finite and > 0");
  if (q.horizon.dense < 1) throw std::invalid_argument("dense horizon must be >= 1");

  GrowthVerdict v;
  v.kind = q.kind;
  v.rate_log = std::log(q.rate);
  v.horizon = q.horizon;
  v.scanned_max_excess = std::max(dense_scan_max(q), dyadic_scan_max(q));

  if (const PaperWeights* p = q.weights.paper_params()) {
    classify_paper(q, *p, v);
  } else if (const auto slope = linear_slope(q)) {
    classify_linear(q, *slope, v);
  } else {
    v.argument = "no tail structure for user weights; scan only";
  }
  return v;
}

AllFourReport s_trivial_all_four(const WeightSequence& w, double rate, const GrowthHorizon& horizon) {
  AllFourReport report;
  report.rate = rate;
  report.all_unbounded = true;
  for (std::size_t i = 0; i < 4; ++i) {
    report.verdicts[i] = classify_growth(GrowthQuery{w, kAllKinds[i], rate, horizon});
    report.all_unbounded = report.all_unbounded && report.verdicts[i].status == GrowthStatus::Unbounded;
  }
  return report;
}

}  // namespace kshift
