#include "kshift/krein.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kshift {

namespace {

constexpr double kMaxDoubleLog = 708.0;

double abs_cross_sum(const DoubledVector& x, const DoubledVector& y) {
  double s = 0.0;
  for (const auto& [n, v] : x.plus_leg.coefficients()) s += std::abs(v * y.minus_leg.at(n));
  for (const auto& [n, v] : x.minus_leg.coefficients()) s += std::abs(v * y.plus_leg.at(n));
  return s;
}

double expected_value(Lemma7Identity id) {
  switch (id) {
    case Lemma7Identity::PlusDiagonal: return 2.0;
    case Lemma7Identity::MinusDiagonal: return -2.0;
    default: return 0.0;
  }
}

double log_weight_gap(const WeightSequence& w, const Index& n) {
  // ln v_0 - ln v_n
  return -log_ratio(w, Index(0), n).to_double();
}

}  // namespace

DoubledVector operator+(const DoubledVector& a, const DoubledVector& b) {
  return {a.plus_leg + b.plus_leg, a.minus_leg + b.minus_leg};
}

DoubledVector operator-(const DoubledVector& a, const DoubledVector& b) {
  return {a.plus_leg - b.plus_leg, a.minus_leg - b.minus_leg};
}

DoubledVector scaled(const DoubledVector& x, double factor) {
  return {x.plus_leg.scaled(factor), x.minus_leg.scaled(factor)};
}

double norm(const DoubledVector& x) { return std::hypot(x.plus_leg.norm(), x.minus_leg.norm()); }

DoubledVector swap_legs(const DoubledVector& x) { return {x.minus_leg, x.plus_leg}; }

double indefinite_inner(const DoubledVector& x, const DoubledVector& y) {
  return inner(x.plus_leg, y.minus_leg) + inner(x.minus_leg, y.plus_leg);
}

DoubledVector hat_apply(const DoubledOperator& op, const Index& power, const DoubledVector& x) {
  const ShiftOperator v{op.base_weights, OperatorKind::Forward};
  const ShiftOperator v_adj_inv{op.base_weights, OperatorKind::AdjointInverse};
  return {apply_power(v, power, x.plus_leg), apply_power(v_adj_inv, power, x.minus_leg)};
}

DoubledVector generator(const DoubledOperator& op, SpanSign sign, const Index& power) {
  const double s = sign == SpanSign::Plus ? 1.0 : -1.0;
  return hat_apply(op, power, DoubledVector{FinSuppVector::basis(Index(0)), FinSuppVector::basis(Index(0), s)});
}

JUnitarityReport j_unitarity_check(const DoubledOperator& op, const std::vector<JUnitarySample>& samples,
                                   double tolerance) {
  JUnitarityReport report;
  for (const JUnitarySample& s : samples) {
    const Index n(s.power);
    const double before = indefinite_inner(s.x, s.y);
    const double after = indefinite_inner(hat_apply(op, n, s.x), hat_apply(op, n, s.y));
    const double scale = std::max(std::abs(before), abs_cross_sum(s.x, s.y));
    const double dev = scale > 0.0 ? std::abs(after - before) / scale : std::abs(after - before);
    report.max_relative_deviation = std::max(report.max_relative_deviation, dev);
    ++report.samples;
  }
  report.pass = report.max_relative_deviation <= tolerance;
  return report;
}

std::string identity_id(Lemma7Identity id) {
  switch (id) {
    case Lemma7Identity::PlusOffDiagonal: return "plus_plus_offdiag";
    case Lemma7Identity::PlusDiagonal: return "plus_plus_diag";
    case Lemma7Identity::MinusOffDiagonal: return "minus_minus_offdiag";
    case Lemma7Identity::MinusDiagonal: return "minus_minus_diag";
    case Lemma7Identity::Cross: return "plus_minus_cross";
  }
  return "?";
}

BatteryReport lemma7_battery(const DoubledOperator& op, std::int64_t range_lo, std::int64_t range_hi,
                             double tolerance) {
  if (range_lo > range_hi) throw std::invalid_argument("lemma7_battery: empty range");
  std::vector<DoubledVector> plus, minus;
  for (std::int64_t n = range_lo; n <= range_hi; ++n) {
    plus.push_back(generator(op, SpanSign::Plus, Index(n)));
    minus.push_back(generator(op, SpanSign::Minus, Index(n)));
  }

  BatteryReport report;
  for (Lemma7Identity id : kLemma7Identities) {
    IdentityResult r{id, range_lo, range_hi};
    const double want = expected_value(id);
    for (std::size_t i = 0; i < plus.size(); ++i) {
      for (std::size_t j = 0; j < plus.size(); ++j) {
        double got = 0.0;
        switch (id) {
          case Lemma7Identity::PlusOffDiagonal:
            if (i == j) continue;
            got = indefinite_inner(plus[i], plus[j]);
            break;
          case Lemma7Identity::PlusDiagonal:
            if (i != j) continue;
            got = indefinite_inner(plus[i], plus[j]);
            break;
          case Lemma7Identity::MinusOffDiagonal:
            if (i == j) continue;
            got = indefinite_inner(minus[i], minus[j]);
            break;
          case Lemma7Identity::MinusDiagonal:
            if (i != j) continue;
            got = indefinite_inner(minus[i], minus[j]);
            break;
          case Lemma7Identity::Cross:
            got = indefinite_inner(plus[i], minus[j]);
            break;
        }
        r.max_abs_deviation = std::max(r.max_abs_deviation, std::abs(got - want));
        ++r.pairs;
      }
    }
    r.pass = r.max_abs_deviation <= tolerance;
    report.identities.push_back(r);
  }
  report.all_pass = std::all_of(report.identities.begin(), report.identities.end(),
                                [](const IdentityResult& r) { return r.pass; });
  return report;
}

SpanMembership span_membership(const DoubledOperator& op, SpanSign sign, const DoubledVector& x,
                               double relative_tolerance) {
  const double s = sign == SpanSign::Plus ? 1.0 : -1.0;
  std::vector<Index> support;
  for (const auto& [n, v] : x.plus_leg.coefficients()) support.push_back(n);
  for (const auto& [n, v] : x.minus_leg.coefficients()) {
    if (x.plus_leg.at(n) == 0.0) support.push_back(n);
  }

  SpanMember member;
  FinSuppVector residual;
  for (const Index& n : support) {
    const double gap = log_weight_gap(op.base_weights, n);  // ln(v_0 / v_n)
    const double p = x.plus_leg.at(n);
    const double m = x.minus_leg.at(n);
    const double want = s * std::exp(2.0 * gap) * p;
    const double scale = std::max(std::abs(m), std::abs(want));
    if (std::abs(m - want) > relative_tolerance * scale) {
      residual.set(n, m - want);
      continue;
    }
    if (p != 0.0) member.coefficients[n] = p * std::exp(gap);
  }
  if (!residual.empty()) return SpanNonMember{DoubledVector{FinSuppVector{}, residual}};
  return member;
}

DensityWitness density_witness(const DoubledOperator& op, const Index& power) {
  DensityWitness w;
  w.power = power;
  const double gap = log_weight_gap(op.base_weights, power);  // ln(v_0 / v_N)
  w.log_plus_leg_coefficient = gap - std::numbers::ln2;
  w.log_minus_leg_coefficient = -gap - std::numbers::ln2;
  if (std::abs(gap) + std::numbers::ln2 > kMaxDoubleLog) return w;

  const DoubledVector gp = generator(op, SpanSign::Plus, power);
  const DoubledVector gm = generator(op, SpanSign::Minus, power);
  const DoubledVector plus_target{FinSuppVector::basis(power), FinSuppVector{}};
  const DoubledVector minus_target{FinSuppVector{}, FinSuppVector::basis(power)};
  const DoubledVector plus_rebuilt = scaled(gp + gm, std::exp(w.log_plus_leg_coefficient));
  const DoubledVector minus_rebuilt = scaled(gp - gm, std::exp(w.log_minus_leg_coefficient));
  w.plus_leg_error = norm(plus_rebuilt - plus_target);
  w.minus_leg_error = norm(minus_rebuilt - minus_target);
  return w;
}

double sign_definiteness_check(const DoubledOperator& op, SpanSign sign,
                               const std::map<std::int64_t, double>& coefficients) {
  DoubledVector x;
  bool any = false;
  for (const auto& [n, alpha] : coefficients) {
    if (alpha == 0.0) continue;
    any = true;
    x = x + scaled(generator(op, sign, Index(n)), alpha);
  }
  if (!any) throw std::invalid_argument("sign_definiteness_check: all coefficients are zero");
  return indefinite_inner(x, x);
}

}  // namespace kshift
