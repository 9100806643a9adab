#include "kshift/report.hpp"

#include <cmath>
#include <string>

namespace kshift::report {

namespace {

Json interval(double lower_log, double upper_log, bool certified) {
  Json j;
  j["lower_log"] = number(lower_log);
  j["upper_log"] = number(upper_log);
  j["lower"] = number(std::exp(lower_log));
  j["upper"] = number(std::exp(upper_log));
  j["upper_certified"] = certified;
  return j;
}

}  // namespace

Json number(double value) { return std::isfinite(value) ? Json(value) : Json(nullptr); }

Json to_json(const NormCertificate& cert) {
  Json j;
  j["kind"] = std::string(to_string(cert.kind));
  j["power"] = cert.power;
  j["window"] = cert.window;
  j["window_sup_log"] = number(cert.window_sup_log);
  j["window_argmax"] = cert.window_argmax;
  j["tail_bound_log"] = cert.tail_bound_log ? number(*cert.tail_bound_log) : Json(nullptr);
  j["status"] = cert.certified() ? "certified" : "lower_bound_only";
  j["log_norm"] = number(cert.log_norm());
  return j;
}

Json to_json(const SpecRadEstimate& est) {
  Json j = interval(est.lower_log, est.upper_log, est.upper_certified);
  Json powers = Json::array();
  for (const Index& n : est.lower_powers) powers.push_back(n.to_string());
  j["lower_powers"] = std::move(powers);
  Json certs = Json::array();
  for (const NormCertificate& c : est.certificates) certs.push_back(to_json(c));
  j["certificates"] = std::move(certs);
  return j;
}

Json to_json(const GrowthWitness& witness) {
  Json j;
  j["index_decimal"] = witness.index.to_string();
  j["excess_log"] = number(witness.excess_log.to_double());
  j["excess_log_decimal"] = witness.excess_log.to_string(20);
  return j;
}

Json to_json(const GrowthVerdict& verdict) {
  Json j;
  j["kind"] = std::string(to_string(verdict.kind));
  j["rate_log"] = number(verdict.rate_log);
  j["status"] = std::string(to_string(verdict.status));
  j["log_m_prime"] = verdict.log_m_prime ? number(*verdict.log_m_prime) : Json(nullptr);
  Json witnesses = Json::array();
  for (const GrowthWitness& w : verdict.witnesses) witnesses.push_back(to_json(w));
  j["witnesses"] = std::move(witnesses);
  j["scanned_max_excess"] = number(verdict.scanned_max_excess);
  j["horizon"] = {{"dense", verdict.horizon.dense},
                  {"dyadic_exponent", verdict.horizon.dyadic_exponent},
                  {"witness_k_max", verdict.horizon.witness_k_max}};
  j["argument"] = verdict.argument;
  return j;
}

Json to_json(const AllFourReport& report) {
  Json j;
  j["rate"] = number(report.rate);
  Json verdicts = Json::array();
  for (const GrowthVerdict& v : report.verdicts) verdicts.push_back(to_json(v));
  j["verdicts"] = std::move(verdicts);
  j["all_unbounded"] = report.all_unbounded;
  return j;
}

Json to_json(const IdentityResult& result) {
  Json j;
  j["identity_id"] = identity_id(result.id);
  j["range"] = {result.range_lo, result.range_hi};
  j["pairs"] = result.pairs;
  j["max_abs_deviation"] = number(result.max_abs_deviation);
  j["pass"] = result.pass;
  return j;
}

Json to_json(const BatteryReport& report) {
  Json j;
  Json ids = Json::array();
  for (const IdentityResult& r : report.identities) ids.push_back(to_json(r));
  j["identities"] = std::move(ids);
  j["all_pass"] = report.all_pass;
  return j;
}

Json to_json(const JUnitarityReport& report) {
  return Json{{"samples", report.samples},
              {"max_relative_deviation", number(report.max_relative_deviation)},
              {"pass", report.pass}};
}

Json to_json(const FlipReport& report) {
  return Json{{"samples", report.samples},
              {"max_deviation", number(report.max_deviation)},
              {"worst_index", report.worst.to_string()},
              {"pass", report.pass}};
}

Json to_json(const ShiftBoundReport& report) {
  Json j;
  j["lemma"] = report.lemma;
  j["kind"] = std::string(to_string(report.kind));
  j["n0"] = report.n0;
  j["slope_log"] = number(report.slope_log);
  j["hypothesis"] = {{"holds", report.hypothesis_holds},
                     {"certified", report.hypothesis_certified},
                     {"argument", report.hypothesis_argument}};
  j["c0_log"] = number(report.c0_log);
  j["c0_exponent"] = report.c0_exponent;
  Json rows = Json::array();
  for (const ShiftBoundRow& r : report.rows) {
    rows.push_back({{"power", r.power},
                    {"log_norm", number(r.log_norm)},
                    {"bound_log", number(r.bound_log)},
                    {"holds", r.holds}});
  }
  j["rows"] = std::move(rows);
  j["all_rows_certified"] = report.all_rows_certified;
  j["radius_bound_log"] = number(report.radius_bound_log);
  j["outcome"] = std::string(to_string(report.outcome));
  return j;
}

Json to_json(const FlipCampaign& campaign) {
  Json j;
  j["flip"] = to_json(campaign.flip);
  j["forward_norm_log"] = number(campaign.forward_norm_log);
  j["inverse_norm_log"] = number(campaign.inverse_norm_log);
  j["note"] = campaign.note;
  j["outcome"] = std::string(to_string(campaign.outcome));
  return j;
}

Json to_json(const KreinCampaign& campaign) {
  Json j;
  j["range"] = {-campaign.range, campaign.range};
  j["battery"] = to_json(campaign.battery);
  j["j_unitarity"] = to_json(campaign.j_unitarity);
  j["density"] = {{"range", {-campaign.density_range, campaign.density_range}},
                  {"max_error", number(campaign.density_max_error)},
                  {"skipped", campaign.density_skipped}};
  j["sign_definiteness"] = {{"samples", campaign.sign_samples},
                            {"max_relative_error", number(campaign.sign_max_relative_error)}};
  j["pass"] = campaign.pass;
  return j;
}

Json to_json(const RadiusCampaign& campaign) {
  Json j;
  j["expected_log"] = number(campaign.expected_log);
  Json est = Json::object();
  for (std::size_t i = 0; i < campaign.estimates.size(); ++i) {
    const SpecRadEstimate& e = campaign.estimates[i];
    est[std::string(to_string(kAllKinds[i]))] = interval(e.lower_log, e.upper_log, e.upper_certified);
  }
  j["specrad"] = std::move(est);
  j["growth"] = to_json(campaign.growth);
  j["outcome"] = std::string(to_string(campaign.outcome));
  return j;
}

Json to_json(const DirectSumRadius& radius) {
  return interval(radius.lower_log, radius.upper_log, radius.upper_certified);
}

Json to_json(const TheoremCampaign& campaign) {
  Json j;
  j["weight_c"] = number(campaign.c);
  j["a"] = {{"hat", to_json(campaign.hat)},
            {"hat_inverse", to_json(campaign.hat_inverse)},
            {"outcome", std::string(to_string(campaign.radius_outcome))}};
  j["b"] = {{"growth", to_json(campaign.growth)}, {"outcome", std::string(to_string(campaign.growth_outcome))}};
  j["c"] = {{"krein", to_json(campaign.krein)}, {"outcome", std::string(to_string(campaign.krein_outcome))}};
  j["outcome"] = std::string(to_string(campaign.outcome));
  return j;
}

}  // namespace kshift::report
