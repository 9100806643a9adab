#include "kshift/cli.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "kshift/campaigns.hpp"
#include "kshift/report.hpp"
#include "kshift/weight_spec.hpp"

namespace kshift::cli {

namespace {

using report::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int exit_code(Outcome o) { return static_cast<int>(o); }

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "?";
}

OperatorKind parse_kind(const std::string& s) {
  for (OperatorKind k : kAllKinds) {
    if (to_string(k) == s) return k;
  }
  throw UsageError("unknown operator kind '" + s + "'");
}

Json config_json(const RunConfig& cfg, const WeightSequence& w) {
  Json j;
  j["command"] = cfg.command;
  j["weights"] = w.describe();
  j["weight_spec"] = cfg.weight_spec;
  j["c"] = report::number(cfg.c);
  j["rate"] = report::number(cfg.rate);
  j["kind"] = cfg.kind;
  j["power"] = cfg.power;
  j["window"] = cfg.window;
  j["max_power_exponent"] = cfg.max_power_exponent;
  j["witness_k_max"] = cfg.witness_k_max;
  j["dense_horizon"] = cfg.dense_horizon;
  j["range"] = cfg.range;
  j["n0"] = cfg.n0;
  j["precision_bits"] = cfg.precision_bits;
  j["output"] = std::string(format_name(cfg.output));
  j["seed"] = cfg.seed;
  if (!cfg.lemma_id.empty()) j["lemma_id"] = cfg.lemma_id;
  return j;
}

/// Writes the JSON envelope shared by every command.
void emit_json(std::ostream& out, const RunConfig& cfg, const WeightSequence& w, Json result, int code) {
  Json j;
  j["schema"] = std::string(report::kSchemaVersion);
  j["command"] = cfg.command;
  j["config"] = config_json(cfg, w);
  j["result"] = std::move(result);
  j["exit_code"] = code;
  out << j.dump(2) << '\n';
}

GrowthHorizon horizon_of(const RunConfig& cfg) {
  GrowthHorizon h;
  h.dense = cfg.dense_horizon;
  h.witness_k_max = cfg.witness_k_max;
  return h;
}

KreinCampaignOptions krein_options_of(const RunConfig& cfg) {
  KreinCampaignOptions o;
  o.range = cfg.range;
  o.seed = cfg.seed;
  return o;
}

// ---------------------------------------------------------------------------

int cmd_norm(const RunConfig& cfg, const WeightSequence& w, std::ostream& out) {
  const OperatorKind kind = parse_kind(cfg.kind);
  const NormCertificate cert = norm_power(ShiftOperator{w, kind}, cfg.power, cfg.window);
  const int code = cert.certified() ? kExitPass : kExitUncertified;
  switch (cfg.output) {
    case OutputFormat::Json: emit_json(out, cfg, w, report::to_json(cert), code); break;
    case OutputFormat::Csv:
      out << "kind,power,window,window_sup_log,tail_bound_log,log_norm,status\n"
          << to_string(kind) << ',' << cert.power << ',' << cert.window << ',' << fmt(cert.window_sup_log) << ','
          << (cert.tail_bound_log ? fmt(*cert.tail_bound_log) : "") << ',' << fmt(cert.log_norm()) << ','
          << (cert.certified() ? "certified" : "lower_bound_only") << '\n';
      break;
    case OutputFormat::Text:
      out << "weights         " << w.describe() << '\n'
          << "kind            " << to_string(kind) << '\n'
          << "power N         " << cert.power << '\n'
          << "window          " << cert.window << '\n'
          << "window sup log  " << fmt(cert.window_sup_log) << "  (at n = " << cert.window_argmax << ")\n"
          << "tail bound log  " << (cert.tail_bound_log ? fmt(*cert.tail_bound_log) : "none") << '\n'
          << "log ||op^N||    " << fmt(cert.log_norm()) << '\n'
          << "||op^N||        " << fmt(std::exp(cert.log_norm())) << '\n'
          << "status          " << (cert.certified() ? "CERTIFIED" : "LOWER_BOUND_ONLY") << '\n';
      break;
  }
  return code;
}

int cmd_specrad(const RunConfig& cfg, const WeightSequence& w, std::ostream& out) {
  const OperatorKind kind = parse_kind(cfg.kind);
  const SpecRadEstimate est = specrad_bounds(ShiftOperator{w, kind}, cfg.max_power_exponent, cfg.window,
                                             cfg.witness_k_max);
  int code = est.upper_certified ? kExitPass : kExitUncertified;
  if (est.lower_log > est.upper_log + 1e-12) code = kExitFail;
  switch (cfg.output) {
    case OutputFormat::Json: emit_json(out, cfg, w, report::to_json(est), code); break;
    case OutputFormat::Csv:
      out << "N,log_norm,root_estimate\n";
      for (const NormCertificate& c : est.certificates) {
        out << c.power << ',' << fmt(c.log_norm()) << ','
            << fmt(std::exp(c.log_norm() / static_cast<double>(c.power))) << '\n';
      }
      break;
    case OutputFormat::Text:
      out << "weights  " << w.describe() << "   kind " << to_string(kind) << "   window " << cfg.window << '\n'
          << "       N                log_norm           root_estimate  status\n";
      for (const NormCertificate& c : est.certificates) {
        char line[160];
        std::snprintf(line, sizeof line, "%8lld %23s %23s  %s\n", static_cast<long long>(c.power),
                      fmt(c.log_norm()).c_str(), fmt(std::exp(c.log_norm() / static_cast<double>(c.power))).c_str(),
                      c.certified() ? "certified" : "lower_bound_only");
        out << line;
      }
      out << "r in [" << fmt(std::exp(est.lower_log)) << ", " << fmt(std::exp(est.upper_log)) << "]"
          << (est.upper_certified ? "  (upper certified)" : "  (upper uncertified)") << '\n';
      break;
  }
  return code;
}

void growth_text(std::ostream& out, const GrowthVerdict& v) {
  out << to_string(v.kind) << ": " << to_string(v.status);
  if (v.log_m_prime) out << "  ln M' = " << fmt(*v.log_m_prime);
  out << "\n  " << v.argument << '\n';
  for (const GrowthWitness& w : v.witnesses) {
    out << "  witness index " << w.index.to_string() << "  excess_log " << w.excess_log.to_string(20) << '\n';
  }
}

void growth_csv_rows(std::ostream& out, const GrowthVerdict& v) {
  const std::string head = std::string(to_string(v.kind)) + ',' + std::string(to_string(v.status)) + ',' +
                           (v.log_m_prime ? fmt(*v.log_m_prime) : "");
  if (v.witnesses.empty()) out << head << ",,\n";
  for (const GrowthWitness& w : v.witnesses) {
    out << head << ',' << w.index.to_string() << ',' << w.excess_log.to_string(20) << '\n';
  }
}

int cmd_growth(const RunConfig& cfg, const WeightSequence& w, std::ostream& out) {
  std::vector<GrowthVerdict> verdicts;
  Json result;
  if (cfg.kind == "all") {
    const AllFourReport all = s_trivial_all_four(w, cfg.rate, horizon_of(cfg));
    verdicts.assign(all.verdicts.begin(), all.verdicts.end());
    result = report::to_json(all);
  } else {
    verdicts.push_back(classify_growth(GrowthQuery{w, parse_kind(cfg.kind), cfg.rate, horizon_of(cfg)}));
    result = report::to_json(verdicts.front());
  }

  Outcome o = Outcome::Pass;
  for (const GrowthVerdict& v : verdicts) {
    if (v.status == GrowthStatus::Inconclusive) o = combine(o, Outcome::Inconclusive);
  }
  // At rate a = c the paper weights must give S(T, c) = {0} for every kind.
  const PaperWeights* p = w.paper_params();
  if (p != nullptr && cfg.rate == p->c) {
    for (const GrowthVerdict& v : verdicts) {
      if (v.status != GrowthStatus::Unbounded) o = Outcome::Fail;
    }
  }
  const int code = exit_code(o);

  switch (cfg.output) {
    case OutputFormat::Json: emit_json(out, cfg, w, std::move(result), code); break;
    case OutputFormat::Csv:
      out << "kind,status,log_m_prime,witness_index,excess_log\n";
      for (const GrowthVerdict& v : verdicts) growth_csv_rows(out, v);
      break;
    case OutputFormat::Text:
      out << "weights " << w.describe() << "   rate " << fmt(cfg.rate) << '\n';
      for (const GrowthVerdict& v : verdicts) growth_text(out, v);
      break;
  }
  return code;
}

void krein_text(std::ostream& out, const KreinCampaign& k) {
  out << "identity               pairs   max |deviation|          pass\n";
  for (const IdentityResult& r : k.battery.identities) {
    char line[160];
    std::snprintf(line, sizeof line, "%-20s %7zu   %-23s  %s\n", identity_id(r.id).c_str(), r.pairs,
                  fmt(r.max_abs_deviation).c_str(), r.pass ? "yes" : "NO");
    out << line;
  }
  out << "J-unitarity: " << k.j_unitarity.samples << " pairs, max relative deviation "
      << fmt(k.j_unitarity.max_relative_deviation) << (k.j_unitarity.pass ? "  pass" : "  FAIL") << '\n'
      << "density |N| <= " << k.density_range << ": max reconstruction error " << fmt(k.density_max_error);
  if (k.density_skipped > 0) out << " (" << k.density_skipped << " powers out of double range)";
  out << '\n'
      << "sign definiteness: " << k.sign_samples << " sets, max relative error "
      << fmt(k.sign_max_relative_error) << '\n'
      << (k.pass ? "all checks pass" : "CHECK FAILED") << '\n';
}

void krein_csv(std::ostream& out, const KreinCampaign& k) {
  out << "identity_id,range,max_abs_deviation,pass\n";
  for (const IdentityResult& r : k.battery.identities) {
    out << identity_id(r.id) << ',' << k.range << ',' << fmt(r.max_abs_deviation) << ',' << (r.pass ? 1 : 0)
        << '\n';
  }
  out << "j_unitarity," << k.range << ',' << fmt(k.j_unitarity.max_relative_deviation) << ','
      << (k.j_unitarity.pass ? 1 : 0) << '\n';
}

int cmd_krein(const RunConfig& cfg, const WeightSequence& w, std::ostream& out) {
  const KreinCampaign k = krein_campaign(w, krein_options_of(cfg));
  const int code = k.pass ? kExitPass : kExitFail;
  switch (cfg.output) {
    case OutputFormat::Json: emit_json(out, cfg, w, report::to_json(k), code); break;
    case OutputFormat::Csv: krein_csv(out, k); break;
    case OutputFormat::Text:
      out << "weights " << w.describe() << "   range [-" << cfg.range << ", " << cfg.range << "]\n";
      krein_text(out, k);
      break;
  }
  return code;
}

// ---------------------------------------------------------------------------

int lemma_shift_bound(const RunConfig& cfg, const WeightSequence& w, int lemma, std::ostream& out) {
  const ShiftBoundReport r = shift_bound_check(w, lemma, cfg.n0, cfg.window, cfg.max_power_exponent);
  const int code = exit_code(r.outcome);
  switch (cfg.output) {
    case OutputFormat::Json: emit_json(out, cfg, w, report::to_json(r), code); break;
    case OutputFormat::Csv:
      out << "N,log_norm,bound_log,holds\n";
      for (const ShiftBoundRow& row : r.rows) {
        out << row.power << ',' << fmt(row.log_norm) << ',' << fmt(row.bound_log) << ',' << (row.holds ? 1 : 0)
            << '\n';
      }
      break;
    case OutputFormat::Text:
      out << "lemma " << lemma << "   weights " << w.describe() << "   kind " << to_string(r.kind) << "   n0 "
          << r.n0 << '\n'
          << "hypothesis: " << (r.hypothesis_holds ? "holds" : "does not hold")
          << (r.hypothesis_certified ? " (certified)" : " (window only)") << ", " << r.hypothesis_argument << '\n'
          << "slope ln c = " << fmt(r.slope_log) << "   ln c0 = " << fmt(r.c0_log) << "   exponent "
          << r.c0_exponent << '\n';
      for (const ShiftBoundRow& row : r.rows) {
        out << "  N = " << row.power << "  log norm " << fmt(row.log_norm) << " <= " << fmt(row.bound_log)
            << (row.holds ? "" : "  VIOLATED") << '\n';
      }
      out << "radius bound: r <= " << fmt(std::exp(r.radius_bound_log)) << "\noutcome: " << to_string(r.outcome)
          << '\n';
      break;
  }
  return code;
}

int lemma_flip(const RunConfig& cfg, const WeightSequence& w, std::ostream& out) {
  const FlipCampaign f = flip_campaign(w, 1000, cfg.window);
  const int code = exit_code(f.outcome);
  switch (cfg.output) {
    case OutputFormat::Json: emit_json(out, cfg, w, report::to_json(f), code); break;
    case OutputFormat::Csv:
      out << "check,value,pass\n"
          << "flip_max_deviation," << fmt(f.flip.max_deviation) << ',' << (f.flip.pass ? 1 : 0) << '\n'
          << "norm_difference," << fmt(std::abs(f.forward_norm_log - f.inverse_norm_log)) << ','
          << (f.outcome == Outcome::Fail ? 0 : 1) << '\n';
      break;
    case OutputFormat::Text:
      if (!f.note.empty()) {
        out << f.note << "\noutcome: " << to_string(f.outcome) << '\n';
        break;
      }
      out << "flip conjugation over |n| <= 1000: max log deviation " << fmt(f.flip.max_deviation)
          << " (worst n = " << f.flip.worst.to_string() << ")\n"
          << "log ||V|| = " << fmt(f.forward_norm_log) << "   log ||V^-1|| = " << fmt(f.inverse_norm_log) << '\n'
          << "outcome: " << to_string(f.outcome) << '\n';
      break;
  }
  return code;
}

int lemma_radius(const RunConfig& cfg, const WeightSequence& w, std::ostream& out) {
  const RadiusCampaign r = radius_campaign(w, cfg.max_power_exponent, cfg.window, horizon_of(cfg));
  const int code = exit_code(r.outcome);
  switch (cfg.output) {
    case OutputFormat::Json: emit_json(out, cfg, w, report::to_json(r), code); break;
    case OutputFormat::Csv:
      out << "kind,lower,upper,upper_certified,growth_status\n";
      for (std::size_t i = 0; i < 4 && w.is_paper(); ++i) {
        out << to_string(kAllKinds[i]) << ',' << fmt(std::exp(r.estimates[i].lower_log)) << ','
            << fmt(std::exp(r.estimates[i].upper_log)) << ',' << (r.estimates[i].upper_certified ? 1 : 0) << ','
            << to_string(r.growth.verdicts[i].status) << '\n';
      }
      break;
    case OutputFormat::Text:
      if (!w.is_paper()) {
        out << "lemma 6 concerns weights of the form paper:c=<c>\noutcome: " << to_string(r.outcome) << '\n';
        break;
      }
      out << "weights " << w.describe() << "   expected r = " << fmt(std::exp(r.expected_log)) << '\n';
      for (std::size_t i = 0; i < 4; ++i) {
        out << "  " << to_string(kAllKinds[i]) << ": r in [" << fmt(std::exp(r.estimates[i].lower_log)) << ", "
            << fmt(std::exp(r.estimates[i].upper_log)) << "]   S(T, c): " << to_string(r.growth.verdicts[i].status)
            << '\n';
      }
      out << "outcome: " << to_string(r.outcome) << '\n';
      break;
  }
  return code;
}

int lemma_thm1(const RunConfig& cfg, const WeightSequence& w, std::ostream& out) {
  const TheoremCampaign t =
      theorem_campaign(w, cfg.max_power_exponent, cfg.window, horizon_of(cfg), krein_options_of(cfg));
  const int code = exit_code(t.outcome);
  switch (cfg.output) {
    case OutputFormat::Json: emit_json(out, cfg, w, report::to_json(t), code); break;
    case OutputFormat::Csv:
      out << "item,outcome\n"
          << "a," << to_string(t.radius_outcome) << '\n'
          << "b," << to_string(t.growth_outcome) << '\n'
          << "c," << to_string(t.krein_outcome) << '\n';
      break;
    case OutputFormat::Text:
      if (!w.is_paper()) {
        out << "the composite check needs weights of the form paper:c=<c>\noutcome: " << to_string(t.outcome)
            << '\n';
        break;
      }
      out << "weights " << w.describe() << '\n'
          << "(a) r(V-hat) in [" << fmt(std::exp(t.hat.lower_log)) << ", " << fmt(std::exp(t.hat.upper_log))
          << "], r(V-hat^-1) in [" << fmt(std::exp(t.hat_inverse.lower_log)) << ", "
          << fmt(std::exp(t.hat_inverse.upper_log)) << "]: " << to_string(t.radius_outcome) << '\n'
          << "(b) S(T, c) trivial for V, V^-1, V*^-1, V*: " << to_string(t.growth_outcome) << '\n'
          << "(c) pairing identities, J-unitarity, density, definiteness: " << to_string(t.krein_outcome) << '\n'
          << "outcome: " << to_string(t.outcome) << '\n';
      break;
  }
  return code;
}

int cmd_lemma(const RunConfig& cfg, const WeightSequence& w, std::ostream& out) {
  const std::string& id = cfg.lemma_id;
  if (id == "1" || id == "2" || id == "3" || id == "4") return lemma_shift_bound(cfg, w, std::stoi(id), out);
  if (id == "5") return lemma_flip(cfg, w, out);
  if (id == "6") return lemma_radius(cfg, w, out);
  if (id == "7") return cmd_krein(cfg, w, out);
  if (id == "thm1") return lemma_thm1(cfg, w, out);
  throw UsageError("unknown lemma id '" + id + "'");
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--weights", cfg.weight_spec,
                  "Weight spec: paper:c=<f> | geom:r=<f> | const | user:periodic=<f>,<f>,...")
      ->capture_default_str();
  sub->add_option_function<double>(
         "--c", [&cfg](double c) { cfg.c = c, cfg.c_given = true; },
         "Shorthand for --weights paper:c=<c>")
      ->check(CLI::PositiveNumber);
  sub->add_option("--precision", cfg.precision_bits, "Significand bits for multiprecision evaluation")
      ->capture_default_str()
      ->check(CLI::Range(53, 4096));
  sub->add_option("--output", cfg.output, "Output format")
      ->capture_default_str()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{
              {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}},
          CLI::ignore_case));
  sub->add_option("--seed", cfg.seed, "Seed for randomized batteries")->capture_default_str();
}

void add_window(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--window", cfg.window, "Half-width of the exhaustive scan")
      ->capture_default_str()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{100000000}));
}

void add_powers(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--max-pow", cfg.max_power_exponent, "Largest power exponent p (N = 1, 2, ..., 2^p)")
      ->capture_default_str()
      ->check(CLI::Range(0, 20));
}

void add_witness(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--witness-k", cfg.witness_k_max, "Witness schedule length k_max")
      ->capture_default_str()
      ->check(CLI::Range(1u, 4u));
}

void add_kind(CLI::App* sub, std::string& target, bool allow_all) {
  std::vector<std::string> kinds = {"forward", "inverse", "adjoint", "adjoint_inverse"};
  if (allow_all) kinds.insert(kinds.begin(), "all");
  sub->add_option("--kind", target, "Operator power family")->capture_default_str()->check(CLI::IsMember(kinds));
}

void add_range(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--range", cfg.range, "Powers N, M in [-range, range]")
      ->capture_default_str()
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{200}));
}

void add_rate(CLI::App* sub, RunConfig& cfg) {
  sub->add_option_function<double>(
         "--rate", [&cfg](double a) { cfg.rate = a, cfg.rate_given = true; },
         "Growth rate a (default: c for paper weights, 1 otherwise)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--dense", cfg.dense_horizon, "Dense scan horizon for growth")
      ->capture_default_str()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 24));
}

WeightSequence resolve_weights(RunConfig& cfg, bool weights_given) {
  if (cfg.c_given) {
    if (weights_given) throw UsageError("use either --weights or --c, not both");
    std::ostringstream spec;
    spec << "paper:c=" << fmt(cfg.c);
    cfg.weight_spec = spec.str();
  }
  WeightSequence w = [&] {
    try {
      return parse_weight_spec(cfg.weight_spec, cfg.precision_bits);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (const PaperWeights* p = w.paper_params()) cfg.c = p->c;
  if (!cfg.rate_given) cfg.rate = w.is_paper() ? cfg.c : 1.0;
  return w;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string growth_kind = "all";
  CLI::App app{"Certified numerics for bilateral weighted shifts and their Krein-space doubling", "kshift"};
  app.require_subcommand(1);

  CLI::App* norm = app.add_subcommand("norm", "Certified ||op^N|| from a window scan and a tail bound");
  CLI::App* specrad = app.add_subcommand("specrad", "Spectral radius interval from the Gelfand sequence");
  CLI::App* growth = app.add_subcommand("growth", "Is S(T, a) trivial? Orbit growth of b_0");
  CLI::App* krein = app.add_subcommand("krein", "Pairing identities, J-unitarity, density, definiteness");
  CLI::App* lemma = app.add_subcommand("lemma", "Checkable content of lemma 1..7 or the main theorem (thm1)");

  for (CLI::App* sub : {norm, specrad, growth, krein, lemma}) add_common(sub, cfg);
  add_kind(norm, cfg.kind, false);
  norm->add_option("--N", cfg.power, "Power N")->capture_default_str()->check(
      CLI::Range(std::int64_t{1}, std::int64_t{1} << 24));
  add_window(norm, cfg);

  add_kind(specrad, cfg.kind, false);
  add_window(specrad, cfg);
  add_powers(specrad, cfg);
  add_witness(specrad, cfg);

  add_rate(growth, cfg);
  add_witness(growth, cfg);
  add_kind(growth, growth_kind, true);

  add_range(krein, cfg);

  lemma->add_option("id", cfg.lemma_id, "1, 2, 3, 4, 5, 6, 7 or thm1")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "7", "thm1"}));
  add_window(lemma, cfg);
  add_powers(lemma, cfg);
  add_witness(lemma, cfg);
  add_range(lemma, cfg);
  lemma->add_option("--n0", cfg.n0, "Tail threshold n0 for lemmas 1-4")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv{"kshift"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (chosen == growth) cfg.kind = growth_kind;

  try {
    const WeightSequence w = resolve_weights(cfg, chosen->count("--weights") > 0);
    if (chosen == norm) return cmd_norm(cfg, w, out);
    if (chosen == specrad) return cmd_specrad(cfg, w, out);
    if (chosen == growth) return cmd_growth(cfg, w, out);
    if (chosen == krein) return cmd_krein(cfg, w, out);
    return cmd_lemma(cfg, w, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace kshift::cli
