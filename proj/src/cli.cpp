#include "bohr/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "bohr/errors.hpp"
#include "bohr/extremal.hpp"
#include "bohr/harmonic.hpp"
#include "bohr/radii.hpp"
#include "bohr/serialize.hpp"
#include "bohr/verify.hpp"

namespace bohr::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt9(double x) {
  std::ostringstream os;
  os << std::setprecision(9) << x;
  return os.str();
}

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

Exponent exponent_of(const RunConfig& cfg, double fallback) {
  return Exponent(cfg.exponent_p.value_or(fallback));
}

struct Output {
  std::string body;
  int exit_code = kExitOk;
};

// ---------------------------------------------------------------- radius

Output emit_radius(const RunConfig& cfg, const RadiusResult& r) {
  std::ostringstream os;
  switch (cfg.format) {
    case Format::json: {
      auto j = to_json(r);
      j["target"] = cfg.target;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "target,value,bracket_lo,bracket_hi,residual,method\n"
         << cfg.target << "," << fmt9(r.value) << "," << fmt9(r.bracket_lo) << "," << fmt9(r.bracket_hi) << ","
         << fmt9(r.residual) << "," << to_string(r.method) << "\n";
      break;
    case Format::text:
      os << cfg.target << " = " << fmt9(r.value) << "\n"
         << "  bracket  [" << fmt9(r.bracket_lo) << ", " << fmt9(r.bracket_hi) << "]\n"
         << "  residual " << fmt9(r.residual) << "\n"
         << "  method   " << to_string(r.method) << "\n";
      break;
  }
  return {os.str()};
}

RadiusResult scalar_result(double value, double residual) {
  return RadiusResult{value, value, value, residual, RadiusMethod::bound_formula};
}

Output cmd_radius(const RunConfig& cfg) {
  const auto& t = cfg.target;
  if (t == "rpm") return emit_radius(cfg, solve_rpm(SymmetryClass(need(cfg.p, "--p"), need(cfg.m, "--m"))));
  if (t == "harmonic-r0") return emit_radius(cfg, harmonic_r0());
  if (t == "rp-a0") return emit_radius(cfg, harmonic_rp_a0(exponent_of(cfg, 1.0), need(cfg.a0, "--a0")));
  if (t == "rho") return emit_radius(cfg, odd_harmonic_rho(Exponent(need(cfg.exponent_p, "--exponent-p"))));
  if (t == "A") {
    const double q = need(cfg.exponent_p, "--exponent-p");
    const double A = threshold_A(q);
    return emit_radius(cfg, scalar_result(A, harmonic_rp_a0(Exponent(q), A).value - 1.0 / 3.0));
  }
  if (t == "A-upper") {
    const double q = need(cfg.exponent_p, "--exponent-p");
    const double A = threshold_A_upper(q);
    const double lhs =
        A + std::pow(2.0, 1.0 / q) * std::numbers::ln2 / std::numbers::pi * std::sqrt(1.0 - A * A);
    return emit_radius(cfg, scalar_result(A, lhs - 1.0));
  }
  if (t == "mobius-self") return emit_radius(cfg, scalar_result(mobius_self_radius(need(cfg.a0, "--a0")), 0.0));
  if (t == "pair") return emit_radius(cfg, scalar_result(pair_counterexample_radius(need(cfg.a, "--a")), 0.0));
  throw UsageError("unknown radius target '" + t + "'");
}

// ---------------------------------------------------------------- extremal

constexpr int kCurvePoints = 100;

template <class Fn>
std::vector<std::pair<double, double>> curve(double r_hi, Fn&& fn) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i <= kCurvePoints; ++i) {
    const double r = r_hi * i / kCurvePoints;
    pts.emplace_back(r, fn(r));
  }
  return pts;
}

Output emit_extremal(const RunConfig& cfg, json params, json coeffs, double radius,
                     const std::vector<std::pair<double, double>>& pts, const std::vector<std::string>& notes) {
  std::ostringstream os;
  switch (cfg.format) {
    case Format::json: {
      json j{{"family", cfg.target}, {"parameters", params}, {"radius", radius}, {"coefficients", coeffs}};
      json c = json::array();
      for (const auto& [r, v] : pts) c.push_back(json::array({r, v}));
      j["curve"] = c;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "r,majorant\n";
      for (const auto& [r, v] : pts) os << fmt9(r) << "," << fmt9(v) << "\n";
      break;
    case Format::text: {
      os << "family " << cfg.target << "\n";
      for (auto it = params.begin(); it != params.end(); ++it) os << "  " << it.key() << " = " << it.value() << "\n";
      os << "  radius = " << fmt9(radius) << "\n";
      for (const auto& line : notes) os << "  " << line << "\n";
      const auto cross = std::find_if(pts.begin(), pts.end(), [](const auto& pt) { return pt.second > 1.0; });
      if (cross != pts.end()) os << "  curve first exceeds 1 at r = " << fmt9(cross->first) << "\n";
      break;
    }
  }
  return {os.str()};
}

std::vector<std::string> leading_terms(std::span<const Complex> c, const char* name, std::size_t limit = 6) {
  std::vector<std::string> lines;
  for (std::size_t k = 0; k < c.size() && lines.size() < limit; ++k) {
    if (std::abs(c[k]) == 0.0) continue;
    std::ostringstream os;
    os << name << "_" << k << " = (" << fmt9(c[k].real()) << ", " << fmt9(c[k].imag()) << "), |" << name << "_" << k
       << "| = " << fmt9(std::abs(c[k]));
    lines.push_back(os.str());
  }
  return lines;
}

Output cmd_extremal(const RunConfig& cfg) {
  const auto& t = cfg.target;
  const int n = cfg.n;
  if (t == "analytic") {
    const SymmetryClass c(need(cfg.p, "--p"), need(cfg.m, "--m"));
    const double a = extremal_parameter_a(c);
    const auto s = analytic_extremal(c, n);
    auto notes = leading_terms(s.coeffs(), "c");
    notes.insert(notes.begin(), "a = " + fmt9(a));
    return emit_extremal(cfg, json{{"p", c.p}, {"m", c.m}, {"a", a}, {"n", n}}, to_json(s), solve_rpm(c).value,
                         curve(0.99, [&](double r) { return majorant_sum(s, r); }), notes);
  }
  if (t == "phi") {
    const int p = need(cfg.p, "--p");
    const double alpha = cfg.alpha.value_or(kPhiAlpha);
    const auto s = phi_alpha(p, n, alpha);
    return emit_extremal(cfg, json{{"p", p}, {"alpha", alpha}, {"n", n}}, to_json(s), std::pow(2.0, -1.0 / (2.0 * p)),
                         curve(0.99, [&](double r) { return majorant_sum(s, r); }), leading_terms(s.coeffs(), "c"));
  }
  if (t == "mobius-a0") {
    const double a0 = need(cfg.a0, "--a0");
    const auto s = mobius_a0_series(a0, n);
    return emit_extremal(cfg, json{{"a0", a0}, {"n", n}}, to_json(s), mobius_self_radius(a0),
                         curve(0.99, [&](double r) { return majorant_sum(s, r); }), leading_terms(s.coeffs(), "c"));
  }
  if (t == "abu" || t == "f0") {
    const auto hc = t == "abu" ? abu_example(need(cfg.mu, "--mu"), n)
                               : harmonic_sharp_f0(cfg.alpha.value_or(0.0), cfg.beta.value_or(0.0), n);
    const Exponent q = exponent_of(cfg, 1.0);
    json params = t == "abu" ? json{{"mu", *cfg.mu}} : json{{"alpha", cfg.alpha.value_or(0.0)}, {"beta", cfg.beta.value_or(0.0)}};
    params["exponent_p"] = q.is_infinite() ? json("inf") : json(q.value());
    params["n"] = n;
    auto notes = leading_terms(hc.a(), "a", 3);
    for (auto& line : leading_terms(hc.b(), "b", 3)) notes.push_back(line);
    return emit_extremal(cfg, params, to_json(hc), p_bohr_radius_search(hc, q).value,
                         curve(hc.r_max(), [&](double r) { return p_bohr_sum(hc, q, r); }), notes);
  }
  if (t == "pair") {
    const double a = need(cfg.a, "--a");
    const auto [h, g] = pair_counterexample(a);
    const auto hc = HarmonicCoeffs::pair(h, g);
    return emit_extremal(cfg, json{{"a", a}}, to_json(hc), pair_counterexample_radius(a),
                         curve(0.99, [&](double r) { return p_bohr_sum(hc, Exponent(1.0), r); }),
                         {"r0(a) = " + fmt9(pair_counterexample_radius(a))});
  }
  throw UsageError("unknown extremal family '" + t + "'");
}

// ---------------------------------------------------------------- harmonic

Output cmd_harmonic(const RunConfig& cfg) {
  std::ostringstream os;
  if (cfg.target == "bound") {
    const Exponent q = exponent_of(cfg, 1.0);
    const double a0 = cfg.a0.value_or(0.0);
    const double r = need(cfg.r, "--r");
    const double general = coeff_sum_bound(q, a0, r);
    const double odd = odd_coeff_sum_bound(q, r);
    const double sub = subordination_l1_bound(r);
    switch (cfg.format) {
      case Format::json:
        os << json{{"r", r}, {"a0", a0}, {"coeff_sum_bound", general}, {"odd_coeff_sum_bound", odd},
                   {"subordination_l1_bound", sub}}.dump(2)
           << "\n";
        break;
      case Format::csv:
        os << "r,a0,coeff_sum_bound,odd_coeff_sum_bound,subordination_l1_bound\n"
           << fmt9(r) << "," << fmt9(a0) << "," << fmt9(general) << "," << fmt9(odd) << "," << fmt9(sub) << "\n";
        break;
      case Format::text:
        os << "coeff_sum_bound        " << fmt9(general) << "\n"
           << "odd_coeff_sum_bound    " << fmt9(odd) << "\n"
           << "subordination_l1_bound " << fmt9(sub) << "\n";
        break;
    }
    return {os.str()};
  }
  if (cfg.target == "kernel") {
    const auto s = kernel_K_coeffs(Complex{cfg.lambda_re, cfg.lambda_im}, cfg.n);
    switch (cfg.format) {
      case Format::json:
        os << to_json(s).dump(2) << "\n";
        break;
      case Format::csv:
        os << "k,re,im\n";
        for (int k = 0; k <= s.trunc_order(); ++k) os << k << "," << fmt9(s[k].real()) << "," << fmt9(s[k].imag()) << "\n";
        break;
      case Format::text:
        for (int k = 0; k <= s.trunc_order(); ++k)
          os << "c_" << k << " = (" << fmt9(s[k].real()) << ", " << fmt9(s[k].imag()) << ")\n";
        break;
    }
    return {os.str()};
  }
  throw UsageError("unknown harmonic target '" + cfg.target + "'");
}

// ---------------------------------------------------------------- verify

Output emit_reports(const RunConfig& cfg, const std::vector<VerificationReport>& reports) {
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); });
  const auto passed = static_cast<long>(reports.size()) - failed;
  std::ostringstream os;
  switch (cfg.format) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      os << json{{"reports", arr}, {"summary", {{"passed", passed}, {"failed", failed}}}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "claim_id,passed,samples,worst_slack,tolerance,expect_violation\n";
      for (const auto& r : reports)
        os << r.claim_id << "," << (r.passed() ? "true" : "false") << "," << r.samples << "," << fmt9(r.worst_slack)
           << "," << fmt9(r.tolerance) << "," << (r.expect_violation ? "true" : "false") << "\n";
      break;
    case Format::text:
      for (const auto& r : reports) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.claim_id << "  samples=" << r.samples
           << "  worst_slack=" << fmt9(r.worst_slack) << (r.expect_violation ? "  (violation expected)" : "") << "\n";
        if (!r.passed() && r.counterexample) os << "     counterexample " << *r.counterexample << "\n";
      }
      os << "summary: " << passed << " passed, " << failed << " failed\n";
      if (failed > 0)
        os << "every checked claim is a theorem; a failure points at a defect or a mis-set tolerance\n";
      break;
  }
  return {os.str(), failed == 0 ? kExitOk : kExitClaimFailure};
}

Output cmd_verify(const RunConfig& cfg) {
  HarnessOptions h;
  h.tol = cfg.tol;
  h.threads = cfg.threads;
  const auto& t = cfg.target;
  if (t == "all") {
    BatchConfig b;
    b.samples = cfg.samples;
    b.seed = cfg.seed;
    b.p_max_lemmas = cfg.p_max;
    b.harness = h;
    return emit_reports(cfg, run_all_claims(b));
  }
  if (t == "analytic") {
    const SymmetryClass c(need(cfg.p, "--p"), need(cfg.m, "--m"));
    return emit_reports(cfg, {certify_analytic_class(c, cfg.samples, cfg.seed, h, cfg.r_override)});
  }
  if (t == "lemmas") return emit_reports(cfg, lemma_grid_check(cfg.p_max));
  if (t == "lemma-c")
    return emit_reports(cfg, {lemma_c_suite(cfg.samples, cfg.seed, {0.2, 0.4, 0.6, 0.8, 1.0}, {1, 2, 3, 4}, h)});
  if (t == "wiener") return emit_reports(cfg, {wiener_suite(cfg.samples, cfg.seed, h)});
  if (t == "sharpness") {
    const SymmetryClass c(need(cfg.p, "--p"), need(cfg.m, "--m"));
    return emit_reports(cfg, {sharpness_probe(c, cfg.delta.value_or(0.01), cfg.tol)});
  }
  if (t == "harmonic") return emit_reports(cfg, certify_harmonic(exponent_of(cfg, 1.0), cfg.samples, cfg.seed, cfg.odd, h));
  if (t == "pairs") return emit_reports(cfg, certify_pairs(cfg.samples, cfg.seed, h, cfg.experimental));
  if (t == "pair-counterexample") return emit_reports(cfg, pair_counterexample_check(need(cfg.a, "--a"), cfg.seed, cfg.tol));
  if (t == "odd-explore") {
    const Exponent q = exponent_of(cfg, 1.0);
    const auto ex = explore_odd_harmonic_radius(q, cfg.samples, cfg.seed, h);
    std::ostringstream os;
    if (cfg.format == Format::json) {
      os << json{{"samples", ex.samples},
                 {"smallest_radius", ex.smallest_radius},
                 {"smallest_index", ex.smallest_index},
                 {"f0_radius", ex.f0_radius},
                 {"guaranteed_radius", ex.guaranteed_radius}}
                .dump(2)
         << "\n";
    } else if (cfg.format == Format::csv) {
      os << "samples,smallest_radius,smallest_index,f0_radius,guaranteed_radius\n"
         << ex.samples << "," << fmt9(ex.smallest_radius) << "," << ex.smallest_index << "," << fmt9(ex.f0_radius)
         << "," << fmt9(ex.guaranteed_radius) << "\n";
    } else {
      os << "odd harmonic samples     " << ex.samples << "\n"
         << "smallest sample radius   " << fmt9(ex.smallest_radius) << " (sample " << ex.smallest_index << ")\n"
         << "log family radius        " << fmt9(ex.f0_radius) << "\n"
         << "guaranteed radius        " << fmt9(ex.guaranteed_radius) << "\n";
    }
    return {os.str()};
  }
  throw UsageError("unknown verify suite '" + t + "'");
}

// ---------------------------------------------------------------- table

Output cmd_table(const RunConfig& cfg) {
  struct Row {
    int p, m;
    double solved;
    std::optional<double> closed;
    double a;
  };
  std::vector<Row> rows;
  for (int p = 1; p <= 6; ++p) {
    for (int m = 0; m <= p; ++m) {
      const SymmetryClass c(p, m);
      const auto closed = closed_form_rpm(c);
      rows.push_back({p, m, solve_rpm(c).value, closed ? std::optional(closed->value) : std::nullopt,
                      extremal_parameter_a(c)});
    }
  }
  const std::vector<std::pair<std::string, double>> constants{
      {"classical_bohr_radius", solve_rpm(SymmetryClass(1, 0)).value},
      {"harmonic_r0", harmonic_r0().value},
      {"odd_rho_1", odd_harmonic_rho(Exponent(1.0)).value},
      {"odd_rho_2", odd_harmonic_rho(Exponent(2.0)).value},
      {"A_1", threshold_A(1.0)},
      {"A_2", threshold_A(2.0)},
      {"A_upper_1", threshold_A_upper(1.0)},
      {"A_upper_2", threshold_A_upper(2.0)},
  };

  std::ostringstream os;
  switch (cfg.format) {
    case Format::json: {
      json radii = json::array();
      for (const auto& r : rows)
        radii.push_back({{"p", r.p}, {"m", r.m}, {"solved", r.solved},
                         {"closed_form", r.closed ? json(*r.closed) : json(nullptr)}, {"extremal_a", r.a}});
      json consts = json::object();
      for (const auto& [k, v] : constants) consts[k] = v;
      os << json{{"radii", radii}, {"constants", consts}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "p,m,solved,closed_form,extremal_a\n";
      for (const auto& r : rows)
        os << r.p << "," << r.m << "," << fmt9(r.solved) << "," << (r.closed ? fmt9(*r.closed) : "") << ","
           << fmt9(r.a) << "\n";
      os << "\nconstant,value\n";
      for (const auto& [k, v] : constants) os << k << "," << fmt9(v) << "\n";
      break;
    case Format::text:
      os << std::left << std::setw(4) << "p" << std::setw(4) << "m" << std::setw(14) << "solved" << std::setw(14)
         << "closed_form" << "extremal_a\n";
      for (const auto& r : rows)
        os << std::setw(4) << r.p << std::setw(4) << r.m << std::setw(14) << fmt9(r.solved) << std::setw(14)
           << (r.closed ? fmt9(*r.closed) : "-") << fmt9(r.a) << "\n";
      os << "\n";
      for (const auto& [k, v] : constants) os << std::setw(24) << k << fmt9(v) << "\n";
      break;
  }
  return {os.str()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Generalized Bohr radii: solver, extremal functions and randomized certification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", output, "Write output to this path instead of stdout");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--samples", cfg.samples, "Samples per claim")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "Absolute slack tolerance")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads for the harness")->check(CLI::Range(1u, 256u));

  std::string exponent_text;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "Symmetry order p >= 1");
    sub->add_option("--m", cfg.m, "Offset 0 <= m <= p");
    sub->add_option("--exponent-p", exponent_text, "Combination exponent q >= 1 (or inf)");
    sub->add_option("--a0", cfg.a0, "|a_0|");
    sub->add_option("--a", cfg.a, "Family parameter a");
    sub->add_option("--n", cfg.n, "Truncation order")->check(CLI::Range(1, 1 << 16));
  };

  auto* radius = app.add_subcommand("radius", "Compute a radius or threshold");
  radius->add_option("target", cfg.target, "rpm | harmonic-r0 | rp-a0 | rho | A | A-upper | mobius-self | pair")
      ->required()
      ->check(CLI::IsMember({"rpm", "harmonic-r0", "rp-a0", "rho", "A", "A-upper", "mobius-self", "pair"}));
  add_common(radius);

  auto* extremal = app.add_subcommand("extremal", "Emit an extremal family and its majorant curve");
  extremal->add_option("family", cfg.target, "analytic | phi | mobius-a0 | abu | f0 | pair")
      ->required()
      ->check(CLI::IsMember({"analytic", "phi", "mobius-a0", "abu", "f0", "pair"}));
  add_common(extremal);
  extremal->add_option("--mu", cfg.mu, "Angle mu of the log-type example");
  extremal->add_option("--alpha", cfg.alpha, "Rotation alpha of the log family, or the phi parameter");
  extremal->add_option("--beta", cfg.beta, "Rotation beta of the log family");

  auto* harmonic = app.add_subcommand("harmonic", "Harmonic coefficient bounds and kernel coefficients");
  harmonic->add_option("target", cfg.target, "bound | kernel")->required()->check(CLI::IsMember({"bound", "kernel"}));
  add_common(harmonic);
  harmonic->add_option("--r", cfg.r, "Radius");
  harmonic->add_option("--lambda-re", cfg.lambda_re, "Re(lambda)");
  harmonic->add_option("--lambda-im", cfg.lambda_im, "Im(lambda)");

  auto* verify = app.add_subcommand("verify", "Run randomized certification suites");
  verify
      ->add_option("suite", cfg.target,
                   "all | analytic | lemmas | lemma-c | wiener | sharpness | harmonic | pairs | pair-counterexample | "
                   "odd-explore")
      ->required()
      ->check(CLI::IsMember({"all", "analytic", "lemmas", "lemma-c", "wiener", "sharpness", "harmonic", "pairs",
                             "pair-counterexample", "odd-explore"}));
  add_common(verify);
  verify->add_option("--r-override", cfg.r_override, "Certify at this radius instead of r_{p,m}");
  verify->add_option("--p-max", cfg.p_max, "Largest p of the lemma grid")->check(CLI::Range(1, 16));
  verify->add_option("--delta", cfg.delta, "Sharpness offset");
  verify->add_flag("--odd", cfg.odd, "Odd harmonic samples");
  verify->add_flag("--experimental", cfg.experimental, "Add the squared-constant pair variant at r = 1/2");

  auto* table = app.add_subcommand("table", "Reproduction table of radii and constants");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  if (!output.empty()) cfg.output_path = output;

  Output result;
  try {
    if (!exponent_text.empty()) {
      if (exponent_text == "inf" || exponent_text == "infinity") {
        cfg.exponent_p = std::numeric_limits<double>::infinity();
      } else {
        std::size_t used = 0;
        cfg.exponent_p = std::stod(exponent_text, &used);
        if (used != exponent_text.size()) throw UsageError("bad --exponent-p value '" + exponent_text + "'");
      }
    }
    if (*radius) {
      cfg.command = Command::radius;
      result = cmd_radius(cfg);
    } else if (*extremal) {
      cfg.command = Command::extremal;
      result = cmd_extremal(cfg);
    } else if (*harmonic) {
      cfg.command = Command::harmonic;
      result = cmd_harmonic(cfg);
    } else if (*verify) {
      cfg.command = Command::verify;
      result = cmd_verify(cfg);
    } else if (*table) {
      cfg.command = Command::table;
      result = cmd_table(cfg);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // ConfigError, bad numbers
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path);
    if (!file) {
      err << "error: cannot open " << *cfg.output_path << "\n";
      return kExitUsage;
    }
    file << result.body;
  } else {
    out << result.body;
  }
  return result.exit_code;
}

}  // namespace bohr::cli
