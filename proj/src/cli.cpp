#include "bellctx/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellctx/bridge.hpp"
#include "bellctx/chsh.hpp"
#include "bellctx/entanglement.hpp"
#include "bellctx/kcbs.hpp"
#include "bellctx/report.hpp"
#include "bellctx/rng.hpp"
#include "bellctx/sampler.hpp"

namespace bellctx {

namespace {

cplx parse_amplitude(const nlohmann::json& entry, const std::string& field) {
  if (entry.is_number()) return cplx(entry.get<double>(), 0.0);
  if (entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number()) {
    return cplx(entry[0].get<double>(), entry[1].get<double>());
  }
  throw ParseError("state field '" + field + "' entries must be numbers or [re, im] pairs");
}

StateSpec parse_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path + "'");
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("state file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!root.is_object()) throw ParseError("state file root must be a JSON object");

  const bool has_sym = root.contains("symmetric");
  const bool has_two = root.contains("two_qubit");
  if (has_sym == has_two) {
    throw ParseError("state file must contain exactly one of 'symmetric' or 'two_qubit'");
  }

  StateSpec spec;
  if (has_sym) {
    const auto& arr = root["symmetric"];
    if (!arr.is_array() || arr.size() != 3) {
      throw ParseError("state field 'symmetric' must be an array of 3 amplitudes");
    }
    std::array<cplx, 3> amps;
    for (int i = 0; i < 3; ++i) amps[i] = parse_amplitude(arr[i], "symmetric");
    spec.symmetric = amps;
  } else {
    const auto& arr = root["two_qubit"];
    if (!arr.is_array() || arr.size() != 4) {
      throw ParseError("state field 'two_qubit' must be an array of 4 amplitudes");
    }
    std::array<cplx, 4> amps;
    for (int i = 0; i < 4; ++i) amps[i] = parse_amplitude(arr[i], "two_qubit");
    spec.two_qubit = amps;
  }
  return spec;
}

}  // namespace

StateSpec parse_state_spec(const std::string& arg) {
  if (arg.find(',') == std::string::npos) return parse_state_file(arg);

  // Inline variant: three comma-separated real amplitudes.
  std::array<cplx, 3> amps;
  std::istringstream is(arg);
  std::string field;
  int i = 0;
  while (std::getline(is, field, ',')) {
    if (i >= 3) throw ParseError("inline state takes exactly 3 real amplitudes");
    try {
      size_t used = 0;
      const double v = std::stod(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
      amps[i++] = cplx(v, 0.0);
    } catch (const std::exception&) {
      throw ParseError("inline state amplitude '" + field + "' is not a number");
    }
  }
  if (i != 3) throw ParseError("inline state takes exactly 3 real amplitudes");
  StateSpec spec;
  spec.symmetric = amps;
  return spec;
}

PureState two_qubit_state(const StateSpec& spec) {
  if (spec.symmetric) {
    const auto& a = *spec.symmetric;
    const SymmetricTwoQubit sym = SymmetricTwoQubit::normalized(a[0], a[1], a[2]);
    return embed(sym);
  }
  return PureState::normalized(std::span<const cplx>(spec.two_qubit->data(), 4));
}

QutritPure qutrit_state(const StateSpec& spec) {
  if (spec.symmetric) {
    const auto& a = *spec.symmetric;
    return to_qutrit(SymmetricTwoQubit::normalized(a[0], a[1], a[2]));
  }
  const PureState s = PureState::normalized(std::span<const cplx>(spec.two_qubit->data(), 4));
  return to_qutrit(project_symmetric(s));
}

namespace {

struct CliOptions {
  std::string config_path;
  std::string state_arg;
  double c_min = 0.0;
  double c_max = 1.0;
  int steps = 11;
  double beta = 0.0;
  long long shots = -1;       // -1: take from config
  long long seed = -1;        // -1: take from config
  std::string out_path;
  std::string format;
  std::string scenario;
};

RunConfig resolve_config(const CliOptions& opt) {
  RunConfig cfg;
  if (!opt.config_path.empty()) {
    cfg = load_config(opt.config_path);
  } else if (const char* env = std::getenv(kConfigEnvVar); env && *env) {
    cfg = load_config(env);
  }
  if (opt.shots >= 0) cfg.sampler.shots = opt.shots;
  if (opt.seed >= 0) cfg.sampler.seed = static_cast<std::uint64_t>(opt.seed);
  if (!opt.out_path.empty()) cfg.output.path = opt.out_path;
  if (!opt.format.empty()) cfg.output.format = output_format_from_name(opt.format);
  validate_config(cfg);
  return cfg;
}

std::string fmt_state(const PureState& s, int precision) {
  std::ostringstream os;
  for (int i = 0; i < s.dim(); ++i) {
    if (i) os << ", ";
    os << "(" << format_number(s.amplitude(i).real(), precision) << ", "
       << format_number(s.amplitude(i).imag(), precision) << ")";
  }
  return os.str();
}

int cmd_kcbs(const CliOptions& opt, const RunConfig& cfg, std::ostream& out) {
  const int prec = cfg.output.precision;
  const QutritPure psi = qutrit_state(parse_state_spec(opt.state_arg));
  const KcbsObservables obs(standard_pentagram());
  const double value = kcbs_value(psi, obs);

  out << "state (qutrit, |1>,|0>,|-1>): " << fmt_state(psi.state(), prec) << "\n";
  out << "kcbs_value      = " << format_number(value, prec) << "\n";
  out << "classical_bound = " << format_number(kcbs_classical_bound(), prec) << "\n";
  out << "quantum_minimum = " << format_number(kcbs_quantum_min(), prec) << "\n";
  out << "verdict: " << (value < kcbs_classical_bound() ? "CONTEXTUAL" : "NON-CONTEXTUAL")
      << "\n";
  return 0;
}

int cmd_chsh(const CliOptions& opt, const RunConfig& cfg, std::ostream& out) {
  const int prec = cfg.output.precision;
  const PureState psi = two_qubit_state(parse_state_spec(opt.state_arg));
  const double c = concurrence_pure(psi).value();
  const double beta_corr = chsh_max_correlation(psi);
  const ChshResult direct = chsh_max_direct(psi, cfg.optimizer);
  const Thresholds& th = thresholds();

  out << "state (|00>,|01>,|10>,|11>): " << fmt_state(psi, prec) << "\n";
  out << "concurrence      = " << format_number(c, prec) << "\n";
  out << "beta_correlation = " << format_number(beta_corr, prec) << "\n";
  out << "beta_direct      = " << format_number(direct.beta, prec) << "\n";
  out << "regime           = " << regime_name(classify(beta_corr)) << "\n";
  out << "thresholds: local = " << format_number(th.beta_local, prec)
      << ", noncontextual = " << format_number(th.beta_noncontextual, prec)
      << ", tsirelson = " << format_number(th.beta_tsirelson, prec) << "\n";
  return 0;
}

int cmd_scan(const CliOptions& opt, const RunConfig& cfg, std::ostream& out,
             std::ostream& err) {
  const auto points = scan(opt.c_min, opt.c_max, opt.steps, cfg.optimizer);

  for (const CorrelationPoint& p : points) {
    if (!p.note.empty()) {
      err << "flagged at c = " << format_number(p.concurrence, cfg.output.precision)
          << ": " << p.note << "\n";
    }
  }

  std::string rendered = cfg.output.format == OutputFormat::Csv
                             ? scan_to_csv(points, cfg.output.precision)
                             : scan_to_json(points, cfg.output.precision);
  if (cfg.output.path.empty()) {
    out << rendered;
    if (!rendered.empty() && rendered.back() != '\n') out << "\n";
    return 0;
  }
  std::ofstream file(cfg.output.path);
  if (!file) {
    throw ParseError("cannot open output path '" + cfg.output.path + "' for writing");
  }
  file << rendered;
  if (!file) throw ParseError("write to '" + cfg.output.path + "' failed");
  out << "wrote " << points.size() << " points to " << cfg.output.path << "\n";
  return 0;
}

int cmd_classify(const CliOptions& opt, const RunConfig& cfg, std::ostream& out) {
  const int prec = cfg.output.precision;
  const Thresholds& th = thresholds();
  const Regime regime = classify(opt.beta);
  out << "beta   = " << format_number(opt.beta, prec) << "\n";
  out << "regime = " << regime_name(regime) << "\n";
  out << "beta - local bound (2)                 = "
      << format_number(opt.beta - th.beta_local, prec) << "\n";
  out << "beta - noncontextual bound (sqrt(24/5)) = "
      << format_number(opt.beta - th.beta_noncontextual, prec) << "\n";
  out << "beta - tsirelson bound (2 sqrt(2))      = "
      << format_number(opt.beta - th.beta_tsirelson, prec) << "\n";
  return 0;
}

int cmd_sample(const CliOptions& opt, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
  const int prec = cfg.output.precision;
  const StateSpec spec = parse_state_spec(opt.state_arg);
  const long long shots = cfg.sampler.shots;
  const std::uint64_t seed = cfg.sampler.seed;

  double exact = 0.0;
  ShotEstimate est;
  if (opt.scenario == "kcbs") {
    const QutritPure psi = qutrit_state(spec);
    const KcbsObservables obs(standard_pentagram());
    est = estimate_kcbs(psi, obs, shots, seed);
    exact = kcbs_value(psi, obs);
  } else if (opt.scenario == "chsh") {
    const PureState psi = two_qubit_state(spec);
    const ChshSettings settings = ChshSettings::canonical();
    est = estimate_chsh(psi, settings, shots, seed);
    exact = chsh_value(psi, settings);
  } else {
    throw ParseError("scenario must be 'kcbs' or 'chsh', got '" + opt.scenario + "'");
  }

  out << "scenario       = " << opt.scenario << "\n";
  out << "shots_per_term = " << shots << "\n";
  out << "seed           = " << seed << "\n";
  out << "estimate       = " << format_number(est.mean, prec) << " +/- "
      << format_number(est.std_err, prec) << "\n";
  out << "exact          = " << format_number(exact, prec) << "\n";
  if (est.std_err > 0.0) {
    out << "z_score        = " << format_number((est.mean - exact) / est.std_err, prec)
        << "\n";
  } else {
    out << "z_score        = n/a (zero standard error)\n";
  }
  if (shots == 1) {
    err << "warning: std_err is reported as 0 at a single shot per term\n";
  }
  return 0;
}

struct Check {
  Check(std::string n, double g, double w, double t)
      : name(std::move(n)), got(g), want(w), tol(t) {}

  std::string name;
  double got = 0.0;
  double want = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string detail;
};

int cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int prec = cfg.output.precision;
  std::vector<Check> checks;

  const KcbsObservables obs(standard_pentagram());
  const Thresholds& th = thresholds();

  // Maximal KCBS violation at the neutrally polarized spin state.
  {
    const QutritPure zero(PureState::from_amplitudes({0.0, 1.0, 0.0}));
    Check c{"KCBS value at |0>", kcbs_value(zero, obs), kcbs_quantum_min(), 1e-9};
    c.pass = std::abs(c.got - c.want) <= c.tol;
    checks.push_back(c);
  }
  // KCBS minimum over non-entangled states.
  {
    Check c{"KCBS minimum at C = 0", std::nan(""), -std::sqrt(5.0), 1e-6};
    try {
      c.got = kcbs_min_for_concurrence(0.0, cfg.optimizer).value;
      c.pass = std::abs(c.got - c.want) <= c.tol;
    } catch (const Error& e) {
      c.detail = std::string("optimizer failed: ") + e.what();
    }
    checks.push_back(c);
  }
  // The concurrence that reaches the classical bound, and its CHSH value.
  {
    Check c{"concurrence at S = -3", c_from_smin(th.s_noncontextual), th.c_star, 1e-12};
    c.pass = std::abs(c.got - c.want) <= c.tol;
    checks.push_back(c);
  }
  {
    Check c{"CHSH noncontextual bound", beta_closed_form(c_from_smin(th.s_noncontextual)),
            th.beta_noncontextual, 1e-12};
    c.pass = std::abs(c.got - c.want) <= c.tol;
    checks.push_back(c);
  }
  // Grid agreement between the KCBS optimizer and the linear law.
  {
    double max_dev = 0.0;
    bool endpoints_ok = true;
    std::string flagged;
    std::string errors;
    for (int i = 0; i <= 10; ++i) {
      const double c = static_cast<double>(i) / 10.0;
      const double closed = s_min_closed_form(c);
      try {
        const KcbsMinResult r = kcbs_min_for_concurrence(c, cfg.optimizer);
        max_dev = std::max(max_dev, std::abs(r.value - closed));
        if ((i == 0 || i == 10) && std::abs(r.value - closed) > 1e-6) endpoints_ok = false;
        if (r.value < closed - 1e-3) {
          flagged += " C=" + format_number(c, prec);
        }
      } catch (const Error&) {
        errors += " C=" + format_number(c, prec);
      }
    }
    Check c{"KCBS law grid (11 points), max |dev|", max_dev, 0.0, 1e-3};
    c.pass = max_dev <= c.tol && endpoints_ok && errors.empty();
    if (!endpoints_ok) c.detail = "endpoint deviation above 1e-6";
    if (!errors.empty()) c.detail += " optimizer failed at" + errors;
    if (!flagged.empty()) {
      c.pass = false;
      c.detail = "FLAGGED: optimizer found values below the closed form at" + flagged;
    }
    checks.push_back(c);
  }
  // CHSH law on random symmetric states.
  {
    Xoshiro256 rng(cfg.optimizer.seed ^ 0xC0FFEEULL);
    double max_dev = 0.0;
    for (int i = 0; i < 200; ++i) {
      const cplx a(rng.normal(), rng.normal());
      const cplx b(rng.normal(), rng.normal());
      const cplx c(rng.normal(), rng.normal());
      const SymmetricTwoQubit sym = SymmetricTwoQubit::normalized(a, b, c);
      const double conc = concurrence_symmetric(sym.a(), sym.b(), sym.c()).value();
      const double beta = chsh_max_correlation(embed(sym));
      max_dev = std::max(max_dev, std::abs(beta - beta_closed_form(conc)));
    }
    Check c{"CHSH law on 200 random symmetric states, max |dev|", max_dev, 0.0, 1e-9};
    c.pass = max_dev <= c.tol;
    checks.push_back(c);
  }

  bool all_pass = true;
  for (const Check& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": "
        << format_number(c.got, prec);
    if (c.want != 0.0) out << " (expected " << format_number(c.want, prec) << ")";
    out << " tol " << format_number(c.tol, 3);
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
    all_pass = all_pass && c.pass;
  }
  out << "thresholds: classical bound = " << format_number(kcbs_classical_bound(), prec)
      << ", quantum minimum = " << format_number(kcbs_quantum_min(), prec)
      << ", C* = " << format_number(th.c_star, prec)
      << ", beta* = " << format_number(th.beta_noncontextual, prec) << "\n";
  if (all_pass) {
    out << "reproduce: all checks passed\n";
    return 0;
  }
  err << "reproduce: at least one check failed\n";
  return 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"KCBS and CHSH tests for symmetric two-qubit states, linked by concurrence"};
  app.name("bellctx");

  CliOptions opt;
  app.add_option("--config", opt.config_path, "JSON config file (optimizer/sampler/output)");

  CLI::App* kcbs_cmd = app.add_subcommand(
      "kcbs", "Evaluate the five-term KCBS sum for a state");
  kcbs_cmd->add_option("--state", opt.state_arg, "state file or inline a,b,c triple")
      ->required();

  CLI::App* chsh_cmd = app.add_subcommand(
      "chsh", "Concurrence, maximal CHSH value and regime of a state");
  chsh_cmd->add_option("--state", opt.state_arg, "state file or inline a,b,c triple")
      ->required();

  CLI::App* scan_cmd = app.add_subcommand(
      "scan", "Tabulate closed-form and oracle values over a concurrence grid");
  scan_cmd->add_option("--c-min", opt.c_min, "grid start (default 0)");
  scan_cmd->add_option("--c-max", opt.c_max, "grid end (default 1)");
  scan_cmd->add_option("--steps", opt.steps, "number of grid points (default 11)");
  scan_cmd->add_option("--out", opt.out_path, "output path (default stdout)");
  scan_cmd->add_option("--format", opt.format, "csv or json");

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Regime of a CHSH expectation value");
  classify_cmd->add_option("--beta", opt.beta, "CHSH expectation value")->required();

  CLI::App* reproduce_cmd = app.add_subcommand(
      "reproduce", "Verify the headline numbers; exit 0 iff all checks pass");

  CLI::App* sample_cmd = app.add_subcommand(
      "sample", "Finite-shot Monte Carlo estimate for a state");
  sample_cmd->add_option("--state", opt.state_arg, "state file or inline a,b,c triple")
      ->required();
  sample_cmd->add_option("--scenario", opt.scenario, "kcbs or chsh")->required();
  sample_cmd->add_option("--shots", opt.shots, "shots per term")
      ->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", opt.seed, "master seed")
      ->check(CLI::NonNegativeNumber);

  app.require_subcommand(1);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const RunConfig cfg = resolve_config(opt);
    if (app.got_subcommand(kcbs_cmd)) return cmd_kcbs(opt, cfg, out);
    if (app.got_subcommand(chsh_cmd)) return cmd_chsh(opt, cfg, out);
    if (app.got_subcommand(scan_cmd)) return cmd_scan(opt, cfg, out, err);
    if (app.got_subcommand(classify_cmd)) return cmd_classify(opt, cfg, out);
    if (app.got_subcommand(reproduce_cmd)) return cmd_reproduce(cfg, out, err);
    if (app.got_subcommand(sample_cmd)) return cmd_sample(opt, cfg, out, err);
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bellctx
