#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cwscaler/concentration.hpp"
#include "cwscaler/csv.hpp"
#include "cwscaler/diagnostics.hpp"
#include "cwscaler/model.hpp"
#include "cwscaler/numeric.hpp"
#include "cwscaler/parallel.hpp"
#include "cwscaler/simulate.hpp"
#include "dist_cache.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace cw::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// "a:b:step" (inclusive) or a comma-separated list.
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    double a = 0.0, b = 0.0, step = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0) {
      throw std::invalid_argument("bad grid spec '" + spec + "' (want start:stop:step)");
    }
    for (double v = a; v <= b + 1e-9 * std::max(1.0, std::abs(b)); v += step) out.push_back(v);
    return out;
  }
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty grid spec");
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& spec) {
  std::vector<std::int64_t> out;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoll(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty list '" + spec + "'");
  return out;
}

std::ofstream open_out(const fs::path& file) {
  fs::create_directories(file.parent_path());
  std::ofstream os(file, std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + file.string() + " for writing");
  return os;
}

void write_text(const fs::path& file, const std::string& text) {
  auto os = open_out(file);
  os << text;
  if (!os) throw std::runtime_error("failed writing " + file.string());
}

json params_json(double beta, double h) { return json{{"beta", beta}, {"h", h}}; }

// ------------------------------------------------------------------- solve

int cmd_solve(double beta, double h, const std::string& format) {
  const ModelParams params(beta, h);
  const CwRoots roots = solve_cw_roots(params);
  if (format == "json") {
    json j{{"phase", to_string(params.phase)},
           {"roots", roots.roots},
           {"rateValues", roots.rateValues},
           {"m0", roots.m0},
           {"symmetricTie", roots.symmetricTie},
           {"degenerate", roots.degenerate}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "phase: " << to_string(params.phase) << "\n";
  std::cout << "roots (m, rate):\n";
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    std::cout << "  " << format_double(roots.roots[i]) << "  "
              << format_double(roots.rateValues[i]) << "\n";
  }
  std::cout << "m0: " << format_double(roots.m0) << "\n";
  std::cout << "symmetricTie: " << (roots.symmetricTie ? "true" : "false") << "\n";
  std::cout << "degenerate: " << (roots.degenerate ? "true" : "false") << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- exact-dist

int cmd_exact_dist(double beta, double h, std::int64_t n, const fs::path& out,
                   const std::string& format) {
  const ModelParams params(beta, h, n);
  const double m0 = solve_cw_roots(params).m0;
  const auto dist = cached_exact_distribution(params);
  if (format == "json") {
    json rows = json::array();
    for (std::int64_t k = 0; k <= n; ++k) {
      rows.push_back({{"k", k},
                      {"m", dist.m_of(k)},
                      {"eta", dist.eta_of(k, m0)},
                      {"prob", dist.probs[static_cast<std::size_t>(k)]}});
    }
    write_text(out / "distribution.json",
               json{{"params", params_json(beta, h)}, {"n", n}, {"m0", m0}, {"rows", rows}}
                   .dump(2) +
                   "\n");
  } else {
    auto os = open_out(out / "distribution.csv");
    write_distribution_csv(os, dist, m0);
  }
  const auto stats = eta_statistics(dist, m0);
  std::cout << "n=" << n << " m0=" << format_double(m0)
            << " mean(eta)=" << format_double(stats.mean)
            << " var(eta)=" << format_double(stats.variance) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const std::string& engine, double beta, double h, std::int64_t n,
                 std::int64_t steps, double horizon, double dt, std::int64_t recordEvery,
                 std::uint64_t seed, int paths, std::int64_t startK, bool coldStart,
                 const fs::path& out) {
  const ModelParams params(beta, h, n);
  const CwRoots roots = solve_cw_roots(params);
  const double m0 = roots.m0;

  std::optional<std::int64_t> start;
  if (startK >= 0) start = startK;
  if (coldStart) start = n;  // all spins up

  json pathsJson = json::array();
  for (int p = 0; p < paths; ++p) {
    RngStream rng({seed, static_cast<std::uint64_t>(p)});
    PathSample path;
    if (engine == "spin") {
      path = run_spin_chain(params, m0, steps, rng, recordEvery, start);
    } else if (engine == "lumped") {
      path = run_lumped_chain(build_kernel(params, m0), steps, rng, recordEvery, start);
    } else if (engine == "ctmc") {
      path = run_ctmc(build_kernel(params, m0), horizon, rng, start);
    } else if (engine == "ou") {
      path = run_ou(ou_params(params), horizon, dt, rng);
    } else {
      throw std::invalid_argument("unknown engine '" + engine + "'");
    }
    char name[32];
    std::snprintf(name, sizeof(name), "path_%03d.csv", p);
    auto os = open_out(out / name);
    write_path_csv(os, path);

    NeumaierSum sum, sumSq;
    double mn = path.values.front(), mx = path.values.front();
    for (double v : path.values) {
      sum.add(v);
      sumSq.add(v * v);
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    const double count = static_cast<double>(path.values.size());
    const double mean = sum.value() / count;
    pathsJson.push_back({{"streamId", p},
                         {"kind", to_string(path.kind)},
                         {"samples", path.values.size()},
                         {"mean", mean},
                         {"variance", sumSq.value() / count - mean * mean},
                         {"min", mn},
                         {"max", mx}});
  }
  json summary{{"engine", engine},
               {"params", params_json(beta, h)},
               {"n", n},
               {"seed", seed},
               {"steps", steps},
               {"horizon", horizon},
               {"dt", dt},
               {"recordEvery", recordEvery},
               {"m0", m0},
               {"symmetricTie", roots.symmetricTie},
               {"paths", pathsJson}};
  write_text(out / "ensemble.json", summary.dump(2) + "\n");
  return kExitOk;
}

// ------------------------------------------------- concentration machinery

struct ConcentrationRun {
  int exitCode = kExitOk;
  json report;
};

ConcentrationRun run_concentration(double beta, double h, const std::vector<std::int64_t>& ns,
                                   const std::vector<double>& tGrid, double delta,
                                   const std::vector<double>& alphas, const fs::path& out) {
  const double hAbs = std::abs(h);  // all results are symmetric in the field sign
  const ModelParams base(beta, hAbs);

  // Chatterjee bound domination on the (n, t) grid.
  std::ostringstream csv;
  csv << "n,t,exactTail,bound\n";
  double worstSlack = 1e300;
  int violations = 0;
  for (const std::int64_t n : ns) {
    const auto dist = cached_exact_distribution(ModelParams(beta, hAbs, n));
    for (const double t : tGrid) {
      const double lhs = exact_lhs_tail(dist, t);
      const double bound = chatterjee_bound(t, beta);
      worstSlack = std::min(worstSlack, bound - lhs);
      violations += lhs > bound;
      csv << n << ',' << format_double(t) << ',' << format_double(lhs) << ','
          << format_double(bound) << '\n';
    }
  }
  write_text(out / "chatterjee.csv", csv.str());

  const ConcentrationInterval iv = find_interval(base);
  const json ivJson{
      {"iota0", iv.iota0}, {"M1", iv.M1}, {"M2", iv.M2}, {"margin", iv.margin}};
  write_text(out / "interval.json", ivJson.dump(2) + "\n");

  const TailReport tail = tail_decay(base, delta, alphas, ns);
  std::ostringstream tailCsv;
  tailCsv << "n,alpha,logValue,value,tN,bound,logTail\n";
  json tailRows = json::array();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      tailCsv << ns[i] << ',' << format_double(alphas[a]) << ','
              << format_double(tail.logValues[a][i]) << ',' << format_double(tail.values[a][i])
              << ',' << format_double(tail.tN[i]) << ','
              << format_double(tail.chatterjeeBounds[i]) << ','
              << format_double(tail.logTails[i]) << '\n';
      tailRows.push_back({{"n", ns[i]},
                          {"alpha", alphas[a]},
                          {"logValue", tail.logValues[a][i]},
                          {"value", tail.values[a][i]},
                          {"tN", tail.tN[i]},
                          {"bound", tail.chatterjeeBounds[i]}});
    }
  }
  write_text(out / "tail.csv", tailCsv.str());
  write_text(out / "tail.json",
             json{{"delta", delta}, {"iota0", tail.iota0}, {"rows", tailRows}}.dump(2) + "\n");

  ConcentrationRun run;
  run.exitCode = violations == 0 ? kExitOk : kExitCheckFailed;
  run.report = json{{"params", params_json(beta, h)},
                    {"dominationViolations", violations},
                    {"worstSlack", worstSlack},
                    {"interval", ivJson},
                    {"delta", delta}};
  return run;
}

int cmd_check_concentration(double beta, double h, const std::string& nSpec,
                            const std::string& tSpec, double delta, const std::string& alphaSpec,
                            const fs::path& out) {
  if (!(beta > 1.0) || h == 0.0) {
    throw std::domain_error(
        "check-concentration needs the subcritical phase (beta > 1 and h != 0); got beta = " +
        std::to_string(beta) + ", h = " + std::to_string(h));
  }
  const auto run = run_concentration(beta, h, parse_int_list(nSpec), parse_grid(tSpec), delta,
                                     parse_grid(alphaSpec), out);
  std::cout << run.report.dump(2) << "\n";
  return run.exitCode;
}

// ------------------------------------------------------------ check-moments

int cmd_check_moments(double beta, double h, const std::string& nSpec, double delta,
                      const fs::path& out) {
  const ModelParams base(beta, h);
  if (!base.subcritical()) {
    throw std::domain_error(
        "check-moments needs the subcritical phase (beta > 1 and h != 0); phase is " +
        std::string(to_string(base.phase)));
  }
  const double m0 = solve_cw_roots(base).m0;
  const OUParams ou = ou_params(base);
  const auto ns = parse_int_list(nSpec);

  std::vector<double> logN, logDrift, logSecond;
  json perN = json::array();
  bool decreasing = true;
  double prevDrift = 1e300, prevSecond = 1e300;
  for (const std::int64_t n : ns) {
    const auto ker = build_kernel(ModelParams(beta, h, n), m0);
    char name[40];
    std::snprintf(name, sizeof(name), "kernel_n%lld.csv", static_cast<long long>(n));
    auto os = open_out(out / name);
    write_kernel_csv(os, ker);

    const MomentErrorSup sup = moment_error_sup(ker, ou, delta);
    if (!(sup.drift < prevDrift) || !(sup.secondMoment < prevSecond)) decreasing = false;
    prevDrift = sup.drift;
    prevSecond = sup.secondMoment;
    logN.push_back(std::log(static_cast<double>(n)));
    logDrift.push_back(std::log(sup.drift));
    logSecond.push_back(std::log(sup.secondMoment));
    perN.push_back(
        {{"n", n}, {"driftErrSup", sup.drift}, {"secondMomentErrSup", sup.secondMoment}});
  }
  json j{{"params", params_json(beta, h)},
         {"delta", delta},
         {"perN", perN},
         {"oracle", {{"driftCoefficient", -2.0 * ou.ell}, {"secondMomentLimit",
                                                           ou.sigma * ou.sigma}}},
         {"decreasing", decreasing}};
  if (ns.size() >= 2) {
    j["slopes"] = {{"drift", fitted_slope(logN, logDrift)},
                   {"secondMoment", fitted_slope(logN, logSecond)}};
  }
  write_text(out / "moments.json", j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return decreasing ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- diffusion

struct DiffusionRun {
  int exitCode = kExitOk;
  json report;
};

DiffusionRun run_diffusion(double beta, double h, const std::vector<std::int64_t>& ns,
                           double delta, const AutocovConfig& cfg, const fs::path& out) {
  const ModelParams base(beta, h);
  const ConvergenceReport rep = convergence_report(base, ns, delta, cfg);

  std::ostringstream perNCsv;
  perNCsv << "n,variance,ks,driftErrSup,secondMomentErrSup,generatorErr\n";
  for (const auto& d : rep.perN) {
    perNCsv << d.n << ',' << format_double(d.variance) << ',' << format_double(d.ks) << ','
            << format_double(d.momentErrSup.drift) << ','
            << format_double(d.momentErrSup.secondMoment) << ','
            << format_double(d.generatorErr) << '\n';
  }
  write_text(out / "perN.csv", perNCsv.str());

  std::ostringstream acCsv;
  acCsv << "lag,empirical,analytic,stderr\n";
  for (const auto& p : rep.autocov) {
    acCsv << format_double(p.lag) << ',' << format_double(p.empirical) << ','
          << format_double(p.analytic) << ',' << format_double(p.stderror) << '\n';
  }
  write_text(out / "autocov.csv", acCsv.str());

  const std::string reportJson = to_json_string(rep);
  write_text(out / "report.json", reportJson + "\n");

  bool pass = true;
  for (std::size_t i = 1; i < rep.perN.size(); ++i) {
    if (!(rep.perN[i].ks < rep.perN[i - 1].ks)) pass = false;
  }
  for (const auto& p : rep.autocov) {
    if (!(std::abs(p.empirical - p.analytic) <= 3.0 * p.stderror)) pass = false;
  }
  DiffusionRun run;
  run.exitCode = pass ? kExitOk : kExitCheckFailed;
  run.report = json::parse(reportJson);
  return run;
}

int cmd_diffusion(double beta, double h, const std::string& nSpec, double delta, double horizon,
                  std::int64_t simN, const std::string& lagSpec, double dt, int batches,
                  std::uint64_t seed, const fs::path& out) {
  const ModelParams base(beta, h);
  if (!base.subcritical()) {
    throw std::domain_error(
        "diffusion needs the subcritical phase (beta > 1 and h != 0); phase is " +
        std::string(to_string(base.phase)) +
        " -- the Ornstein-Uhlenbeck limit is not mean-reverting there");
  }
  AutocovConfig cfg;
  cfg.n = simN;
  cfg.horizon = horizon;
  cfg.lags = parse_grid(lagSpec);
  cfg.dt = dt;
  cfg.batches = batches;
  cfg.rng = {seed, 0};
  const auto run = run_diffusion(beta, h, parse_int_list(nSpec), delta, cfg, out);
  std::cout << run.report["perN"].dump(2) << "\n";
  return run.exitCode;
}

// ------------------------------------------------------------------- report

int cmd_report(double beta, double h, const std::string& nSpec, const std::string& tSpec,
               double delta, const std::string& alphaSpec, double horizon, std::int64_t simN,
               const std::string& lagSpec, double dt, int batches, std::uint64_t seed,
               const fs::path& out) {
  const ModelParams base(beta, h);
  if (!base.subcritical()) {
    throw std::domain_error("report needs the subcritical phase (beta > 1 and h != 0)");
  }
  const auto ns = parse_int_list(nSpec);
  const auto conc =
      run_concentration(beta, h, ns, parse_grid(tSpec), delta, parse_grid(alphaSpec), out);
  AutocovConfig cfg;
  cfg.n = simN;
  cfg.horizon = horizon;
  cfg.lags = parse_grid(lagSpec);
  cfg.dt = dt;
  cfg.batches = batches;
  cfg.rng = {seed, 0};
  const auto diff = run_diffusion(beta, h, ns, delta, cfg, out);

  const bool pass = conc.exitCode == kExitOk && diff.exitCode == kExitOk;
  json combined{{"concentration", conc.report},
                {"diffusion", diff.report},
                {"checksPassed", pass}};
  write_text(out / "combined.json", combined.dump(2) + "\n");
  std::cout << (pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"cwscaler: Curie-Weiss magnetization dynamics and scaling-limit toolkit"};
  app.require_subcommand(1);
  // The field option is spelled --h, so the help flag must not claim -h.
  app.set_help_flag("--help", "print help");
  app.set_config("--config", "",
                 "INI config file (one experiment per file; [subcommand] sections; "
                 "command-line flags override file values)");
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: machine parallelism)");

  auto add_subcommand = [&app](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help");
    return sub;
  };

  // Shared option storage; each subcommand binds the pieces it uses.
  double beta = 1.5, h = 0.2, delta = 0.3, horizon = 200.0, dt = 0.0;
  std::int64_t n = 1000, steps = 100'000, recordEvery = 1, simN = 10'000, startK = -1;
  std::uint64_t seed = 0;
  int paths = 1, batches = 20;
  bool coldStart = false;
  std::string out = "cw_out", format = "csv", engine = "spin";
  std::string nSchedule = "100,1000,10000", tGrid = "0:6:0.25", alphas = "1,2,3";
  std::string lags = "0.2,0.5,1.0";

  auto* solve = add_subcommand("solve", "roots of m = tanh(beta(m+h)), rate values, m0");
  solve->add_option("--beta", beta, "inverse temperature")->required();
  solve->add_option("--h", h, "external field")->required();
  solve->add_option("--format", format, "stdout format: csv (text) or json");

  auto* exactDist = add_subcommand(
      "exact-dist", "exact lumped magnetization law; CSV columns k,m,eta,prob");
  exactDist->add_option("--beta", beta)->required();
  exactDist->add_option("--h", h)->required();
  exactDist->add_option("--n", n, "number of spins")->required();
  exactDist->add_option("--out", out, "output directory");
  exactDist->add_option("--format", format, "csv or json");

  auto* simulate = add_subcommand(
      "simulate", "run a sampling engine; per-path CSV columns t,value (value is eta)");
  simulate->add_option("--engine", engine, "spin | lumped | ctmc | ou")->required();
  simulate->add_option("--beta", beta)->required();
  simulate->add_option("--h", h)->required();
  simulate->add_option("--n", n, "number of spins (spin/lumped/ctmc)");
  simulate->add_option("--steps", steps, "steps for spin/lumped engines");
  simulate->add_option("--horizon", horizon, "time horizon for ctmc/ou engines");
  simulate->add_option("--dt", dt, "ou sampling step (default 0.05)");
  simulate->add_option("--record-every", recordEvery, "recording cadence for spin/lumped");
  simulate->add_option("--seed", seed, "rng seed; path p uses stream id p");
  simulate->add_option("--paths", paths, "number of independent paths");
  simulate->add_option("--start-k", startK, "fixed initial up-spin count (default stationary)");
  simulate->add_flag("--cold", coldStart, "start from the all-up state");
  simulate->add_option("--out", out, "output directory");

  auto* conc = add_subcommand(
      "check-concentration",
      "exact tails vs the 2exp(-t^2/(4(1+beta))) bound, contraction interval, tail decay; "
      "chatterjee.csv columns n,t,exactTail,bound; tail.csv columns "
      "n,alpha,logValue,value,tN,bound,logTail");
  conc->add_option("--beta", beta)->required();
  conc->add_option("--h", h)->required();
  conc->add_option("--n-schedule", nSchedule, "comma-separated ascending sizes");
  conc->add_option("--t-grid", tGrid, "t values, list or start:stop:step");
  conc->add_option("--delta", delta, "window exponent in (0, 1/2)");
  conc->add_option("--alpha", alphas, "polynomial powers for the tail products");
  conc->add_option("--out", out, "output directory");

  auto* moments = add_subcommand(
      "check-moments", "local-moment sup errors along an n-schedule; kernel_n*.csv columns "
                       "k,eta,pUp,pDown,pStay,drift,secondMoment");
  moments->add_option("--beta", beta)->required();
  moments->add_option("--h", h)->required();
  moments->add_option("--n-schedule", nSchedule);
  moments->add_option("--delta", delta);
  moments->add_option("--out", out, "output directory");

  auto* diffusion = add_subcommand(
      "diffusion", "convergence report toward the OU limit plus one stationary CTMC "
                   "autocovariance experiment; perN.csv columns "
                   "n,variance,ks,driftErrSup,secondMomentErrSup,generatorErr; autocov.csv "
                   "columns lag,empirical,analytic,stderr");
  diffusion->add_option("--beta", beta)->required();
  diffusion->add_option("--h", h)->required();
  diffusion->add_option("--n-schedule", nSchedule);
  diffusion->add_option("--delta", delta);
  diffusion->add_option("--horizon", horizon, "CTMC horizon in time units");
  diffusion->add_option("--sim-n", simN, "CTMC system size");
  diffusion->add_option("--lags", lags, "autocovariance lags (multiples of --dt-grid)");
  diffusion->add_option("--dt-grid", dt, "resampling grid step (default 0.1)");
  diffusion->add_option("--batches", batches, "batch count for standard errors");
  diffusion->add_option("--seed", seed);
  diffusion->add_option("--out", out, "output directory");

  auto* report = add_subcommand("report",
                                    "full battery: check-concentration + diffusion, combined "
                                    "verdict in combined.json");
  report->add_option("--beta", beta)->required();
  report->add_option("--h", h)->required();
  report->add_option("--n-schedule", nSchedule);
  report->add_option("--t-grid", tGrid);
  report->add_option("--delta", delta);
  report->add_option("--alpha", alphas);
  report->add_option("--horizon", horizon);
  report->add_option("--sim-n", simN);
  report->add_option("--lags", lags);
  report->add_option("--dt-grid", dt);
  report->add_option("--batches", batches);
  report->add_option("--seed", seed);
  report->add_option("--out", out, "output directory");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cw");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  set_max_threads(threads);

  try {
    if (solve->parsed()) return cmd_solve(beta, h, format);
    if (exactDist->parsed()) return cmd_exact_dist(beta, h, n, out, format);
    if (simulate->parsed()) {
      if (dt == 0.0) dt = 0.05;
      return cmd_simulate(engine, beta, h, n, steps, horizon, dt, recordEvery, seed, paths,
                          startK, coldStart, out);
    }
    if (conc->parsed()) return cmd_check_concentration(beta, h, nSchedule, tGrid, delta, alphas, out);
    if (moments->parsed()) return cmd_check_moments(beta, h, nSchedule, delta, out);
    if (diffusion->parsed()) {
      if (dt == 0.0) dt = 0.1;
      return cmd_diffusion(beta, h, nSchedule, delta, horizon, simN, lags, dt, batches, seed, out);
    }
    if (report->parsed()) {
      if (dt == 0.0) dt = 0.1;
      return cmd_report(beta, h, nSchedule, tGrid, delta, alphas, horizon, simN, lags, dt,
                        batches, seed, out);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cw::cli
