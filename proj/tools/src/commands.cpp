#include "threeway/app/commands.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "CLI11.hpp"
#include "threeway/app/ingest.hpp"
#include "threeway/dtrs.hpp"
#include "threeway/error.hpp"
#include "threeway/oracle.hpp"
#include "threeway/possibility.hpp"
#include "threeway/shadowed.hpp"

namespace threeway::app {

namespace {

constexpr std::size_t kDefaultGrid = 1001;
constexpr std::size_t kShadowScanGrid = 10000;

struct Command {
  std::string name;
  std::string help;
};

const std::array<Command, 7> kCommands{{
    {"reduce", "Reduce interval grades to scalars with m_theta"},
    {"shadow", "Shadowed set with balanced thresholds from the breakpoint optimizer"},
    {"approx", "Three-way approximation with explicit --alpha and --beta"},
    {"thresholds", "Closed-form thresholds from a (theta-reduced) loss profile"},
    {"decide", "Threshold decisions with theta-reduced losses"},
    {"decide-iv", "Possibility-degree decisions with interval losses"},
    {"check", "Run the oracle suites"},
}};

std::string region_name(Region r) {
  switch (r) {
    case Region::Elevate: return "elevate";
    case Region::Reduce: return "reduce";
    case Region::Shadow: return "shadow";
  }
  return "shadow";
}

Json interval_json(const Interval& iv) { return Json::array({number(iv.lo()), number(iv.hi())}); }

Json losses_json(const IntervalLossProfile& p) {
  return Json{{"lambda_e", interval_json(p.lambda_e())},
              {"lambda_r", interval_json(p.lambda_r())},
              {"lambda_sd", interval_json(p.lambda_sd())},
              {"lambda_su", interval_json(p.lambda_su())}};
}

Json losses_json(const LossProfile& p) {
  return Json{{"lambda_e", number(p.lambda_e)},
              {"lambda_r", number(p.lambda_r)},
              {"lambda_sd", number(p.lambda_sd)},
              {"lambda_su", number(p.lambda_su)}};
}

Json thresholds_json(const DerivedThresholds& t) {
  return Json{{"alpha", number(t.alpha)},
              {"beta", number(t.beta)},
              {"gamma", number(t.gamma)},
              {"gamma_minus", number(t.gamma_minus)},
              {"gamma_plus", number(t.gamma_plus)}};
}

Json counts_json(std::size_t e, std::size_t r, std::size_t s) {
  return Json{{"elevate", e}, {"reduce", r}, {"shadow", s}};
}

struct Tally {
  std::size_t elevate = 0, reduce = 0, shadow = 0;
  void add(Region r) {
    (r == Region::Elevate ? elevate : r == Region::Reduce ? reduce : shadow) += 1;
  }
  Json json() const { return counts_json(elevate, reduce, shadow); }
};

std::size_t grid_points(const std::string& name, const RunConfig& c) {
  if (c.grid) return *c.grid;
  return name == "shadow" ? kShadowScanGrid : kDefaultGrid;
}

Json config_json(const std::string& name, const RunConfig& c) {
  const auto opt = [](const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); };
  return Json{{"theta", number(c.theta.value())},
              {"grid", grid_points(name, c)},
              {"seed", c.seed},
              {"epsilon", number(c.epsilon)},
              {"format", c.format == Format::Json ? "json" : "csv"},
              {"alpha", opt(c.alpha)},
              {"beta", opt(c.beta)},
              {"cases", c.cases}};
}

IVFuzzySet load_dataset(const std::string& name, const RunConfig& c) {
  if (!c.dataset) throw Error(ErrorKind::MissingInput, name + " needs --dataset");
  return ingest_dataset(*c.dataset);
}

IntervalLossProfile load_losses(const std::string& name, const RunConfig& c) {
  if (!c.losses) throw Error(ErrorKind::MissingInput, name + " needs --losses");
  return ingest_losses(*c.losses);
}

Json object_head(const ObjectId& id, const Interval& grade, double m) {
  return Json{{"id", id.str()}, {"grade", interval_json(grade)}, {"m_theta", number(m)}};
}

void run_reduce(Report& r, const RunConfig& c) {
  const IVFuzzySet set = load_dataset(r.command, c);
  for (const auto& [id, grade] : set) r.rows.push_back(object_head(id, grade, m_theta(grade, c.theta)));
  r.summary["objects"] = set.size();
}

void run_shadow(Report& r, const RunConfig& c) {
  const IVFuzzySet set = load_dataset(r.command, c);
  const ScalarFuzzySet scalar = reduce(set, c.theta);
  const BalancedOptimum opt = optimize_thresholds_balanced(scalar, c.epsilon);
  const oracle::ScanOptimum scan =
      oracle::exhaustive_v_scan(scalar, oracle::GridSpec(grid_points(r.command, c), 0.5, 1.0));
  const ThresholdPair t(opt.alpha, 1.0 - opt.alpha);

  Tally tally;
  for (const auto& [id, grade] : set) {
    const double m = scalar.grade(id.str());
    Json row = object_head(id, grade, m);
    const ShadowValue v = shadow_assign(m, t);
    const Region region = v == ShadowValue::One ? Region::Elevate : v == ShadowValue::Zero ? Region::Reduce : Region::Shadow;
    tally.add(region);
    row["region"] = region_name(region);
    row["value"] = v == ShadowValue::One ? Json(1) : v == ShadowValue::Zero ? Json(0) : Json("unit");
    row["error"] = number(v == ShadowValue::One ? 1.0 - m : v == ShadowValue::Zero ? m : (1.0 - m) + m);
    r.rows.push_back(std::move(row));
  }

  const RegionErrors e = region_errors(scalar, t);
  const bool scan_ok = opt.v <= scan.v_star + 1e-12;
  r.summary["thresholds"] = Json{{"alpha", number(t.alpha())}, {"beta", number(t.beta())}};
  r.summary["objective_v"] = number(opt.v);
  r.summary["region_errors"] = Json{{"elevated", number(e.elevated)},
                                    {"reduced", number(e.reduced)},
                                    {"shadow", number(e.shadow)},
                                    {"shadow_half", number(e.shadow_half)}};
  r.summary["counts"] = tally.json();
  r.summary["scan"] = Json{{"alpha", number(scan.alpha_star)}, {"objective_v", number(scan.v_star)}, {"ok", scan_ok}};
  if (!scan_ok) r.exit_code = 2;
}

void run_approx(Report& r, const RunConfig& c) {
  if (!c.alpha || !c.beta) throw Error(ErrorKind::MissingInput, "approx needs --alpha and --beta");
  const ThresholdPair t(*c.alpha, *c.beta);
  const IVFuzzySet set = load_dataset(r.command, c);
  const ScalarFuzzySet scalar = reduce(set, c.theta);

  Tally tally;
  for (const auto& [id, grade] : set) {
    const double m = scalar.grade(id.str());
    const Region region = approx_three_way(m, t);
    tally.add(region);
    Json row = object_head(id, grade, m);
    row["region"] = region_name(region);
    row["value"] = number(codebook_value(region));
    row["error"] = number(per_object_error(m, t));
    r.rows.push_back(std::move(row));
  }
  r.summary["thresholds"] = Json{{"alpha", number(t.alpha())}, {"beta", number(t.beta())}};
  r.summary["total_error"] = number(total_error(scalar, t));
  r.summary["counts"] = tally.json();
}

void run_thresholds(Report& r, const RunConfig& c) {
  const IntervalLossProfile losses = load_losses(r.command, c);
  const LossProfile reduced = reduce_losses(losses, c.theta);
  const DerivedThresholds t = thresholds_from_losses(reduced);
  const oracle::GridSpec grid(grid_points(r.command, c));
  const oracle::ScanBoundaries scan = oracle::threshold_scan(reduced, grid);
  const double step = grid.step() + 1e-12;
  const bool ok = scan.alpha_hat >= t.alpha && scan.alpha_hat - t.alpha < step && scan.beta_hat <= t.beta &&
                  t.beta - scan.beta_hat < step;

  r.summary["losses"] = losses_json(losses);
  r.summary["reduced_losses"] = losses_json(reduced);
  r.summary["thresholds"] = thresholds_json(t);
  r.summary["scan"] = Json{{"alpha_hat", number(scan.alpha_hat)}, {"beta_hat", number(scan.beta_hat)}, {"ok", ok}};
  if (!ok) r.exit_code = 2;
}

void run_decide(Report& r, const RunConfig& c) {
  const IVFuzzySet set = load_dataset(r.command, c);
  const IntervalLossProfile losses = load_losses(r.command, c);
  const LossProfile reduced = reduce_losses(losses, c.theta);
  const DerivedThresholds t = thresholds_from_losses(reduced);
  const ThresholdPair pair = t.pair();

  Tally tally;
  double total_cost = 0.0, total_err = 0.0;
  for (const auto& [id, grade] : set) {
    const double m = m_theta(grade, c.theta);
    const RiskSet risk = risks(m, reduced);
    const Region region = decide(m, t);
    const double cost = region == Region::Elevate ? risk.elevate : region == Region::Reduce ? risk.reduce : risk.shadow;
    const double err = per_object_error(m, pair);
    tally.add(region);
    total_cost += cost;
    total_err += err;

    Json row = object_head(id, grade, m);
    row["risks"] = Json{{"elevate", number(risk.elevate)},
                        {"reduce", number(risk.reduce)},
                        {"shadow", number(risk.shadow)},
                        {"shadow_action", std::string(to_string(risk.shadow_action))}};
    row["region"] = region_name(region);
    row["value"] = number(codebook_value(region));
    row["error"] = number(err);
    row["cost"] = number(cost);
    r.rows.push_back(std::move(row));
  }
  r.summary["losses"] = losses_json(losses);
  r.summary["reduced_losses"] = losses_json(reduced);
  r.summary["thresholds"] = thresholds_json(t);
  r.summary["total_cost"] = number(total_cost);
  r.summary["total_error"] = number(total_err);
  r.summary["counts"] = tally.json();
}

void run_decide_iv(Report& r, const RunConfig& c) {
  const IVFuzzySet set = load_dataset(r.command, c);
  const IntervalLossProfile losses = load_losses(r.command, c);

  Tally tally;
  double cost_lo = 0.0, cost_hi = 0.0, total_err = 0.0;
  for (const auto& [id, grade] : set) {
    const double m = m_theta(grade, c.theta);
    const PossibilityTrace tr = trace_possibility(m, losses);
    const Interval& cost = tr.decision == Region::Elevate  ? tr.risks.r_e
                           : tr.decision == Region::Reduce ? tr.risks.r_r
                                                           : tr.risks.r_s;
    const double err = std::abs(m - codebook_value(tr.decision));
    tally.add(tr.decision);
    cost_lo += cost.lo();
    cost_hi += cost.hi();
    total_err += err;

    Json matrix = Json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      matrix.push_back(Json::array({number(tr.matrix(i, 0)), number(tr.matrix(i, 1)), number(tr.matrix(i, 2))}));
    }
    Json row = object_head(id, grade, m);
    row["situation"] = std::string(to_string(tr.risks.situation));
    row["risks"] = Json{{"elevate", interval_json(tr.risks.r_e)},
                        {"reduce", interval_json(tr.risks.r_r)},
                        {"shadow", interval_json(tr.risks.r_s)}};
    row["matrix"] = std::move(matrix);
    row["totals"] = Json{{"elevate", number(tr.totals.p_e)},
                         {"reduce", number(tr.totals.p_r)},
                         {"shadow", number(tr.totals.p_s)}};
    row["regimes"] = Json{{"er", std::string(to_string(tr.regimes.er))},
                          {"es", std::string(to_string(tr.regimes.es))},
                          {"rs", std::string(to_string(tr.regimes.rs))},
                          {"row", regime_row(tr.regimes)},
                          {"allowed", allowed_outcomes(tr.regimes).describe()}};
    row["region"] = region_name(tr.decision);
    row["value"] = number(codebook_value(tr.decision));
    row["error"] = number(err);
    row["cost"] = interval_json(cost);
    r.rows.push_back(std::move(row));
  }
  r.summary["losses"] = losses_json(losses);
  r.summary["total_cost"] = Json::array({number(cost_lo), number(cost_hi)});
  r.summary["total_error"] = number(total_err);
  r.summary["counts"] = tally.json();
}

void run_check(Report& r, const RunConfig& c) {
  const oracle::SuiteReport suites[] = {
      oracle::closed_form_suite(c.seed, 100, oracle::GridSpec(grid_points(r.command, c))),
      oracle::threshold_invariant_suite(c.seed, c.cases),
      oracle::possibility_consistency_suite(c.seed, c.cases),
      oracle::optimizer_suite(c.seed),
  };
  r.rows_key = "violations";
  std::size_t total = 0;
  Json per_suite = Json::object();
  for (const auto& s : suites) {
    Json entry = Json::object();
    for (const auto& [key, n] : s.counters) entry[key] = n;
    entry["violations"] = s.violations.size();
    per_suite[s.name] = std::move(entry);
    total += s.violations.size();
    for (const auto& v : s.violations) {
      r.rows.push_back(Json{{"suite", s.name}, {"check", v.check}, {"detail", v.detail}});
    }
  }
  r.summary["suites"] = std::move(per_suite);
  r.summary["violations"] = total;
  if (total != 0) r.exit_code = 2;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : kCommands) out.push_back(c.name);
    return out;
  }();
  return names;
}

Report run_subcommand(std::string_view name, const RunConfig& config) {
  Report r;
  r.command = std::string(name);
  r.config = config_json(r.command, config);
  if (name == "reduce") {
    run_reduce(r, config);
  } else if (name == "shadow") {
    run_shadow(r, config);
  } else if (name == "approx") {
    run_approx(r, config);
  } else if (name == "thresholds") {
    run_thresholds(r, config);
  } else if (name == "decide") {
    run_decide(r, config);
  } else if (name == "decide-iv") {
    run_decide_iv(r, config);
  } else if (name == "check") {
    run_check(r, config);
  } else {
    throw Error(ErrorKind::MissingInput, "unknown subcommand '" + r.command + "'");
  }
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-way approximations of interval-valued fuzzy sets", "threeway"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "threeway 0.1.0");

  double theta = 0.5;
  std::size_t grid = 0;
  std::string format = "json";
  RunConfig cfg;

  for (const auto& cmd : kCommands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--theta", theta, "Interpolation weight for m_theta")->capture_default_str();
    sub->add_option("--alpha", cfg.alpha, "Upper threshold");
    sub->add_option("--beta", cfg.beta, "Lower threshold");
    sub->add_option("--grid", grid, "Grid points for oracle scans")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Seed for the oracle suites")->capture_default_str();
    sub->add_option("--epsilon", cfg.epsilon, "Offset above 0.5 tried by the optimizer")->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--losses", cfg.losses, "Loss profile JSON");
    sub->add_option("--dataset", cfg.dataset, "Dataset CSV with header id,lo,hi");
    sub->add_option("--cases", cfg.cases, "Random cases per oracle suite")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    cfg.theta = Theta(theta);
    if (grid != 0) cfg.grid = grid;
    cfg.format = format == "csv" ? Format::Csv : Format::Json;
    const Report report = run_subcommand(name, cfg);
    out << render(report, cfg.format);
    return report.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace threeway::app
