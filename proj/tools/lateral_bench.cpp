// lateral_bench: simulations, result tables, tuning campaigns and plots.
// Exit codes: 0 success, 2 configuration or argument error, 3 runtime failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "latbench/controllers/closed_loop.hpp"
#include "latbench/controllers/config.hpp"
#include "latbench/controllers/setups.hpp"
#include "latbench/error.hpp"
#include "latbench/metrics/metrics.hpp"
#include "latbench/report/csv.hpp"
#include "latbench/report/plot.hpp"
#include "latbench/report/provenance.hpp"
#include "latbench/report/table4.hpp"
#include "latbench/trajectory/io.hpp"
#include "latbench/trajectory/suite.hpp"
#include "latbench/tuning/campaign.hpp"
#include "latbench/tuning/robustness.hpp"
#include "latbench/tuning/selection.hpp"
#include "latbench/util/parallel.hpp"
#include "latbench/vehicle/params.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace latbench;

namespace {

struct Global {
  std::uint64_t seed = 1;
  bool seed_given = false;
  unsigned jobs = 0;
  std::string out = ".";
};

std::string out_path(const Global& g, const std::string& name) { return (fs::path(g.out) / name).string(); }

void ensure_out(const Global& g) {
  std::error_code ec;
  fs::create_directories(g.out, ec);
  if (ec || !fs::is_directory(g.out)) throw ConfigError("--out", "cannot create output directory '" + g.out + "'");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error("cannot write " + path);
}

void write_json(const std::string& path, const json& doc) { write_text(path, doc.dump(2) + "\n"); }

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

trajectory::Trajectory load_trajectory(const std::string& source, const std::string& limits_path) {
  for (const auto& e : trajectory::suite_catalog())
    if (e.name == source) return trajectory::benchmark_trajectory(source);
  trajectory::DrivingLimits limits;
  if (!limits_path.empty()) {
    std::ifstream in(limits_path);
    if (!in) throw ConfigError(limits_path, "cannot open limits file");
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw ConfigError(limits_path, e.what());
    }
    limits = trajectory::limits_from_json(doc);
  }
  std::ifstream probe(source);
  if (!probe) throw ConfigError("--trajectory", "not a suite name or readable file: '" + source + "'");
  return trajectory::read_trajectory_csv_file(source, limits);
}

void write_log_csv(std::ostream& out, const controllers::SimLog& log, const std::string& comment) {
  if (!comment.empty()) out << comment << '\n';
  report::write_csv_row(out, {"t", "s", "x", "y", "psi", "v_x", "y_1", "e_psi", "kappa_preview", "kappa", "u_ff",
                              "u_fb", "delta_t", "delta_d", "clamped", "e_y"});
  for (const auto& k : log.ticks) {
    using report::format_number;
    report::write_csv_row(out, {format_number(k.t), format_number(k.s), format_number(k.x), format_number(k.y),
                                format_number(k.psi), format_number(k.v_x), format_number(k.y_1),
                                format_number(k.e_psi), format_number(k.kappa_preview), format_number(k.kappa),
                                format_number(k.u_ff), format_number(k.u_fb), format_number(k.delta_t),
                                format_number(k.delta_d), k.clamped ? "1" : "0", format_number(k.e_y)});
  }
}

void write_log_file(const std::string& path, const controllers::SimLog& log, const std::string& comment) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  write_log_csv(f, log, comment);
}

controllers::ControllerConfig pick_controller(const std::string& path, const std::string& label) {
  if (!path.empty() && !label.empty()) throw ConfigError("--controller", "give either --controller or --setup");
  if (!label.empty()) {
    try {
      return controllers::published_setup(label);
    } catch (const ArgumentError& e) {
      throw ConfigError("--setup", e.what());
    }
  }
  if (path.empty()) throw ConfigError("--controller", "a controller config or --setup label is required");
  return controllers::load_controller_config(path);
}

// simulate ------------------------------------------------------------------

struct SimulateArgs {
  std::string trajectory;
  std::string limits;
  std::string controller;
  std::string setup;
  std::string vehicle;
  double offset = 0.0;
  double initial_speed = -1.0;
  bool hold_speed = false;
  double position_noise = controllers::SimOptions{}.position_noise;
  double heading_noise = controllers::SimOptions{}.heading_noise;
};

int cmd_simulate(const Global& g, const SimulateArgs& a) {
  const auto traj = load_trajectory(a.trajectory, a.limits);
  const auto controller = pick_controller(a.controller, a.setup);
  const auto vehicle = a.vehicle.empty() ? vehicle::VehicleParams{} : vehicle::load_vehicle_params(a.vehicle);
  vehicle.validate();
  controllers::SimOptions sim;
  sim.seed = g.seed;
  sim.initial_lateral_offset = a.offset;
  if (a.initial_speed >= 0.0) sim.initial_speed = a.initial_speed;
  sim.hold_speed = a.hold_speed;
  if (!(a.position_noise >= 0.0)) throw ConfigError("--position-noise", "must be >= 0");
  if (!(a.heading_noise >= 0.0)) throw ConfigError("--heading-noise", "must be >= 0");
  sim.position_noise = a.position_noise;
  sim.heading_noise = a.heading_noise;
  ensure_out(g);

  const json config = {{"trajectory", traj.name},
                       {"controller", controllers::to_json(controller)},
                       {"vehicle", vehicle::to_json(vehicle)},
                       {"offset", a.offset},
                       {"initial_speed", a.initial_speed},
                       {"hold_speed", a.hold_speed},
                       {"position_noise", a.position_noise},
                       {"heading_noise", a.heading_noise}};
  const auto prov = report::Provenance::of(g.seed, config);
  const auto log = controllers::run_closed_loop(traj, controller, vehicle, sim);
  const auto m = metrics::compute_metrics(log, traj);
  write_log_file(out_path(g, "log.csv"), log, prov.csv_comment());
  json report = metrics::to_json(m);
  report["termination"] = controllers::termination_name(log.termination);
  report["controller_faults"] = log.controller_faults;
  report["ticks"] = log.ticks.size();
  report["trajectory"] = traj.name;
  report["setup"] = controller.label;
  report["provenance"] = prov.to_json();
  write_json(out_path(g, "metrics.json"), report);
  std::cout << traj.name << ' ' << (controller.label.empty() ? "controller" : controller.label) << ": "
            << controllers::termination_name(log.termination) << ", IAE " << m.iae << " m, MLE " << m.mle << " m\n";
  return 0;
}

// table4 --------------------------------------------------------------------

struct Table4Args {
  std::vector<std::string> trajectories{"T1", "T2", "T3"};
  std::string best_on = "T4";
  bool logs = false;
  bool timing = false;
};

int cmd_table4(const Global& g, const Table4Args& a) {
  std::vector<trajectory::Trajectory> trajs;
  for (const auto& n : a.trajectories) trajs.push_back(load_trajectory(n, {}));
  ensure_out(g);
  const vehicle::VehicleParams vehicle;
  report::Table4Options opt;
  opt.jobs = g.jobs;
  opt.sim.seed = g.seed;
  opt.keep_logs = a.logs;
  opt.timing = a.timing;
  const json config = {{"command", "table4"}, {"trajectories", a.trajectories}, {"best_on", a.best_on}};
  const auto prov = report::Provenance::of(g.seed, config);

  const auto& setups = controllers::published_setups();
  const auto table = report::build_table4(setups, trajs, vehicle, opt);
  {
    std::ofstream f(out_path(g, "table4.csv"), std::ios::binary);
    report::write_table4_csv(f, table, prov.csv_comment());
  }

  std::vector<report::RunRecord> runs = table.runs;
  std::size_t flagged = 0;
  for (const auto& r : table.rows) flagged += r.flags.empty() ? 0 : 1;

  if (!a.best_on.empty()) {
    std::vector<controllers::ControllerConfig> best;
    for (const auto& label : report::best_setups(table)) best.push_back(controllers::published_setup(label));
    auto best_table = report::build_table4(best, {load_trajectory(a.best_on, {})}, vehicle, opt);
    std::erase_if(best_table.rows, [](const report::Table4Row& r) { return r.mean_row; });
    std::ofstream f(out_path(g, "table4_" + a.best_on + ".csv"), std::ios::binary);
    report::write_table4_csv(f, best_table, prov.csv_comment());
    runs.insert(runs.end(), best_table.runs.begin(), best_table.runs.end());
  }

  if (a.logs) {
    fs::create_directories(fs::path(g.out) / "logs");
    for (const auto& r : runs)
      if (r.log) write_log_file(out_path(g, "logs/" + r.setup + "_" + r.trajectory + ".csv"), *r.log, prov.csv_comment());
  }
  if (a.timing) {
    std::ofstream f(out_path(g, "runtime.csv"), std::ios::binary);
    report::write_csv_row(f, {"setup", "trajectory", "ticks", "wall_seconds", "per_tick_us"});
    for (const auto& r : runs) {
      const double per_tick = r.ticks ? 1e6 * r.wall_seconds / static_cast<double>(r.ticks) : 0.0;
      report::write_csv_row(f, {r.setup, r.trajectory, std::to_string(r.ticks), report::format_number(r.wall_seconds),
                                report::format_number(per_tick)});
    }
  }
  std::cout << "table4: " << table.rows.size() << " rows, " << flagged << " flagged\n";
  return 0;
}

// tune / robustness / select ------------------------------------------------

tuning::CampaignConfig campaign(const Global& g, const std::string& path) {
  if (path.empty()) throw ConfigError("--config", "a campaign config is required");
  auto c = tuning::load_campaign_config(path);
  if (g.seed_given) c.seed = g.seed;
  return c;
}

struct TuneArgs {
  std::string config;
  std::string checkpoint;
  std::size_t stop_after = 0;
};

int cmd_tune(const Global& g, const TuneArgs& a) {
  const auto c = campaign(g, a.config);
  ensure_out(g);
  tuning::TuningOptions opt;
  opt.jobs = g.jobs;
  opt.checkpoint_path = a.checkpoint.empty() ? out_path(g, "checkpoint.json") : a.checkpoint;
  opt.stop_after = a.stop_after;
  const auto prov = report::Provenance::of(c.seed, tuning::to_json(c));
  const auto start = std::chrono::steady_clock::now();
  const auto result = tuning::run_tuning(c, opt);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  tuning::write_archive_csv_file(out_path(g, "archive.csv"), c.family, result.archive.entries(), prov.csv_comment());
  // Wall time makes this file differ between runs; determinism checks skip it.
  write_json(out_path(g, "run_summary.json"), {{"command", "tune"},
                                                {"wall_seconds", wall},
                                                {"evaluations", result.evaluations},
                                                {"replayed", result.replayed},
                                                {"archive_size", result.archive.size()},
                                                {"converged", result.converged},
                                                {"interrupted", result.interrupted},
                                                {"checkpoint", opt.checkpoint_path},
                                                {"jobs", g.jobs},
                                                {"provenance", prov.to_json()}});
  std::cout << "tune " << controllers::family_name(c.family) << ": " << result.evaluations << " evaluations, "
            << result.archive.size() << " archive points" << (result.interrupted ? " (interrupted, resumable)" : "")
            << '\n';
  return 0;
}

struct RobustnessArgs {
  std::string config;
  std::string archive;
  std::string controller;
  std::string setup;
  std::size_t draws = 0;
  double threshold = 3.0;
  std::string trajectory = "T5";
};

int cmd_robustness(const Global& g, const RobustnessArgs& a) {
  ensure_out(g);
  if (!a.archive.empty()) {
    auto c = campaign(g, a.config);
    if (a.draws) c.robustness_draws = a.draws;
    auto entries = tuning::read_archive_csv_file(a.archive, c.family);
    const auto prov = report::Provenance::of(c.seed, tuning::to_json(c));
    tuning::annotate_robustness(entries, c, g.jobs);
    tuning::write_archive_csv_file(out_path(g, "archive_robust.csv"), c.family, entries, prov.csv_comment());
    std::size_t screened = 0;
    for (const auto& e : entries) screened += e.robustness_pct ? 1 : 0;
    std::cout << "robustness: screened " << screened << " of " << entries.size() << " archive points\n";
    return 0;
  }
  const auto controller = pick_controller(a.controller, a.setup);
  tuning::RobustnessOptions ro;
  ro.draws = a.draws ? a.draws : 200;
  ro.seed = g.seed;
  ro.threshold = a.threshold;
  ro.jobs = g.jobs;
  const auto traj = load_trajectory(a.trajectory, {});
  const auto r = tuning::monte_carlo_robustness(controller, traj, vehicle::VehicleParams{}, ro);
  const json config = {{"controller", controllers::to_json(controller)}, {"draws", ro.draws},
                       {"threshold", ro.threshold}, {"trajectory", traj.name}};
  write_json(out_path(g, "robustness.json"), {{"setup", controller.label},
                                               {"draws", r.draws},
                                               {"successes", r.successes},
                                               {"success_pct", r.success_pct},
                                               {"provenance", report::Provenance::of(g.seed, config).to_json()}});
  std::cout << "robustness " << controller.label << ": " << r.success_pct << "%\n";
  return 0;
}

struct SelectArgs {
  std::string config;
  std::string archive;
  double min_robustness = 90.0;
};

int cmd_select(const Global& g, const SelectArgs& a) {
  const auto c = campaign(g, a.config);
  if (a.archive.empty()) throw ConfigError("--archive", "a robustness-annotated archive is required");
  const auto entries = tuning::read_archive_csv_file(a.archive, c.family);
  tuning::SelectionOptions so;
  so.min_robustness_pct = a.min_robustness;
  const auto sel = tuning::select_setups(entries, so);
  ensure_out(g);
  json summary = {{"family", controllers::family_name(c.family)},
                  {"provenance", report::Provenance::of(c.seed, tuning::to_json(c)).to_json()}};
  for (std::size_t k = 0; k < 3; ++k) {
    auto cfg = controllers::config_from_vector(c.family, sel.setups[k].parameters);
    cfg.label = controllers::family_name(c.family) + "-tuned-" + std::to_string(k + 1);
    const std::string name = "setup" + std::to_string(k + 1) + ".json";
    write_json(out_path(g, name), controllers::to_json(cfg));
    summary["setups"].push_back({{"file", name},
                                 {"candidate", sel.setups[k].candidate},
                                 {"objectives", sel.setups[k].objectives},
                                 {"robustness_pct", sel.setups[k].robustness_pct.value_or(-1.0)}});
  }
  write_json(out_path(g, "selection.json"), summary);
  std::cout << "selected candidates " << sel.setups[0].candidate << ", " << sel.setups[1].candidate << ", "
            << sel.setups[2].candidate << '\n';
  return 0;
}

// plot ----------------------------------------------------------------------

struct PlotArgs {
  std::string kind;
  std::vector<std::string> inputs;
  std::string title;
  std::string rows = "mean";
};

std::string plot_comment(const Global& g, const PlotArgs& a) {
  std::string text = a.kind;
  for (const auto& in : a.inputs) {
    std::ifstream f(in, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    text += '\n' + s.str();
  }
  return report::Provenance::of(g.seed, std::string_view(text)).svg_comment();
}

int cmd_plot(const Global& g, const PlotArgs& a) {
  if (a.inputs.empty()) throw report::EmptyPlotError("no input files");
  std::vector<report::CsvTable> tables;
  for (const auto& in : a.inputs) {
    std::error_code ec;
    if (fs::exists(in, ec) && fs::file_size(in, ec) == 0) throw report::EmptyPlotError("empty plot input '" + in + "'");
    try {
      tables.push_back(report::read_csv_file(in));
    } catch (const ArgumentError& e) {
      throw ConfigError(in, e.what());
    }
    if (tables.back().rows.empty()) throw report::EmptyPlotError("empty plot input '" + in + "'");
  }
  const std::string comment = plot_comment(g, a);
  std::string svg;
  if (a.kind == "pareto3d-projections") {
    std::vector<std::vector<double>> obj;
    for (const auto& t : tables) {
      const auto f1 = t.numeric_column("max_iae");
      const auto f2 = t.numeric_column("max_m_epsilon");
      const auto f3 = t.numeric_column("max_m_zeta");
      for (std::size_t i = 0; i < f1.size(); ++i) obj.push_back({f1[i], f2[i], f3[i]});
    }
    svg = report::pareto_projections_svg(obj, a.title.empty() ? "Pareto front projections" : a.title, comment);
  } else if (a.kind == "error-boxplot") {
    std::vector<report::Series> series;
    for (std::size_t i = 0; i < tables.size(); ++i) series.push_back({stem(a.inputs[i]), tables[i].numeric_column("e_y")});
    svg = report::box_plot_svg(series, a.title.empty() ? "Lateral error" : a.title, "e_y (m)", comment);
  } else if (a.kind == "error-vs-curvature") {
    report::ScatterPanel panel{"curvature (1/m)", "e_y (m)", {}};
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const auto k = tables[i].numeric_column("kappa");
      const auto e = tables[i].numeric_column("e_y");
      report::ScatterSeries s{stem(a.inputs[i]), {}};
      for (std::size_t j = 0; j < k.size(); ++j) s.points.push_back({k[j], e[j]});
      panel.series.push_back(std::move(s));
    }
    svg = report::scatter_svg({panel}, a.title.empty() ? "Lateral error vs curvature" : a.title, comment);
  } else if (a.kind == "spider") {
    std::vector<report::Series> series;
    for (const auto& t : tables) {
      const std::size_t label = t.column("setup");
      const std::vector<std::size_t> cols{t.column("mean_IAE"), t.column("mean_MLE"), t.column("mean_M_eps"),
                                          t.column("mean_M_zeta")};
      for (const auto& row : t.rows) {
        const bool mean = row[label].ends_with("-mean");
        if ((a.rows == "mean") != mean && a.rows != "all") continue;
        report::Series s{row[label], {}};
        for (std::size_t c : cols) s.values.push_back(report::parse_number(row[c]).value_or(NAN));
        series.push_back(std::move(s));
      }
    }
    const tuning::WorkZone zone;
    svg = report::spider_svg({"IAE", "MLE", "M_eps", "M_zeta"}, {zone.iae, 1.0, zone.m_epsilon, zone.m_zeta}, series,
                             a.title.empty() ? "Mean metrics" : a.title, comment);
  } else if (a.kind == "runtime-boxplot") {
    std::map<std::string, std::vector<double>> by_family;
    std::vector<std::string> order;
    for (const auto& t : tables) {
      const std::size_t label = t.column("setup");
      const std::size_t col = t.column("per_tick_us");
      for (const auto& row : t.rows) {
        const std::string family = row[label].substr(0, row[label].find('-'));
        if (!by_family.count(family)) order.push_back(family);
        by_family[family].push_back(report::parse_number(row[col]).value_or(NAN));
      }
    }
    std::vector<report::Series> series;
    for (const auto& f : order) series.push_back({f, by_family[f]});
    svg = report::box_plot_svg(series, a.title.empty() ? "Computation time per control cycle" : a.title,
                               "time per cycle (us)", comment);
  } else {
    throw ConfigError("--kind", "unknown plot kind '" + a.kind + "'");
  }
  ensure_out(g);
  write_text(out_path(g, a.kind + ".svg"), svg);
  std::cout << "plot: " << out_path(g, a.kind + ".svg") << '\n';
  return 0;
}

// suite ---------------------------------------------------------------------

int cmd_suite(const Global& g) {
  ensure_out(g);
  const auto trajs = trajectory::benchmark_suite();
  const auto prov = report::Provenance::of(g.seed, trajectory::suite_manifest(trajs));
  for (const auto& t : trajs) trajectory::write_trajectory_csv_file(out_path(g, t.name + ".csv"), t, prov.csv_comment());
  write_json(out_path(g, "manifest.json"), trajectory::suite_manifest(trajs));
  std::cout << "suite: " << trajs.size() << " trajectories\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lateral controller benchmark"};
  app.set_version_flag("--version", std::string(LATBENCH_VERSION));
  app.require_subcommand(1);
  Global g;
  g.jobs = util::default_jobs();
  auto* seed_opt = app.add_option("--seed", g.seed, "Random seed recorded in every artifact");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output directory");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Run one closed-loop simulation");
  s->add_option("--trajectory", sim.trajectory, "Suite name (T1..T6) or trajectory CSV")->required();
  s->add_option("--limits", sim.limits, "Driving limits JSON for a CSV trajectory");
  s->add_option("--controller", sim.controller, "Controller config JSON");
  s->add_option("--setup", sim.setup, "Published setup label, e.g. NLMPC-1");
  s->add_option("--vehicle", sim.vehicle, "Vehicle parameters JSON");
  s->add_option("--offset", sim.offset, "Initial lateral offset (m, left positive)");
  s->add_option("--initial-speed", sim.initial_speed, "Initial speed (m/s)");
  s->add_flag("--hold-speed", sim.hold_speed, "Keep the initial speed constant");
  s->add_option("--position-noise", sim.position_noise, "Position noise stddev (m)");
  s->add_option("--heading-noise", sim.heading_noise, "Heading noise stddev (rad)");

  Table4Args t4;
  auto* t = app.add_subcommand("table4", "Run the fifteen published setups on the test trajectories");
  t->add_option("--trajectories", t4.trajectories, "Trajectories of the main table");
  t->add_option("--best-on", t4.best_on, "Trajectory for the best setup of each family (empty to skip)");
  t->add_flag("--logs", t4.logs, "Write every run's log under logs/");
  t->add_flag("--timing", t4.timing, "Write runtime.csv with wall-clock timings");

  TuneArgs tune;
  auto* tu = app.add_subcommand("tune", "Pareto search over a controller family");
  tu->add_option("--config", tune.config, "Campaign config JSON")->required();
  tu->add_option("--checkpoint", tune.checkpoint, "Checkpoint file (default <out>/checkpoint.json)");
  tu->add_option("--stop-after", tune.stop_after, "Stop after this many evaluations, leaving a checkpoint");

  RobustnessArgs rob;
  auto* r = app.add_subcommand("robustness", "Monte Carlo robustness of an archive or a single setup");
  r->add_option("--config", rob.config, "Campaign config JSON (with --archive)");
  r->add_option("--archive", rob.archive, "Archive CSV to annotate");
  r->add_option("--controller", rob.controller, "Controller config JSON");
  r->add_option("--setup", rob.setup, "Published setup label");
  r->add_option("--draws", rob.draws, "Number of parameter draws");
  r->add_option("--threshold", rob.threshold, "Failure threshold on |e_y| (m)");
  r->add_option("--trajectory", rob.trajectory, "Trajectory for a single-setup screen");

  SelectArgs sel;
  auto* se = app.add_subcommand("select", "Pick three setups from a robustness-annotated archive");
  se->add_option("--config", sel.config, "Campaign config JSON")->required();
  se->add_option("--archive", sel.archive, "Annotated archive CSV")->required();
  se->add_option("--min-robustness", sel.min_robustness, "Minimum success rate (%)");

  PlotArgs plot;
  auto* p = app.add_subcommand("plot", "Render SVG figures from logs, archives or tables");
  p->add_option("--kind", plot.kind, "pareto3d-projections | error-boxplot | spider | error-vs-curvature | runtime-boxplot")
      ->required();
  p->add_option("--input", plot.inputs, "Input files")->required();
  p->add_option("--title", plot.title, "Figure title");
  p->add_option("--rows", plot.rows, "spider: mean | setups | all");

  auto* su = app.add_subcommand("suite", "Write the benchmark trajectories and their manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  g.seed_given = seed_opt->count() > 0;

  try {
    if (s->parsed()) return cmd_simulate(g, sim);
    if (t->parsed()) return cmd_table4(g, t4);
    if (tu->parsed()) return cmd_tune(g, tune);
    if (r->parsed()) return cmd_robustness(g, rob);
    if (se->parsed()) return cmd_select(g, sel);
    if (p->parsed()) return cmd_plot(g, plot);
    if (su->parsed()) return cmd_suite(g);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
