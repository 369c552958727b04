#include "bittp/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "bittp/archive.hpp"
#include "bittp/cli/formats.hpp"
#include "bittp/error.hpp"
#include "bittp/hypervolume.hpp"
#include "bittp/instance.hpp"
#include "bittp/rng.hpp"
#include "bittp/wsm.hpp"

namespace bittp::cli {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct SolveOptions {
  std::string instance;
  double time_limit = 600.0;
  std::int64_t iterations = 0;
  std::uint64_t seed = 1;
  std::int64_t eta = 117;
  std::int64_t rho = 12;
  std::int64_t gamma = 41;
  std::string beta = "0.001";
  double lambda = 0.22;
  std::string alpha_dist = "uniform";
  std::size_t max_solutions = 0;
  std::string output_dir = ".";
  std::size_t runs = 1;
  bool candidate_two_opt = false;
};

struct HvOptions {
  std::vector<std::string> fronts;
  std::vector<double> bounds;
  std::string bounds_file;
};

double parse_beta(const std::string& text) {
  if (text == "-inf" || text == "-infinity" || text == "-Inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  std::istringstream in(text);
  if (!(in >> v) || !in.eof() || !std::isfinite(v)) {
    throw Error(Errc::invalid_config, "--beta expects a number or -inf, got '" + text + "'");
  }
  return v;
}

struct Snapshot {
  double time = 0.0;
  std::vector<ObjectivePoint> points;
};

struct WorkerOutput {
  std::optional<RunResult> result;
  std::vector<Snapshot> snapshots;
  std::exception_ptr error;
};

std::vector<ObjectivePoint> nondominated(std::vector<ObjectivePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) {
    return a.profit > b.profit || (a.profit == b.profit && a.time < b.time);
  });
  std::vector<ObjectivePoint> out;
  for (const auto& p : pts) {
    if (out.empty() || p.time < out.back().time) out.push_back(p);
  }
  return out;
}

// Hypervolume of the union of every run's latest snapshot, in time order.
ordered_json merged_trace(const std::vector<WorkerOutput>& outputs, const Bounds& bounds) {
  struct Event {
    double time;
    std::size_t run;
    const Snapshot* snap;
  };
  std::vector<Event> events;
  for (std::size_t r = 0; r < outputs.size(); ++r) {
    for (const Snapshot& s : outputs[r].snapshots) events.push_back({s.time, r, &s});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.time < b.time || (a.time == b.time && a.run < b.run);
  });

  std::vector<const Snapshot*> latest(outputs.size(), nullptr);
  ordered_json trace = ordered_json::array();
  for (const Event& e : events) {
    latest[e.run] = e.snap;
    std::vector<ObjectivePoint> all;
    for (const Snapshot* s : latest) {
      if (s) all.insert(all.end(), s->points.begin(), s->points.end());
    }
    const double hv = hypervolume(normalize(nondominated(std::move(all)), bounds));
    if (!trace.empty() && trace.back()["time"].get<double>() == e.time) {
      trace.back()["hypervolume"] = hv;
    } else {
      trace.push_back({{"time", e.time}, {"hypervolume", hv}});
    }
  }
  return trace;
}

int solve_command(const SolveOptions& o, bool iterations_mode, std::ostream& out) {
  const auto wall_start = std::chrono::steady_clock::now();
  const ProblemInstance inst = load_instance(o.instance);

  WsmConfig base;
  base.alpha_distribution = parse_alpha_distribution(o.alpha_dist);
  base.eta = o.eta;
  base.rho = o.rho;
  base.gamma = o.gamma;
  base.beta = parse_beta(o.beta);
  base.lambda = o.lambda;
  base.time_limit = o.time_limit;
  if (iterations_mode) base.iterations = o.iterations;
  base.seed = o.seed;
  base.candidate_two_opt = o.candidate_two_opt;
  base.validate();
  if (o.runs < 1) throw Error(Errc::invalid_config, "--runs must be at least 1");

  std::vector<WorkerOutput> outputs(o.runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < o.runs; r = next++) {
      WorkerOutput& slot = outputs[r];
      try {
        WsmConfig cfg = base;
        cfg.seed = r == 0 ? o.seed : derive_seed(o.seed, static_cast<std::uint64_t>(r));
        slot.result = run(inst, cfg, [&slot](double t, const Archive& a) {
          slot.snapshots.push_back({t, a.points()});
        });
      } catch (...) {
        slot.error = std::current_exception();
      }
    }
  };
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t num_threads = std::min(o.runs, hw);
  if (num_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < num_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& slot : outputs) {
    if (slot.error) std::rethrow_exception(slot.error);
  }

  // Merge in run order so the result does not depend on thread timing.
  Archive merged;
  Bounds bounds = outputs[0].result->bounds;
  std::int64_t cycles = 0;
  for (const auto& slot : outputs) {
    for (const Solution& s : slot.result->archive.solutions()) merged.update(s);
    bounds = merge(bounds, slot.result->bounds);
    cycles += slot.result->cycles;
  }

  std::vector<Solution> front(merged.solutions().begin(), merged.solutions().end());
  const std::size_t before = front.size();
  if (o.max_solutions > 0 && front.size() > o.max_solutions) {
    std::vector<ObjectivePoint> pts;
    for (const Solution& s : front) pts.push_back(s.point());
    std::vector<Solution> kept;
    for (std::size_t i : subset_select(normalize(pts, bounds), o.max_solutions)) kept.push_back(front[i]);
    front = std::move(kept);
  }
  std::vector<ObjectivePoint> front_pts;
  for (const Solution& s : front) front_pts.push_back(s.point());
  const double final_hv = hypervolume(normalize(front_pts, bounds));

  const fs::path dir(o.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  auto open = [&](const char* name) {
    std::ofstream f(dir / name);
    if (!f) throw Error(Errc::io_error, "cannot write " + (dir / name).string());
    return f;
  };
  {
    auto f = open("front.csv");
    write_front_csv(f, front);
  }
  {
    auto f = open("solutions.txt");
    write_solutions(f, front);
  }

  ordered_json config{
      {"alpha_dist", std::string(to_string(base.alpha_distribution))},
      {"eta", base.eta},
      {"rho", base.rho},
      {"gamma", base.gamma},
      {"lambda", base.lambda},
      {"seed", base.seed},
      {"runs", o.runs},
      {"candidate_two_opt", base.candidate_two_opt},
  };
  if (std::isinf(base.beta)) {
    config["beta"] = "-inf";
  } else {
    config["beta"] = base.beta;
  }
  if (iterations_mode) {
    config["iterations"] = o.iterations;
  } else {
    config["time_limit"] = base.time_limit;
  }
  if (o.max_solutions > 0) config["max_solutions"] = o.max_solutions;

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  ordered_json report{
      {"instance", inst.name()},
      {"config", config},
      {"wall_time", wall},
      {"cycles", cycles},
      {"front_size_before", before},
      {"front_size_after", front.size()},
      {"hypervolume", final_hv},
      {"bounds", {{"g_min", bounds.g_min}, {"g_max", bounds.g_max}, {"h_min", bounds.h_min}, {"h_max", bounds.h_max}}},
      {"trace", merged_trace(outputs, bounds)},
  };
  {
    auto f = open("report.json");
    f << report.dump(2) << '\n';
  }

  out << inst.name() << ": " << front.size() << " solutions";
  if (front.size() != before) out << " (of " << before << ")";
  out << ", hypervolume " << format_double(final_hv) << ", " << cycles << " cycles in "
      << std::fixed << std::setprecision(2) << wall << " s\n";
  out.unsetf(std::ios::floatfield);
  return exit_ok;
}

int hv_command(const HvOptions& o, std::ostream& out) {
  std::vector<std::vector<ObjectivePoint>> fronts;
  for (const std::string& path : o.fronts) {
    std::vector<ObjectivePoint> pts;
    for (const FrontRow& r : load_front_csv(path)) pts.push_back({r.profit, r.time});
    if (!mutually_nondominated(pts)) {
      throw Error(Errc::malformed_record, path + ": front contains a dominated or duplicate row");
    }
    fronts.push_back(std::move(pts));
  }

  Bounds bounds;
  if (!o.bounds.empty()) {
    bounds = {o.bounds[0], o.bounds[1], o.bounds[2], o.bounds[3]};
  } else if (!o.bounds_file.empty()) {
    bounds = load_bounds(o.bounds_file);
  } else {
    bool first = true;
    for (const auto& f : fronts) {
      if (f.empty()) continue;
      bounds = first ? bounds_of(f) : merge(bounds, bounds_of(f));
      first = false;
    }
  }

  std::vector<double> hv;
  for (std::size_t i = 0; i < fronts.size(); ++i) {
    hv.push_back(hypervolume(normalize(fronts[i], bounds)));
    out << o.fronts[i] << '\t' << format_double(hv.back()) << '\n';
  }
  for (std::size_t a = 0; a < fronts.size(); ++a) {
    for (std::size_t b = a + 1; b < fronts.size(); ++b) {
      const double top = std::max(hv[a], hv[b]);
      const double variation = top > 0.0 ? (hv[a] - hv[b]) / top * 100.0 : 0.0;
      std::ostringstream line;
      line << std::fixed << std::setprecision(6) << variation;
      out << o.fronts[a] << " vs " << o.fronts[b] << '\t' << line.str() << "%\n";
    }
  }
  return exit_ok;
}

// CLI11 reads "-inf" as a flag group; glue it to --beta.
std::vector<std::string> preprocess(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--beta" && i + 1 < args.size() && !args[i + 1].empty() && args[i + 1][0] == '-') {
      out.push_back("--beta=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bi-objective traveling thief solver (weighted-sum method)", "bittp"};
  app.require_subcommand(1);

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "Run the solver on an instance and write the front");
  solve->add_option("--instance", so.instance, "Instance file")->required();
  auto* tl = solve->add_option("--time-limit", so.time_limit, "Wall-clock budget in seconds")->capture_default_str();
  auto* it = solve->add_option("--iterations", so.iterations, "Fixed number of cycles (deterministic)");
  tl->excludes(it);
  solve->add_option("--seed", so.seed, "Master random seed")->capture_default_str();
  solve->add_option("--eta", so.eta, "Packings per tour")->capture_default_str();
  solve->add_option("--rho", so.rho, "Packing attempts")->capture_default_str();
  solve->add_option("--gamma", so.gamma, "Re-evaluation divisor")->capture_default_str();
  solve->add_option("--beta", so.beta, "2-opt length tolerance factor, or -inf")->capture_default_str();
  solve->add_option("--lambda", so.lambda, "Bit-flip probability")->capture_default_str();
  solve->add_option("--alpha-dist", so.alpha_dist, "uniform | normal | beta-right | beta-left")
      ->capture_default_str();
  solve->add_option("--max-solutions", so.max_solutions, "Keep a hypervolume-maximal subset of this size");
  solve->add_option("--output-dir", so.output_dir, "Directory for front.csv, solutions.txt, report.json")
      ->capture_default_str();
  solve->add_option("--runs", so.runs, "Independent seeded runs, merged")->capture_default_str();
  solve->add_flag("--candidate-two-opt", so.candidate_two_opt, "Scan only candidate-list 2-opt moves");

  HvOptions ho;
  auto* hv = app.add_subcommand("hv", "Hypervolume of front CSVs and their pairwise variation");
  hv->add_option("fronts", ho.fronts, "Front CSV files")->required();
  auto* bo = hv->add_option("--bounds", ho.bounds, "g_min g_max h_min h_max")->expected(4);
  auto* bf = hv->add_option("--bounds-file", ho.bounds_file, "JSON file with g_min, g_max, h_min, h_max");
  bo->excludes(bf);

  const std::vector<std::string> args = preprocess(raw_args);
  std::vector<const char*> argv{"bittp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*solve) return solve_command(so, it->count() > 0, out);
    return hv_command(ho, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::invalid_config ? exit_usage : exit_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
}

}  // namespace bittp::cli
