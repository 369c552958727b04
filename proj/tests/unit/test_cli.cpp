#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bittp/cli/commands.hpp"
#include "bittp/cli/formats.hpp"
#include "bittp/hypervolume.hpp"
#include "oracles.hpp"

using namespace bittp;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class ScratchDir {
 public:
  explicit ScratchDir(const std::string& name) : path_(fs::temp_directory_path() / ("bittp_cli_" + name)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string operator/(const std::string& leaf) const { return (path_ / leaf).string(); }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

std::string write_random_instance(const ScratchDir& dir, std::uint64_t seed, std::size_t n, std::size_t m) {
  Rng rng(seed);
  testing::RandomInstanceSpec spec;
  spec.n = n;
  spec.m = m;
  const auto inst = testing::random_instance(rng, spec);
  const std::string path = dir / "instance.ttp";
  std::ofstream out(path);
  cli::write_instance(out, inst);
  return path;
}

// Value printed on the `path<TAB>hv` line for `path`.
double reported_hv(const std::string& out, const std::string& path) {
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(path + "\t", 0) == 0) return std::stod(line.substr(path.size() + 1));
  }
  return -1.0;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("solve writes the front, the solutions and a report") {
    ScratchDir dir("happy");
    const auto inst = testing::fixture_path("toy3.ttp").string();
    const auto r = invoke({"solve", "--instance", inst, "--iterations", "50", "--output-dir", dir / "out"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("toy3: 4 solutions") != std::string::npos);
    CHECK(fs::exists(dir.path() / "out" / "front.csv"));
    CHECK(fs::exists(dir.path() / "out" / "solutions.txt"));
    CHECK(fs::exists(dir.path() / "out" / "report.json"));

    const auto rows = cli::load_front_csv(dir.path() / "out" / "front.csv");
    std::vector<ObjectivePoint> pts;
    for (const auto& row : rows) pts.push_back({row.profit, row.time});
    const auto exact = testing::brute_force_front(testing::toy3());
    REQUIRE(pts.size() == exact.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(pts[i].profit == exact[i].profit);
      CHECK(pts[i].time == doctest::Approx(exact[i].time).epsilon(1e-12));
    }

    const auto report = nlohmann::json::parse(slurp(dir.path() / "out" / "report.json"));
    CHECK(report["front_size_after"] == 4);
    CHECK(report["config"]["eta"] == 117);
    CHECK(report["bounds"]["g_max"] == 160.0);
  }

  TEST_CASE("max-solutions trims to a hypervolume-maximal subset") {
    ScratchDir dir("trim");
    const auto inst = testing::fixture_path("toy3.ttp").string();
    const auto r = invoke({"solve", "--instance", inst, "--iterations", "50", "--max-solutions", "2", "--output-dir",
                           dir / "out"});
    REQUIRE(r.code == 0);
    const auto rows = cli::load_front_csv(dir.path() / "out" / "front.csv");
    CHECK(rows.size() == 2);
    const auto report = nlohmann::json::parse(slurp(dir.path() / "out" / "report.json"));
    CHECK(report["front_size_before"] == 4);
    CHECK(report["front_size_after"] == 2);
  }

  TEST_CASE("solutions file round-trips against the instance") {
    ScratchDir dir("roundtrip");
    const auto path = write_random_instance(dir, 11, 12, 20);
    const auto r = invoke({"solve", "--instance", path, "--iterations", "20", "--eta", "10", "--output-dir",
                           dir / "out"});
    REQUIRE(r.code == 0);
    const auto inst = load_instance(path);
    std::ifstream in(dir.path() / "out" / "solutions.txt");
    const auto records = cli::read_solutions(in);
    const auto rows = cli::load_front_csv(dir.path() / "out" / "front.csv");
    REQUIRE(records.size() == rows.size());
    REQUIRE(!records.empty());
    std::vector<ObjectivePoint> pts;
    for (std::size_t i = 0; i < records.size(); ++i) {
      const Tour tour(records[i].tour);
      const auto plan = PackingPlan::from_items(inst, records[i].items);
      const double g = total_profit(inst, plan);
      const double h = travel_time(inst, tour, plan);
      CHECK(g == doctest::Approx(records[i].profit).epsilon(1e-6));
      CHECK(h == doctest::Approx(records[i].time).epsilon(1e-6));
      CHECK(g == rows[i].profit);
      CHECK(h == rows[i].time);
      pts.push_back({g, h});
    }
    CHECK(mutually_nondominated(pts));
  }

  TEST_CASE("fixed iteration runs are byte-identical") {
    ScratchDir dir("determinism");
    const auto path = write_random_instance(dir, 12, 20, 30);
    for (const char* runs : {"1", "3"}) {
      const auto a = invoke({"solve", "--instance", path, "--iterations", "15", "--eta", "10", "--seed", "5",
                             "--runs", runs, "--output-dir", dir / "a"});
      const auto b = invoke({"solve", "--instance", path, "--iterations", "15", "--eta", "10", "--seed", "5",
                             "--runs", runs, "--output-dir", dir / "b"});
      REQUIRE(a.code == 0);
      REQUIRE(b.code == 0);
      CHECK(slurp(dir.path() / "a" / "front.csv") == slurp(dir.path() / "b" / "front.csv"));
      CHECK(slurp(dir.path() / "a" / "solutions.txt") == slurp(dir.path() / "b" / "solutions.txt"));
    }
  }

  TEST_CASE("report trace is ordered and non-decreasing") {
    ScratchDir dir("trace");
    const auto path = write_random_instance(dir, 13, 40, 60);
    const auto r = invoke({"solve", "--instance", path, "--time-limit", "0.5", "--runs", "2", "--output-dir",
                           dir / "out"});
    REQUIRE(r.code == 0);
    const auto report = nlohmann::json::parse(slurp(dir.path() / "out" / "report.json"));
    const auto& trace = report["trace"];
    REQUIRE(trace.size() >= 1);
    for (std::size_t i = 1; i < trace.size(); ++i) {
      CHECK(trace[i]["time"].get<double>() > trace[i - 1]["time"].get<double>());
      CHECK(trace[i]["hypervolume"].get<double>() >= trace[i - 1]["hypervolume"].get<double>());
    }
  }

  TEST_CASE("beta accepts -inf") {
    ScratchDir dir("beta");
    const auto inst = testing::fixture_path("toy3.ttp").string();
    const auto r = invoke({"solve", "--instance", inst, "--iterations", "5", "--beta", "-inf", "--lambda", "0",
                           "--output-dir", dir / "out"});
    CHECK(r.code == 0);
    const auto report = nlohmann::json::parse(slurp(dir.path() / "out" / "report.json"));
    CHECK(report["config"]["beta"] == "-inf");
  }

  TEST_CASE("input and usage errors") {
    ScratchDir dir("errors");
    const auto missing = invoke({"solve", "--instance", dir / "nope.ttp", "--output-dir", dir / "out"});
    CHECK(missing.code == cli::exit_input);
    CHECK(missing.err.find("no such file") != std::string::npos);

    const auto inst = testing::fixture_path("toy3.ttp").string();
    CHECK(invoke({"solve"}).code == cli::exit_usage);
    CHECK(invoke({"bogus"}).code == cli::exit_usage);
    CHECK(invoke({"solve", "--instance", inst, "--time-limit", "1", "--iterations", "2"}).code == cli::exit_usage);
    CHECK(invoke({"solve", "--instance", inst, "--iterations", "2", "--lambda", "2", "--output-dir", dir / "o"})
              .code == cli::exit_usage);
    CHECK(invoke({"solve", "--instance", inst, "--iterations", "2", "--alpha-dist", "cauchy", "--output-dir",
                  dir / "o"})
              .code == cli::exit_usage);
    CHECK(invoke({"--help"}).code == cli::exit_ok);
  }

  TEST_CASE("hv reports per-front volumes and pairwise variation") {
    ScratchDir dir("hv");
    write_file(dir.path() / "a.csv", "profit,time,alpha\n0.5,0.2,nan\n1,0.6,0.5\n");
    write_file(dir.path() / "b.csv", "profit,time\n1,0.6\n");
    const auto same = invoke({"hv", dir / "a.csv", dir / "a.csv", "--bounds", "0", "1", "0", "1"});
    REQUIRE(same.code == 0);
    CHECK(same.out.find("\t0.000000%") != std::string::npos);

    const auto diff = invoke({"hv", dir / "a.csv", dir / "b.csv", "--bounds", "0", "1", "0", "1"});
    REQUIRE(diff.code == 0);
    CHECK(reported_hv(diff.out, dir / "a.csv") == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(reported_hv(diff.out, dir / "b.csv") == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(diff.out.find("\t33.333333%") != std::string::npos);

    write_file(dir.path() / "bounds.json", R"({"bounds": {"g_min": 0, "g_max": 1, "h_min": 0, "h_max": 1}})");
    const auto from_file = invoke({"hv", dir / "a.csv", dir / "b.csv", "--bounds-file", dir / "bounds.json"});
    CHECK(from_file.out == diff.out);
  }

  TEST_CASE("hv rejects dominated rows and malformed files") {
    ScratchDir dir("hv_bad");
    write_file(dir.path() / "dom.csv", "profit,time\n1,0.5\n0.5,0.7\n");
    const auto r = invoke({"hv", dir / "dom.csv", "--bounds", "0", "1", "0", "1"});
    CHECK(r.code != 0);
    write_file(dir.path() / "junk.csv", "profit,time\n1,abc\n");
    CHECK(invoke({"hv", dir / "junk.csv"}).code == cli::exit_input);
    CHECK(invoke({"hv", dir / "none.csv"}).code == cli::exit_input);
  }

  TEST_CASE("front csv and instance writers round-trip") {
    Rng rng(14);
    const auto inst = testing::random_small_instance(rng, 5, 9, 3, 8);
    std::ostringstream text;
    cli::write_instance(text, inst);
    const auto back = parse_instance(text.str());
    CHECK(back.num_cities() == inst.num_cities());
    CHECK(back.num_items() == inst.num_items());
    CHECK(back.renting_rate() == inst.renting_rate());
    CHECK(back.min_speed() == inst.min_speed());

    Solution s;
    s.profit = 0.1;
    s.time = 1.0 / 3.0;
    s.alpha = 0.7;
    std::ostringstream csv;
    cli::write_front_csv(csv, std::span<const Solution>(&s, 1));
    std::istringstream in(csv.str());
    const auto rows = cli::read_front_csv(in);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].profit == 0.1);
    CHECK(rows[0].time == 1.0 / 3.0);
    CHECK(rows[0].alpha == 0.7);
  }
}
