#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bittp/evaluation.hpp"
#include "bittp/hypervolume.hpp"
#include "bittp/instance.hpp"

namespace bittp::cli {

// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

// Benchmark-style instance document accepted by parse_instance.
void write_instance(std::ostream& out, const ProblemInstance& inst);

struct FrontRow {
  double profit = 0.0;
  double time = 0.0;
  double alpha = 0.0;  // NaN when unknown
};

// Header `profit,time,alpha`, one row per solution in the given order.
void write_front_csv(std::ostream& out, std::span<const Solution> front);
// Throws ParseError(malformed_record) with the offending line.
std::vector<FrontRow> read_front_csv(std::istream& in);
std::vector<FrontRow> load_front_csv(const std::filesystem::path& path);

// Per solution: `# profit time`, `t <cities>`, `p <items>`, 1-based.
void write_solutions(std::ostream& out, std::span<const Solution> front);

struct SolutionRecord {
  double profit = 0.0;
  double time = 0.0;
  std::vector<City> tour;        // zero-based
  std::vector<ItemIndex> items;  // zero-based
};
std::vector<SolutionRecord> read_solutions(std::istream& in);

// JSON object with g_min, g_max, h_min, h_max, either at the top level or
// under a "bounds" key (so a run report doubles as a bounds file).
Bounds load_bounds(const std::filesystem::path& path);

}  // namespace bittp::cli
