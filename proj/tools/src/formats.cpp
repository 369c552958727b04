#include "bittp/cli/formats.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bittp/error.hpp"

namespace bittp::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

void write_instance(std::ostream& out, const ProblemInstance& inst) {
  out << "PROBLEM NAME:\t" << inst.name() << '\n';
  out << "KNAPSACK DATA TYPE:\t" << inst.knapsack_data_type() << '\n';
  out << "DIMENSION:\t" << inst.num_cities() << '\n';
  out << "NUMBER OF ITEMS:\t" << inst.num_items() << '\n';
  out << "CAPACITY OF KNAPSACK:\t" << inst.capacity() << '\n';
  out << "MIN SPEED:\t" << format_double(inst.min_speed()) << '\n';
  out << "MAX SPEED:\t" << format_double(inst.max_speed()) << '\n';
  out << "RENTING RATIO:\t" << format_double(inst.renting_rate()) << '\n';
  out << "EDGE_WEIGHT_TYPE:\t"
      << (inst.edge_weight_kind() == EdgeWeightKind::ceil_euclidean ? "CEIL_2D" : "EUC_2D") << '\n';
  out << "NODE_COORD_SECTION\t(INDEX, X, Y):\n";
  for (std::size_t i = 0; i < inst.num_cities(); ++i) {
    const Point& p = inst.coords()[i];
    out << i + 1 << '\t' << format_double(p.x) << '\t' << format_double(p.y) << '\n';
  }
  out << "ITEMS SECTION\t(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):\n";
  for (std::size_t j = 0; j < inst.num_items(); ++j) {
    const Item& it = inst.items()[j];
    out << j + 1 << '\t' << it.profit << '\t' << it.weight << '\t' << it.city + 1 << '\n';
  }
}

void write_front_csv(std::ostream& out, std::span<const Solution> front) {
  out << "profit,time,alpha\n";
  for (const Solution& s : front) {
    out << format_double(s.profit) << ',' << format_double(s.time) << ',' << format_double(s.alpha) << '\n';
  }
}

namespace {

double parse_double_field(std::string_view text, std::size_t line, std::string_view what) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (text == "nan" || text == "NaN") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(Errc::malformed_record, line, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::vector<FrontRow> read_front_csv(std::istream& in) {
  std::vector<FrontRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("profit", 0) == 0) continue;
    }
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(Errc::malformed_record, line_no, "expected profit,time[,alpha]");
    }
    FrontRow row;
    row.profit = parse_double_field(fields[0], line_no, "profit");
    row.time = parse_double_field(fields[1], line_no, "time");
    row.alpha = fields.size() == 3 ? parse_double_field(fields[2], line_no, "alpha")
                                   : std::numeric_limits<double>::quiet_NaN();
    if (!std::isfinite(row.profit) || !std::isfinite(row.time)) {
      throw ParseError(Errc::malformed_record, line_no, "profit and time must be finite");
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<FrontRow> load_front_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "no such file: " + path.string());
  return read_front_csv(in);
}

void write_solutions(std::ostream& out, std::span<const Solution> front) {
  for (const Solution& s : front) {
    out << "# " << format_double(s.profit) << ' ' << format_double(s.time) << '\n';
    out << 't';
    for (City c : s.tour) out << ' ' << c + 1;
    out << "\np";
    for (ItemIndex j : s.plan.selected_items()) out << ' ' << j + 1;
    out << '\n';
  }
}

std::vector<SolutionRecord> read_solutions(std::istream& in) {
  std::vector<SolutionRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line.substr(1));
    switch (line[0]) {
      case '#': {
        SolutionRecord rec;
        if (!(fields >> rec.profit >> rec.time)) throw ParseError(Errc::malformed_record, line_no, "bad objectives");
        out.push_back(std::move(rec));
        break;
      }
      case 't':
      case 'p': {
        if (out.empty()) throw ParseError(Errc::malformed_record, line_no, "record before objectives line");
        std::int64_t v = 0;
        while (fields >> v) {
          if (line[0] == 't') {
            out.back().tour.push_back(static_cast<City>(v - 1));
          } else {
            out.back().items.push_back(static_cast<ItemIndex>(v - 1));
          }
        }
        break;
      }
      default:
        throw ParseError(Errc::malformed_record, line_no, "unknown record type");
    }
  }
  return out;
}

Bounds load_bounds(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "no such file: " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed_record, path.string() + ": " + e.what());
  }
  const nlohmann::json& b = doc.contains("bounds") ? doc["bounds"] : doc;
  try {
    return {b.at("g_min").get<double>(), b.at("g_max").get<double>(), b.at("h_min").get<double>(),
            b.at("h_max").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed_record, path.string() + ": bounds need g_min, g_max, h_min, h_max");
  }
}

}  // namespace bittp::cli
