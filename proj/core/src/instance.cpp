#include "bittp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string_view>

#include "bittp/error.hpp"

namespace bittp {
namespace {

// Distance matrices are cached up to this many cities (8 MiB of int64).
constexpr std::size_t kMatrixCacheLimit = 1024;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string_view key) {
  std::string out;
  bool space = false;
  for (char ch : trim(key)) {
    if (ch == ' ' || ch == '\t') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out.push_back(' ');
    space = false;
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

template <typename T>
T require_number(std::string_view s, std::size_t line, const char* what) {
  auto v = parse_number<T>(s);
  if (!v) {
    throw ParseError(Errc::malformed_record, line,
                     std::string("cannot parse ") + what + " from '" + std::string(s) + "'");
  }
  return *v;
}

enum class Section { header, coords, items, done };

struct RawRecord {
  std::size_t line;
  std::vector<std::string_view> fields;
};

struct HeaderField {
  std::string value;
  std::size_t line = 0;
};

}  // namespace

ProblemInstance::ProblemInstance(Data data) : data_(std::move(data)) {
  const std::size_t n = data_.coords.size();
  if (n < 2) {
    throw Error(Errc::invalid_instance, "an instance needs at least two cities");
  }
  if (data_.capacity <= 0) {
    throw Error(Errc::invalid_instance, "knapsack capacity must be positive");
  }
  if (!(data_.min_speed > 0.0) || !(data_.min_speed < data_.max_speed) ||
      !std::isfinite(data_.max_speed)) {
    throw Error(Errc::invalid_instance, "speeds must satisfy 0 < v_min < v_max");
  }
  if (!(data_.renting_rate >= 0.0) || !std::isfinite(data_.renting_rate)) {
    throw Error(Errc::invalid_instance, "renting rate must be a finite non-negative number");
  }
  for (std::size_t j = 0; j < data_.items.size(); ++j) {
    const Item& it = data_.items[j];
    if (it.city == 0) {
      throw Error(Errc::item_at_depot, "item " + std::to_string(j + 1) + " is assigned to city 1");
    }
    if (it.city < 0 || static_cast<std::size_t>(it.city) >= n) {
      throw Error(Errc::invalid_instance,
                  "item " + std::to_string(j + 1) + " is assigned to a nonexistent city");
    }
    if (it.weight <= 0 || it.profit < 0) {
      throw Error(Errc::invalid_instance,
                  "item " + std::to_string(j + 1) + " needs weight > 0 and profit >= 0");
    }
  }
  for (const Point& p : data_.coords) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(Errc::invalid_instance, "city coordinates must be finite");
    }
  }

  speed_slope_ = (data_.max_speed - data_.min_speed) / static_cast<double>(data_.capacity);

  city_item_offsets_.assign(n + 1, 0);
  for (const Item& it : data_.items) ++city_item_offsets_[static_cast<std::size_t>(it.city) + 1];
  for (std::size_t c = 0; c < n; ++c) city_item_offsets_[c + 1] += city_item_offsets_[c];
  city_items_.resize(data_.items.size());
  std::vector<std::size_t> cursor(city_item_offsets_.begin(), city_item_offsets_.end() - 1);
  for (std::size_t j = 0; j < data_.items.size(); ++j) {
    city_items_[cursor[static_cast<std::size_t>(data_.items[j].city)]++] = static_cast<ItemIndex>(j);
  }

  if (n <= kMatrixCacheLimit) {
    matrix_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        matrix_[i * n + j] = compute_distance(static_cast<City>(i), static_cast<City>(j));
      }
    }
  }
}

std::int64_t ProblemInstance::compute_distance(City i, City j) const noexcept {
  if (i == j) return 0;
  const Point& a = data_.coords[static_cast<std::size_t>(i)];
  const Point& b = data_.coords[static_cast<std::size_t>(j)];
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double euclid = std::sqrt(dx * dx + dy * dy);
  switch (data_.edge_weight_kind) {
    case EdgeWeightKind::ceil_euclidean:
      return static_cast<std::int64_t>(std::ceil(euclid));
    case EdgeWeightKind::rounded_euclidean:
      return static_cast<std::int64_t>(std::floor(euclid + 0.5));
  }
  return 0;
}

std::int64_t ProblemInstance::distance(City i, City j) const {
  const auto n = static_cast<City>(num_cities());
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw Error(Errc::index_out_of_range, "city index outside [0, " + std::to_string(n) + ")");
  }
  return distance_unchecked(i, j);
}

ProblemInstance parse_instance(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));

  std::optional<HeaderField> name, kp_type, dimension, num_items, capacity, min_speed, max_speed,
      renting, edge_type;
  std::vector<RawRecord> coord_records;
  std::vector<RawRecord> item_records;

  Section section = Section::header;
  for (std::size_t idx = 0; idx < lines.size() && section != Section::done; ++idx) {
    const std::size_t line_no = idx + 1;
    const std::string_view line = trim(lines[idx]);
    if (line.empty()) continue;

    const std::string upper = normalize_key(line);
    if (upper.rfind("NODE_COORD_SECTION", 0) == 0) {
      section = Section::coords;
      continue;
    }
    if (upper.rfind("ITEMS SECTION", 0) == 0 || upper.rfind("ITEMS_SECTION", 0) == 0) {
      section = Section::items;
      continue;
    }
    if (upper == "EOF") {
      section = Section::done;
      continue;
    }

    const auto colon = line.find(':');
    const bool numeric_start =
        std::isdigit(static_cast<unsigned char>(line.front())) || line.front() == '-' ||
        line.front() == '+' || line.front() == '.';
    if (colon != std::string_view::npos && !numeric_start) {
      const std::string key = normalize_key(line.substr(0, colon));
      HeaderField field{std::string(trim(line.substr(colon + 1))), line_no};
      if (key == "PROBLEM NAME" || key == "NAME") name = field;
      else if (key == "KNAPSACK DATA TYPE") kp_type = field;
      else if (key == "DIMENSION") dimension = field;
      else if (key == "NUMBER OF ITEMS") num_items = field;
      else if (key == "CAPACITY OF KNAPSACK") capacity = field;
      else if (key == "MIN SPEED") min_speed = field;
      else if (key == "MAX SPEED") max_speed = field;
      else if (key == "RENTING RATIO") renting = field;
      else if (key == "EDGE_WEIGHT_TYPE") edge_type = field;
      // Unknown keys (COMMENT, TYPE, ...) are tolerated.
      continue;
    }

    switch (section) {
      case Section::coords:
        coord_records.push_back({line_no, split_fields(line)});
        break;
      case Section::items:
        item_records.push_back({line_no, split_fields(line)});
        break;
      default:
        throw ParseError(Errc::malformed_record, line_no,
                         "unexpected line outside of a data section: '" + std::string(line) + "'");
    }
  }

  auto require = [](const std::optional<HeaderField>& f, const char* key) -> const HeaderField& {
    if (!f) throw ParseError(Errc::missing_header_field, 0, std::string("missing header field ") + key);
    return *f;
  };

  const HeaderField& dim_f = require(dimension, "DIMENSION");
  const HeaderField& items_f = require(num_items, "NUMBER OF ITEMS");
  const HeaderField& cap_f = require(capacity, "CAPACITY OF KNAPSACK");
  const HeaderField& vmin_f = require(min_speed, "MIN SPEED");
  const HeaderField& vmax_f = require(max_speed, "MAX SPEED");
  const HeaderField& rent_f = require(renting, "RENTING RATIO");
  const HeaderField& edge_f = require(edge_type, "EDGE_WEIGHT_TYPE");

  ProblemInstance::Data data;
  data.name = name ? name->value : std::string{};
  data.knapsack_data_type = kp_type ? kp_type->value : std::string{};

  const auto n = require_number<std::int64_t>(dim_f.value, dim_f.line, "DIMENSION");
  const auto m = require_number<std::int64_t>(items_f.value, items_f.line, "NUMBER OF ITEMS");
  if (n < 0 || m < 0) {
    throw ParseError(Errc::malformed_record, n < 0 ? dim_f.line : items_f.line,
                     "counts must be non-negative");
  }
  data.capacity = require_number<std::int64_t>(cap_f.value, cap_f.line, "CAPACITY OF KNAPSACK");
  data.min_speed = require_number<double>(vmin_f.value, vmin_f.line, "MIN SPEED");
  data.max_speed = require_number<double>(vmax_f.value, vmax_f.line, "MAX SPEED");
  data.renting_rate = require_number<double>(rent_f.value, rent_f.line, "RENTING RATIO");

  const std::string edge = normalize_key(edge_f.value);
  if (edge == "CEIL_2D") {
    data.edge_weight_kind = EdgeWeightKind::ceil_euclidean;
  } else if (edge == "EUC_2D") {
    data.edge_weight_kind = EdgeWeightKind::rounded_euclidean;
  } else {
    throw ParseError(Errc::unknown_edge_weight_type, edge_f.line,
                     "unsupported EDGE_WEIGHT_TYPE '" + edge_f.value + "'");
  }

  if (static_cast<std::int64_t>(coord_records.size()) != n) {
    throw ParseError(Errc::inconsistent_counts, dim_f.line,
                     "DIMENSION declares " + std::to_string(n) + " cities but NODE_COORD_SECTION lists " +
                         std::to_string(coord_records.size()));
  }
  if (static_cast<std::int64_t>(item_records.size()) != m) {
    throw ParseError(Errc::inconsistent_counts, items_f.line,
                     "NUMBER OF ITEMS declares " + std::to_string(m) + " items but ITEMS SECTION lists " +
                         std::to_string(item_records.size()));
  }

  data.coords.resize(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const RawRecord& r : coord_records) {
    if (r.fields.size() != 3) {
      throw ParseError(Errc::malformed_record, r.line, "expected 'index x y'");
    }
    const auto index = require_number<std::int64_t>(r.fields[0], r.line, "city index");
    if (index < 1 || index > n || seen[static_cast<std::size_t>(index - 1)]) {
      throw ParseError(Errc::malformed_record, r.line,
                       "city index " + std::to_string(index) + " is out of range or repeated");
    }
    seen[static_cast<std::size_t>(index - 1)] = true;
    data.coords[static_cast<std::size_t>(index - 1)] = {
        require_number<double>(r.fields[1], r.line, "x coordinate"),
        require_number<double>(r.fields[2], r.line, "y coordinate")};
  }

  data.items.resize(static_cast<std::size_t>(m));
  seen.assign(static_cast<std::size_t>(m), false);
  for (const RawRecord& r : item_records) {
    if (r.fields.size() != 4) {
      throw ParseError(Errc::malformed_record, r.line, "expected 'index profit weight city'");
    }
    const auto index = require_number<std::int64_t>(r.fields[0], r.line, "item index");
    if (index < 1 || index > m || seen[static_cast<std::size_t>(index - 1)]) {
      throw ParseError(Errc::malformed_record, r.line,
                       "item index " + std::to_string(index) + " is out of range or repeated");
    }
    seen[static_cast<std::size_t>(index - 1)] = true;
    Item item;
    item.profit = require_number<std::int64_t>(r.fields[1], r.line, "profit");
    item.weight = require_number<std::int64_t>(r.fields[2], r.line, "weight");
    const auto city = require_number<std::int64_t>(r.fields[3], r.line, "assigned city");
    if (city == 1) {
      throw ParseError(Errc::item_at_depot, r.line,
                       "item " + std::to_string(index) + " is assigned to the depot city 1");
    }
    if (city < 1 || city > n) {
      throw ParseError(Errc::malformed_record, r.line,
                       "assigned city " + std::to_string(city) + " does not exist");
    }
    if (item.weight <= 0 || item.profit < 0) {
      throw ParseError(Errc::malformed_record, r.line, "item needs weight > 0 and profit >= 0");
    }
    item.city = static_cast<City>(city - 1);
    data.items[static_cast<std::size_t>(index - 1)] = item;
  }

  return ProblemInstance(std::move(data));
}

ProblemInstance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

ProblemInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::io_error, "no such file: " + path.string());
  }
  return parse_instance(in);
}

}  // namespace bittp
