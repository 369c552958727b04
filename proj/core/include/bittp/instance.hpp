#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bittp {

// Cities and items are indexed from zero internally. City 0 is the depot
// where every tour starts; files use 1-based indices.
using City = std::int32_t;
using ItemIndex = std::int32_t;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class EdgeWeightKind {
  ceil_euclidean,     // CEIL_2D
  rounded_euclidean,  // EUC_2D (TSPLIB nint)
};

struct Item {
  std::int64_t profit = 0;
  std::int64_t weight = 0;
  City city = 0;
};

/// Immutable traveling thief instance.
///
/// Construction validates every structural invariant (at least two cities,
/// positive capacity, 0 < v_min < v_max, no item at the depot, ...) and
/// throws bittp::Error on violation. Once built the object is safe to share
/// across threads.
class ProblemInstance {
 public:
  struct Data {
    std::string name;
    std::string knapsack_data_type;
    std::vector<Point> coords;
    EdgeWeightKind edge_weight_kind = EdgeWeightKind::ceil_euclidean;
    std::vector<Item> items;
    std::int64_t capacity = 0;
    double min_speed = 0.0;
    double max_speed = 0.0;
    double renting_rate = 0.0;
  };

  explicit ProblemInstance(Data data);

  const std::string& name() const noexcept { return data_.name; }
  const std::string& knapsack_data_type() const noexcept { return data_.knapsack_data_type; }
  std::size_t num_cities() const noexcept { return data_.coords.size(); }
  std::size_t num_items() const noexcept { return data_.items.size(); }
  EdgeWeightKind edge_weight_kind() const noexcept { return data_.edge_weight_kind; }
  const Point& coord(City c) const { return data_.coords.at(static_cast<std::size_t>(c)); }
  std::span<const Point> coords() const noexcept { return data_.coords; }
  const Item& item(ItemIndex j) const { return data_.items.at(static_cast<std::size_t>(j)); }
  std::span<const Item> items() const noexcept { return data_.items; }
  std::int64_t capacity() const noexcept { return data_.capacity; }
  double min_speed() const noexcept { return data_.min_speed; }
  double max_speed() const noexcept { return data_.max_speed; }
  double renting_rate() const noexcept { return data_.renting_rate; }
  const Data& data() const noexcept { return data_; }

  // Speed lost per unit of carried weight, (v_max - v_min) / W.
  double speed_slope() const noexcept { return speed_slope_; }

  // Items whose home is `c`, in ascending index order.
  std::span<const ItemIndex> items_at(City c) const noexcept {
    const auto i = static_cast<std::size_t>(c);
    return {city_items_.data() + city_item_offsets_[i],
            city_item_offsets_[i + 1] - city_item_offsets_[i]};
  }

  // Checked distance; throws Errc::index_out_of_range.
  std::int64_t distance(City i, City j) const;

  std::int64_t distance_unchecked(City i, City j) const noexcept {
    if (!matrix_.empty()) {
      return matrix_[static_cast<std::size_t>(i) * num_cities() + static_cast<std::size_t>(j)];
    }
    return compute_distance(i, j);
  }

 private:
  std::int64_t compute_distance(City i, City j) const noexcept;

  Data data_;
  double speed_slope_ = 0.0;
  std::vector<std::size_t> city_item_offsets_;
  std::vector<ItemIndex> city_items_;
  std::vector<std::int64_t> matrix_;
};

ProblemInstance parse_instance(std::istream& in);
ProblemInstance parse_instance(std::string_view text);
ProblemInstance load_instance(const std::filesystem::path& path);

}  // namespace bittp
