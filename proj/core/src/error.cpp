#include "bittp/error.hpp"

namespace bittp {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::missing_header_field: return "MissingHeaderField";
    case Errc::malformed_record: return "MalformedRecord";
    case Errc::item_at_depot: return "ItemAtDepot";
    case Errc::inconsistent_counts: return "InconsistentCounts";
    case Errc::unknown_edge_weight_type: return "UnknownEdgeWeightType";
    case Errc::invalid_instance: return "InvalidInstance";
    case Errc::invalid_tour: return "InvalidTour";
    case Errc::invalid_plan: return "InvalidPlan";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::weight_out_of_range: return "WeightOutOfRange";
    case Errc::position_out_of_range: return "PositionOutOfRange";
    case Errc::alpha_out_of_range: return "AlphaOutOfRange";
    case Errc::all_zero_exponents: return "AllZeroExponents";
    case Errc::empty_archive: return "EmptyArchive";
    case Errc::ref_point_dominated: return "RefPointDominated";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(Errc code, std::size_t line, const std::string& what)
    : Error(code, line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

}  // namespace bittp
