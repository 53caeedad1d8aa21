#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "compat/geometry.hpp"

namespace compat {

// Two labelled point sets sharing labels 1..n. With `polygon` set, each
// set's listed order is its polygon boundary order.
//
// JSON form:
//   { "P": [{"label": 1, "x": 0, "y": 0}, ...], "Q": [...], "polygon": false }
struct Instance {
  LabelledPointSet p;
  LabelledPointSet q;
  bool polygon = false;

  friend bool operator==(const Instance&, const Instance&) = default;
};

Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);
std::string dump_instance(const Instance& instance);
void save_instance(const Instance& instance, const std::filesystem::path& path);

// Two side-by-side 800x800 panels (P left, Q right) with labelled vertices,
// the polygon boundary when `instance.polygon`, and the witness polyline.
std::string render_svg(const Instance& instance, const std::optional<LabelSequence>& witness);

}  // namespace compat
