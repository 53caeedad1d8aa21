#include "compat/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace compat {

namespace {

using nlohmann::json;

LabelledPointSet parse_set(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw InputError(std::string("instance is missing array \"") + key + "\"");
  }
  std::vector<LabelledPoint> pts;
  for (const json& item : doc[key]) {
    if (!item.is_object() || !item.contains("label") || !item.contains("x") || !item.contains("y") ||
        !item["label"].is_number_integer() || !item["x"].is_number_integer() || !item["y"].is_number_integer()) {
      throw InputError(std::string("malformed point in \"") + key + "\": " + item.dump());
    }
    pts.push_back({item["label"].get<Label>(), {item["x"].get<Coord>(), item["y"].get<Coord>()}});
  }
  try {
    return LabelledPointSet(std::move(pts));
  } catch (const InputError& e) {
    throw InputError(std::string(key) + ": " + e.what());
  }
}

json dump_set(const LabelledPointSet& s) {
  json arr = json::array();
  for (const auto& lp : s.points()) arr.push_back({{"label", lp.label}, {"x", lp.p.x}, {"y", lp.p.y}});
  return arr;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  Instance inst{parse_set(doc, "P"), parse_set(doc, "Q"), false};
  if (doc.contains("polygon")) {
    if (!doc["polygon"].is_boolean()) throw InputError("\"polygon\" must be true or false");
    inst.polygon = doc["polygon"].get<bool>();
  }
  require_same_labels(inst.p, inst.q);
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string dump_instance(const Instance& instance) {
  json doc{{"P", dump_set(instance.p)}, {"Q", dump_set(instance.q)}, {"polygon", instance.polygon}};
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << dump_instance(instance);
}

namespace {

constexpr double kPanel = 800.0;
constexpr double kMargin = 40.0;

void render_panel(std::ostringstream& svg, const LabelledPointSet& s, bool polygon,
                  const std::optional<LabelSequence>& witness, double offset, const char* title) {
  Coord min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!s.empty()) {
    min_x = max_x = s.points()[0].p.x;
    min_y = max_y = s.points()[0].p.y;
  }
  for (const auto& lp : s.points()) {
    min_x = std::min(min_x, lp.p.x);
    max_x = std::max(max_x, lp.p.x);
    min_y = std::min(min_y, lp.p.y);
    max_y = std::max(max_y, lp.p.y);
  }
  const double extent = static_cast<double>(std::max<Coord>({max_x - min_x, max_y - min_y, 1}));
  const double scale = (kPanel - 2 * kMargin) / extent;
  auto px = [&](const Point& p) { return offset + kMargin + (p.x - min_x) * scale; };
  auto py = [&](const Point& p) { return kPanel - kMargin - (p.y - min_y) * scale; };

  svg << "  <g>\n";
  svg << "    <rect x=\"" << offset << "\" y=\"0\" width=\"" << kPanel << "\" height=\"" << kPanel
      << "\" fill=\"white\" stroke=\"#cccccc\"/>\n";
  svg << "    <text x=\"" << offset + 12 << "\" y=\"24\" font-size=\"18\" font-family=\"sans-serif\">" << title
      << "</text>\n";
  if (polygon && s.size() >= 3) {
    svg << "    <polygon fill=\"#eef3fb\" stroke=\"#4a6fa5\" stroke-width=\"1.5\" points=\"";
    for (const auto& lp : s.points()) svg << px(lp.p) << ',' << py(lp.p) << ' ';
    svg << "\"/>\n";
  }
  if (witness && !witness->empty()) {
    svg << "    <polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2.5\" stroke-dasharray=\"6,4\" points=\"";
    for (Label l : *witness) svg << px(s[l]) << ',' << py(s[l]) << ' ';
    svg << "\"/>\n";
  }
  for (const auto& lp : s.points()) {
    svg << "    <circle cx=\"" << px(lp.p) << "\" cy=\"" << py(lp.p) << "\" r=\"5\" fill=\"black\"/>\n";
    svg << "    <text x=\"" << px(lp.p) + 8 << "\" y=\"" << py(lp.p) - 8
        << "\" font-size=\"14\" font-family=\"sans-serif\">" << lp.label << "</text>\n";
  }
  svg << "  </g>\n";
}

}  // namespace

std::string render_svg(const Instance& instance, const std::optional<LabelSequence>& witness) {
  if (witness) require_permutation(*witness, instance.p.size());
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << 2 * kPanel << "\" height=\""
      << kPanel << "\" viewBox=\"0 0 " << 2 * kPanel << ' ' << kPanel << "\">\n";
  render_panel(svg, instance.p, instance.polygon, witness, 0.0, "P");
  render_panel(svg, instance.q, instance.polygon, witness, kPanel, "Q");
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace compat
