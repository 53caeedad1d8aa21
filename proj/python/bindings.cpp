#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>
#include <vector>

#include "compat/convex_paths.hpp"
#include "compat/errors.hpp"
#include "compat/geometry.hpp"
#include "compat/instance.hpp"
#include "compat/monotone_paths.hpp"
#include "compat/oracle.hpp"
#include "compat/polygon_paths.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace compat;

namespace {

using PyPoints = std::vector<std::tuple<Label, Coord, Coord>>;
using PyXY = std::pair<Coord, Coord>;

Point to_point(const PyXY& xy) { return {xy.first, xy.second}; }

LabelledPointSet to_set(const PyPoints& pts) {
  std::vector<LabelledPoint> out;
  out.reserve(pts.size());
  for (const auto& [l, x, y] : pts) out.push_back({l, {x, y}});
  return LabelledPointSet(std::move(out));
}

PyPoints from_set(const LabelledPointSet& set) {
  PyPoints out;
  for (const auto& lp : set.points()) out.emplace_back(lp.label, lp.p.x, lp.p.y);
  return out;
}

Constraint make_constraint(const std::string& name, const LabelledPointSet& p, const LabelledPointSet& q) {
  if (name == "free") return FreeConstraint{};
  if (name == "monotone") return MonotoneConstraint{};
  if (name == "polygon") return InsidePolygons{LabelledPolygon(p), LabelledPolygon(q)};
  throw InputError("unknown constraint '" + name + "' (expected free, polygon or monotone)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compatible noncrossing spanning paths on labelled point sets";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NotConvexError>(m, "NotConvexError", input_error.ptr());
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", input_error.ptr());
  py::register_exception<InvalidWitnessError>(m, "InvalidWitnessError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<OracleCapError>(m, "OracleCapError", error.ptr());

  m.attr("MAX_COORDINATE") = kMaxCoordinate;

  m.def("orientation",
        [](const PyXY& a, const PyXY& b, const PyXY& c) {
          return static_cast<int>(orientation(to_point(a), to_point(b), to_point(c)));
        },
        "a"_a, "b"_a, "c"_a, "Sign of the turn a -> b -> c: 1 counterclockwise, -1 clockwise, 0 collinear.");
  m.def("segments_properly_cross",
        [](const PyXY& a, const PyXY& b, const PyXY& c, const PyXY& d) {
          return segments_properly_cross(to_point(a), to_point(b), to_point(c), to_point(d));
        },
        "a"_a, "b"_a, "c"_a, "d"_a,
        "Whether the open segments ab and cd share a point.");

  m.def("is_noncrossing_spanning_path",
        [](const PyPoints& s, const LabelSequence& seq) { return is_noncrossing_spanning_path(to_set(s), seq); },
        "points"_a, "seq"_a);
  m.def("are_compatible",
        [](const PyPoints& p, const PyPoints& q, const LabelSequence& seq) { return are_compatible(to_set(p), to_set(q), seq); },
        "p"_a, "q"_a, "seq"_a);
  m.def("convex_hull_cyclic_order", [](const PyPoints& s) { return convex_hull_cyclic_order(to_set(s)); }, "points"_a);

  m.def("compatible_paths_convex",
        [](const PyPoints& p, const PyPoints& q) { return compatible_paths_convex(to_set(p), to_set(q)); }, "p"_a, "q"_a);
  m.def("compatible_paths_polygons",
        [](const PyPoints& p, const PyPoints& q) {
          return compatible_paths_polygons(LabelledPolygon(to_set(p)), LabelledPolygon(to_set(q)));
        },
        "p"_a, "q"_a, "Both point lists are read in boundary order.");
  m.def("compatible_monotone_paths",
        [](const PyPoints& p, const PyPoints& q) { return compatible_monotone_paths(to_set(p), to_set(q)); }, "p"_a, "q"_a);
  m.def("naive_compatible_monotone",
        [](const PyPoints& p, const PyPoints& q) { return naive_compatible_monotone(to_set(p), to_set(q)); }, "p"_a, "q"_a);

  m.def("path_inside_polygon",
        [](const PyPoints& poly, const LabelSequence& seq) { return path_inside_polygon(LabelledPolygon(to_set(poly)), seq); },
        "polygon"_a, "seq"_a);
  m.def("check_order_monotone",
        [](const PyPoints& s, const LabelSequence& seq) { return check_order_monotone(to_set(s), seq); }, "points"_a, "seq"_a);
  m.def("inversion_number",
        [](const LabelSequence& seq, const LabelSequence& reference) { return inversion_number(seq, reference); },
        "seq"_a, "reference"_a);

  m.def("generate_negative_instance",
        [](int n) {
          const auto [p, q] = generate_negative_instance(n);
          return std::make_pair(from_set(p), from_set(q));
        },
        "n"_a);

  m.def("brute_force_compatible",
        [](const PyPoints& p, const PyPoints& q, const std::string& constraint, std::size_t cap) {
          const auto ps = to_set(p), qs = to_set(q);
          return brute_force_compatible(ps, qs, make_constraint(constraint, ps, qs), cap);
        },
        "p"_a, "q"_a, "constraint"_a = "free", "cap"_a = kDefaultPathCap);
  m.def("brute_force_has_compatible_tree",
        [](const PyPoints& p, const PyPoints& q, std::size_t cap) {
          return brute_force_has_compatible_tree(to_set(p), to_set(q), cap);
        },
        "p"_a, "q"_a, "cap"_a = kDefaultTreeCap);

  m.def("parse_instance",
        [](const std::string& text) {
          const Instance inst = parse_instance(text);
          return py::make_tuple(from_set(inst.p), from_set(inst.q), inst.polygon);
        },
        "text"_a, "Returns (P, Q, polygon) from an instance JSON document.");
  m.def("dump_instance",
        [](const PyPoints& p, const PyPoints& q, bool polygon) { return dump_instance({to_set(p), to_set(q), polygon}); },
        "p"_a, "q"_a, "polygon"_a = false);
  m.def("render_svg",
        [](const PyPoints& p, const PyPoints& q, bool polygon, const std::optional<LabelSequence>& witness) {
          return render_svg({to_set(p), to_set(q), polygon}, witness);
        },
        "p"_a, "q"_a, "polygon"_a = false, "witness"_a = py::none());
}
