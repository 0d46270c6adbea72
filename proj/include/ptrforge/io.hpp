#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ptrforge/coordinatiser.hpp"
#include "ptrforge/field.hpp"
#include "ptrforge/plane.hpp"
#include "ptrforge/ternary.hpp"

namespace ptrforge {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

// {"order": n, "points": v, "lines": [[...], ...]} with lines in index order.
std::string plane_to_json(const IncidencePlane& plane);
IncidencePlane plane_from_json(const std::string& text);

// "ptr q=.. p=.. e=.." then q values per line in (m,x,y) order.
std::string ptr_to_text(const TernaryTable& table);
TernaryTable ptr_from_text(const std::string& text);

// "q=<q>" then q^2 lines "x y x*y" in encoding order.
struct QuasifieldData {
  Field field;
  LoopTable mul;  // full q x q table
};
std::string quasifield_to_text(const Field& field, const LoopTable& mul);
QuasifieldData quasifield_from_text(const std::string& text);

// "map q=.. p=.. e=.." then the q values f(0), ..., f(q-1).
std::string map_to_text(const Field& field, const std::vector<Elem>& values);
std::pair<Field, std::vector<Elem>> map_from_text(const std::string& text);

// Text with a "poly" header, a "ptr" header or JSON plane: which one is it.
enum class InputKind { Plane, Ptr, Poly, Quasifield, Map, Unknown };
InputKind sniff(const std::string& text);

// Label -> index maps for every point and line plus the anchors.
std::string coordinatisation_to_json(const Coordinatisation& coord, bool pretty = false);

}  // namespace ptrforge
