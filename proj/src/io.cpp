#include "ptrforge/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ptrforge/error.hpp"

namespace ptrforge {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

// Parses "key=value" tokens of a header line after the leading keyword.
std::uint64_t header_value(std::istringstream& in, const std::string& key) {
  std::string tok;
  if (!(in >> tok) || tok.rfind(key + "=", 0) != 0) parse_error("expected " + key + "= in header");
  try {
    return std::stoull(tok.substr(key.size() + 1));
  } catch (const std::exception&) {
    parse_error("bad value for " + key);
  }
}

Field field_header(std::istringstream& in, const std::string& keyword) {
  std::string word;
  if (!(in >> word) || word != keyword) parse_error("missing '" + keyword + "' header");
  const auto q = header_value(in, "q");
  const auto p = header_value(in, "p");
  const auto e = header_value(in, "e");
  const Field f = Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
  if (f.q() != q) parse_error("header q does not equal p^e");
  return f;
}

std::vector<Elem> read_values(std::istringstream& in, const Field& f, std::size_t count) {
  std::vector<Elem> values;
  values.reserve(count);
  std::uint64_t v;
  while (in >> v) {
    if (v >= f.q()) throw Error(Errc::InvalidElement, "value " + std::to_string(v) + " out of range");
    values.push_back(static_cast<Elem>(v));
  }
  if (!in.eof()) parse_error("non-numeric token");
  if (values.size() != count) {
    throw Error(Errc::IncompleteTable,
                "expected " + std::to_string(count) + " values, found " + std::to_string(values.size()));
  }
  return values;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << content;
}

std::string plane_to_json(const IncidencePlane& plane) {
  std::string s = "{\"order\": " + std::to_string(plane.order()) + ", \"points\": " +
                  std::to_string(plane.num_points()) + ", \"lines\": [";
  for (std::size_t l = 0; l < plane.num_lines(); ++l) {
    s += l ? ", [" : "[";
    const auto pts = plane.points_on(static_cast<LineIndex>(l));
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + std::to_string(pts[i]);
    s += "]";
  }
  return s + "]}\n";
}

IncidencePlane plane_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("plane JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("points") || !j.contains("lines")) parse_error("plane JSON needs points and lines");
  LineSets lines;
  std::size_t v = 0;
  try {
    v = j.at("points").get<std::size_t>();
    lines = j.at("lines").get<LineSets>();
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("plane JSON: ") + e.what());
  }
  auto plane = IncidencePlane::from_lines(v, std::move(lines));
  if (j.contains("order") && j["order"] != plane.order()) parse_error("declared order does not match the incidence");
  return plane;
}

std::string ptr_to_text(const TernaryTable& table) {
  const auto& f = table.field();
  const Elem q = f.q();
  std::string s = "ptr q=" + std::to_string(q) + " p=" + std::to_string(f.p()) + " e=" + std::to_string(f.e()) + "\n";
  const auto v = table.values();
  for (std::size_t i = 0; i < v.size(); ++i) s += std::to_string(v[i]) + ((i + 1) % q == 0 ? "\n" : " ");
  return s;
}

TernaryTable ptr_from_text(const std::string& text) {
  std::istringstream in(text);
  const Field f = field_header(in, "ptr");
  const std::size_t q = f.q();
  return TernaryTable(f, read_values(in, f, q * q * q));
}

std::string quasifield_to_text(const Field& field, const LoopTable& mul) {
  const Elem q = field.q();
  std::string s = "q=" + std::to_string(q) + "\n";
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y) s += std::to_string(x) + " " + std::to_string(y) + " " + std::to_string(mul.op(x, y)) + "\n";
  return s;
}

QuasifieldData quasifield_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok) || tok.rfind("q=", 0) != 0) parse_error("missing q= header");
  std::uint64_t q = 0;
  try {
    q = std::stoull(tok.substr(2));
  } catch (const std::exception&) {
    parse_error("bad q");
  }
  const Field f = Field::for_order(q);
  const auto raw = read_values(in, f, 3 * q * q);
  std::vector<Elem> table(q * q), carrier(q);
  for (Elem i = 0; i < q; ++i) carrier[i] = i;
  for (std::size_t r = 0; r < q * q; ++r) {
    const Elem x = raw[3 * r], y = raw[3 * r + 1];
    if (x * q + y != r) parse_error("quasifield rows must be in encoding order");
    table[r] = raw[3 * r + 2];
  }
  return {f, LoopTable(std::move(carrier), 1, q, std::move(table))};
}

std::string map_to_text(const Field& field, const std::vector<Elem>& values) {
  std::string s = "map q=" + std::to_string(field.q()) + " p=" + std::to_string(field.p()) + " e=" +
                  std::to_string(field.e()) + "\n";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s + "\n";
}

std::pair<Field, std::vector<Elem>> map_from_text(const std::string& text) {
  std::istringstream in(text);
  Field f = field_header(in, "map");
  auto values = read_values(in, f, f.q());
  return {std::move(f), std::move(values)};
}

InputKind sniff(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) return InputKind::Unknown;
  if (text[pos] == '{') return InputKind::Plane;
  const auto starts = [&](const char* w) { return text.compare(pos, std::char_traits<char>::length(w), w) == 0; };
  if (starts("ptr ")) return InputKind::Ptr;
  if (starts("poly ")) return InputKind::Poly;
  if (starts("map ")) return InputKind::Map;
  if (starts("q=")) return InputKind::Quasifield;
  return InputKind::Unknown;
}

std::string coordinatisation_to_json(const Coordinatisation& coord, bool pretty) {
  nlohmann::json j;
  j["anchors"] = {{"O", coord.O()}, {"X", coord.X()}, {"Y", coord.Y()}, {"I", coord.I()}, {"J", coord.J()}};
  nlohmann::json points = nlohmann::json::object(), lines = nlohmann::json::object();
  for (PointIndex p = 0; p < coord.plane().num_points(); ++p) points[to_string(coord.point_label(p))] = p;
  for (LineIndex l = 0; l < coord.plane().num_lines(); ++l) lines[to_string(coord.line_label(l))] = l;
  j["points"] = std::move(points);
  j["lines"] = std::move(lines);
  j["q"] = coord.field().q();
  return j.dump(pretty ? 2 : -1) + "\n";
}

}  // namespace ptrforge
