// Regenerates the bundled data directory. Every entry is checked here before
// it is written, and the manifest records the claims that the catalog
// verifier re-checks from scratch.
#include <filesystem>
#include <iostream>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "ptrforge/catalog.hpp"
#include "ptrforge/collineation.hpp"
#include "ptrforge/coordinatiser.hpp"
#include "ptrforge/error.hpp"
#include "ptrforge/io.hpp"
#include "ptrforge/properties.hpp"

namespace fs = std::filesystem;
using namespace ptrforge;
using nlohmann::json;

namespace {

struct Writer {
  fs::path root;
  json entries = json::array();

  void add(const std::string& id, const std::string& kind, const std::string& file, const std::string& content,
           json claims) {
    fs::create_directories((root / file).parent_path());
    write_file(root / file, content);
    entries.push_back({{"id", id}, {"kind", kind}, {"file", file}, {"sha256", sha256_hex(content)}, {"claims", claims}});
  }
};

// Dickson nearfield of order 9 written with the slope first:
// m o x = m x when m is zero or a square, m x^3 otherwise.
LoopTable hall_multiplication(const Field& f) {
  const Elem q = f.q();
  std::vector<Elem> carrier(q), table(std::size_t{q} * q);
  for (Elem m = 0; m < q; ++m) {
    carrier[m] = m;
    const bool square = m == 0 || f.log(m) % 2 == 0;
    for (Elem x = 0; x < q; ++x) table[m * q + x] = square ? f.mul(m, x) : f.mul(m, f.pow(x, 3));
  }
  return LoopTable(std::move(carrier), 1, q, std::move(table));
}

json table_claims(const TernaryTable& t, const std::string& source, const std::string& method) {
  if (!check_ptr_properties(t).ptr()) throw Error(Errc::VerificationFailed, source + "/" + method + " is not a PTR");
  bool add = true, mul = true;
  for (Elem x = 0; x < t.q(); ++x)
    for (Elem y = 0; y < t.q(); ++y) {
      add = add && t(1, x, y) == t.field().add(x, y);
      mul = mul && t(x, y, 0) == t.field().mul(x, y);
    }
  return {{"order", t.q()},
          {"source", source},
          {"method", method},
          {"linear", is_linear(t).linear},
          {"additive_is_field_addition", add},
          {"multiplicative_is_field_multiplication", mul}};
}

// Hughes plane of order 9: points are the nonzero vectors of N^3 up to left
// nearfield scalars; lines are the images of {x + y o t + z = 0}, t in
// {1} or N minus F_3, under the powers of a Singer matrix of PG(2,3).
IncidencePlane hughes_plane(const Field& f, const LoopTable& mul) {
  using Vec = std::array<Elem, 3>;
  std::map<Vec, PointIndex> index;
  PointIndex next = 0;
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b)
      for (Elem c = 0; c < 9; ++c) {
        if ((a | b | c) == 0 || index.count({a, b, c})) continue;
        for (Elem l = 1; l < 9; ++l) index[{mul.op(l, a), mul.op(l, b), mul.op(l, c)}] = next;
        ++next;
      }
  // Companion matrix of x^3 - x - 1 over F_3, acting on row vectors.
  constexpr Elem singer[3][3] = {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
  const auto apply = [&](const Vec& v) {
    Vec r{};
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) r[j] = f.add(r[j], f.mul(v[i], singer[i][j]));
    return r;
  };
  LineSets lines;
  for (Elem t : {1u, 3u, 4u, 5u, 6u, 7u, 8u}) {
    std::vector<Vec> pts;
    for (const auto& [v, id] : index)
      if (f.add(f.add(v[0], mul.op(v[1], t)), v[2]) == 0) pts.push_back(v);
    for (int i = 0; i < 13; ++i) {
      std::set<PointIndex> line;
      for (auto& v : pts) {
        line.insert(index.at(v));
        v = apply(v);
      }
      lines.emplace_back(line.begin(), line.end());
    }
  }
  return IncidencePlane::from_lines(next, std::move(lines));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make-catalog <data-dir>\n";
    return 2;
  }
  try {
    Writer w{argv[1]};
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      const Field f = Field::for_order(q);
      const std::string qs = std::to_string(q);
      std::string ftext = "field p=" + std::to_string(f.p()) + " e=" + std::to_string(f.e()) + "\nirreducible";
      for (auto c : f.irreducible()) ftext += " " + std::to_string(c);
      w.add("gf-" + qs, "field", "fields/gf-" + qs + ".txt", ftext + "\n",
            {{"p", f.p()}, {"e", f.e()}, {"irreducible", f.irreducible()}});

      const auto plane = desarguesian_plane(f);
      const std::string pid = "pg-2-" + qs;
      w.add(pid, "plane", "planes/" + pid + ".json", plane_to_json(plane),
            {{"order", q}, {"field", {f.p(), f.e()}}, {"desarguesian", true}});

      const auto frame = pg_standard_frame(f);
      const auto std_coord = coordinatise(plane, f, frame.O, frame.X, frame.Y, frame.I, frame.vertical);
      const auto quad = least_quadrangle(plane);
      const auto quad_coord = coordinatise(plane, f, quad[0], quad[1], quad[2], quad[3]);
      const auto add_coord = coordinatise_additive_optimal(plane, frame.O, frame.X, frame.Y);
      const auto mul_coord = coordinatise_multiplicative_optimal(plane, frame.O, frame.X, frame.Y);
      const std::pair<const char*, const Coordinatisation*> variants[] = {
          {"standard", &std_coord}, {"quadrangle", &quad_coord}, {"additive-optimal", &add_coord},
          {"multiplicative-optimal", &mul_coord}};
      for (const auto& [method, coord] : variants) {
        const std::string id = "ptr-" + pid + "-" + method;
        w.add(id, "ptr-table", "ptr/" + id + ".ptr", ptr_to_text(coord->table()),
              table_claims(coord->table(), pid, method));
      }
    }

    const Field f9 = Field::for_order(9);
    const auto mul = hall_multiplication(f9);
    const auto hall = plane_from_quasifield(f9, field_addition(f9), mul);
    if (is_desarguesian(hall.plane)) throw Error(Errc::VerificationFailed, "order-9 nearfield plane is Desarguesian");
    std::vector<Flag> incident;
    for (LineIndex l = 0; l < hall.plane.num_lines(); ++l)
      for (auto p : hall.plane.points_on(l)) incident.emplace_back(p, l);
    const auto prof = transitivity_profile(hall.plane, incident);
    if (prof.translation_lines.size() != 1) throw Error(Errc::VerificationFailed, "expected one translation line");
    w.add("hall-9", "quasifield", "quasifields/hall-9.txt", quasifield_to_text(f9, mul),
          {{"order", 9},
           {"desarguesian", false},
           {"translation_lines", 1},
           {"left_distributive", hall.left_distributive},
           {"right_distributive", hall.right_distributive}});

    const auto hughes = hughes_plane(f9, mul);
    if (is_desarguesian(hughes)) throw Error(Errc::VerificationFailed, "Hughes plane is Desarguesian");
    const auto hprof = transitivity_profile(hughes, std::nullopt, true);
    w.add("hughes-9", "plane", "planes/hughes-9.json", plane_to_json(hughes),
          {{"order", 9}, {"desarguesian", false}, {"transitive_flags", hprof.verified.size()}});
    const auto huq = least_quadrangle(hughes);
    const auto hu = coordinatise(hughes, f9, huq[0], huq[1], huq[2], huq[3]);
    w.add("ptr-hughes-9-quadrangle", "ptr-table", "ptr/ptr-hughes-9-quadrangle.ptr", ptr_to_text(hu.table()),
          table_claims(hu.table(), "hughes-9", "quadrangle"));

    const PtrPlaneIndex idx{9};
    const auto hquad = least_quadrangle(hall.plane);
    const auto hq = coordinatise(hall.plane, f9, hquad[0], hquad[1], hquad[2], hquad[3]);
    const auto ha = coordinatise_additive_optimal(hall.plane, idx.affine(0, 0), idx.slope(0), idx.infinity());
    w.add("ptr-hall-9-quasifield", "ptr-table", "ptr/ptr-hall-9-quasifield.ptr", ptr_to_text(hall.table),
          table_claims(hall.table, "hall-9", "quasifield"));
    w.add("ptr-hall-9-quadrangle", "ptr-table", "ptr/ptr-hall-9-quadrangle.ptr", ptr_to_text(hq.table()),
          table_claims(hq.table(), "hall-9", "quadrangle"));
    w.add("ptr-hall-9-additive-optimal", "ptr-table", "ptr/ptr-hall-9-additive-optimal.ptr", ptr_to_text(ha.table()),
          table_claims(ha.table(), "hall-9", "additive-optimal"));

    std::sort(w.entries.begin(), w.entries.end(), [](const json& a, const json& b) { return a["id"] < b["id"]; });
    write_file(w.root / "catalog.json", json{{"entries", w.entries}}.dump(2) + "\n");
    std::cout << "wrote " << w.entries.size() << " entries to " << w.root.string() << "\n";
  } catch (const Error& e) {
    std::cerr << "make-catalog: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
