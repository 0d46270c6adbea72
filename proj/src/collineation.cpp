#include "ptrforge/collineation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ptrforge/error.hpp"
#include "ptrforge/parallel.hpp"

namespace ptrforge {

namespace {

// Induced line map; nullopt when some line is not sent to a line.
std::optional<std::vector<LineIndex>> induced_lines(const IncidencePlane& plane, const std::vector<PointIndex>& f) {
  std::vector<LineIndex> out(plane.num_lines());
  std::vector<PointIndex> img;
  for (LineIndex l = 0; l < plane.num_lines(); ++l) {
    img.clear();
    for (auto p : plane.points_on(l)) img.push_back(f[p]);
    std::sort(img.begin(), img.end());
    const auto m = plane.find_line(img);
    if (!m) return std::nullopt;
    out[l] = *m;
  }
  return out;
}

}  // namespace

bool is_central_collineation(const IncidencePlane& plane, const CollineationMap& map) {
  const std::size_t v = plane.num_points();
  if (map.points.size() != v || map.lines.size() != v) return false;
  std::vector<char> hit(v, 0);
  for (auto p : map.points) {
    if (p >= v || hit[p]) return false;
    hit[p] = 1;
  }
  for (LineIndex l = 0; l < v; ++l)
    for (auto p : plane.points_on(l))
      if (!plane.incident(map.points[p], map.lines[l])) return false;
  for (auto p : plane.points_on(map.axis))
    if (map.points[p] != p) return false;
  for (auto l : plane.lines_through(map.center))
    if (map.lines[l] != l) return false;
  return true;
}

std::optional<CollineationMap> central_collineation(const IncidencePlane& plane, PointIndex A, LineIndex L,
                                                    PointIndex B, PointIndex C) {
  const std::size_t v = plane.num_points();
  if (A >= v || B >= v || C >= v || L >= v) throw Error(Errc::InvalidFlag, "index out of range", {A, L, B, C});
  if (B == A || C == A || plane.incident(B, L) || plane.incident(C, L) || !plane.collinear(A, B, C)) {
    throw Error(Errc::InvalidFlag, "need A, B, C collinear with B, C off L and distinct from A", {A, L, B, C});
  }
  CollineationMap map{A, L, std::vector<PointIndex>(v), {}};
  std::iota(map.points.begin(), map.points.end(), 0u);
  if (B != C) {
    const LineIndex ab = plane.join(A, B);
    const auto image = [&](PointIndex P, PointIndex src, PointIndex dst) {
      const PointIndex m = plane.meet(plane.join(src, P), L);
      return plane.meet(plane.join(A, P), plane.join(m, dst));
    };
    PointIndex R = kNone;
    for (PointIndex p = 0; p < v && R == kNone; ++p)
      if (!plane.incident(p, L) && !plane.incident(p, ab)) R = p;
    const PointIndex R2 = image(R, B, C);
    for (PointIndex p = 0; p < v; ++p) {
      if (p == A || plane.incident(p, L)) continue;
      map.points[p] = plane.incident(p, ab) ? image(p, R, R2) : image(p, B, C);
    }
  }
  std::vector<char> hit(v, 0);
  for (auto p : map.points) {
    if (p == kNone || hit[p]) return std::nullopt;
    hit[p] = 1;
  }
  auto lines = induced_lines(plane, map.points);
  if (!lines) return std::nullopt;
  map.lines = std::move(*lines);
  if (!is_central_collineation(plane, map)) return std::nullopt;
  return map;
}

namespace {

std::vector<PointIndex> admissible_on(const IncidencePlane& plane, PointIndex A, LineIndex L, LineIndex m) {
  std::vector<PointIndex> out;
  for (auto p : plane.points_on(m))
    if (p != A && !plane.incident(p, L)) out.push_back(p);
  return out;
}

LineIndex base_line(const IncidencePlane& plane, PointIndex A, LineIndex L) {
  for (auto m : plane.lines_through(A))
    if (m != L) return m;
  return kNone;
}

bool transitive_on(const IncidencePlane& plane, PointIndex A, LineIndex L, LineIndex m) {
  const auto pts = admissible_on(plane, A, L, m);
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!central_collineation(plane, A, L, pts[0], pts[i])) return false;
  return true;
}

}  // namespace

bool is_transitive(const IncidencePlane& plane, PointIndex A, LineIndex L) {
  if (A >= plane.num_points() || L >= plane.num_lines()) throw Error(Errc::InvalidFlag, "index out of range", {A, L});
  if (plane.order() <= 4) {
    for (auto m : plane.lines_through(A))
      if (m != L && !transitive_on(plane, A, L, m)) return false;
    return true;
  }
  return transitive_on(plane, A, L, base_line(plane, A, L));
}

CollineationGroup group_at(const IncidencePlane& plane, PointIndex A, LineIndex L) {
  if (A >= plane.num_points() || L >= plane.num_lines()) throw Error(Errc::InvalidFlag, "index out of range", {A, L});
  CollineationGroup g;
  g.center = A;
  g.axis = L;
  const auto pts = admissible_on(plane, A, L, base_line(plane, A, L));
  g.base = pts.front();
  g.transitive = true;
  for (auto c : pts) {
    auto map = central_collineation(plane, A, L, g.base, c);
    if (!map) {
      g.transitive = false;
      continue;
    }
    g.images.push_back(c);
    g.elements.push_back(std::move(*map));
  }
  // Each element is determined by the image of the base point.
  const std::size_t k = g.elements.size();
  std::vector<std::int64_t> index_of(plane.num_points(), -1);
  for (std::size_t i = 0; i < k; ++i) index_of[g.images[i]] = static_cast<std::int64_t>(i);

  g.closed = true;
  std::vector<Elem> table(k * k, 0);
  std::vector<PointIndex> composed(plane.num_points());
  for (std::size_t i = 0; i < k && g.closed; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& f = g.elements[i].points;
      const auto& h = g.elements[j].points;
      for (std::size_t p = 0; p < composed.size(); ++p) composed[p] = f[h[p]];
      const auto idx = index_of[composed[g.base]];
      if (idx < 0 || g.elements[idx].points != composed) {
        g.closed = false;
        break;
      }
      table[i * k + j] = static_cast<Elem>(idx);
    }
  if (g.closed) {
    std::vector<Elem> carrier(k);
    std::iota(carrier.begin(), carrier.end(), 0u);
    g.composition = LoopTable(std::move(carrier), 0, k, std::move(table));
    g.structure = loop_analysis(g.composition);
  }
  return g;
}

std::vector<Flag> default_flags(const IncidencePlane& plane, bool exhaustive) {
  const std::size_t n = plane.order();
  std::vector<Flag> flags;
  for (PointIndex a = 0; a < plane.num_points(); ++a)
    for (LineIndex l = 0; l < plane.num_lines(); ++l) {
      if (exhaustive || n <= 5 || plane.incident(a, l) || (a + l) % n == 0) flags.emplace_back(a, l);
    }
  return flags;
}

TransitivityProfile transitivity_profile(const IncidencePlane& plane, const std::optional<std::vector<Flag>>& flags,
                                         bool exhaustive, unsigned threads, std::uint64_t seed) {
  std::vector<Flag> todo = flags ? *flags : default_flags(plane, exhaustive);
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());

  std::vector<std::size_t> schedule(todo.size());
  std::iota(schedule.begin(), schedule.end(), 0u);
  if (seed != 0) std::shuffle(schedule.begin(), schedule.end(), std::mt19937_64(seed));

  std::vector<char> ok(todo.size(), 0);
  parallel_for(todo.size(), threads, [&](std::size_t i) {
    const auto& [a, l] = todo[schedule[i]];
    ok[schedule[i]] = is_transitive(plane, a, l) ? 1 : 0;
  });

  TransitivityProfile prof;
  prof.exhaustive = exhaustive || plane.order() <= 5;
  std::vector<std::vector<char>> verified_at(plane.num_points(), std::vector<char>(plane.num_lines(), 0));
  for (std::size_t i = 0; i < todo.size(); ++i) {
    const auto& [a, l] = todo[i];
    if (ok[i]) {
      prof.verified.push_back(todo[i]);
      verified_at[a][l] = 1;
      (plane.incident(a, l) ? prof.has_incident_flag : prof.has_nonincident_flag) = true;
    } else {
      prof.refuted.push_back(todo[i]);
    }
  }
  for (LineIndex l = 0; l < plane.num_lines(); ++l) {
    const auto pts = plane.points_on(l);
    if (std::all_of(pts.begin(), pts.end(), [&](PointIndex p) { return verified_at[p][l] != 0; })) {
      prof.translation_lines.push_back(l);
    }
  }
  for (PointIndex p = 0; p < plane.num_points(); ++p) {
    const auto ls = plane.lines_through(p);
    if (std::all_of(ls.begin(), ls.end(), [&](LineIndex l) { return verified_at[p][l] != 0; })) {
      prof.translation_points.push_back(p);
    }
  }
  return prof;
}

}  // namespace ptrforge
