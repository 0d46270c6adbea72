#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ptrforge/plane.hpp"
#include "ptrforge/properties.hpp"

namespace ptrforge {

/// A central collineation with its declared center and axis.
struct CollineationMap {
  PointIndex center = kNone;
  LineIndex axis = kNone;
  std::vector<PointIndex> points;  // image of each point
  std::vector<LineIndex> lines;    // induced image of each line

  friend bool operator==(const CollineationMap&, const CollineationMap&) = default;
};

// Full check: incidence preserved, axis fixed pointwise, center fixed linewise.
bool is_central_collineation(const IncidencePlane& plane, const CollineationMap& map);

/// The unique candidate collineation with center A and axis L sending B to C:
/// P -> AP . ((BP . L) C) off the line AB, and via an auxiliary point on AB.
/// Returns nullopt when the candidate is not a collineation.
/// Throws InvalidFlag when A, B, C are not collinear, B or C lies on L or
/// equals A.
std::optional<CollineationMap> central_collineation(const IncidencePlane& plane, PointIndex A, LineIndex L,
                                                    PointIndex B, PointIndex C);

bool is_transitive(const IncidencePlane& plane, PointIndex A, LineIndex L);

struct CollineationGroup {
  PointIndex center = kNone;
  LineIndex axis = kNone;
  PointIndex base = kNone;               // B; elements[i] maps B to images[i]
  std::vector<PointIndex> images;
  std::vector<CollineationMap> elements;  // elements[0] is the identity
  bool transitive = false;
  bool closed = false;
  LoopTable composition;                  // (i,j) -> index of elements[i] o elements[j]
  LoopReport structure;
};

// Enumerates Gamma(A,L) from a base point; closure is verified explicitly.
CollineationGroup group_at(const IncidencePlane& plane, PointIndex A, LineIndex L);

using Flag = std::pair<PointIndex, LineIndex>;

struct TransitivityProfile {
  std::vector<Flag> verified;
  std::vector<Flag> refuted;
  bool has_incident_flag = false;
  bool has_nonincident_flag = false;
  std::vector<LineIndex> translation_lines;
  std::vector<PointIndex> translation_points;
  bool exhaustive = false;
};

/// Flag set used when none is given: every flag when n <= 5 or exhaustive;
/// otherwise every incident flag plus the non-incident flags (A,L) with
/// (A + L) % n == 0.
std::vector<Flag> default_flags(const IncidencePlane& plane, bool exhaustive);

/// Decides each flag. The seed only permutes evaluation order; the profile
/// is sorted, so it never depends on seed or thread count.
TransitivityProfile transitivity_profile(const IncidencePlane& plane, const std::optional<std::vector<Flag>>& flags,
                                         bool exhaustive = false, unsigned threads = 0, std::uint64_t seed = 0);

}  // namespace ptrforge
