#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "ptrforge/ternary.hpp"

namespace ptrforge {

struct PropertyVerdict {
  bool holds = true;
  std::vector<Elem> witness;  // empty when the property holds
};

/// Verdicts for the five coordinatisation properties of a ternary table.
///
/// Witnesses are the lexicographically least failures:
///   (a), (b): the table entry (m,x,y) with the wrong value;
///   (c): (a,b,c,d), a != c, with no or several x solving T(x,a,b) = T(x,c,d);
///   (d): (a,b,c) such that no z solves T(a,b,z) = c;
///   (e): (a,b,c,d), a != c, with no or several (y,z) solving both equations.
struct PropertyReport {
  PropertyVerdict a, b, c, d, e;

  bool weak_ptr() const noexcept { return c.holds && d.holds && e.holds; }
  bool ptr() const noexcept { return a.holds && b.holds && weak_ptr(); }
};

PropertyReport check_ptr_properties(const TernaryTable& table);

struct LoopReport {
  bool closed = false;
  bool identity_law = false;
  bool latin = false;
  bool is_loop = false;
  bool associative = false;
  bool commutative = false;
  bool group = false;
  bool elementary_abelian = false;
  bool cyclic = false;
  std::size_t order = 0;
  std::vector<Elem> involutions;  // t != identity with t*t = identity, ascending
};

LoopReport loop_analysis(const LoopTable& loop);

struct PtrLoops {
  LoopTable plus;   // x (+) y = T(1,x,y) on F_q
  LoopTable times;  // x (.) y = T(x,y,0) on F_q minus zero
};

// Throws NotPTR unless (a)-(e) hold.
PtrLoops extract_loops(const TernaryTable& table);

struct LinearityReport {
  bool linear = true;
  std::optional<std::array<Elem, 3>> witness;  // least (x,y,z) breaking the identity
};

// Decides T(x,y,z) = (x (.) y) (+) z. Throws NotPTR unless (a)-(e) hold.
LinearityReport is_linear(const TernaryTable& table);

}  // namespace ptrforge
