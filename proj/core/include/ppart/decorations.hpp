#pragma once

#include <string>
#include <vector>

#include "ppart/patterns.hpp"

namespace ppart {

/// The cone lower bound of the entry at p (may be a half-integer in type B).
Rational circling_lower_bound(const LittelmannPattern& L, Position p);

/// Pattern plus circle/box masks (indexed like L.entries()).
struct DecoratedPattern {
  LittelmannPattern pattern;
  Weight lam;
  std::vector<bool> circled;
  std::vector<bool> boxed;
  /// Upper bounds, cached because the type-D rules need them again.
  std::vector<int> upper;

  bool is_circled(Position p) const { return circled[pattern.flat_index(p.row, p.col)]; }
  bool is_boxed(Position p) const { return boxed[pattern.flat_index(p.row, p.col)]; }
};

/// Throws InvalidInput if L is outside the polytope for lam.
DecoratedPattern decorate(const LittelmannPattern& L, const Weight& lam,
                          const PolytopeReadings& readings = frozen_readings());

/// Grid rendering: "(x)" circled, "[x]" boxed, "[(x)]" both, one row per line.
std::string render_decorated(const DecoratedPattern& dp);

enum class ComponentClass { generic, multiple_leaner, symmetric_multiple_leaner };
std::string to_string(ComponentClass c);

/// How a run that reaches the end of its row is judged against the
/// "strict drop at both ends" requirement for multiple leaners.
enum class LeanerBoundary {
  /// The row end counts as a strict drop.
  row_end_is_drop,
  /// Entries past the row end read 0, as everywhere else.
  zero_extension,
};

struct ComponentD {
  int row = 1;
  /// Columns of the members, ascending.
  std::vector<int> cols;
  int j1 = 0;
  int j2 = 0;
  ComponentClass cls = ComponentClass::generic;
  /// r − j1 for symmetric multiple leaners, 0 otherwise.
  int length = 0;
  /// Rightmost member column.
  int rightmost = 0;
  /// Endpoint of the shorter leg (multiple leaners only).
  int shorter_leg_end = 0;
};

/// Connected components of each row of a type-D pattern, where two entries
/// are joined when they are adjacent in the cone chain and equal.
std::vector<ComponentD> build_components_D(const DecoratedPattern& dp,
                                           LeanerBoundary boundary = LeanerBoundary::row_end_is_drop);

}  // namespace ppart
