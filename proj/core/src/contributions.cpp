#include "ppart/contributions.hpp"

#include <algorithm>

#include "ppart/gauss.hpp"

namespace ppart {

CoeffElement entry_factor(const DecoratedPattern& dp, Position p, int n) {
  const auto& spec = dp.pattern.spec();
  const int a = dp.pattern.at(p);
  const bool circ = dp.is_circled(p);
  const bool box = dp.is_boxed(p);
  if (circ && box) return CoeffElement::zero();
  switch (spec.family) {
    case Family::A:
      if (circ) return CoeffElement::q_power(a);
      if (box) return g_value(1, a, n);
      return h_value(1, a, n);
    case Family::B: {
      const int t = p.col == spec.rank ? 1 : 2;
      if (circ) return CoeffElement::one();
      if (box) return g_value(t, a, n).shifted_q(-a);
      return h_value(t, a, n).shifted_q(-a);
    }
    case Family::C: {
      const int t = p.col == spec.rank ? 2 : 1;
      if (circ) return CoeffElement::q_power(a);
      if (box) return g_value(t, a, n);
      if (a % n == 0) return h_value(1, a, n);
      return CoeffElement::zero();
    }
    case Family::D:
      break;
  }
  throw InvalidInput("entry_factor does not apply to type D; use sigma_component");
}

CoeffElement sigma_entry(const DecoratedPattern& dp, Position p, int n) {
  const int a = dp.pattern.at(p);
  const bool circ = dp.is_circled(p);
  const bool box = dp.is_boxed(p);
  if (circ && box) return CoeffElement::zero();
  if (box) return g_value(1, a, n).shifted_q(-a);
  return h_value(1, a, n).shifted_q(-a);
}

CoeffElement sigma_component(const ComponentD& c, const DecoratedPattern& dp, int n) {
  const int i = c.row;
  for (int j : c.cols) {
    if (dp.is_circled({i, j}) && dp.is_boxed({i, j})) return CoeffElement::zero();
  }
  const int value = dp.pattern.a(i, c.rightmost);
  switch (c.cls) {
    case ComponentClass::generic:
      return sigma_entry(dp, {i, c.rightmost}, n);
    case ComponentClass::multiple_leaner:
      return sigma_entry(dp, {i, c.shorter_leg_end}, n);
    case ComponentClass::symmetric_multiple_leaner: {
      if (value == 0) return CoeffElement::one();
      const Position right{i, c.rightmost};
      if (!dp.is_boxed(right)) {
        return sigma_entry(dp, right, n) * (CoeffElement::one() - CoeffElement::q_power(-c.length));
      }
      return sigma_entry(dp, right, n) * sigma_entry(dp, {i, c.rightmost - 1}, n) *
             CoeffElement::q_power(1 - c.length);
    }
  }
  throw InvalidInput("unclassified type D component");
}

CoeffElement pattern_coefficient(const DecoratedPattern& dp, int n, LeanerBoundary boundary) {
  if (n < 1) throw InvalidInput("metaplectic degree must be positive");
  CoeffElement g = CoeffElement::one();
  if (dp.pattern.spec().family == Family::D) {
    for (const auto& c : build_components_D(dp, boundary)) {
      g *= sigma_component(c, dp, n);
      if (g.is_zero()) break;
    }
    return g;
  }
  for (const Position& p : dp.pattern.positions()) {
    g *= entry_factor(dp, p, n);
    if (g.is_zero()) break;
  }
  return g;
}

}  // namespace ppart
