#include "doctest.h"
#include "ppart/contributions.hpp"
#include "ppart/gauss.hpp"
#include "ppart/verify.hpp"

using namespace ppart;

namespace {

LittelmannPattern rows(CartanSpec spec, std::vector<std::vector<int>> r) { return LittelmannPattern::from_rows(spec, r); }

// A decorated pattern with hand-set flags; bounds are irrelevant here.
DecoratedPattern flagged(const LittelmannPattern& L, std::vector<Position> circled, std::vector<Position> boxed) {
  DecoratedPattern dp;
  dp.pattern = L;
  dp.lam = Weight(L.spec().rank);
  const std::size_t n = L.entries().size();
  dp.circled.assign(n, false);
  dp.boxed.assign(n, false);
  dp.upper.assign(n, 0);
  for (auto p : circled) dp.circled[L.flat_index(p.row, p.col)] = true;
  for (auto p : boxed) dp.boxed[L.flat_index(p.row, p.col)] = true;
  return dp;
}

const CoeffElement q = CoeffElement::q_power(1);
const CoeffElement one = CoeffElement::one();

std::vector<ComponentD> row_components(const std::vector<int>& row, int rank,
                                       LeanerBoundary b = LeanerBoundary::row_end_is_drop) {
  CartanSpec spec{Family::D, rank};
  std::vector<std::vector<int>> rs{row};
  for (int i = 2; i <= rank - 1; ++i) rs.push_back(std::vector<int>(static_cast<std::size_t>(row_last_column(spec, i) - i + 1), 0));
  const auto L = LittelmannPattern::from_rows(spec, rs);
  std::vector<ComponentD> out;
  for (auto& c : build_components_D(flagged(L, {}, {}), b))
    if (c.row == 1) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("circling lower bounds") {
  const auto b2 = rows({Family::B, 2}, {{0, 2, 1}, {0}});
  CHECK(circling_lower_bound(b2, {1, 3}) == 0);
  CHECK(circling_lower_bound(b2, {1, 2}) == 2);
  CHECK(circling_lower_bound(b2, {1, 1}) == 1);
  CHECK(circling_lower_bound(rows({Family::B, 2}, {{0, 1, 0}, {0}}), {1, 1}) == Rational(1, 2));
  const auto d3 = rows({Family::D, 3}, {{3, 1, 2, 0}, {0, 0}});
  CHECK(circling_lower_bound(d3, {1, 1}) == 2);
  CHECK(circling_lower_bound(d3, {1, 4}) == 0);
  CHECK(circling_lower_bound(rows({Family::A, 2}, {{2, 1}, {1}}), {1, 1}) == 1);
}

TEST_CASE("decorate") {
  RootSystem a1({Family::A, 1});
  auto dp = decorate(rows({Family::A, 1}, {{2}}), Weight{2});
  CHECK(dp.is_boxed({1, 1}));
  CHECK_FALSE(dp.is_circled({1, 1}));
  dp = decorate(rows({Family::A, 1}, {{1}}), Weight{1});
  CHECK(dp.is_boxed({1, 1}));
  CHECK_FALSE(dp.is_circled({1, 1}));
  dp = decorate(rows({Family::A, 1}, {{0}}), Weight{1});
  CHECK(dp.is_circled({1, 1}));
  CHECK_FALSE(dp.is_boxed({1, 1}));
  CHECK_THROWS_AS(decorate(rows({Family::A, 1}, {{3}}), Weight{2}), InvalidInput);

  for (CartanSpec spec : {CartanSpec{Family::A, 3}, CartanSpec{Family::B, 3}, CartanSpec{Family::C, 3},
                          CartanSpec{Family::D, 4}}) {
    RootSystem rs(spec);
    const auto z = decorate(LittelmannPattern(spec), rs.rho());
    for (const auto& p : z.pattern.positions()) {
      CHECK(z.is_circled(p));
      CHECK_FALSE(z.is_boxed(p));
    }
  }
  CHECK(render_decorated(decorate(rows({Family::A, 2}, {{1, 0}, {0}}), Weight{1, 1})) == "[1] (0)\n    (0)\n");
}

TEST_CASE("entry factors") {
  const auto a = rows({Family::A, 2}, {{2, 1}, {0}});
  auto dp = flagged(a, {{1, 1}}, {{1, 1}});
  CHECK(entry_factor(dp, {1, 1}, 2).is_zero());
  CHECK(pattern_coefficient(dp, 2).is_zero());
  dp = flagged(a, {{2, 2}, {1, 1}}, {{1, 2}});
  CHECK(entry_factor(dp, {2, 2}, 2) == one);
  CHECK(entry_factor(dp, {1, 1}, 2) == CoeffElement::q_power(2));
  CHECK(entry_factor(dp, {1, 2}, 2) == g_value(1, 1, 2));
  dp = flagged(a, {}, {});
  CHECK(entry_factor(dp, {1, 1}, 2) == h_value(1, 2, 2));
  CHECK(entry_factor(dp, {1, 2}, 2).is_zero());

  // B: t = 1 only in column r
  const auto b = rows({Family::B, 2}, {{2, 2, 1}, {1}});
  dp = flagged(b, {{1, 1}}, {{1, 2}, {2, 2}});
  CHECK(entry_factor(dp, {1, 1}, 3) == one);
  CHECK(entry_factor(dp, {1, 2}, 3) == g_value(1, 2, 3).shifted_q(-2));
  CHECK(entry_factor(dp, {2, 2}, 3) == g_value(1, 1, 3).shifted_q(-1));
  CHECK(entry_factor(dp, {1, 3}, 2) == h_value(2, 1, 2).shifted_q(-1));

  // C: t = 2 only in column r, undecorated entries need n | a
  const auto c = rows({Family::C, 2}, {{2, 2, 2}, {1}});
  dp = flagged(c, {}, {{1, 2}});
  CHECK(entry_factor(dp, {1, 1}, 3).is_zero());
  CHECK(entry_factor(dp, {1, 1}, 2) == h_value(1, 2, 2));
  CHECK(entry_factor(dp, {1, 2}, 3) == g_value(2, 2, 3));
  CHECK_THROWS_AS(entry_factor(flagged(LittelmannPattern({Family::D, 3}), {}, {}), {1, 1}, 1), InvalidInput);
}

TEST_CASE("sigma entries") {
  const auto d = rows({Family::D, 3}, {{1, 2, 0, 0}, {0, 0}});
  auto dp = flagged(d, {}, {});
  CHECK(sigma_entry(dp, {1, 1}, 1) == (q - one).shifted_q(-1));
  CHECK(sigma_entry(dp, {1, 3}, 1) == one);
  dp = flagged(d, {}, {{1, 2}});
  CHECK(sigma_entry(dp, {1, 2}, 2) == g_value(1, 2, 2).shifted_q(-2));
  dp = flagged(d, {{1, 2}}, {{1, 2}});
  CHECK(sigma_entry(dp, {1, 2}, 2).is_zero());
}

TEST_CASE("type D components") {
  // a zero row is one symmetric leaner
  auto cs = row_components({0, 0, 0, 0, 0, 0}, 4);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].cls == ComponentClass::symmetric_multiple_leaner);
  CHECK(cs[0].length == 3);
  // ... unless the row end does not count as a drop
  cs = row_components({0, 0, 0, 0, 0, 0}, 4, LeanerBoundary::zero_extension);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].cls == ComponentClass::generic);

  cs = row_components({2, 1, 1, 1, 1, 0}, 4);
  REQUIRE(cs.size() == 3);
  CHECK(cs[1].cls == ComponentClass::symmetric_multiple_leaner);
  CHECK(cs[1].j1 == 2);
  CHECK(cs[1].j2 == 5);
  CHECK(cs[1].length == 2);

  cs = row_components({1, 1, 1, 1, 1, 0}, 4);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].cls == ComponentClass::multiple_leaner);
  CHECK(cs[0].shorter_leg_end == 5);

  cs = row_components({2, 1, 1, 1, 0, 0}, 4);
  for (const auto& c : cs) CHECK(c.cls == ComponentClass::generic);

  // central pair equal but not chain-adjacent: separate singletons
  cs = row_components({2, 1, 1, 0}, 3);
  CHECK(cs.size() == 4);
  for (const auto& c : cs) CHECK(c.cls == ComponentClass::generic);

  // 1 and 0 in the middle never merge; the 0 joins its right neighbour
  cs = row_components({2, 1, 0, 0}, 3);
  REQUIRE(cs.size() == 3);
  CHECK(cs[1].cols == std::vector<int>{2});
  CHECK(cs[2].cols == std::vector<int>{3, 4});

  // every component is an equal-valued part of a row partition
  RootSystem rs({Family::D, 4});
  for (const auto& L : enumerate_patterns(rs, Weight{1, 0, 1, 1})) {
    std::map<int, int> covered;
    for (const auto& c : build_components_D(decorate(L, Weight{1, 0, 1, 1}))) {
      covered[c.row] += static_cast<int>(c.cols.size());
      for (int j : c.cols) CHECK(L.a(c.row, j) == L.a(c.row, c.j1));
    }
    for (int i = 1; i <= L.num_rows(); ++i) CHECK(covered[i] == L.row_length(i));
  }
}

TEST_CASE("sigma components") {
  CartanSpec spec{Family::D, 4};
  auto L = LittelmannPattern::from_rows(spec, {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0}});
  auto dp = flagged(L, {}, {});
  auto comps = build_components_D(dp);
  CHECK(sigma_component(comps[0], dp, 2) == one);

  L = LittelmannPattern::from_rows(spec, {{2, 1, 1, 1, 1, 0}, {0, 0, 0, 0}, {0, 0}});
  dp = flagged(L, {}, {});
  comps = build_components_D(dp);
  const auto& sml = comps[1];
  REQUIRE(sml.cls == ComponentClass::symmetric_multiple_leaner);
  const auto s1 = h_value(1, 1, 1).shifted_q(-1);
  CHECK(sigma_component(sml, dp, 1) == s1 * (one - CoeffElement::q_power(-2)));
  dp = flagged(L, {}, {{1, 5}});
  comps = build_components_D(dp);
  CHECK(sigma_component(comps[1], dp, 1) ==
        g_value(1, 1, 1).shifted_q(-1) * h_value(1, 1, 1).shifted_q(-1) * CoeffElement::q_power(-1));
  dp = flagged(L, {{1, 3}}, {{1, 3}});
  comps = build_components_D(dp);
  CHECK(sigma_component(comps[1], dp, 1).is_zero());
  CHECK(pattern_coefficient(dp, 1).is_zero());

  // generic singleton
  dp = flagged(L, {}, {});
  comps = build_components_D(dp);
  CHECK(sigma_component(comps[0], dp, 1) == h_value(1, 2, 1).shifted_q(-2));

  // m.l. uses its shorter-leg end
  L = LittelmannPattern::from_rows(spec, {{1, 1, 1, 1, 1, 0}, {0, 0, 0, 0}, {0, 0}});
  dp = flagged(L, {}, {{1, 5}});
  comps = build_components_D(dp);
  REQUIRE(comps[0].cls == ComponentClass::multiple_leaner);
  CHECK(sigma_component(comps[0], dp, 2) == g_value(1, 1, 2).shifted_q(-1));
}

TEST_CASE("zero pattern contributes one") {
  for (CartanSpec spec : {CartanSpec{Family::A, 2}, CartanSpec{Family::B, 2}, CartanSpec{Family::C, 3},
                          CartanSpec{Family::D, 4}}) {
    RootSystem rs(spec);
    const auto dp = decorate(LittelmannPattern(spec), rs.rho());
    for (int n = 1; n <= 4; ++n) CHECK(pattern_coefficient(dp, n) == one);
  }
}

TEST_CASE("decoration suite") {
  DecorationSuiteConfig cfg;
  cfg.max_dim = 300;
  const auto rep = run_decoration_suite(cfg);
  for (const auto& c : rep.cases) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
}
