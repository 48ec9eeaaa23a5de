#include <random>
#include <set>

#include "doctest.h"
#include "ppart/patterns.hpp"
#include "ppart/verify.hpp"
#include "string_polytope.hpp"

using namespace ppart;

namespace {

LittelmannPattern rows(CartanSpec spec, std::vector<std::vector<int>> r) { return LittelmannPattern::from_rows(spec, r); }

std::vector<CartanSpec> specs() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3},
          {Family::C, 2}, {Family::C, 3}, {Family::D, 3}, {Family::D, 4}};
}

}  // namespace

TEST_CASE("shapes") {
  CHECK(pattern_shape({Family::A, 3}) == std::vector<int>{3, 2, 1});
  CHECK(pattern_shape({Family::C, 2}) == std::vector<int>{3, 1});
  CHECK(pattern_shape({Family::B, 3}) == std::vector<int>{5, 3, 1});
  CHECK(pattern_shape({Family::D, 3}) == std::vector<int>{4, 2});
  CHECK(pattern_shape({Family::D, 4}) == std::vector<int>{6, 4, 2});
  for (const auto& spec : specs()) {
    int total = 0;
    for (int len : pattern_shape(spec)) total += len;
    CHECK(static_cast<std::size_t>(total) == positive_root_count(spec));
  }
  // labels read along a row reproduce the word, bottom row first
  for (const auto& spec : specs()) {
    CAPTURE(to_string(spec));
    LittelmannPattern L(spec);
    WeylWord w;
    for (int i = L.num_rows(); i >= 1; --i)
      for (int j = i; j <= row_last_column(spec, i); ++j) w.push_back(column_label(spec, j));
    CHECK(w == nice_long_word(spec));
  }
  CHECK(bar_column({Family::B, 2}, 1) == 3);
  CHECK(bar_column({Family::D, 3}, 1) == 4);
}

TEST_CASE("cone") {
  CHECK(cone_satisfied(LittelmannPattern({Family::D, 4})));
  CHECK_FALSE(cone_satisfied(rows({Family::A, 2}, {{1, 2}, {0}})));
  CHECK(cone_satisfied(rows({Family::A, 2}, {{2, 1}, {0}})));
  CHECK(cone_satisfied(rows({Family::B, 2}, {{1, 2, 0}, {0}})));
  CHECK_FALSE(cone_satisfied(rows({Family::B, 2}, {{1, 3, 0}, {0}})));
  CHECK(cone_satisfied(rows({Family::C, 2}, {{2, 1, 1}, {0}})));
  CHECK(cone_satisfied(rows({Family::C, 2}, {{1, 1, 0}, {0}})));
  CHECK_FALSE(cone_satisfied(rows({Family::C, 2}, {{1, 2, 0}, {0}})));
  // the two central D entries are not compared with each other
  CHECK(cone_satisfied(rows({Family::D, 3}, {{2, 1, 2, 0}, {0, 0}})));
  CHECK(cone_satisfied(rows({Family::D, 3}, {{2, 2, 1, 0}, {0, 0}})));
  CHECK_FALSE(cone_satisfied(rows({Family::A, 1}, {{-1}})));
}

TEST_CASE("aggregates") {
  const auto zero = LittelmannPattern({Family::C, 3});
  PatternAggregates z(zero, frozen_readings());
  for (const auto& p : zero.positions()) CHECK(z.s(p.row, p.col) == 0);

  auto c2 = rows({Family::C, 2}, {{2, 1, 1}, {0}});
  PatternAggregates a(c2, frozen_readings());
  CHECK(a.s(1, 1) == 3);
  CHECK(a.s(1, 2) == 2);

  // the bottom entry sits at its own bar position, so abar(2,2) = 1
  auto b2 = rows({Family::B, 2}, {{0, 2, 0}, {1}});
  PatternAggregates b(b2, frozen_readings());
  CHECK(b2.abar(2, 2) == 1);
  CHECK(b.s(1, 2) == 2);
  CHECK(b.sbar(2, 2) == 5);
}

TEST_CASE("upper bounds") {
  CHECK(polytope_upper_bound(LittelmannPattern({Family::A, 1}), Weight{4}, {1, 1}) == 4);
  CHECK(polytope_upper_bound(LittelmannPattern({Family::A, 2}), Weight{1, 1}, {1, 2}) == 1);
  const auto d3 = LittelmannPattern({Family::D, 3});
  // column r-1 carries alpha_1 and column r carries alpha_2
  CHECK(polytope_upper_bound(d3, Weight{1, 0, 0}, {1, 2}) == 1);
  CHECK(polytope_upper_bound(d3, Weight{1, 0, 0}, {1, 3}) == 0);
  CHECK(polytope_upper_bound(d3, Weight{0, 1, 0}, {1, 2}) == 0);
  CHECK(polytope_upper_bound(d3, Weight{0, 1, 0}, {1, 3}) == 1);

  CHECK(polytope_satisfied(LittelmannPattern({Family::B, 3}), Weight{0, 0, 0}));
  CHECK_FALSE(polytope_satisfied(rows({Family::A, 1}, {{3}}), Weight{2}));
  CHECK(polytope_satisfied(rows({Family::A, 1}, {{2}}), Weight{2}));
  CHECK_THROWS_AS(polytope_upper_bound(d3, Weight{1, 0, 0}, {3, 1}), InvalidInput);
}

TEST_CASE("closed-form bounds equal the word bounds on the cone") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 4);
  for (const auto& spec : specs()) {
    RootSystem rs(spec);
    const std::size_t N = positive_root_count(spec);
    for (int k = 0; k < 400; ++k) {
      std::vector<int> s(N);
      for (auto& x : s) x = d(rng);
      const auto L = bzl_to_pattern(spec, s);
      if (!cone_satisfied(L)) continue;
      Weight lam(spec.rank);
      for (int i = 0; i < spec.rank; ++i) lam[i] = d(rng);
      for (const auto& p : L.positions()) CHECK(polytope_upper_bound(L, lam, p) == word_upper_bound(rs, L, lam, p));
    }
  }
}

TEST_CASE("enumeration counts") {
  for (const auto& spec : specs()) {
    RootSystem rs(spec);
    const auto one = enumerate_patterns(rs, Weight(spec.rank));
    REQUIRE(one.size() == 1);
    CHECK(one[0].is_zero());
  }
  RootSystem a1({Family::A, 1});
  for (int m = 0; m <= 6; ++m) CHECK(enumerate_patterns(a1, Weight{m}).size() == static_cast<std::size_t>(m + 1));
  CHECK(enumerate_patterns(RootSystem({Family::A, 2}), Weight{1, 1}).size() == 8);
  CHECK(enumerate_patterns(RootSystem({Family::A, 2}), Weight{1, 0}).size() == 3);
  CHECK_THROWS_AS(enumerate_patterns(a1, Weight{-1}), InvalidInput);
  CHECK_THROWS_AS(enumerate_patterns(a1, Weight{1, 1}), InvalidInput);
}

TEST_CASE("enumeration equals the string polytope oracle") {
  for (const auto& spec : specs()) {
    RootSystem rs(spec);
    const auto lie = oracle::make_lie(family_letter(spec.family), spec.rank);
    for (const auto& lam : small_weights(rs, {0, 1, 2}, 300)) {
      CAPTURE(to_string(spec));
      CAPTURE(to_string(lam));
      const auto strings = oracle::bounded_strings(lie, lam.to_vector(), [&](const std::vector<int>& s) {
        return cone_satisfied(bzl_to_pattern(spec, s));
      });
      std::vector<LittelmannPattern> want;
      for (const auto& s : strings) want.push_back(bzl_to_pattern(spec, s));
      std::sort(want.begin(), want.end());
      CHECK(enumerate_patterns(rs, lam) == want);
    }
  }
}

TEST_CASE("enumeration is sorted, unique, inside the polytope and thread independent") {
  for (const auto& spec : specs()) {
    RootSystem rs(spec);
    Weight lam(spec.rank);
    for (int k = 0; k < spec.rank; ++k) lam[k] = 1 + (k % 2);
    if (weyl_dimension(rs, lam) > 20000) lam = rs.rho();
    EnumerateOptions one;
    const auto a = enumerate_patterns(rs, lam, one);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
    for (const auto& L : a) CHECK(polytope_satisfied(L, lam));
    for (unsigned t : {2u, 3u, 8u}) {
      EnumerateOptions o;
      o.threads = t;
      CHECK(enumerate_patterns(rs, lam, o) == a);
    }
  }
}

TEST_CASE("monotone inclusion in lambda") {
  for (const auto& spec : specs()) {
    RootSystem rs(spec);
    const auto ws = small_weights(rs, {0, 1}, 2000);
    for (const auto& lam : ws) {
      for (int k = 0; k < spec.rank; ++k) {
        Weight bigger = lam;
        bigger[k] += 1;
        if (weyl_dimension(rs, bigger) > 3000) continue;
        const auto small = enumerate_patterns(rs, lam);
        const auto big = enumerate_patterns(rs, bigger);
        CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
      }
    }
  }
}

TEST_CASE("enumeration limit") {
  RootSystem rs({Family::A, 3});
  EnumerateOptions o;
  o.max_patterns = 10;
  CHECK_THROWS_AS(enumerate_patterns(rs, Weight{1, 1, 1}, o), EnumerationLimit);
  o.max_patterns = 64;
  CHECK(enumerate_patterns(rs, Weight{1, 1, 1}, o).size() == 64);
}

TEST_CASE("top rows partition the enumeration") {
  RootSystem rs({Family::A, 2});
  const auto tops = enumerate_top_rows(rs, Weight{1, 0});
  std::size_t total = 0;
  for (const auto& t : tops) total += enumerate_with_top_row(rs, Weight{1, 0}, t).size();
  CHECK(total == 3);
}

TEST_CASE("pattern weights") {
  RootSystem a2({Family::A, 2});
  const Weight lam{1, 1};
  CHECK(weight_of(a2, LittelmannPattern({Family::A, 2}), lam) == lam);
  const auto L = rows({Family::A, 2}, {{1, 0}, {0}});
  CHECK(pattern_weight(L) == std::vector<int>{0, 1});
  CHECK(weight_of(a2, L, lam) == lam - a2.simple_root(1));
  CHECK(pattern_weight(rows({Family::D, 3}, {{0, 1, 0, 0}, {0, 0}})) == std::vector<int>{1, 0, 0});
}

TEST_CASE("bzl strings and text") {
  const std::vector<int> s{4, 5, 6};
  CHECK(bzl_to_pattern({Family::A, 2}, s) == rows({Family::A, 2}, {{5, 6}, {4}}));
  const std::vector<int> t{1, 2, 3, 4};
  CHECK(bzl_to_pattern({Family::B, 2}, t) == rows({Family::B, 2}, {{2, 3, 4}, {1}}));
  CHECK(pattern_to_bzl(rows({Family::B, 2}, {{2, 3, 4}, {1}})) == t);
  CHECK_THROWS_AS(bzl_to_pattern({Family::A, 2}, std::vector<int>{1, 2}), InvalidInput);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(0, 9);
  for (const auto& spec : specs()) {
    for (int k = 0; k < 100; ++k) {
      std::vector<int> x(positive_root_count(spec));
      for (auto& v : x) v = d(rng);
      const auto L = bzl_to_pattern(spec, x);
      CHECK(pattern_to_bzl(L) == x);
      CHECK(parse_pattern(spec, format_pattern(L)) == L);
    }
  }
  CHECK(format_pattern(rows({Family::A, 2}, {{1, 0}, {0}})) == "1,0;0");
  CHECK_THROWS_AS(parse_pattern({Family::A, 2}, "1,0"), InvalidInput);
  CHECK_THROWS_AS(parse_pattern({Family::A, 2}, "1,0;0,1"), InvalidInput);
  CHECK_THROWS_AS(parse_pattern({Family::A, 2}, "1,a;0"), InvalidInput);
}

TEST_CASE("readings") {
  CHECK(frozen_readings() != printed_readings());
  CHECK(to_string(frozen_readings()).find("d_B=2") != std::string::npos);
}
