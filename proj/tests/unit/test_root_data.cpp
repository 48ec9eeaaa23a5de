#include <set>

#include "doctest.h"
#include "freudenthal.hpp"
#include "ppart/root_data.hpp"
#include "ppart/weight_polynomial.hpp"

using namespace ppart;

namespace {

char letter(Family f) { return family_letter(f); }

std::vector<CartanSpec> all_specs() {
  std::vector<CartanSpec> out;
  for (int r = 1; r <= 5; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= 4; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= 4; ++r) out.push_back({Family::C, r});
  for (int r = 3; r <= 5; ++r) out.push_back({Family::D, r});
  return out;
}

}  // namespace

TEST_CASE("weights parse and print") {
  CHECK(parse_weight("1,0,2") == Weight{1, 0, 2});
  CHECK(parse_weight(" 3 , 4 ") == Weight{3, 4});
  CHECK(to_string(Weight{1, -2}) == "(1,-2)");
  CHECK_THROWS_AS(parse_weight(""), InvalidInput);
  CHECK_THROWS_AS(parse_weight("1,,2"), InvalidInput);
  CHECK_THROWS_AS(parse_weight("1,x"), InvalidInput);
  CHECK_THROWS_AS(parse_weight("1,2,3,4,5,6,7,8,9"), InvalidInput);
  CHECK(Weight{1, 0}.dominant());
  CHECK_FALSE(Weight{1, 0}.strongly_dominant());
  CHECK_FALSE(Weight{1, -1}.dominant());
  CHECK(Weight{1, 2, 3}.truncated(2) == Weight{1, 2});
}

TEST_CASE("spec validation") {
  CHECK_NOTHROW((CartanSpec{Family::A, 1}.validate()));
  CHECK_THROWS_AS((CartanSpec{Family::A, 0}.validate()), InvalidInput);
  CHECK_THROWS_AS((CartanSpec{Family::B, 1}.validate()), InvalidInput);
  CHECK_THROWS_AS((CartanSpec{Family::C, 1}.validate()), InvalidInput);
  CHECK_THROWS_AS((CartanSpec{Family::D, 2}.validate()), InvalidInput);
  CHECK_THROWS_AS((CartanSpec{Family::A, 9}.validate()), InvalidInput);
  CHECK_THROWS_AS((RootSystem(CartanSpec{Family::D, 2})), InvalidInput);
  CHECK(parse_family("c") == Family::C);
  CHECK_THROWS_AS(parse_family("E"), InvalidInput);
  CHECK(to_string(CartanSpec{Family::B, 3}) == "B3");
}

TEST_CASE("small root systems") {
  RootSystem a1({Family::A, 1});
  CHECK(a1.positive_roots().size() == 1);
  CHECK(a1.rho() == Weight{1});
  CHECK(a1.simple_root(0) == Weight{2});

  CHECK(RootSystem({Family::A, 3}).positive_roots().size() == 6);

  RootSystem d4({Family::D, 4});
  CHECK(d4.positive_roots().size() == 12);
  CHECK(d4.cartan(0, 1) == 0);
  CHECK(d4.cartan(1, 0) == 0);
  CHECK(d4.cartan(0, 2) == -1);

  RootSystem b2({Family::B, 2});
  CHECK(b2.cartan(0, 1) == -1);
  CHECK(b2.cartan(1, 0) == -2);
  CHECK(b2.root_length(0) == 1);
  CHECK(b2.root_length(1) == 2);
  RootSystem c2({Family::C, 2});
  CHECK(c2.root_length(0) == 2);
  CHECK(c2.root_length(1) == 1);
}

TEST_CASE("positive roots agree with the closure oracle") {
  for (const auto& spec : all_specs()) {
    CAPTURE(to_string(spec));
    RootSystem rs(spec);
    auto L = oracle::make_lie(letter(spec.family), spec.rank);
    for (int i = 0; i < spec.rank; ++i) {
      for (int j = 0; j < spec.rank; ++j) CHECK(rs.cartan(i, j) == L.C[i][j]);
      CHECK(rs.root_length(i) == L.len[i]);
    }
    std::set<std::vector<int>> mine(rs.positive_root_coords().begin(), rs.positive_root_coords().end());
    std::set<std::vector<int>> theirs(L.pos.begin(), L.pos.end());
    CHECK(mine == theirs);
    CHECK(rs.positive_roots().size() == positive_root_count(spec));
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      CHECK(rs.from_root_coordinates(rs.positive_root_coords()[k]) == rs.positive_roots()[k]);
    }
  }
}

TEST_CASE("nice long words") {
  CHECK(nice_long_word({Family::A, 3}) == WeylWord{1, 2, 1, 3, 2, 1});
  CHECK(nice_long_word({Family::B, 2}) == WeylWord{1, 2, 1, 2});
  CHECK(nice_long_word({Family::C, 2}) == WeylWord{1, 2, 1, 2});
  CHECK(nice_long_word({Family::D, 3}) == WeylWord{1, 2, 3, 1, 2, 3});
  CHECK(nice_long_word({Family::D, 4}) == WeylWord{1, 2, 3, 1, 2, 3, 4, 3, 1, 2, 3, 4});
  for (const auto& spec : all_specs()) {
    CAPTURE(to_string(spec));
    RootSystem rs(spec);
    const auto w = nice_long_word(spec);
    CHECK(w.size() == positive_root_count(spec));
    // reduced: the evaluated length is the word length, i.e. the longest element
    CHECK(evaluated_length(rs, w) == static_cast<int>(w.size()));
    if (spec.rank > min_rank(spec.family)) {
      const auto shorter = nice_long_word({spec.family, spec.rank - 1});
      CHECK(std::equal(shorter.begin(), shorter.end(), w.begin()));
    }
    // the longest element sends rho to -rho
    CHECK(rs.apply_word(rs.rho(), w) == -rs.rho());
  }
}

TEST_CASE("reflections and orbits") {
  RootSystem rs({Family::A, 2});
  CHECK(rs.reflect(Weight{1, 0}, 0) == Weight{-1, 1});
  CHECK(rs.reflect(rs.reflect(Weight{3, -1}, 1), 1) == Weight{3, -1});
  CHECK(rs.orbit(Weight{1, 1}).size() == 6);
  CHECK(rs.orbit(Weight{1, 0}).size() == 3);
  CHECK(rs.weyl_group_order() == 6);
  CHECK(RootSystem({Family::B, 3}).weyl_group_order() == 48);
  CHECK(RootSystem({Family::D, 4}).weyl_group_order() == 192);
  CHECK(rs.dominant_representative(Weight{-1, 2}) == Weight{1, 1});
  CHECK(rs.in_orbit_hull(Weight{1, 1}, Weight{0, 0}));
  CHECK(rs.in_orbit_hull(Weight{1, 0}, Weight{0, 0}));
  CHECK_FALSE(rs.in_orbit_hull(Weight{1, 0}, Weight{1, 1}));
  CHECK_FALSE(rs.in_orbit_hull(Weight{1, 1}, Weight{3, 0}));
}

TEST_CASE("root coordinates") {
  RootSystem rs({Family::A, 2});
  auto c = rs.root_coordinates(Weight{1, 0});
  CHECK(c[0] == Rational(2, 3));
  CHECK(c[1] == Rational(1, 3));
  CHECK(rs.integral_root_coordinates(Weight{1, 1}) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(rs.integral_root_coordinates(Weight{1, 0}), InvalidInput);
}

TEST_CASE("weyl dimension") {
  CHECK(weyl_dimension(RootSystem({Family::A, 3}), Weight{0, 0, 0}) == 1);
  CHECK(weyl_dimension(RootSystem({Family::A, 2}), Weight{1, 0}) == 3);
  CHECK(weyl_dimension(RootSystem({Family::B, 2}), Weight{1, 1}) == 16);
  // node 1 is the short (B) or long (C) end
  CHECK(weyl_dimension(RootSystem({Family::B, 3}), Weight{1, 0, 0}) == 8);
  CHECK(weyl_dimension(RootSystem({Family::B, 3}), Weight{0, 0, 1}) == 7);
  CHECK(weyl_dimension(RootSystem({Family::C, 3}), Weight{0, 0, 1}) == 6);
  CHECK(weyl_dimension(RootSystem({Family::C, 3}), Weight{1, 0, 0}) == 14);
  CHECK(weyl_dimension(RootSystem({Family::D, 4}), Weight{1, 0, 0, 0}) == 8);
  CHECK(weyl_dimension(RootSystem({Family::D, 4}), Weight{0, 0, 1, 0}) == 28);
  CHECK(weyl_dimension(RootSystem({Family::D, 4}), Weight{1, 1, 1, 1}) == 4096);
}

TEST_CASE("weyl character") {
  RootSystem a1({Family::A, 1});
  auto chi0 = weyl_character(a1, Weight{0});
  CHECK(chi0.size() == 1);
  CHECK(chi0.coefficient(Weight{0}) == CoeffElement::one());

  auto chi2 = weyl_character(a1, Weight{2});
  CHECK(chi2.size() == 3);
  for (int m : {2, 0, -2}) CHECK(chi2.coefficient(Weight{m}) == CoeffElement::one());

  RootSystem a2({Family::A, 2});
  auto adj = weyl_character(a2, Weight{1, 1});
  CHECK(adj.size() == 7);
  CHECK(adj.coefficient(Weight{0, 0}) == CoeffElement::constant(2));
  for (const auto& [w, c] : adj.terms())
    if (!w.is_zero()) CHECK(c == CoeffElement::one());
}

TEST_CASE("weyl character agrees with Freudenthal") {
  for (const auto& spec : all_specs()) {
    if (spec.rank > 4) continue;
    RootSystem rs(spec);
    auto L = oracle::make_lie(letter(spec.family), spec.rank);
    std::vector<std::vector<int>> lams;
    for (int k = 0; k < spec.rank; ++k) {
      std::vector<int> m(spec.rank, 0);
      m[k] = 1;
      lams.push_back(m);
    }
    lams.push_back(std::vector<int>(spec.rank, 1));
    std::vector<int> two(spec.rank, 0);
    two[0] = 2;
    lams.push_back(two);
    for (const auto& m : lams) {
      const Weight lam = Weight::from_span(m);
      if (weyl_dimension(rs, lam) > 5000) continue;
      CAPTURE(to_string(spec));
      CAPTURE(to_string(lam));
      const auto chi = weyl_character(rs, lam);
      const auto ref = oracle::freudenthal(L, m);
      CHECK(chi.size() == ref.size());
      long long dim = 0;
      for (const auto& [w, mult] : ref) {
        CHECK(chi.coefficient(Weight::from_span(w)) == CoeffElement::constant(mult));
        dim += mult;
      }
      CHECK(dim == weyl_dimension(rs, lam));
      CHECK(chi.total() == CoeffElement::constant(dim));
    }
  }
}

TEST_CASE("characters are Weyl invariant") {
  for (const auto& spec : all_specs()) {
    if (spec.rank > 4) continue;
    RootSystem rs(spec);
    const auto chi = weyl_character(rs, rs.rho());
    for (int k = 0; k < spec.rank; ++k) {
      for (const auto& [w, c] : chi.terms()) CHECK(chi.coefficient(rs.reflect(w, k)) == c);
    }
  }
}
