#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppart/weight.hpp"

namespace ppart {

class WeightPolynomial;

enum class Family { A, B, C, D };

char family_letter(Family f);
Family parse_family(std::string_view text);

struct CartanSpec {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidInput unless rank fits the family (B/C need 2, D needs 3).
  void validate() const;
  friend bool operator==(const CartanSpec&, const CartanSpec&) = default;
};

std::string to_string(const CartanSpec& spec);

/// Minimum rank accepted for a family.
int min_rank(Family f);

/// Reduced word as a list of simple-root indices, 1-based like the notation.
using WeylWord = std::vector<int>;

/// Cartan data in Littelmann's numbering.
///
/// cartan(i, j) = <α_i, α_j^∨>, so α_i = Σ_j cartan(i, j) ϖ_j. In type B
/// α_1 is short, in type C α_1 is long, and in type D the fork ends are
/// α_1 and α_2 (both attached to α_3).
class RootSystem {
 public:
  explicit RootSystem(CartanSpec spec);

  const CartanSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }
  int rank() const { return spec_.rank; }

  /// 0-based indices.
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank() + j)]; }

  /// α_k in the fundamental-weight basis (0-based k).
  const Weight& simple_root(int k) const { return simple_roots_[static_cast<std::size_t>(k)]; }
  Weight fundamental_weight(int k) const;
  Weight rho() const;

  /// |α_k|², normalized so the shortest simple root has squared length 1.
  int root_length(int k) const { return lengths_[static_cast<std::size_t>(k)]; }

  /// Positive roots in the fundamental-weight basis, sorted by height then
  /// lexicographically on their simple-root coordinates.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  /// Simple-root coordinates of positive_roots()[i] (nonnegative integers).
  const std::vector<std::vector<int>>& positive_root_coords() const { return positive_coords_; }

  /// Coordinates of w in the simple-root basis.
  std::vector<Rational> root_coordinates(const Weight& w) const;
  /// Same, but throws InvalidInput if w is not in the root lattice.
  std::vector<int> integral_root_coordinates(const Weight& w) const;
  /// Σ c_k α_k for integer coefficients.
  Weight from_root_coordinates(std::span<const int> c) const;

  /// s_k(w) = w − <w, α_k^∨> α_k  (0-based k).
  Weight reflect(const Weight& w, int k) const;
  Weight apply_word(const Weight& w, const WeylWord& word) const;

  /// det(C) · height(w); integral for every weight and linear in w.
  std::int64_t scaled_height(const Weight& w) const;

  Weight dominant_representative(const Weight& w) const;

  /// True iff mu lies in the convex hull of the Weyl orbit of the dominant
  /// weight lam.
  bool in_orbit_hull(const Weight& lam, const Weight& mu) const;

  /// (u, v) for the invariant form with (α_k, α_k) = root_length(k).
  Rational inner_product(const Weight& u, const Weight& v) const;

  /// Orbit of w with the BFS depth of each point (depth = length of the
  /// shortest element reaching it). Ordered by discovery.
  std::vector<std::pair<Weight, int>> orbit(const Weight& w) const;

  std::int64_t weyl_group_order() const;

 private:
  CartanSpec spec_;
  std::vector<int> cartan_;
  std::vector<int> lengths_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<int>> positive_coords_;
  // Inverse of the transpose of the Cartan matrix: root coords = inv_t_ · m.
  std::vector<Rational> inv_t_;
  std::int64_t det_ = 1;
  std::vector<std::int64_t> height_coef_;
};

WeylWord nice_long_word(const CartanSpec& spec);
std::size_t positive_root_count(const CartanSpec& spec);

/// Weyl dimension formula; throws InvalidInput for non-dominant lam.
std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lam);

/// χ_λ as A_{λ+ρ} / A_ρ; throws InvalidInput for non-dominant lam.
WeightPolynomial weyl_character(const RootSystem& rs, const Weight& lam);

/// Length of the Weyl group element obtained by multiplying the letters,
/// measured as the number of positive roots it sends negative.
int evaluated_length(const RootSystem& rs, const WeylWord& word);

}  // namespace ppart
