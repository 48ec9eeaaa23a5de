#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ppart/coeff_ring.hpp"
#include "ppart/weight.hpp"

namespace ppart {

class RootSystem;

/// Total order on weights compatible with addition: scaled height first,
/// then coordinates lexicographically. `greater(a, b)` means a comes before
/// b in output order and a leads in division.
class WeightOrder {
 public:
  explicit WeightOrder(const RootSystem& rs);
  bool greater(const Weight& a, const Weight& b) const;
  std::int64_t height(const Weight& w) const;

 private:
  std::vector<std::int64_t> coef_;
};

/// Finite sum Σ c_w x^w with c_w in the coefficient ring. Zero coefficients
/// are never stored.
class WeightPolynomial {
 public:
  using Map = std::map<Weight, CoeffElement>;

  WeightPolynomial() = default;
  static WeightPolynomial monomial(const Weight& w, CoeffElement c = CoeffElement::one());

  void add_term(const Weight& w, const CoeffElement& c);
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient at w (zero if absent).
  CoeffElement coefficient(const Weight& w) const;

  WeightPolynomial& operator+=(const WeightPolynomial& o);
  WeightPolynomial& operator-=(const WeightPolynomial& o);
  friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) { return a += b; }
  friend WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) { return a -= b; }
  friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b);

  /// Multiply every coefficient by c and every weight by x^shift.
  WeightPolynomial scaled(const CoeffElement& c, const Weight& shift) const;
  /// Apply f to every coefficient (zero results are dropped).
  template <class F>
  WeightPolynomial map_coefficients(F&& f) const {
    WeightPolynomial out;
    for (const auto& [w, c] : terms_) out.add_term(w, f(w, c));
    return out;
  }

  /// Sum of all coefficients (the value at x = 1).
  CoeffElement total() const;

  /// Terms in output order (descending under `order`).
  std::vector<std::pair<Weight, CoeffElement>> sorted_terms(const WeightOrder& order) const;
  std::optional<Weight> leading_weight(const WeightOrder& order) const;

  friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;

 private:
  Map terms_;
};

struct DivisionResult {
  bool exact = false;
  WeightPolynomial quotient;
  /// Nonzero remainder witnessing failure (empty when exact).
  WeightPolynomial remainder;
};

/// Exact division by leading-term elimination. The divisor's leading
/// coefficient must be the constant ±1.
DivisionResult exact_divide(const WeightPolynomial& num, const WeightPolynomial& den,
                            const WeightOrder& order);

}  // namespace ppart
