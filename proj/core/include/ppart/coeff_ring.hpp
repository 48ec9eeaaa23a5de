#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ppart {

/// Formal Gauss sum g_t of residue class c modulo n, normalized so that
/// g_t(a) = q^{a-1} · GaussSymbol{t, n, a mod n}.
struct GaussSymbol {
  int t = 1;
  int n = 1;
  int c = 0;
  friend auto operator<=>(const GaussSymbol&, const GaussSymbol&) = default;
};

struct GaussPower {
  GaussSymbol symbol;
  int pow = 1;
  friend auto operator<=>(const GaussPower&, const GaussPower&) = default;
};

/// coeff · q^q_exp · Π symbol^pow. `gauss` is sorted by symbol, no zero powers.
struct Monomial {
  std::int64_t coeff = 0;
  int q_exp = 0;
  std::vector<GaussPower> gauss;

  /// Ordering and equality of the non-scalar part only.
  friend bool same_key(const Monomial& a, const Monomial& b) {
    return a.q_exp == b.q_exp && a.gauss == b.gauss;
  }
  friend bool key_less(const Monomial& a, const Monomial& b) {
    if (a.q_exp != b.q_exp) return a.q_exp < b.q_exp;
    return a.gauss < b.gauss;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Element of Z[q, q^{-1}][g-symbols]: a canonical sparse sum of monomials.
/// Canonical means sorted by (q exponent, gauss keys), merged, zero-free, so
/// structural equality is ring equality.
///
/// Integer coefficients are 64-bit with overflow checks (std::overflow_error).
class CoeffElement {
 public:
  CoeffElement() = default;
  static CoeffElement zero() { return {}; }
  static CoeffElement one() { return constant(1); }
  static CoeffElement constant(std::int64_t k);
  static CoeffElement q_power(int e, std::int64_t k = 1);
  static CoeffElement symbol(GaussSymbol s, int q_exp = 0);
  static CoeffElement from_monomials(std::vector<Monomial> monomials);

  const std::vector<Monomial>& monomials() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for an integer constant (possibly zero).
  bool is_constant() const;
  /// The integer value when is_constant().
  std::int64_t constant_value() const;
  /// True for a single monomial (possibly with symbols).
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_symbols() const;

  CoeffElement& operator+=(const CoeffElement& o);
  CoeffElement& operator-=(const CoeffElement& o);
  CoeffElement& operator*=(const CoeffElement& o);
  friend CoeffElement operator+(CoeffElement a, const CoeffElement& b) { return a += b; }
  friend CoeffElement operator-(CoeffElement a, const CoeffElement& b) { return a -= b; }
  friend CoeffElement operator*(const CoeffElement& a, const CoeffElement& b);
  friend CoeffElement operator-(const CoeffElement& a);

  /// Multiply by q^e.
  CoeffElement shifted_q(int e) const;
  /// Multiply by an integer.
  CoeffElement scaled(std::int64_t k) const;

  /// Laurent polynomial in q for symbol-free elements: (min exponent,
  /// coefficients from that exponent up). Throws if symbols are present.
  std::pair<int, std::vector<std::int64_t>> as_laurent() const;

  /// Sum of monomials with q exponent exactly e.
  CoeffElement q_degree_part(int e) const;

  friend bool operator==(const CoeffElement&, const CoeffElement&) = default;

 private:
  void canonicalize();
  std::vector<Monomial> terms_;
};

/// Replace every symbol with modulus 1 by −1. Throws InvalidInput if a
/// symbol with n > 1 is present.
CoeffElement specialize_n1(const CoeffElement& c);

/// Human-readable form, e.g. "q^-1*g2[1]^2 - 3*q + 1".
std::string to_string(const CoeffElement& c);

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace ppart
