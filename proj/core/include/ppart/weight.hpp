#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ppart {

/// Exact rationals for root-basis conversions and the dimension formula.
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when caller-supplied input violates a documented precondition
/// (bad family/rank, non-dominant weight where one is required, malformed
/// pattern text, ...). The CLI maps this to exit status 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxRank = 8;

/// A point of the weight lattice, stored by its coordinates in the
/// fundamental-weight basis: w = m_1 ϖ_1 + ... + m_r ϖ_r.
///
/// Coordinates are 0-based in code (coords()[0] is m_1). The defaulted
/// ordering is lexicographic and is only used for keyed containers; the
/// dominance-compatible order lives in WeightOrder.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank);
  Weight(std::initializer_list<int> coords);
  static Weight from_span(std::span<const int> coords);

  int rank() const { return rank_; }
  int operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  int& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  std::span<const int> coords() const { return {c_.data(), static_cast<std::size_t>(rank_)}; }
  std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + rank_}; }

  bool is_zero() const;
  bool dominant() const;
  bool strongly_dominant() const;

  /// The first `rank` coordinates, i.e. the weight seen by the Levi
  /// subsystem generated by α_1..α_rank.
  Weight truncated(int rank) const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(int s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::array<int, kMaxRank> c_{};
  int rank_ = 0;
};

std::string to_string(const Weight& w);

/// Parses "1,0,2" into a weight; throws InvalidInput on malformed text.
Weight parse_weight(std::string_view text);

}  // namespace ppart
