#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppart/root_data.hpp"

namespace ppart {

/// Slot of a pattern: 1-based row i and linearized column j, i ≤ j.
struct Position {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Row lengths for the family shape (top row first).
std::vector<int> pattern_shape(const CartanSpec& spec);

/// Last column of row i: r (A), 2r−i (B/C), 2r−1−i (D).
int row_last_column(const CartanSpec& spec, int row);

/// Simple root (1-based) that the entry at column j of any row belongs to.
int column_label(const CartanSpec& spec, int col);

/// Mirror column j̄: 2r−j in B/C, 2r−1−j in D. Type A has no bar.
int bar_column(const CartanSpec& spec, int col);

/// Array of nonnegative integers in the family shape. Entries are stored
/// row-major, top row first, left to right.
class LittelmannPattern {
 public:
  LittelmannPattern() = default;
  /// All-zero pattern.
  explicit LittelmannPattern(const CartanSpec& spec);
  static LittelmannPattern from_rows(const CartanSpec& spec, const std::vector<std::vector<int>>& rows);

  const CartanSpec& spec() const { return spec_; }
  int num_rows() const { return static_cast<int>(row_offset_.size()) - 1; }
  int row_length(int row) const;
  bool contains(int row, int col) const;
  bool contains(Position p) const { return contains(p.row, p.col); }

  /// Zero-extended read: 0 outside the shape.
  int a(int row, int col) const;
  /// a(i, j̄).
  int abar(int row, int col) const;
  /// Checked write access; throws InvalidInput outside the shape.
  int& at(int row, int col);
  int at(Position p) const { return a(p.row, p.col); }

  std::span<const int> entries() const { return entries_; }
  std::span<int> mutable_entries() { return entries_; }
  std::vector<int> row(int row) const;
  std::vector<std::vector<int>> rows() const;
  /// All slots, row-major.
  std::vector<Position> positions() const;
  std::size_t flat_index(int row, int col) const;
  bool is_zero() const;

  friend bool operator==(const LittelmannPattern& x, const LittelmannPattern& y) {
    return x.spec_ == y.spec_ && x.entries_ == y.entries_;
  }
  /// Row-major lexicographic order on entries (same shape assumed).
  friend bool operator<(const LittelmannPattern& x, const LittelmannPattern& y) {
    return x.entries_ < y.entries_;
  }

 private:
  CartanSpec spec_{};
  std::vector<int> entries_;
  std::vector<int> row_offset_;
};

/// True iff all entries are nonnegative and every row satisfies the
/// family's cone chain (the two central type-D entries are not compared).
bool cone_satisfied(const LittelmannPattern& L);

/// Choices for the places where the polytope inequalities admit more than
/// one reading. frozen_readings() holds the calibrated values.
struct PolytopeReadings {
  /// Type A: which neighbour column pairs with row i and row i−1.
  enum class ANeighbours { printed, mirrored } a_neighbours = ANeighbours::mirrored;
  /// Factor d in the middle-entry bound of types B and C.
  int d_B = 2;
  int d_C = 1;
  /// Last aggregate in the B/C middle-entry bound: s̄(i−1,r) or s(i−1,r).
  enum class MiddleTail { sbar, s } middle_tail = MiddleTail::s;
  /// Type D central aggregate: the barred sum Σ(a_{k,r−1}+ā_{k,r}), or the
  /// column sum Σ(a_{k,r−1}+a_{k,r}).
  enum class DAggregate { printed, column_sum } d_aggregate = DAggregate::column_sum;
  /// Type D central entries: printed pairs a_{i,r−1} with m_2; swapped pairs
  /// it with m_1 (the root that column carries).
  enum class DCentral { printed, swapped } d_central = DCentral::swapped;

  friend bool operator==(const PolytopeReadings&, const PolytopeReadings&) = default;
};

PolytopeReadings frozen_readings();
PolytopeReadings printed_readings();
std::string to_string(const PolytopeReadings& r);

/// The aggregates s(i,j), s̄(i,j), t(i,r−1), t(i,r). Out-of-range indices
/// read 0; s and s̄ are extended through s̄(i,j) = s(i,j̄).
class PatternAggregates {
 public:
  PatternAggregates(const LittelmannPattern& L, PolytopeReadings readings = frozen_readings());
  int s(int i, int j) const;
  int sbar(int i, int j) const;
  /// t(i, r−1) and t(i, r) in type D.
  int t(int i, int col) const;

 private:
  const LittelmannPattern* L_;
  PolytopeReadings rd_;
};

/// Right-hand side of the unique polytope inequality bounding the entry at p.
int polytope_upper_bound(const LittelmannPattern& L, const Weight& lam, Position p,
                         const PolytopeReadings& readings = frozen_readings());

/// Same bound computed from the long word instead of the aggregates:
/// <λ − Σ a·α_label over entries applied before p, α_k^∨>, where entries are
/// applied top row first, each row right to left.
int word_upper_bound(const RootSystem& rs, const LittelmannPattern& L, const Weight& lam, Position p);

/// Cone chain holds and every entry is at most its upper bound.
bool polytope_satisfied(const LittelmannPattern& L, const Weight& lam,
                        const PolytopeReadings& readings = frozen_readings());

/// The multiplicity vector s_1..s_r (0-based storage): s_k sums the entries
/// whose column carries root k.
std::vector<int> pattern_weight(const LittelmannPattern& L);

/// λ − Σ s_k α_k.
Weight weight_of(const RootSystem& rs, const LittelmannPattern& L, const Weight& lam);

/// BZL string ↔ pattern. The string lists the bottom row first, each row
/// left to right.
LittelmannPattern bzl_to_pattern(const CartanSpec& spec, std::span<const int> bzl);
std::vector<int> pattern_to_bzl(const LittelmannPattern& L);

/// Fixture text: rows separated by ';', entries by ',', e.g. "1,0;0".
std::string format_pattern(const LittelmannPattern& L);
LittelmannPattern parse_pattern(const CartanSpec& spec, std::string_view text);

class EnumerationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
  PolytopeReadings readings = frozen_readings();
  /// 0 = hardware concurrency (or PPART_THREADS when set by the caller).
  unsigned threads = 1;
  /// Throw EnumerationLimit once more patterns than this are produced.
  std::size_t max_patterns = SIZE_MAX;
};

/// All patterns of the crystal of highest weight lam, sorted row-major
/// lexicographically. Work is split across top-row groups.
std::vector<LittelmannPattern> enumerate_patterns(const RootSystem& rs, const Weight& lam,
                                                  const EnumerateOptions& opts = {});

/// The admissible top rows for lam (each as a full pattern with zeros below).
std::vector<LittelmannPattern> enumerate_top_rows(const RootSystem& rs, const Weight& lam,
                                                  const PolytopeReadings& readings = frozen_readings());

/// Patterns whose top row equals that of `top`, sorted.
std::vector<LittelmannPattern> enumerate_with_top_row(const RootSystem& rs, const Weight& lam,
                                                      const LittelmannPattern& top,
                                                      const EnumerateOptions& opts = {});

/// Worker count from an explicit request (0 = automatic).
unsigned resolve_threads(unsigned requested);

}  // namespace ppart
