#include "ppart/patterns.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <mutex>
#include <sstream>
#include <thread>

namespace ppart {

std::vector<int> pattern_shape(const CartanSpec& spec) {
  spec.validate();
  const int r = spec.rank;
  std::vector<int> out;
  switch (spec.family) {
    case Family::A:
      for (int i = 1; i <= r; ++i) out.push_back(r - i + 1);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= r; ++i) out.push_back(2 * (r - i) + 1);
      break;
    case Family::D:
      for (int i = 1; i <= r - 1; ++i) out.push_back(2 * (r - i));
      break;
  }
  return out;
}

int row_last_column(const CartanSpec& spec, int row) {
  const int r = spec.rank;
  switch (spec.family) {
    case Family::A: return r;
    case Family::B:
    case Family::C: return 2 * r - row;
    case Family::D: return 2 * r - 1 - row;
  }
  return r;
}

int column_label(const CartanSpec& spec, int col) {
  const int r = spec.rank;
  switch (spec.family) {
    case Family::A: return r - col + 1;
    case Family::B:
    case Family::C: return col <= r ? r - col + 1 : col - r + 1;
    case Family::D:
      if (col <= r - 2) return r - col + 1;
      if (col == r - 1) return 1;
      if (col == r) return 2;
      return col - r + 2;
  }
  return 1;
}

int bar_column(const CartanSpec& spec, int col) {
  switch (spec.family) {
    case Family::A: return col;
    case Family::B:
    case Family::C: return 2 * spec.rank - col;
    case Family::D: return 2 * spec.rank - 1 - col;
  }
  return col;
}

LittelmannPattern::LittelmannPattern(const CartanSpec& spec) : spec_(spec) {
  auto shape = pattern_shape(spec);
  row_offset_.push_back(0);
  for (int len : shape) row_offset_.push_back(row_offset_.back() + len);
  entries_.assign(static_cast<std::size_t>(row_offset_.back()), 0);
}

LittelmannPattern LittelmannPattern::from_rows(const CartanSpec& spec,
                                               const std::vector<std::vector<int>>& rows) {
  LittelmannPattern L(spec);
  if (static_cast<int>(rows.size()) != L.num_rows()) {
    throw InvalidInput(to_string(spec) + " pattern needs " + std::to_string(L.num_rows()) +
                       " rows, got " + std::to_string(rows.size()));
  }
  for (int i = 1; i <= L.num_rows(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != L.row_length(i)) {
      throw InvalidInput(to_string(spec) + " row " + std::to_string(i) + " needs " +
                         std::to_string(L.row_length(i)) + " entries, got " + std::to_string(row.size()));
    }
    for (std::size_t k = 0; k < row.size(); ++k) L.at(i, i + static_cast<int>(k)) = row[k];
  }
  return L;
}

int LittelmannPattern::row_length(int row) const {
  return row_offset_[static_cast<std::size_t>(row)] - row_offset_[static_cast<std::size_t>(row - 1)];
}

bool LittelmannPattern::contains(int row, int col) const {
  if (row < 1 || row > num_rows()) return false;
  return col >= row && col < row + row_length(row);
}

std::size_t LittelmannPattern::flat_index(int row, int col) const {
  return static_cast<std::size_t>(row_offset_[static_cast<std::size_t>(row - 1)] + (col - row));
}

int LittelmannPattern::a(int row, int col) const {
  return contains(row, col) ? entries_[flat_index(row, col)] : 0;
}

int LittelmannPattern::abar(int row, int col) const { return a(row, bar_column(spec_, col)); }

int& LittelmannPattern::at(int row, int col) {
  if (!contains(row, col)) {
    throw InvalidInput("position (" + std::to_string(row) + "," + std::to_string(col) +
                       ") is outside the " + to_string(spec_) + " shape");
  }
  return entries_[flat_index(row, col)];
}

std::vector<int> LittelmannPattern::row(int row) const {
  auto b = entries_.begin() + row_offset_[static_cast<std::size_t>(row - 1)];
  return {b, b + row_length(row)};
}

std::vector<std::vector<int>> LittelmannPattern::rows() const {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= num_rows(); ++i) out.push_back(row(i));
  return out;
}

std::vector<Position> LittelmannPattern::positions() const {
  std::vector<Position> out;
  for (int i = 1; i <= num_rows(); ++i)
    for (int j = i; j < i + row_length(i); ++j) out.push_back({i, j});
  return out;
}

bool LittelmannPattern::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

bool cone_satisfied(const LittelmannPattern& L) {
  const auto& spec = L.spec();
  const int r = spec.rank;
  for (int x : L.entries())
    if (x < 0) return false;
  for (int i = 1; i <= L.num_rows(); ++i) {
    const int last = row_last_column(spec, i);
    for (int j = i; j < last; ++j) {
      int x = L.a(i, j), y = L.a(i, j + 1);
      switch (spec.family) {
        case Family::A:
        case Family::C:
          if (x < y) return false;
          break;
        case Family::B:
          if (j + 1 == r) {
            if (2 * x < y) return false;
          } else if (j == r) {
            if (x < 2 * y) return false;
          } else if (x < y) {
            return false;
          }
          break;
        case Family::D:
          if (j == r - 2) {
            if (x < y || x < L.a(i, r)) return false;
          } else if (j == r - 1) {
            // central pair: no mutual constraint, but both dominate a_{r+1}
            if (last >= r + 1 && (x < L.a(i, r + 1) || L.a(i, r) < L.a(i, r + 1))) return false;
          } else if (j == r) {
            // handled with j = r − 1
          } else if (x < y) {
            return false;
          }
          break;
      }
    }
  }
  return true;
}

PolytopeReadings frozen_readings() { return PolytopeReadings{}; }

PolytopeReadings printed_readings() {
  PolytopeReadings p;
  p.a_neighbours = PolytopeReadings::ANeighbours::printed;
  p.d_B = 2;
  p.d_C = 2;
  p.middle_tail = PolytopeReadings::MiddleTail::sbar;
  p.d_aggregate = PolytopeReadings::DAggregate::printed;
  p.d_central = PolytopeReadings::DCentral::printed;
  return p;
}

std::string to_string(const PolytopeReadings& r) {
  std::ostringstream os;
  os << "a_neighbours=" << (r.a_neighbours == PolytopeReadings::ANeighbours::mirrored ? "mirrored" : "printed")
     << " d_B=" << r.d_B << " d_C=" << r.d_C
     << " middle_tail=" << (r.middle_tail == PolytopeReadings::MiddleTail::s ? "s" : "sbar")
     << " d_aggregate=" << (r.d_aggregate == PolytopeReadings::DAggregate::column_sum ? "column_sum" : "printed")
     << " d_central=" << (r.d_central == PolytopeReadings::DCentral::swapped ? "swapped" : "printed");
  return os.str();
}

PatternAggregates::PatternAggregates(const LittelmannPattern& L, PolytopeReadings readings)
    : L_(&L), rd_(readings) {}

int PatternAggregates::s(int i, int j) const {
  const LittelmannPattern& L = *L_;
  const auto& spec = L.spec();
  const int r = spec.rank;
  if (i <= 0 || j <= 0) return 0;
  i = std::min(i, L.num_rows());
  int total = 0;
  switch (spec.family) {
    case Family::A:
      for (int k = 1; k <= i; ++k) total += L.a(k, j);
      return total;
    case Family::B:
    case Family::C:
      if (j > r) return sbar(i, bar_column(spec, j));
      if (j <= r - 1) {
        for (int k = 1; k <= i; ++k) total += L.a(k, j) + L.abar(k, j);
      } else {
        const int f = spec.family == Family::B ? 1 : 2;
        for (int k = 1; k <= i; ++k) total += f * L.a(k, r);
      }
      return total;
    case Family::D:
      if (j > r) return sbar(i, bar_column(spec, j));
      if (j <= r - 2) {
        for (int k = 1; k <= i; ++k) total += L.a(k, j) + L.abar(k, j);
      } else if (rd_.d_aggregate == PolytopeReadings::DAggregate::column_sum) {
        for (int k = 1; k <= i; ++k) total += L.a(k, r - 1) + L.a(k, r);
      } else {
        for (int k = 1; k <= i; ++k) total += L.a(k, r - 1) + L.abar(k, r);
      }
      return total;
  }
  return total;
}

int PatternAggregates::sbar(int i, int j) const {
  const LittelmannPattern& L = *L_;
  const auto& spec = L.spec();
  const int r = spec.rank;
  if (i <= 0 || j <= 0) return 0;
  switch (spec.family) {
    case Family::A:
      return s(i, j);
    case Family::B:
      if (j == r) return L.abar(i, j) + 2 * s(i - 1, j);
      if (j > r) return s(i, bar_column(spec, j));
      return L.abar(i, j) + s(i - 1, j);
    case Family::C:
      if (j > r) return s(i, bar_column(spec, j));
      return L.abar(i, j) + s(i - 1, j);
    case Family::D:
      if (j == r - 1 || j == r) return s(i, j);
      if (j > r) return s(i, bar_column(spec, j));
      return L.abar(i, j) + s(i - 1, j);
  }
  return 0;
}

int PatternAggregates::t(int i, int col) const {
  int total = 0;
  for (int k = 1; k <= std::min(i, L_->num_rows()); ++k) total += L_->a(k, col);
  return total;
}

int polytope_upper_bound(const LittelmannPattern& L, const Weight& lam, Position p,
                         const PolytopeReadings& rd) {
  const auto& spec = L.spec();
  const int r = spec.rank;
  if (lam.rank() != r) throw InvalidInput("weight rank does not match the pattern");
  if (!L.contains(p)) {
    throw InvalidInput("position (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                       ") is not an entry of a " + to_string(spec) + " pattern");
  }
  PatternAggregates ag(L, rd);
  auto m = [&](int k) { return lam[k - 1]; };
  auto s = [&](int i, int j) { return ag.s(i, j); };
  auto sb = [&](int i, int j) { return ag.sbar(i, j); };
  const int i = p.row;
  const int j = p.col;

  switch (spec.family) {
    case Family::A:
      if (rd.a_neighbours == PolytopeReadings::ANeighbours::mirrored) {
        return m(r - j + 1) + s(i, j + 1) - 2 * s(i - 1, j) + s(i - 1, j - 1);
      }
      return m(r - j + 1) + s(i, j - 1) - 2 * s(i - 1, j) + s(i - 1, j + 1);
    case Family::B:
    case Family::C: {
      if (j < r) return m(r - j + 1) + sb(i, j - 1) - 2 * sb(i, j) + s(i, j + 1);
      if (j == r) {
        const int d = spec.family == Family::B ? rd.d_B : rd.d_C;
        const int tail = rd.middle_tail == PolytopeReadings::MiddleTail::s ? s(i - 1, r) : sb(i - 1, r);
        return m(1) + d * sb(i, r - 1) - d * tail;
      }
      const int jb = bar_column(spec, j);
      return m(r - jb + 1) + sb(i, jb - 1) - 2 * s(i - 1, jb) + s(i - 1, jb + 1);
    }
    case Family::D: {
      const bool swapped = rd.d_central == PolytopeReadings::DCentral::swapped;
      if (j <= r - 2) return m(r - j + 1) + s(i, j + 1) - 2 * sb(i, j) + sb(i, j - 1);
      if (j == r - 1) return m(swapped ? 1 : 2) + sb(i, r - 2) - 2 * ag.t(i - 1, r - 1);
      if (j == r) return m(swapped ? 2 : 1) + sb(i, r - 2) - 2 * ag.t(i - 1, r);
      const int jb = bar_column(spec, j);
      return m(r - jb + 1) + sb(i, jb - 1) - 2 * s(i - 1, jb) + s(i - 1, jb + 1);
    }
  }
  return 0;
}

int word_upper_bound(const RootSystem& rs, const LittelmannPattern& L, const Weight& lam, Position p) {
  if (!L.contains(p)) throw InvalidInput("word_upper_bound: position outside the shape");
  const auto& spec = L.spec();
  const int k = column_label(spec, p.col) - 1;
  int v = lam[k];
  for (int i = 1; i <= p.row; ++i) {
    const int stop = i == p.row ? p.col : i - 1;
    for (int j = row_last_column(spec, i); j > stop; --j) {
      v -= L.a(i, j) * rs.cartan(column_label(spec, j) - 1, k);
    }
  }
  return v;
}

bool polytope_satisfied(const LittelmannPattern& L, const Weight& lam, const PolytopeReadings& rd) {
  if (!cone_satisfied(L)) return false;
  for (const Position& p : L.positions()) {
    if (L.at(p) > polytope_upper_bound(L, lam, p, rd)) return false;
  }
  return true;
}

std::vector<int> pattern_weight(const LittelmannPattern& L) {
  std::vector<int> s(static_cast<std::size_t>(L.spec().rank), 0);
  for (const Position& p : L.positions()) {
    s[static_cast<std::size_t>(column_label(L.spec(), p.col) - 1)] += L.at(p);
  }
  return s;
}

Weight weight_of(const RootSystem& rs, const LittelmannPattern& L, const Weight& lam) {
  auto s = pattern_weight(L);
  Weight w = lam;
  for (int k = 0; k < rs.rank(); ++k) w -= s[static_cast<std::size_t>(k)] * rs.simple_root(k);
  return w;
}

LittelmannPattern bzl_to_pattern(const CartanSpec& spec, std::span<const int> bzl) {
  LittelmannPattern L(spec);
  if (bzl.size() != L.entries().size()) {
    throw InvalidInput(to_string(spec) + " BZL string needs " + std::to_string(L.entries().size()) +
                       " integers, got " + std::to_string(bzl.size()));
  }
  std::size_t n = 0;
  for (int i = L.num_rows(); i >= 1; --i)
    for (int j = i; j <= row_last_column(spec, i); ++j) L.at(i, j) = bzl[n++];
  return L;
}

std::vector<int> pattern_to_bzl(const LittelmannPattern& L) {
  std::vector<int> out;
  out.reserve(L.entries().size());
  for (int i = L.num_rows(); i >= 1; --i)
    for (int j = i; j <= row_last_column(L.spec(), i); ++j) out.push_back(L.a(i, j));
  return out;
}

std::string format_pattern(const LittelmannPattern& L) {
  std::string out;
  for (int i = 1; i <= L.num_rows(); ++i) {
    if (i > 1) out += ';';
    for (int j = i; j <= row_last_column(L.spec(), i); ++j) {
      if (j > i) out += ',';
      out += std::to_string(L.a(i, j));
    }
  }
  return out;
}

LittelmannPattern parse_pattern(const CartanSpec& spec, std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  for (;;) {
    std::size_t end = text.find(';', pos);
    std::string_view row_text = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    std::vector<int> row;
    std::size_t p = 0;
    for (;;) {
      std::size_t e = row_text.find(',', p);
      std::string_view item = row_text.substr(p, e == std::string_view::npos ? std::string_view::npos : e - p);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || v < 0) {
        throw InvalidInput("bad pattern entry '" + std::string(item) + "' in '" + std::string(text) + "'");
      }
      row.push_back(v);
      if (e == std::string_view::npos) break;
      p = e + 1;
    }
    rows.push_back(std::move(row));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return LittelmannPattern::from_rows(spec, rows);
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

// Backtracking over the slots in application order: rows top to bottom,
// each row right to left. An entry's upper bound only reads entries that
// come earlier in this order, and its lower bound only reads its right
// neighbours, so both are final when the slot is reached.
class Enumerator {
 public:
  Enumerator(const RootSystem& rs, const Weight& lam, const PolytopeReadings& rd,
             std::size_t max_patterns)
      : rs_(rs), lam_(lam), rd_(rd), max_patterns_(max_patterns) {
    if (lam.rank() != rs.rank()) throw InvalidInput("weight rank does not match the root system");
    if (!lam.dominant()) throw InvalidInput("enumeration needs a dominant weight, got " + to_string(lam));
    LittelmannPattern L(rs.spec());
    for (int i = 1; i <= L.num_rows(); ++i)
      for (int j = row_last_column(rs.spec(), i); j >= i; --j) slots_.push_back({i, j});
    top_row_slots_ = static_cast<std::size_t>(L.row_length(1));
    node_budget_ = max_patterns == SIZE_MAX ? SIZE_MAX : 64 * max_patterns + 1'000'000;
  }

  std::vector<LittelmannPattern> top_rows() {
    std::vector<LittelmannPattern> out;
    LittelmannPattern L(rs_.spec());
    run(L, 0, top_row_slots_, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<LittelmannPattern> below(const LittelmannPattern& top) {
    std::vector<LittelmannPattern> out;
    LittelmannPattern L = top;
    for (std::size_t k = top_row_slots_; k < slots_.size(); ++k) L.at(slots_[k].row, slots_[k].col) = 0;
    run(L, top_row_slots_, slots_.size(), out);
    return out;
  }

 private:
  int lower_bound(const LittelmannPattern& L, int i, int j) const {
    const int r = rs_.rank();
    switch (rs_.family()) {
      case Family::A:
      case Family::C:
        return L.a(i, j + 1);
      case Family::B:
        if (j == r - 1) return (L.a(i, r) + 1) / 2;
        if (j == r) return 2 * L.a(i, r + 1);
        return L.a(i, j + 1);
      case Family::D:
        if (j == r - 2) return std::max(L.a(i, r - 1), L.a(i, r));
        if (j == r - 1) return L.a(i, r + 1);
        return L.a(i, j + 1);
    }
    return 0;
  }

  void run(LittelmannPattern& L, std::size_t k, std::size_t stop, std::vector<LittelmannPattern>& out) {
    if (++nodes_ > node_budget_) throw EnumerationLimit("enumeration node budget exhausted");
    if (k == stop) {
      if (stop == slots_.size() && produced_.fetch_add(1) + 1 > max_patterns_) {
        throw EnumerationLimit("more than " + std::to_string(max_patterns_) + " patterns");
      }
      out.push_back(L);
      return;
    }
    const Position p = slots_[k];
    const int lo = lower_bound(L, p.row, p.col);
    const int hi = polytope_upper_bound(L, lam_, p, rd_);
    int& slot = L.at(p.row, p.col);
    for (int v = lo; v <= hi; ++v) {
      slot = v;
      run(L, k + 1, stop, out);
    }
    slot = 0;
  }

  const RootSystem& rs_;
  Weight lam_;
  PolytopeReadings rd_;
  std::vector<Position> slots_;
  std::size_t top_row_slots_ = 0;
  std::size_t max_patterns_;
  std::size_t node_budget_;
  std::atomic<std::size_t> nodes_{0};
  std::atomic<std::size_t> produced_{0};
};

}  // namespace

std::vector<LittelmannPattern> enumerate_top_rows(const RootSystem& rs, const Weight& lam,
                                                  const PolytopeReadings& readings) {
  Enumerator e(rs, lam, readings, SIZE_MAX);
  return e.top_rows();
}

std::vector<LittelmannPattern> enumerate_with_top_row(const RootSystem& rs, const Weight& lam,
                                                      const LittelmannPattern& top,
                                                      const EnumerateOptions& opts) {
  Enumerator e(rs, lam, opts.readings, opts.max_patterns);
  auto out = e.below(top);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LittelmannPattern> enumerate_patterns(const RootSystem& rs, const Weight& lam,
                                                  const EnumerateOptions& opts) {
  Enumerator e(rs, lam, opts.readings, opts.max_patterns);
  const auto tops = e.top_rows();
  std::vector<std::vector<LittelmannPattern>> groups(tops.size());
  const unsigned nthreads = std::min<unsigned>(resolve_threads(opts.threads),
                                               static_cast<unsigned>(std::max<std::size_t>(tops.size(), 1)));
  if (nthreads <= 1) {
    for (std::size_t g = 0; g < tops.size(); ++g) groups[g] = e.below(tops[g]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
      try {
        for (std::size_t g; (g = next.fetch_add(1)) < tops.size();) groups[g] = e.below(tops[g]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(tops.size());
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<LittelmannPattern> out;
  for (auto& g : groups) {
    std::sort(g.begin(), g.end());
    for (auto& L : g) out.push_back(std::move(L));
  }
  return out;
}

}  // namespace ppart
