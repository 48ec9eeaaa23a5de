#include "ppart/decorations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ppart {

Rational circling_lower_bound(const LittelmannPattern& L, Position p) {
  if (!L.contains(p)) {
    throw InvalidInput("position (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                       ") is not an entry of a " + to_string(L.spec()) + " pattern");
  }
  const int r = L.spec().rank;
  const int i = p.row, j = p.col;
  switch (L.spec().family) {
    case Family::B:
      if (j == r - 1) return Rational(L.a(i, j + 1), 2);
      if (j == r) return 2 * L.a(i, j + 1);
      break;
    case Family::D:
      if (j == r - 2) return std::max(L.a(i, j + 1), L.a(i, j + 2));
      if (j == r - 1) return L.a(i, j + 2);
      break;
    default:
      break;
  }
  return L.a(i, j + 1);
}

DecoratedPattern decorate(const LittelmannPattern& L, const Weight& lam, const PolytopeReadings& readings) {
  if (!polytope_satisfied(L, lam, readings)) {
    throw InvalidInput("pattern " + format_pattern(L) + " is not in the polytope of " + to_string(lam));
  }
  DecoratedPattern dp{L, lam, {}, {}, {}};
  const std::size_t n = L.entries().size();
  dp.circled.assign(n, false);
  dp.boxed.assign(n, false);
  dp.upper.assign(n, 0);
  for (const Position& p : L.positions()) {
    const std::size_t k = L.flat_index(p.row, p.col);
    const int a = L.at(p);
    dp.circled[k] = Rational(a) == circling_lower_bound(L, p);
    dp.upper[k] = polytope_upper_bound(L, lam, p, readings);
    dp.boxed[k] = a == dp.upper[k];
  }
  return dp;
}

std::string render_decorated(const DecoratedPattern& dp) {
  const auto& L = dp.pattern;
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (int i = 1; i <= L.num_rows(); ++i) {
    std::vector<std::string> row;
    for (int j = i; j <= row_last_column(L.spec(), i); ++j) {
      std::string x = std::to_string(L.a(i, j));
      const bool c = dp.is_circled({i, j}), b = dp.is_boxed({i, j});
      if (c && b) x = "[(" + x + ")]";
      else if (c) x = "(" + x + ")";
      else if (b) x = "[" + x + "]";
      width = std::max(width, x.size());
      row.push_back(std::move(x));
    }
    cells.push_back(std::move(row));
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    // Rows start one column further right each time.
    os << std::string(i * (width + 1), ' ');
    for (std::size_t k = 0; k < cells[i].size(); ++k) {
      if (k) os << ' ';
      os << std::string(width - cells[i][k].size(), ' ') << cells[i][k];
    }
    os << '\n';
  }
  return os.str();
}

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::generic: return "generic";
    case ComponentClass::multiple_leaner: return "multiple_leaner";
    case ComponentClass::symmetric_multiple_leaner: return "symmetric_multiple_leaner";
  }
  return "?";
}

std::vector<ComponentD> build_components_D(const DecoratedPattern& dp, LeanerBoundary boundary) {
  const auto& L = dp.pattern;
  const auto& spec = L.spec();
  if (spec.family != Family::D) throw InvalidInput("build_components_D needs a type D pattern");
  const int r = spec.rank;
  std::vector<ComponentD> out;

  for (int i = 1; i <= L.num_rows(); ++i) {
    const int first = i, last = row_last_column(spec, i);
    const int n = last - first + 1;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    auto join = [&](int u, int v) {
      if (u < first || v < first || u > last || v > last) return;
      if (L.a(i, u) != L.a(i, v)) return;
      int a = find(u - first), b = find(v - first);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };
    for (int j = first; j < last; ++j) {
      if (j <= r - 3 || j >= r + 1) {
        join(j, j + 1);
      } else if (j == r - 2) {
        join(j, r - 1);
        join(j, r);
      } else if (j == r - 1) {
        join(r - 1, r + 1);
        join(r, r + 1);
      }
    }

    std::map<int, std::vector<int>> groups;
    for (int j = first; j <= last; ++j) groups[find(j - first)].push_back(j);
    for (auto& [root, cols] : groups) {
      ComponentD c;
      c.row = i;
      c.cols = cols;
      c.j1 = cols.front();
      c.j2 = cols.back();
      c.rightmost = c.j2;
      const int value = L.a(i, c.j1);
      const bool contiguous = static_cast<int>(cols.size()) == c.j2 - c.j1 + 1;
      bool leaner = contiguous && c.j1 <= r - 2 && c.j2 >= r + 1;
      if (leaner) {
        const bool left_drop = c.j1 == first ? boundary == LeanerBoundary::row_end_is_drop
                                             : L.a(i, c.j1 - 1) > value;
        const bool right_drop = c.j2 == last ? (boundary == LeanerBoundary::row_end_is_drop || value > 0)
                                             : value > L.a(i, c.j2 + 1);
        leaner = left_drop && right_drop;
      }
      if (leaner) {
        if (c.j2 == bar_column(spec, c.j1)) {
          c.cls = ComponentClass::symmetric_multiple_leaner;
          c.length = r - c.j1;
        } else {
          c.cls = ComponentClass::multiple_leaner;
          const int left_leg = r - 1 - c.j1;
          const int right_leg = c.j2 - r;
          c.shorter_leg_end = left_leg < right_leg ? c.j1 : c.j2;
        }
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace ppart
