#include "ppart/root_data.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ppart/weight_polynomial.hpp"

namespace ppart {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      default: break;
    }
  }
  throw InvalidInput("unknown Cartan family '" + std::string(text) + "' (expected A, B, C or D)");
}

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 3;
  }
  return 1;
}

void CartanSpec::validate() const {
  if (rank < min_rank(family)) {
    throw InvalidInput(std::string("type ") + family_letter(family) + " needs rank >= " +
                       std::to_string(min_rank(family)) + ", got " + std::to_string(rank));
  }
  if (rank > kMaxRank) {
    throw InvalidInput("rank " + std::to_string(rank) + " exceeds the supported maximum " +
                       std::to_string(kMaxRank));
  }
}

std::string to_string(const CartanSpec& spec) {
  return std::string(1, family_letter(spec.family)) + std::to_string(spec.rank);
}

std::size_t positive_root_count(const CartanSpec& spec) {
  auto r = static_cast<std::size_t>(spec.rank);
  switch (spec.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * r - r;
  }
  return 0;
}

WeylWord nice_long_word(const CartanSpec& spec) {
  spec.validate();
  const int r = spec.rank;
  WeylWord w;
  switch (spec.family) {
    case Family::A:
      for (int k = 1; k <= r; ++k)
        for (int x = k; x >= 1; --x) w.push_back(x);
      break;
    case Family::B:
    case Family::C:
      for (int k = 1; k <= r; ++k) {
        for (int x = k; x >= 1; --x) w.push_back(x);
        for (int x = 2; x <= k; ++x) w.push_back(x);
      }
      break;
    case Family::D:
      w = {1, 2};
      for (int k = 3; k <= r; ++k) {
        for (int x = k; x >= 3; --x) w.push_back(x);
        w.push_back(1);
        w.push_back(2);
        for (int x = 3; x <= k; ++x) w.push_back(x);
      }
      break;
  }
  return w;
}

namespace {

std::vector<int> build_cartan(const CartanSpec& spec) {
  const int r = spec.rank;
  std::vector<int> c(static_cast<std::size_t>(r * r), 0);
  auto at = [&](int i, int j) -> int& { return c[static_cast<std::size_t>(i * r + j)]; };
  for (int i = 0; i < r; ++i) at(i, i) = 2;
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i + 1 < r; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      if (spec.family == Family::B) {
        at(0, 1) = -1;
        at(1, 0) = -2;
      } else {
        at(0, 1) = -2;
        at(1, 0) = -1;
      }
      break;
    case Family::D:
      at(0, 2) = at(2, 0) = -1;
      at(1, 2) = at(2, 1) = -1;
      for (int i = 2; i + 1 < r; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      break;
  }
  return c;
}

std::vector<int> build_lengths(const CartanSpec& spec) {
  std::vector<int> len(static_cast<std::size_t>(spec.rank), 1);
  if (spec.family == Family::B) {
    for (int k = 1; k < spec.rank; ++k) len[static_cast<std::size_t>(k)] = 2;
  } else if (spec.family == Family::C) {
    len[0] = 2;
  }
  return len;
}

}  // namespace

RootSystem::RootSystem(CartanSpec spec) : spec_(spec) {
  spec_.validate();
  const int r = spec_.rank;
  cartan_ = build_cartan(spec_);
  lengths_ = build_lengths(spec_);
  for (int i = 0; i < r; ++i) {
    Weight a(r);
    for (int j = 0; j < r; ++j) a[j] = cartan(i, j);
    simple_roots_.push_back(a);
  }

  // Invert C^T over the rationals (Gauss–Jordan); also yields det(C).
  std::vector<Rational> m(static_cast<std::size_t>(r * r));
  std::vector<Rational> inv(static_cast<std::size_t>(r * r));
  auto M = [&](int i, int j) -> Rational& { return m[static_cast<std::size_t>(i * r + j)]; };
  auto I = [&](int i, int j) -> Rational& { return inv[static_cast<std::size_t>(i * r + j)]; };
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      M(i, j) = cartan(j, i);
      I(i, j) = (i == j) ? 1 : 0;
    }
  }
  Rational det = 1;
  for (int col = 0; col < r; ++col) {
    int piv = col;
    while (piv < r && M(piv, col) == 0) ++piv;
    if (piv == r) throw std::logic_error("singular Cartan matrix");
    if (piv != col) {
      for (int j = 0; j < r; ++j) {
        std::swap(M(piv, j), M(col, j));
        std::swap(I(piv, j), I(col, j));
      }
      det = -det;
    }
    Rational p = M(col, col);
    det *= p;
    for (int j = 0; j < r; ++j) {
      M(col, j) /= p;
      I(col, j) /= p;
    }
    for (int i = 0; i < r; ++i) {
      if (i == col || M(i, col) == 0) continue;
      Rational f = M(i, col);
      for (int j = 0; j < r; ++j) {
        M(i, j) -= f * M(col, j);
        I(i, j) -= f * I(col, j);
      }
    }
  }
  inv_t_ = std::move(inv);
  det_ = static_cast<std::int64_t>(boost::multiprecision::numerator(det));
  height_coef_.assign(static_cast<std::size_t>(r), 0);
  for (int j = 0; j < r; ++j) {
    Rational s = 0;
    for (int k = 0; k < r; ++k) s += inv_t_[static_cast<std::size_t>(k * r + j)];
    s *= det_;
    height_coef_[static_cast<std::size_t>(j)] =
        static_cast<std::int64_t>(boost::multiprecision::numerator(s));
  }

  // Positive roots: closure of the simple roots under simple reflections.
  std::set<Weight> roots(simple_roots_.begin(), simple_roots_.end());
  std::deque<Weight> frontier(simple_roots_.begin(), simple_roots_.end());
  while (!frontier.empty()) {
    Weight w = frontier.front();
    frontier.pop_front();
    for (int k = 0; k < r; ++k) {
      Weight x = reflect(w, k);
      if (roots.insert(x).second) frontier.push_back(x);
    }
  }
  std::vector<std::pair<std::vector<int>, Weight>> pos;
  for (const Weight& w : roots) {
    auto c = integral_root_coordinates(w);
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) pos.emplace_back(c, w);
  }
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a.first) ha += x;
    for (int x : b.first) hb += x;
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  for (auto& [c, w] : pos) {
    positive_coords_.push_back(c);
    positive_roots_.push_back(w);
  }
}

Weight RootSystem::fundamental_weight(int k) const {
  Weight w(rank());
  w[k] = 1;
  return w;
}

Weight RootSystem::rho() const {
  Weight w(rank());
  for (int k = 0; k < rank(); ++k) w[k] = 1;
  return w;
}

std::vector<Rational> RootSystem::root_coordinates(const Weight& w) const {
  const int r = rank();
  if (w.rank() != r) throw InvalidInput("weight rank does not match the root system");
  std::vector<Rational> c(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    Rational s = 0;
    for (int j = 0; j < r; ++j) s += inv_t_[static_cast<std::size_t>(i * r + j)] * w[j];
    c[static_cast<std::size_t>(i)] = s;
  }
  return c;
}

std::vector<int> RootSystem::integral_root_coordinates(const Weight& w) const {
  auto c = root_coordinates(w);
  std::vector<int> out;
  out.reserve(c.size());
  for (const auto& x : c) {
    if (boost::multiprecision::denominator(x) != 1) {
      throw InvalidInput("weight " + to_string(w) + " is not in the root lattice");
    }
    out.push_back(static_cast<int>(boost::multiprecision::numerator(x)));
  }
  return out;
}

Weight RootSystem::from_root_coordinates(std::span<const int> c) const {
  Weight w(rank());
  for (int k = 0; k < rank(); ++k) w += c[static_cast<std::size_t>(k)] * simple_root(k);
  return w;
}

Weight RootSystem::reflect(const Weight& w, int k) const {
  return w - w[k] * simple_root(k);
}

Weight RootSystem::apply_word(const Weight& w, const WeylWord& word) const {
  Weight x = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect(x, *it - 1);
  return x;
}

std::int64_t RootSystem::scaled_height(const Weight& w) const {
  std::int64_t h = 0;
  for (int j = 0; j < rank(); ++j) h += height_coef_[static_cast<std::size_t>(j)] * w[j];
  return h;
}

Weight RootSystem::dominant_representative(const Weight& w) const {
  Weight x = w;
  for (;;) {
    int k = 0;
    while (k < rank() && x[k] >= 0) ++k;
    if (k == rank()) return x;
    x = reflect(x, k);
  }
}

bool RootSystem::in_orbit_hull(const Weight& lam, const Weight& mu) const {
  auto c = root_coordinates(lam - dominant_representative(mu));
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; });
}

Rational RootSystem::inner_product(const Weight& u, const Weight& v) const {
  // (α_i, α_j) = C[i][j] |α_j|² / 2.
  auto cu = root_coordinates(u);
  auto cv = root_coordinates(v);
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      s += cu[static_cast<std::size_t>(i)] * cv[static_cast<std::size_t>(j)] *
           Rational(cartan(i, j) * root_length(j), 2);
    }
  }
  return s;
}

std::vector<std::pair<Weight, int>> RootSystem::orbit(const Weight& w) const {
  std::vector<std::pair<Weight, int>> out{{w, 0}};
  std::map<Weight, int> seen{{w, 0}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    auto [x, d] = out[head];
    for (int k = 0; k < rank(); ++k) {
      Weight y = reflect(x, k);
      if (seen.emplace(y, d + 1).second) out.emplace_back(y, d + 1);
    }
  }
  return out;
}

std::int64_t RootSystem::weyl_group_order() const {
  std::int64_t f = 1;
  const int r = rank();
  switch (family()) {
    case Family::A:
      for (int k = 2; k <= r + 1; ++k) f *= k;
      return f;
    case Family::B:
    case Family::C:
      for (int k = 2; k <= r; ++k) f *= k;
      return f << r;
    case Family::D:
      for (int k = 2; k <= r; ++k) f *= k;
      return f << (r - 1);
  }
  return f;
}

int evaluated_length(const RootSystem& rs, const WeylWord& word) {
  int len = 0;
  for (const Weight& a : rs.positive_roots()) {
    auto c = rs.integral_root_coordinates(rs.apply_word(a, word));
    if (std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; })) ++len;
  }
  return len;
}

std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lam) {
  if (lam.rank() != rs.rank()) throw InvalidInput("weight rank does not match the root system");
  if (!lam.dominant()) throw InvalidInput("weyl_dimension needs a dominant weight, got " + to_string(lam));
  Rational d = 1;
  for (const auto& c : rs.positive_root_coords()) {
    std::int64_t num = 0, den = 0;
    for (int k = 0; k < rs.rank(); ++k) {
      std::int64_t cl = static_cast<std::int64_t>(c[static_cast<std::size_t>(k)]) * rs.root_length(k);
      num += cl * (lam[k] + 1);
      den += cl;
    }
    d *= Rational(num, den);
  }
  if (boost::multiprecision::denominator(d) != 1) throw std::logic_error("non-integral Weyl dimension");
  return static_cast<std::int64_t>(boost::multiprecision::numerator(d));
}

namespace {

WeightPolynomial alternant(const RootSystem& rs, const Weight& w) {
  WeightPolynomial p;
  for (const auto& [x, depth] : rs.orbit(w)) {
    p.add_term(x, CoeffElement::constant(depth % 2 == 0 ? 1 : -1));
  }
  return p;
}

}  // namespace

WeightPolynomial weyl_character(const RootSystem& rs, const Weight& lam) {
  if (lam.rank() != rs.rank()) throw InvalidInput("weight rank does not match the root system");
  if (!lam.dominant()) throw InvalidInput("weyl_character needs a dominant weight, got " + to_string(lam));
  WeightOrder order(rs);
  auto res = exact_divide(alternant(rs, lam + rs.rho()), alternant(rs, rs.rho()), order);
  if (!res.exact) throw std::logic_error("Weyl denominator did not divide the alternant");
  return res.quotient;
}

}  // namespace ppart
