#include "ppart/coeff_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ppart/weight.hpp"

namespace ppart {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow (add)");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow (mul)");
  return out;
}

}  // namespace detail

namespace {

// Product of two sorted symbol lists, merging powers.
std::vector<GaussPower> multiply_symbols(const std::vector<GaussPower>& a,
                                         const std::vector<GaussPower>& b) {
  std::vector<GaussPower> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].symbol < b[j].symbol)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].symbol < a[i].symbol) {
      out.push_back(b[j++]);
    } else {
      GaussPower g = a[i++];
      g.pow += b[j++].pow;
      if (g.pow != 0) out.push_back(g);
    }
  }
  return out;
}

void normalize_symbols(std::vector<GaussPower>& g) {
  std::sort(g.begin(), g.end());
  std::vector<GaussPower> merged;
  for (const auto& x : g) {
    if (!merged.empty() && merged.back().symbol == x.symbol) {
      merged.back().pow += x.pow;
    } else {
      merged.push_back(x);
    }
  }
  std::erase_if(merged, [](const GaussPower& x) { return x.pow == 0; });
  g = std::move(merged);
}

}  // namespace

CoeffElement CoeffElement::constant(std::int64_t k) {
  CoeffElement c;
  if (k != 0) c.terms_.push_back(Monomial{k, 0, {}});
  return c;
}

CoeffElement CoeffElement::q_power(int e, std::int64_t k) {
  CoeffElement c;
  if (k != 0) c.terms_.push_back(Monomial{k, e, {}});
  return c;
}

CoeffElement CoeffElement::symbol(GaussSymbol s, int q_exp) {
  if (s.n < 1) throw InvalidInput("gauss symbol modulus must be positive");
  if (s.c < 0 || s.c >= s.n) throw InvalidInput("gauss symbol residue out of range");
  CoeffElement c;
  c.terms_.push_back(Monomial{1, q_exp, {GaussPower{s, 1}}});
  return c;
}

CoeffElement CoeffElement::from_monomials(std::vector<Monomial> monomials) {
  CoeffElement c;
  c.terms_ = std::move(monomials);
  for (auto& m : c.terms_) normalize_symbols(m.gauss);
  c.canonicalize();
  return c;
}

void CoeffElement::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) { return key_less(a, b); });
  std::vector<Monomial> merged;
  merged.reserve(terms_.size());
  for (auto& m : terms_) {
    if (!merged.empty() && same_key(merged.back(), m)) {
      merged.back().coeff = detail::checked_add(merged.back().coeff, m.coeff);
    } else {
      merged.push_back(std::move(m));
    }
  }
  std::erase_if(merged, [](const Monomial& m) { return m.coeff == 0; });
  terms_ = std::move(merged);
}

bool CoeffElement::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].q_exp == 0 && terms_[0].gauss.empty());
}

std::int64_t CoeffElement::constant_value() const {
  if (!is_constant()) throw std::logic_error("coefficient is not an integer constant");
  return terms_.empty() ? 0 : terms_[0].coeff;
}

bool CoeffElement::has_symbols() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Monomial& m) { return !m.gauss.empty(); });
}

CoeffElement& CoeffElement::operator+=(const CoeffElement& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Monomial> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && key_less(terms_[i], o.terms_[j]))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || key_less(o.terms_[j], terms_[i])) {
      out.push_back(o.terms_[j++]);
    } else {
      Monomial m = std::move(terms_[i++]);
      m.coeff = detail::checked_add(m.coeff, o.terms_[j++].coeff);
      if (m.coeff != 0) out.push_back(std::move(m));
    }
  }
  terms_ = std::move(out);
  return *this;
}

CoeffElement& CoeffElement::operator-=(const CoeffElement& o) { return *this += -o; }

CoeffElement operator-(const CoeffElement& a) { return a.scaled(-1); }

CoeffElement operator*(const CoeffElement& a, const CoeffElement& b) {
  CoeffElement out;
  if (a.is_zero() || b.is_zero()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Monomial m;
      m.coeff = detail::checked_mul(x.coeff, y.coeff);
      m.q_exp = x.q_exp + y.q_exp;
      m.gauss = multiply_symbols(x.gauss, y.gauss);
      out.terms_.push_back(std::move(m));
    }
  }
  out.canonicalize();
  return out;
}

CoeffElement& CoeffElement::operator*=(const CoeffElement& o) {
  *this = *this * o;
  return *this;
}

CoeffElement CoeffElement::shifted_q(int e) const {
  CoeffElement out = *this;
  for (auto& m : out.terms_) m.q_exp += e;
  return out;
}

CoeffElement CoeffElement::scaled(std::int64_t k) const {
  if (k == 0) return {};
  CoeffElement out = *this;
  for (auto& m : out.terms_) m.coeff = detail::checked_mul(m.coeff, k);
  return out;
}

std::pair<int, std::vector<std::int64_t>> CoeffElement::as_laurent() const {
  if (has_symbols()) throw InvalidInput("element still carries gauss symbols");
  if (terms_.empty()) return {0, {}};
  int lo = terms_.front().q_exp;
  int hi = terms_.back().q_exp;
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& m : terms_) coeffs[static_cast<std::size_t>(m.q_exp - lo)] = m.coeff;
  return {lo, coeffs};
}

CoeffElement CoeffElement::q_degree_part(int e) const {
  CoeffElement out;
  for (const auto& m : terms_) {
    if (m.q_exp == e) out.terms_.push_back(m);
  }
  return out;
}

CoeffElement specialize_n1(const CoeffElement& c) {
  std::vector<Monomial> out;
  for (const auto& m : c.monomials()) {
    Monomial x{m.coeff, m.q_exp, {}};
    for (const auto& g : m.gauss) {
      if (g.symbol.n != 1) {
        throw InvalidInput("specialize_n1: symbol with modulus " + std::to_string(g.symbol.n));
      }
      if (g.pow < 0) throw InvalidInput("specialize_n1: negative symbol power");
      if (g.pow % 2 != 0) x.coeff = -x.coeff;
    }
    out.push_back(std::move(x));
  }
  return CoeffElement::from_monomials(std::move(out));
}

std::string to_string(const CoeffElement& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest q power first reads more naturally.
  const auto& ms = c.monomials();
  for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
    const Monomial& m = *it;
    std::int64_t k = m.coeff;
    if (first) {
      if (k < 0) os << '-';
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    first = false;
    std::int64_t mag = k < 0 ? -k : k;
    std::vector<std::string> factors;
    if (m.q_exp == 1) factors.push_back("q");
    else if (m.q_exp != 0) factors.push_back("q^" + std::to_string(m.q_exp));
    for (const auto& g : m.gauss) {
      std::string s = "g" + std::to_string(g.symbol.t) + "[" + std::to_string(g.symbol.c) + "]";
      if (g.pow != 1) s += "^" + std::to_string(g.pow);
      factors.push_back(s);
    }
    if (factors.empty() || mag != 1) {
      os << mag;
      if (!factors.empty()) os << '*';
    }
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f) os << '*';
      os << factors[f];
    }
  }
  return os.str();
}

}  // namespace ppart
