#include "ppart/weight_polynomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ppart/root_data.hpp"

namespace ppart {

WeightOrder::WeightOrder(const RootSystem& rs) : coef_(static_cast<std::size_t>(rs.rank())) {
  for (int j = 0; j < rs.rank(); ++j) {
    Weight e(rs.rank());
    e[j] = 1;
    coef_[static_cast<std::size_t>(j)] = rs.scaled_height(e);
  }
}

std::int64_t WeightOrder::height(const Weight& w) const {
  std::int64_t h = 0;
  for (int j = 0; j < w.rank(); ++j) h += coef_[static_cast<std::size_t>(j)] * w[j];
  return h;
}

bool WeightOrder::greater(const Weight& a, const Weight& b) const {
  std::int64_t ha = height(a), hb = height(b);
  if (ha != hb) return ha > hb;
  return a > b;
}

WeightPolynomial WeightPolynomial::monomial(const Weight& w, CoeffElement c) {
  WeightPolynomial p;
  p.add_term(w, c);
  return p;
}

void WeightPolynomial::add_term(const Weight& w, const CoeffElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoeffElement WeightPolynomial::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CoeffElement{} : it->second;
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
  WeightPolynomial out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
  }
  return out;
}

WeightPolynomial WeightPolynomial::scaled(const CoeffElement& c, const Weight& shift) const {
  WeightPolynomial out;
  for (const auto& [w, x] : terms_) out.add_term(w + shift, x * c);
  return out;
}

CoeffElement WeightPolynomial::total() const {
  CoeffElement s;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

std::vector<std::pair<Weight, CoeffElement>> WeightPolynomial::sorted_terms(
    const WeightOrder& order) const {
  std::vector<std::pair<Weight, CoeffElement>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& x, const auto& y) { return order.greater(x.first, y.first); });
  return out;
}

std::optional<Weight> WeightPolynomial::leading_weight(const WeightOrder& order) const {
  std::optional<Weight> best;
  for (const auto& [w, c] : terms_) {
    if (!best || order.greater(w, *best)) best = w;
  }
  return best;
}

DivisionResult exact_divide(const WeightPolynomial& num, const WeightPolynomial& den,
                            const WeightOrder& order) {
  if (den.is_zero()) throw InvalidInput("division by the zero polynomial");
  DivisionResult result;
  if (num.is_zero()) {
    result.exact = true;
    return result;
  }
  const Weight lead = *den.leading_weight(order);
  const CoeffElement lead_c = den.coefficient(lead);
  if (!lead_c.is_constant() || (lead_c.constant_value() != 1 && lead_c.constant_value() != -1)) {
    throw InvalidInput("divisor leading coefficient must be +1 or -1");
  }
  const std::int64_t sign = lead_c.constant_value();
  const int r = lead.rank();

  // Every coordinate functional is additive on supports of products in an
  // integral domain, so quotient weights live in a computable box.
  auto bounds = [r](const WeightPolynomial& p) {
    std::vector<int> lo(static_cast<std::size_t>(r), std::numeric_limits<int>::max());
    std::vector<int> hi(static_cast<std::size_t>(r), std::numeric_limits<int>::min());
    for (const auto& [w, c] : p.terms()) {
      for (int j = 0; j < r; ++j) {
        lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], w[j]);
        hi[static_cast<std::size_t>(j)] = std::max(hi[static_cast<std::size_t>(j)], w[j]);
      }
    }
    return std::pair{lo, hi};
  };
  auto [nlo, nhi] = bounds(num);
  auto [dlo, dhi] = bounds(den);

  WeightPolynomial rem = num;
  while (!rem.is_zero()) {
    const Weight top = *rem.leading_weight(order);
    const Weight qw = top - lead;
    bool in_box = true;
    for (int j = 0; j < r; ++j) {
      auto u = static_cast<std::size_t>(j);
      if (qw[j] < nlo[u] - dlo[u] || qw[j] > nhi[u] - dhi[u]) in_box = false;
    }
    if (!in_box) {
      result.exact = false;
      result.remainder = std::move(rem);
      return result;
    }
    CoeffElement qc = rem.coefficient(top).scaled(sign);
    result.quotient.add_term(qw, qc);
    rem -= den.scaled(qc, qw);
  }
  result.exact = true;
  return result;
}

}  // namespace ppart
