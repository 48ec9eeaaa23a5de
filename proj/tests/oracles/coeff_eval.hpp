#pragma once

// Numeric evaluation of coefficient ring elements at a point.

#include <complex>
#include <functional>

#include "ppart/coeff_ring.hpp"

namespace oracle {

using SymbolValue = std::function<std::complex<double>(const ppart::GaussSymbol&)>;

inline std::complex<double> evaluate(const ppart::CoeffElement& c, double q, const SymbolValue& sym) {
  std::complex<double> s = 0;
  for (const auto& m : c.monomials()) {
    std::complex<double> v = static_cast<double>(m.coeff) * std::pow(q, m.q_exp);
    for (const auto& g : m.gauss) v *= std::pow(sym(g.symbol), g.pow);
    s += v;
  }
  return s;
}

}  // namespace oracle
