#include "ppart/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ppart/weight.hpp"

namespace ppart {

CoeffElement h_value(int t, int a, int n) {
  if (a < 0) throw InvalidInput("h_value needs a >= 0");
  if (n < 1) throw InvalidInput("metaplectic degree must be positive");
  if (a == 0) return CoeffElement::one();
  if ((static_cast<long long>(t) * a) % n != 0) return CoeffElement::zero();
  return CoeffElement::q_power(a) - CoeffElement::q_power(a - 1);
}

CoeffElement g_value(int t, int a, int n) {
  if (a < 0) throw InvalidInput("g_value needs a >= 0");
  if (n < 1) throw InvalidInput("metaplectic degree must be positive");
  if (a == 0) return CoeffElement::one();
  return CoeffElement::symbol(GaussSymbol{t, n, a % n}, a - 1);
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

long long pow_mod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = static_cast<long long>((static_cast<__int128>(r) * b) % m);
    b = static_cast<long long>((static_cast<__int128>(b) * b) % m);
    e >>= 1;
  }
  return r;
}

long long primitive_root(long long p) {
  if (p == 2) return 1;
  std::vector<long long> factors;
  long long m = p - 1;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long f : factors) ok = ok && pow_mod(g, (p - 1) / f, p) != 1;
    if (ok) return g;
  }
  return 1;
}

}  // namespace

std::complex<double> gauss_numeric(int t, int a_exp, int c_exp, long long p, int n) {
  if (!is_prime(p)) throw InvalidInput("gauss_numeric: " + std::to_string(p) + " is not prime");
  if (n < 1) throw InvalidInput("gauss_numeric: n must be positive");
  if ((p - 1) % n != 0) {
    throw InvalidInput("gauss_numeric: need p = 1 mod n, got p=" + std::to_string(p) + " n=" + std::to_string(n));
  }
  if (c_exp < 1 || a_exp < 0) throw InvalidInput("gauss_numeric: need c >= 1 and a >= 0");
  // χ_c depends on d mod p and e(d p^a / p^c) on d mod p^{c-a}, so the sum
  // runs over d mod M = p^max(1, c-a) and each class has p^c / M lifts.
  const int m_exp = std::max(1, c_exp - a_exp);
  long long M = 1;
  for (int k = 0; k < m_exp; ++k) {
    M *= p;
    if (M > 100'000'000) throw InvalidInput("gauss_numeric: modulus p^(c-a) too large");
  }
  const long long add_mod = c_exp > a_exp ? M : 1;
  const double lifts = std::pow(static_cast<double>(p), c_exp - m_exp);

  // Discrete log table mod p.
  const long long g = primitive_root(p);
  std::vector<long long> dlog(static_cast<std::size_t>(p), 0);
  long long x = 1;
  for (long long k = 0; k < p - 1; ++k) {
    dlog[static_cast<std::size_t>(x)] = k;
    x = x * g % p;
  }
  // χ(d)^{t c} = e(t c · dlog(d) / n).
  const long long char_exp = static_cast<long long>(t) * c_exp;
  std::vector<std::complex<double>> chi(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) chi[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / n);

  std::complex<double> sum = 0;
  for (long long d = 1; d < M; ++d) {
    if (d % p == 0) continue;
    const long long e = (dlog[static_cast<std::size_t>(d % p)] * char_exp) % n;
    const double arg = static_cast<double>(d % add_mod) / static_cast<double>(add_mod);
    sum += chi[static_cast<std::size_t>(e)] * std::polar(1.0, 2.0 * std::numbers::pi * arg);
  }
  sum *= lifts;
  return sum;
}

}  // namespace ppart
