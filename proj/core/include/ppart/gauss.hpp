#pragma once

#include <complex>

#include "ppart/coeff_ring.hpp"

namespace ppart {

/// h_t(a) = (q−1) q^{a−1} when n | t·a, else 0. h_t(0) = 1 by convention
/// (the empty sum over a unit ring).
CoeffElement h_value(int t, int a, int n);

/// g_t(a) = q^{a−1} · ⟨t, a mod n⟩ for a ≥ 1; g_t(0) = 1.
CoeffElement g_value(int t, int a, int n);

bool is_prime(long long p);

/// Σ_{d mod p^c} χ_c(d)^t e(d p^a / p^c), where χ_c(d) = χ(d)^c is the n-th
/// power residue symbol modulo p^c built from a fixed character χ of order
/// n on (Z/p)^× (χ(g) = e(1/n) for the least primitive root g), and χ_c
/// vanishes on non-units. Requires p prime, p ≡ 1 mod n, c ≥ 1, a ≥ 0.
std::complex<double> gauss_numeric(int t, int a_exp, int c_exp, long long p, int n);

}  // namespace ppart
