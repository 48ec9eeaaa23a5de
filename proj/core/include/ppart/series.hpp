#pragma once

#include <string>
#include <vector>

#include "ppart/contributions.hpp"
#include "ppart/weight_polynomial.hpp"

namespace ppart {

struct PPartOptions {
  /// Accept dominant (not strongly dominant) weights.
  bool allow_dominant = false;
  unsigned threads = 1;
  PolytopeReadings readings = frozen_readings();
  LeanerBoundary boundary = LeanerBoundary::row_end_is_drop;
};

/// Σ_{L ∈ BZL(λ)} G(L) x^{wt(L)}.
WeightPolynomial p_part(const RootSystem& rs, const Weight& lam, int n, const PPartOptions& opts = {});

/// Σ_{L ∈ BZL(λ)} x^{wt(L)}.
WeightPolynomial character_via_patterns(const RootSystem& rs, const Weight& lam, unsigned threads = 1,
                                        const PolytopeReadings& readings = frozen_readings());

enum class TokuyamaShift { same, minus_rho };
enum class TokuyamaNormalization {
  /// Coefficients as produced by p_part.
  raw,
  /// Each pattern term multiplied by q^{-Σ s_k}, i.e. x^{-α_k} ↦ q^{-1} x^{-α_k}.
  q_rescaled,
};
std::string to_string(TokuyamaShift s);
std::string to_string(TokuyamaNormalization s);

struct TokuyamaResult {
  bool divisible = false;
  Weight divisor_weight;
  WeightPolynomial quotient;
  WeightPolynomial remainder;
};

/// Divides the n = 1 p-part (specialized) by χ_{λ'} with λ' = λ or λ − ρ.
/// Type A only; λ' must be dominant.
TokuyamaResult tokuyama_quotient(const RootSystem& rs, const Weight& lam, TokuyamaShift shift,
                                 TokuyamaNormalization norm, unsigned threads = 1);

/// One crystal of the branching C_λ = ⊔ C_μ.
struct BranchTerm {
  /// Top row shared by the group.
  LittelmannPattern top;
  /// Highest weight of the group in rank r.
  Weight mu;
  /// Its restriction to the first r−1 fundamental weights.
  Weight mu_restricted;
  /// p(μ) = scalar · x^{shift}; shift is μ in rank r.
  CoeffElement scalar;
  std::size_t size = 0;
};

struct BranchReport {
  std::vector<BranchTerm> terms;
  bool rigidity = true;
  bool additivity = true;
  bool factorization = true;
  bool weights = true;
  bool sum_matches = true;
  /// First failure witnesses (empty when all checks pass).
  std::vector<std::string> witnesses;
  bool ok() const { return rigidity && additivity && factorization && weights && sum_matches; }
};

/// Rank of the truncated root system after deleting the top row.
CartanSpec truncated_spec(const CartanSpec& spec);

/// Deletes the top row; entry (i, j) becomes (i−1, j−1).
LittelmannPattern truncate_pattern(const LittelmannPattern& L);

/// Groups BZL(λ) by top row and checks the branching identities.
BranchReport branch_decompose(const RootSystem& rs, const Weight& lam, int n, unsigned threads = 1);

}  // namespace ppart
