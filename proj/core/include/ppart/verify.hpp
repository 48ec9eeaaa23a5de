#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppart/series.hpp"

namespace ppart {

struct CaseResult {
  std::string name;
  bool passed = false;
  /// Report-only cases never fail a suite.
  bool asserted = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  /// Observations recorded alongside the cases (e.g. which convention won).
  std::vector<std::pair<std::string, std::string>> findings;
  double seconds = 0;

  bool ok() const;
  std::size_t failures() const;
  void add(std::string name, bool passed, std::string detail = {}, bool asserted = true);
  void note(std::string key, std::string value);
  std::string to_json() const;
};

/// Dominant weights with every coordinate drawn from `values` and
/// weyl_dimension ≤ max_dim, in lexicographic order.
std::vector<Weight> small_weights(const RootSystem& rs, const std::vector<int>& values, std::int64_t max_dim);

std::vector<CartanSpec> default_character_specs();

struct CharacterSuiteConfig {
  std::vector<CartanSpec> specs = default_character_specs();
  std::vector<int> values{0, 1, 2};
  std::int64_t max_dim = 5000;
  unsigned threads = 1;
};
SuiteReport run_character_suite(const CharacterSuiteConfig& cfg);

/// For every ambiguous reading, tries each candidate (others frozen) on a
/// battery of small weights and asserts that exactly the frozen candidate
/// reproduces dimensions and characters.
SuiteReport run_calibration_suite(unsigned threads = 1);

struct GaussSuiteConfig {
  std::vector<long long> primes{5, 7, 13};
  std::vector<int> ns{1, 2, 3, 4};
  int max_a = 6;
  double tolerance = 1e-6;
  /// Largest modulus p^c summed directly.
  long long max_modulus = 100'000'000;
};
SuiteReport run_gauss_suite(const GaussSuiteConfig& cfg);

struct TokuyamaSuiteConfig {
  /// Weights grouped by rank (type A). Empty = built-in list for ranks 1–3.
  std::vector<std::vector<Weight>> lambdas;
  /// Restrict to one shift; otherwise both are tried.
  std::optional<TokuyamaShift> shift;
  unsigned threads = 1;
};
SuiteReport run_tokuyama_suite(const TokuyamaSuiteConfig& cfg);

struct BranchingSuiteConfig {
  std::vector<int> ns{1, 2, 3};
  bool include_bcd = true;
  unsigned threads = 1;
};
SuiteReport run_branching_suite(const BranchingSuiteConfig& cfg);

struct DecorationSuiteConfig {
  std::vector<CartanSpec> specs = default_character_specs();
  std::vector<int> values{0, 1, 2};
  std::int64_t max_dim = 2000;
  unsigned threads = 1;
};
SuiteReport run_decoration_suite(const DecorationSuiteConfig& cfg);

struct TypeDSuiteConfig {
  std::vector<Weight> lambdas{Weight{1, 0, 0, 0}, Weight{0, 0, 0, 1}, Weight{1, 0, 0, 1}, Weight{1, 1, 1, 1}};
  std::vector<int> ns{1, 2, 3};
  unsigned threads = 1;
};
SuiteReport run_type_d_suite(const TypeDSuiteConfig& cfg);

/// Deterministic fixture texts for one (family, rank, λ, n).
struct ExportBundle {
  std::string patterns;
  std::string decorated;
  std::string polynomial_json;
  friend bool operator==(const ExportBundle&, const ExportBundle&) = default;
};
ExportBundle make_export(const RootSystem& rs, const Weight& lam, int n, unsigned threads,
                         bool allow_dominant = true);

struct RoundTripSuiteConfig {
  std::size_t strings_per_family = 1000;
  std::uint64_t seed = 20240611;
  std::vector<unsigned> thread_counts{1, 2, 4};
};
SuiteReport run_roundtrip_suite(const RoundTripSuiteConfig& cfg);

}  // namespace ppart
