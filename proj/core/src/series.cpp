#include "ppart/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "ppart/gauss.hpp"

namespace ppart {

namespace {

// Runs fn(begin, end, chunk) over [0, n) split into contiguous chunks and
// returns the per-chunk results in chunk order.
template <class R, class F>
std::vector<R> parallel_chunks(std::size_t n, unsigned threads, F&& fn) {
  const unsigned t = std::max(1u, std::min<unsigned>(resolve_threads(threads),
                                                     static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<R> out(t);
  const std::size_t step = (n + t - 1) / t;
  if (t == 1) {
    out[0] = fn(std::size_t{0}, n);
    return out;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex mu;
  for (unsigned c = 0; c < t; ++c) {
    pool.emplace_back([&, c] {
      try {
        std::size_t b = std::min(n, c * step), e = std::min(n, b + step);
        out[c] = fn(b, e);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

void check_weight(const RootSystem& rs, const Weight& lam) {
  if (lam.rank() != rs.rank()) {
    throw InvalidInput("lambda has " + std::to_string(lam.rank()) + " coordinates but " +
                       to_string(rs.spec()) + " has rank " + std::to_string(rs.rank()));
  }
  if (!lam.dominant()) throw InvalidInput("lambda " + to_string(lam) + " is not dominant");
}

}  // namespace

WeightPolynomial p_part(const RootSystem& rs, const Weight& lam, int n, const PPartOptions& opts) {
  check_weight(rs, lam);
  if (n < 1) throw InvalidInput("metaplectic degree n must be positive");
  if (!opts.allow_dominant && !lam.strongly_dominant()) {
    throw InvalidInput("p-part needs a strongly dominant lambda (every coordinate >= 1), got " +
                       to_string(lam) + "; pass allow_dominant to override");
  }
  EnumerateOptions eo;
  eo.readings = opts.readings;
  eo.threads = opts.threads;
  const auto patterns = enumerate_patterns(rs, lam, eo);
  auto parts = parallel_chunks<WeightPolynomial>(patterns.size(), opts.threads, [&](std::size_t b, std::size_t e) {
    WeightPolynomial acc;
    for (std::size_t k = b; k < e; ++k) {
      const auto& L = patterns[k];
      auto dp = decorate(L, lam, opts.readings);
      acc.add_term(weight_of(rs, L, lam), pattern_coefficient(dp, n, opts.boundary));
    }
    return acc;
  });
  WeightPolynomial total;
  for (const auto& p : parts) total += p;
  return total;
}

WeightPolynomial character_via_patterns(const RootSystem& rs, const Weight& lam, unsigned threads,
                                        const PolytopeReadings& readings) {
  check_weight(rs, lam);
  EnumerateOptions eo;
  eo.readings = readings;
  eo.threads = threads;
  const auto patterns = enumerate_patterns(rs, lam, eo);
  WeightPolynomial chi;
  for (const auto& L : patterns) chi.add_term(weight_of(rs, L, lam), CoeffElement::one());
  return chi;
}

std::string to_string(TokuyamaShift s) { return s == TokuyamaShift::same ? "lambda" : "lambda-rho"; }

std::string to_string(TokuyamaNormalization s) {
  return s == TokuyamaNormalization::raw ? "raw" : "q_rescaled";
}

TokuyamaResult tokuyama_quotient(const RootSystem& rs, const Weight& lam, TokuyamaShift shift,
                                 TokuyamaNormalization norm, unsigned threads) {
  if (rs.family() != Family::A) throw InvalidInput("the Tokuyama check is defined for type A only");
  check_weight(rs, lam);
  TokuyamaResult res;
  res.divisor_weight = shift == TokuyamaShift::same ? lam : lam - rs.rho();
  if (!res.divisor_weight.dominant()) {
    throw InvalidInput("shifted weight " + to_string(res.divisor_weight) + " is not dominant");
  }
  EnumerateOptions eo;
  eo.threads = threads;
  const auto patterns = enumerate_patterns(rs, lam, eo);
  auto parts = parallel_chunks<WeightPolynomial>(patterns.size(), threads, [&](std::size_t b, std::size_t e) {
    WeightPolynomial acc;
    for (std::size_t k = b; k < e; ++k) {
      const auto& L = patterns[k];
      CoeffElement c = specialize_n1(pattern_coefficient(decorate(L, lam), 1));
      if (norm == TokuyamaNormalization::q_rescaled) {
        int total = 0;
        for (int s : pattern_weight(L)) total += s;
        c = c.shifted_q(-total);
      }
      acc.add_term(weight_of(rs, L, lam), c);
    }
    return acc;
  });
  WeightPolynomial num;
  for (const auto& p : parts) num += p;
  auto div = exact_divide(num, weyl_character(rs, res.divisor_weight), WeightOrder(rs));
  res.divisible = div.exact;
  res.quotient = std::move(div.quotient);
  res.remainder = std::move(div.remainder);
  return res;
}

CartanSpec truncated_spec(const CartanSpec& spec) {
  CartanSpec t{spec.family, spec.rank - 1};
  if (t.rank < min_rank(spec.family)) {
    throw InvalidInput("cannot delete the top row of a " + to_string(spec) +
                       " pattern: the result leaves the family");
  }
  return t;
}

LittelmannPattern truncate_pattern(const LittelmannPattern& L) {
  const CartanSpec t = truncated_spec(L.spec());
  LittelmannPattern out(t);
  for (int i = 2; i <= L.num_rows(); ++i)
    for (int j = i; j <= row_last_column(L.spec(), i); ++j) out.at(i - 1, j - 1) = L.a(i, j);
  return out;
}

namespace {

// Factors contributed by the top row alone.
CoeffElement top_row_factor(const DecoratedPattern& dp, int n) {
  CoeffElement c = CoeffElement::one();
  if (dp.pattern.spec().family == Family::D) {
    for (const auto& comp : build_components_D(dp)) {
      if (comp.row == 1) c *= sigma_component(comp, dp, n);
    }
    return c;
  }
  for (int j = 1; j <= row_last_column(dp.pattern.spec(), 1); ++j) c *= entry_factor(dp, {1, j}, n);
  return c;
}

}  // namespace

BranchReport branch_decompose(const RootSystem& rs, const Weight& lam, int n, unsigned threads) {
  check_weight(rs, lam);
  const RootSystem sub(truncated_spec(rs.spec()));
  const int r = rs.rank();
  BranchReport rep;
  auto fail = [&](bool& flag, std::string what) {
    flag = false;
    if (rep.witnesses.size() < 16) rep.witnesses.push_back(std::move(what));
  };

  EnumerateOptions eo;
  eo.threads = threads;
  const auto all = enumerate_patterns(rs, lam, eo);
  const auto p_lambda = p_part(rs, lam, n, PPartOptions{true, threads, frozen_readings(), LeanerBoundary::row_end_is_drop});

  std::vector<LittelmannPattern> regrouped;
  WeightPolynomial assembled;
  for (const auto& top : enumerate_top_rows(rs, lam)) {
    BranchTerm term;
    term.top = top;
    const auto s_top = pattern_weight(top);
    term.mu = lam;
    for (int k = 0; k < r; ++k) term.mu -= s_top[static_cast<std::size_t>(k)] * rs.simple_root(k);
    term.mu_restricted = term.mu.truncated(r - 1);
    if (!term.mu_restricted.dominant()) {
      fail(rep.weights, "mu' = " + to_string(term.mu_restricted) + " from top row " + format_pattern(top) +
                            " is not dominant");
      continue;
    }
    const auto group = enumerate_with_top_row(rs, lam, top, eo);
    term.size = group.size();
    const auto top_dp = decorate(top, lam);
    term.scalar = top_row_factor(top_dp, n);

    std::vector<LittelmannPattern> truncated;
    for (const auto& L : group) {
      regrouped.push_back(L);
      if (L.row(1) != top.row(1)) fail(rep.rigidity, "pattern " + format_pattern(L) + " left its top row");
      const auto Lp = truncate_pattern(L);
      truncated.push_back(Lp);

      const auto sL = pattern_weight(L);
      const auto sLp = pattern_weight(Lp);
      for (int k = 0; k < r; ++k) {
        const int embedded = k < r - 1 ? sLp[static_cast<std::size_t>(k)] : 0;
        if (sL[static_cast<std::size_t>(k)] != s_top[static_cast<std::size_t>(k)] + embedded) {
          fail(rep.additivity, "s-additivity fails at k=" + std::to_string(k + 1) + " for " + format_pattern(L));
          break;
        }
      }

      Weight via_mu = term.mu;
      for (int k = 0; k < r - 1; ++k) via_mu -= sLp[static_cast<std::size_t>(k)] * rs.simple_root(k);
      if (via_mu != weight_of(rs, L, lam)) fail(rep.weights, "weight mismatch for " + format_pattern(L));

      if (!polytope_satisfied(Lp, term.mu_restricted)) {
        fail(rep.rigidity, "truncation " + format_pattern(Lp) + " is not in BZL" + to_string(term.mu_restricted));
        continue;
      }
      const auto dp = decorate(L, lam);
      const auto dpp = decorate(Lp, term.mu_restricted);
      if (top_row_factor(dp, n) != term.scalar) {
        fail(rep.factorization, "top-row factor varies within the group of " + format_pattern(top));
      }
      if (pattern_coefficient(dp, n) != term.scalar * pattern_coefficient(dpp, n)) {
        fail(rep.factorization, "G(L) != c(mu) G(L') for " + format_pattern(L) + ": " +
                                    to_string(pattern_coefficient(dp, n)) + " vs (" + to_string(term.scalar) +
                                    ")*(" + to_string(pattern_coefficient(dpp, n)) + ")");
      }
    }
    if (truncated != enumerate_patterns(sub, term.mu_restricted, eo)) {
      fail(rep.rigidity, "group of top row " + format_pattern(top) + " is not BZL" + to_string(term.mu_restricted));
    }

    const auto p_mu = p_part(sub, term.mu_restricted, n, PPartOptions{true, threads, frozen_readings(), LeanerBoundary::row_end_is_drop});
    for (const auto& [nu, c] : p_mu.terms()) {
      const auto coords = sub.integral_root_coordinates(term.mu_restricted - nu);
      Weight w = term.mu;
      for (int k = 0; k < r - 1; ++k) w -= coords[static_cast<std::size_t>(k)] * rs.simple_root(k);
      assembled.add_term(w, term.scalar * c);
    }
    rep.terms.push_back(std::move(term));
  }
  std::sort(regrouped.begin(), regrouped.end());
  if (regrouped != all) fail(rep.rigidity, "top-row groups do not partition BZL" + to_string(lam));
  if (assembled != p_lambda) fail(rep.sum_matches, "sum over mu of p(mu) P_mu differs from P_lambda");
  return rep;
}

}  // namespace ppart
