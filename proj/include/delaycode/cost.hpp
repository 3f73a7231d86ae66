#pragma once

// Expected codeword lengths and the bias vector of the gain-bias equations.

#include <cstddef>
#include <vector>

#include "delaycode/core.hpp"
#include "delaycode/linalg.hpp"
#include "delaycode/markov.hpp"

namespace delaycode {

struct CostProfile {
  std::vector<Rational> table_lengths;
  Rational average;
  /// Normalized so that bias[0] = 0.
  std::vector<Rational> bias;
};

/// L_i = Σ |f_i(s)| μ(s).
inline Rational table_length(const CodeTuple& f, const SourceDistribution& mu, TableIndex i) {
  require_matching(f, mu);
  require_table(f, i);
  Rational total = 0;
  for (SymbolId s = 0; s < f.alphabet_size(); ++s) total += Rational(f.codeword(i, s).size()) * mu[s];
  return total;
}

inline std::vector<Rational> table_lengths(const CodeTuple& f, const SourceDistribution& mu) {
  std::vector<Rational> out;
  for (TableIndex i = 0; i < f.size(); ++i) out.push_back(table_length(f, mu, i));
  return out;
}

/// L = Σ π_i L_i.
inline Rational average_length(const CodeTuple& f, const SourceDistribution& mu) {
  const StationaryVector pi = stationary_distribution(f, mu);
  Rational total = 0;
  for (TableIndex i = 0; i < f.size(); ++i) total += pi[i] * table_length(f, mu, i);
  return total;
}

/// L − L_i − Σ_j (h_j − h_i) Q_ij for every i.
inline std::vector<Rational> bias_residual(const CodeTuple& f, const SourceDistribution& mu,
                                           const std::vector<Rational>& h, const Rational& average) {
  const TransitionMatrix q = transition_matrix(f, mu);
  std::vector<Rational> out;
  for (TableIndex i = 0; i < f.size(); ++i) {
    Rational r = average - table_length(f, mu, i);
    for (TableIndex j = 0; j < f.size(); ++j) r -= (h[j] - h[i]) * q[i][j];
    out.push_back(r);
  }
  return out;
}

/// Solves (I − Q) h = (L_i − L) with h_0 = 0.
inline std::vector<Rational> bias_vector(const CodeTuple& f, const SourceDistribution& mu) {
  if (!is_irreducible(f)) throw NonIrreducible();
  const std::size_t m = f.size();
  const TransitionMatrix q = transition_matrix(f, mu);
  const Rational avg = average_length(f, mu);
  RationalMatrix a(m + 1, RationalVector(m, Rational(0)));
  RationalVector b(m + 1, Rational(0));
  for (TableIndex i = 0; i < m; ++i) {
    for (TableIndex j = 0; j < m; ++j) a[i][j] = (i == j ? 1 : 0) - q[i][j];
    b[i] = table_length(f, mu, i) - avg;
  }
  a[m][0] = 1;
  auto h = solve_unique(std::move(a), b);
  if (!h) throw InternalError("bias system of an irreducible code-tuple is not uniquely solvable");
  for (const Rational& r : bias_residual(f, mu, *h, avg)) {
    if (r != 0) throw InternalError("bias vector fails its defining equations");
  }
  return *h;
}

inline CostProfile cost_profile(const CodeTuple& f, const SourceDistribution& mu) {
  return {table_lengths(f, mu), average_length(f, mu), bias_vector(f, mu)};
}

}  // namespace delaycode
