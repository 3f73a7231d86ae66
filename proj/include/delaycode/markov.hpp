#pragma once

// The table-index Markov chain: transition matrix, reachability, regularity,
// stationary distributions, homomorphisms and irreducible parts.

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "delaycode/core.hpp"
#include "delaycode/linalg.hpp"

namespace delaycode {

using TransitionMatrix = RationalMatrix;
using StationaryVector = RationalVector;
using IndexSet = std::set<TableIndex>;
/// phi[i] is the image of source table i.
using IndexMap = std::vector<TableIndex>;

/// Q_ij = Σ μ(s) over symbols s with τ_i(s) = j.
inline TransitionMatrix transition_matrix(const CodeTuple& f, const SourceDistribution& mu) {
  require_matching(f, mu);
  TransitionMatrix q(f.size(), RationalVector(f.size(), Rational(0)));
  for (TableIndex i = 0; i < f.size(); ++i) {
    for (SymbolId s = 0; s < f.alphabet_size(); ++s) q[i][f.next(i, s)] += mu[s];
  }
  return q;
}

/// Tables reachable from `from`, the empty path included.
inline std::vector<bool> reachable_from(const CodeTuple& f, TableIndex from) {
  std::vector<bool> seen(f.size(), false);
  std::vector<TableIndex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const TableIndex i = stack.back();
    stack.pop_back();
    for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
      const TableIndex j = f.next(i, s);
      if (!seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return seen;
}

/// R_F: the tables reachable from every table.
inline IndexSet r_set(const CodeTuple& f) {
  std::vector<bool> common(f.size(), true);
  for (TableIndex j = 0; j < f.size(); ++j) {
    const std::vector<bool> r = reachable_from(f, j);
    for (TableIndex i = 0; i < f.size(); ++i) common[i] = common[i] && r[i];
  }
  IndexSet out;
  for (TableIndex i = 0; i < f.size(); ++i) {
    if (common[i]) out.insert(i);
  }
  return out;
}

inline bool is_regular(const CodeTuple& f) { return !r_set(f).empty(); }
inline bool is_irreducible(const CodeTuple& f) { return r_set(f).size() == f.size(); }

/// Every successor of every member stays inside the set.
inline bool is_closed(const CodeTuple& f, const IndexSet& set) {
  for (TableIndex i : set) {
    require_table(f, i);
    for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
      if (set.count(f.next(i, s)) == 0) return false;
    }
  }
  return true;
}

/// Basis of the solutions of πQ = π, without normalization.
inline std::vector<RationalVector> invariant_vectors(const TransitionMatrix& q) {
  const std::size_t m = q.size();
  RationalMatrix a(m, RationalVector(m, Rational(0)));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = q[c][r] - (r == c ? 1 : 0);
  }
  return null_space(std::move(a), m);
}

/// The unique π with πQ = π and Σπ = 1.
inline StationaryVector stationary_distribution(const CodeTuple& f, const SourceDistribution& mu) {
  if (!is_regular(f)) throw NonRegular();
  const TransitionMatrix q = transition_matrix(f, mu);
  const std::size_t m = f.size();
  RationalMatrix a(m + 1, RationalVector(m, Rational(0)));
  RationalVector b(m + 1, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = q[c][r] - (r == c ? 1 : 0);
  }
  for (std::size_t c = 0; c < m; ++c) a[m][c] = 1;
  b[m] = 1;
  auto pi = solve_unique(std::move(a), b);
  if (!pi) throw InternalError("stationary system of a regular code-tuple is not uniquely solvable");
  return *pi;
}

/// f′_i = f_φ(i) and φ(τ′_i(s)) = τ_φ(i)(s) for every i and s.
inline bool is_homomorphism(const CodeTuple& src, const CodeTuple& dst, const IndexMap& phi) {
  if (phi.size() != src.size()) throw IndexOutOfRange("index map does not cover every source table");
  if (src.alphabet() != dst.alphabet()) return false;
  for (TableIndex i = 0; i < src.size(); ++i) {
    require_table(dst, phi[i]);
    for (SymbolId s = 0; s < src.alphabet_size(); ++s) {
      if (src.codeword(i, s) != dst.codeword(phi[i], s)) return false;
      if (phi[src.next(i, s)] != dst.next(phi[i], s)) return false;
    }
  }
  return true;
}

/// The sub-tuple on R_F, tables kept in ascending order, with its embedding into F.
inline std::pair<CodeTuple, IndexMap> irreducible_part(const CodeTuple& f) {
  const IndexSet r = r_set(f);
  if (r.empty()) throw NonRegular();
  IndexMap phi(r.begin(), r.end());
  std::vector<TableIndex> position(f.size(), 0);
  for (TableIndex t = 0; t < phi.size(); ++t) position[phi[t]] = t;
  std::vector<CodeTable> tables;
  for (TableIndex old : phi) {
    CodeTable table;
    for (SymbolId s = 0; s < f.alphabet_size(); ++s) table.push_back({f.codeword(old, s), position[f.next(old, s)]});
    tables.push_back(std::move(table));
  }
  return {CodeTuple(f.alphabet(), std::move(tables)), std::move(phi)};
}

}  // namespace delaycode
