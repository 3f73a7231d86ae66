#pragma once

// Shrinks a decodable code-tuple until its tables have pairwise distinct
// P^k sets, never increasing the average codeword length.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delaycode/core.hpp"
#include "delaycode/cost.hpp"
#include "delaycode/decodability.hpp"
#include "delaycode/followsets.hpp"
#include "delaycode/markov.hpp"

namespace delaycode {

struct ReductionStep {
  /// Tables removed when taking the irreducible part, as indices before removal.
  std::vector<TableIndex> dropped;
  /// Tables sharing one P^k set, as indices after removal.
  std::vector<TableIndex> merged_class;
  /// Member of the class with the smallest bias; every successor into the class now points here.
  TableIndex representative = 0;
  Rational length_before;
  Rational length_after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  /// Tables removed by the last irreducible-part extraction.
  std::vector<TableIndex> final_dropped;
};

struct ReductionResult {
  CodeTuple tuple;
  ReductionTrace trace;
};

/// Raises PreconditionFailed naming the first of regular, extendable, decodable that fails.
inline void require_reducible(const CodeTuple& f, std::size_t k) {
  if (!is_regular(f)) throw PreconditionFailed("code-tuple is not regular");
  if (!is_extendable(f)) throw PreconditionFailed("code-tuple is not extendable");
  if (!is_k_delay_decodable(f, k).decodable)
    throw PreconditionFailed("code-tuple is not " + std::to_string(k) + "-bit delay decodable");
}

namespace detail {

inline std::vector<TableIndex> complement(const IndexMap& kept, std::size_t m) {
  std::vector<bool> in(m, false);
  for (TableIndex t : kept) in[t] = true;
  std::vector<TableIndex> out;
  for (TableIndex t = 0; t < m; ++t) {
    if (!in[t]) out.push_back(t);
  }
  return out;
}

/// The class of the smallest index whose P^k set is shared by another table.
inline std::optional<std::vector<TableIndex>> first_duplicate_class(const FollowSetTable& w, std::size_t k) {
  const std::size_t m = w.tables();
  for (TableIndex i = 0; i < m; ++i) {
    std::vector<TableIndex> cls{i};
    for (TableIndex j = 0; j < m; ++j) {
      if (j != i && w.at(j, k) == w.at(i, k)) cls.push_back(j);
    }
    if (cls.size() > 1) {
      std::sort(cls.begin(), cls.end());
      return cls;
    }
  }
  return std::nullopt;
}

inline CodeTuple redirect(const CodeTuple& f, const std::vector<TableIndex>& cls, TableIndex target) {
  std::vector<bool> in(f.size(), false);
  for (TableIndex t : cls) in[t] = true;
  std::vector<CodeTable> tables = f.tables();
  for (CodeTable& table : tables) {
    for (CodeEntry& e : table) {
      if (in[e.next]) e.next = target;
    }
  }
  return CodeTuple(f.alphabet(), std::move(tables));
}

inline bool family_subset(const std::vector<WordSet>& inner, const std::vector<WordSet>& outer) {
  for (const WordSet& s : inner) {
    if (std::find(outer.begin(), outer.end(), s) == outer.end()) return false;
  }
  return true;
}

}  // namespace detail

/// Repeatedly takes the irreducible part and merges one class of tables with
/// equal P^k sets into its minimum-bias member. The result is irreducible,
/// extendable and k-bit delay decodable, is no longer on average, uses only
/// P^k sets of the input, and has one table per distinct P^k set. All of this
/// is re-checked before returning.
inline ReductionResult reduce_to_distinct(const CodeTuple& f, const SourceDistribution& mu, std::size_t k) {
  require_matching(f, mu);
  require_reducible(f, k);
  const Rational original_length = average_length(f, mu);
  const std::vector<WordSet> original_family = pk_family(f, k);

  ReductionTrace trace;
  CodeTuple current = f;
  for (std::size_t round = 0;; ++round) {
    if (round > f.size()) throw InternalError("reduction did not terminate");
    auto [part, phi] = irreducible_part(current);
    std::vector<TableIndex> dropped = detail::complement(phi, current.size());
    const FollowSetTable w = build_follow_sets(part, k);
    const auto cls = detail::first_duplicate_class(w, k);
    if (!cls) {
      trace.final_dropped = std::move(dropped);
      current = std::move(part);
      break;
    }
    const std::vector<Rational> h = bias_vector(part, mu);
    TableIndex p = cls->front();
    for (TableIndex t : *cls) {
      if (h[t] < h[p]) p = t;
    }
    CodeTuple next = detail::redirect(part, *cls, p);
    const FollowSetTable w_next = build_follow_sets(next, k);
    for (TableIndex t = 0; t < next.size(); ++t) {
      if (w_next.at(t, k) != w.at(t, k)) throw InternalError("redirection changed a P^k set");
    }
    ReductionStep step{std::move(dropped), *cls, p, average_length(part, mu), average_length(next, mu)};
    if (step.length_after > step.length_before) throw InternalError("redirection increased the average length");
    trace.steps.push_back(std::move(step));
    current = std::move(next);
  }

  if (!is_irreducible(current) || !is_extendable(current) || !is_k_delay_decodable(current, k).decodable)
    throw InternalError("reduced code-tuple lost irreducibility, extendability or decodability");
  if (average_length(current, mu) > original_length) throw InternalError("reduced code-tuple is longer on average");
  const std::vector<WordSet> family = pk_family(current, k);
  if (!detail::family_subset(family, original_family)) throw InternalError("reduced code-tuple has a new P^k set");
  if (family.size() != current.size()) throw InternalError("reduced code-tuple has duplicate P^k sets");
  if (k < 6 && current.size() > (std::size_t{1} << (std::size_t{1} << k)))
    throw InternalError("reduced code-tuple exceeds the table bound");
  return {std::move(current), std::move(trace)};
}

}  // namespace delaycode
