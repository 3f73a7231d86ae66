#pragma once

// Deterministic recognizers for achievable bit strings and the two-children
// necessary condition for optimal k-bit delay decodable code-tuples.
//
// The condition asks that every achievable b with |b| ≥ k from a table in R_F
// has both one-bit extensions achievable. Membership of b depends only on the
// DFA state it reaches, so it suffices to inspect every state reachable by a
// path of length ≥ k. Conversely, if such a state lacks a transition, the path
// to it plus the missing bit is a counterexample. Induction on |b| then gives
// the condition for all longer strings, since every accepted string passes
// only through accepted prefixes.

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "delaycode/core.hpp"
#include "delaycode/decodability.hpp"
#include "delaycode/followsets.hpp"
#include "delaycode/markov.hpp"

namespace delaycode {

class PrefixDfa {
 public:
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  PrefixDfa(std::vector<std::array<std::size_t, 2>> delta, std::vector<PrefixNfa::StateSet> subsets)
      : delta_(std::move(delta)), subsets_(std::move(subsets)) {}

  std::size_t start() const noexcept { return 0; }
  std::size_t size() const noexcept { return delta_.size(); }

  /// Successor on `bit`, or PrefixDfa::none.
  std::size_t next(std::size_t state, bool bit) const { return delta_.at(state)[bit ? 1 : 0]; }

  /// The NFA states represented by a DFA state.
  const PrefixNfa::StateSet& subset(std::size_t state) const { return subsets_.at(state); }

  bool accepts(const BitString& b) const {
    std::size_t q = start();
    for (std::size_t t = 0; t < b.size(); ++t) {
      q = next(q, b[t]);
      if (q == none) return false;
    }
    return true;
  }

 private:
  std::vector<std::array<std::size_t, 2>> delta_;
  std::vector<PrefixNfa::StateSet> subsets_;
};

/// Subset construction over the prefix NFA, started at table i.
inline PrefixDfa prefix_dfa(const CodeTuple& f, TableIndex i) {
  require_table(f, i);
  const PrefixNfa nfa(f);
  std::map<PrefixNfa::StateSet, std::size_t> ids;
  std::vector<PrefixNfa::StateSet> subsets{nfa.start(i)};
  std::vector<std::array<std::size_t, 2>> delta;
  ids.emplace(subsets.front(), 0);
  for (std::size_t q = 0; q < subsets.size(); ++q) {
    std::array<std::size_t, 2> row{PrefixDfa::none, PrefixDfa::none};
    for (int bit = 0; bit < 2; ++bit) {
      PrefixNfa::StateSet target = nfa.step(subsets[q], bit == 1);
      if (target.empty()) continue;
      auto [it, inserted] = ids.emplace(target, subsets.size());
      if (inserted) subsets.push_back(std::move(target));
      row[bit] = it->second;
    }
    delta.push_back(row);
  }
  return PrefixDfa(std::move(delta), std::move(subsets));
}

struct OptimalityWitness {
  TableIndex table = 0;
  /// Achievable up to its last bit, not achievable as a whole.
  BitString bits;
};

struct OptimalityVerdict {
  bool passes = true;
  std::optional<OptimalityWitness> witness;
};

/// Shortlex-smallest b with |b| > k whose proper prefix is achievable from the
/// DFA start but b itself is not; nullopt when none exists.
inline std::optional<BitString> missing_extension(const PrefixDfa& dfa, std::size_t k) {
  // Nodes are (state, min(depth, k)); BFS with 0 before 1 reaches each node by its shortlex-least path.
  const std::size_t layers = k + 1;
  std::vector<std::optional<BitString>> path(dfa.size() * layers);
  std::deque<std::size_t> queue{dfa.start() * layers};
  path[dfa.start() * layers] = BitString();
  std::optional<BitString> best;
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    const std::size_t q = node / layers;
    const std::size_t d = node % layers;
    for (int bit = 0; bit < 2; ++bit) {
      BitString ext = *path[node];
      ext.push_back(bit == 1);
      const std::size_t r = dfa.next(q, bit == 1);
      if (r == PrefixDfa::none) {
        if (d == k && (!best || ext < *best)) best = ext;
        continue;
      }
      const std::size_t target = r * layers + std::min(d + 1, k);
      if (path[target]) continue;
      path[target] = std::move(ext);
      queue.push_back(target);
    }
  }
  return best;
}

/// Every achievable b with |b| ≥ k from a table in R_F has both one-bit
/// extensions achievable. Failing tuples cannot be optimal.
inline OptimalityVerdict check_necessary_condition(const CodeTuple& f, std::size_t k) {
  if (!is_regular(f)) throw PreconditionFailed("code-tuple is not regular");
  if (!is_extendable(f)) throw PreconditionFailed("code-tuple is not extendable");
  if (!is_k_delay_decodable(f, k).decodable)
    throw PreconditionFailed("code-tuple is not " + std::to_string(k) + "-bit delay decodable");
  for (TableIndex i : r_set(f)) {
    if (auto b = missing_extension(prefix_dfa(f, i), k)) return {false, OptimalityWitness{i, *b}};
  }
  return {};
}

}  // namespace delaycode
