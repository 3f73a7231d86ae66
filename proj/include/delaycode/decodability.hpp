#pragma once

// k-bit delay decodability with witnesses, per-table prefix-freeness, and a
// bounded-horizon classifier for (source string, lookahead) pairs.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "delaycode/core.hpp"
#include "delaycode/followsets.hpp"

namespace delaycode {

enum class Condition {
  /// A continuation after f_i(s) also continues a strictly longer first codeword.
  Extension,
  /// Two symbols with equal codewords admit a common continuation.
  Collision,
};

struct DecodabilityWitness {
  Condition condition = Condition::Extension;
  TableIndex table = 0;
  SymbolId symbol = 0;
  /// Second symbol; set only for Condition::Collision.
  std::optional<SymbolId> other;
  BitString lookahead;

  /// Canonical order: (table, symbol, other, lookahead) with an absent other
  /// placed after every symbol.
  friend bool operator<(const DecodabilityWitness& a, const DecodabilityWitness& b) {
    auto key = [](const DecodabilityWitness& w) {
      const bool absent = !w.other.has_value();
      return std::make_tuple(w.table, w.symbol, absent, w.other.value_or(0), w.lookahead);
    };
    return key(a) < key(b);
  }
  friend bool operator==(const DecodabilityWitness&, const DecodabilityWitness&) = default;
};

struct DecodabilityVerdict {
  bool decodable = true;
  /// The smallest violation; present iff not decodable.
  std::optional<DecodabilityWitness> witness;
  /// Every (table, symbol[, other]) violation with its smallest lookahead, in canonical order.
  std::vector<DecodabilityWitness> violations;
};

inline std::string to_string(Condition c) { return c == Condition::Extension ? "i" : "ii"; }

/// Checks both delay conditions for every table and symbol.
inline DecodabilityVerdict is_k_delay_decodable(const CodeTuple& f, std::size_t k,
                                                std::size_t max_depth = kDefaultMaxDepth) {
  const FollowSetTable w = build_follow_sets(f, k, max_depth);
  DecodabilityVerdict verdict;
  for (TableIndex i = 0; i < f.size(); ++i) {
    for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
      const WordSet& after = w.at(f.next(i, s), k);
      const WordSet longer = pbar_set(f, w, i, k, f.codeword(i, s));
      if (auto c = after.first_common(longer)) {
        verdict.violations.push_back({Condition::Extension, i, s, std::nullopt, *c});
      }
      for (SymbolId t = s + 1; t < f.alphabet_size(); ++t) {
        if (f.codeword(i, s) != f.codeword(i, t)) continue;
        if (auto c = after.first_common(w.at(f.next(i, t), k))) {
          verdict.violations.push_back({Condition::Collision, i, s, t, *c});
        }
      }
    }
  }
  std::sort(verdict.violations.begin(), verdict.violations.end());
  if (!verdict.violations.empty()) {
    verdict.decodable = false;
    verdict.witness = verdict.violations.front();
  }
  return verdict;
}

/// No codeword of table i is a prefix of a different symbol's codeword.
inline bool is_prefix_free(const CodeTuple& f, TableIndex i) {
  require_table(f, i);
  for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
    for (SymbolId t = 0; t < f.alphabet_size(); ++t) {
      if (s != t && is_prefix(f.codeword(i, s), f.codeword(i, t))) return false;
    }
  }
  return true;
}

enum class PairClass { Positive, Negative, Neither };

inline std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::Positive:
      return "positive";
    case PairClass::Negative:
      return "negative";
    default:
      return "neither";
  }
}

/// Classifies (x, c) by quantifying over source strings x′ with |x′| ≤ horizon:
/// Positive when every x′ with f*_i(x)c ⪯ f*_i(x′) extends x, Negative when
/// none does. A pair meeting both (no such x′ at all) reports Positive.
///
/// Intended as a test oracle. The answer agrees with the unbounded notion once
/// the horizon is large enough for the tuple at hand.
inline PairClass classify_pair(const CodeTuple& f, TableIndex i, const SymbolString& x, const BitString& c,
                               std::size_t horizon) {
  require_table(f, i);
  if (horizon < x.size()) throw PreconditionFailed("horizon is shorter than the source string");
  BitString target;
  {
    TableIndex t = i;
    for (SymbolId s : x) {
      target.append(f.codeword(t, s));
      t = f.next(t, s);
    }
    target.append(c);
  }
  const std::size_t m = f.size();
  const std::size_t tn = target.size() + 1;
  // Mode: 0..|x| while x′ still follows x (|x| itself meaning x ⪯ x′), |x|+1 once x′ diverged.
  const std::size_t diverged = x.size() + 1;
  const std::size_t modes = x.size() + 2;
  auto id = [&](TableIndex t, std::size_t q, std::size_t mode) { return (t * tn + q) * modes + mode; };
  std::vector<bool> seen(m * tn * modes, false);
  struct Node {
    TableIndex table;
    std::size_t matched;
    std::size_t mode;
    std::size_t depth;
  };
  std::deque<Node> queue{{i, 0, 0, 0}};
  seen[id(i, 0, 0)] = true;
  bool extends_x = false;
  bool avoids_x = false;
  while (!queue.empty() && !(extends_x && avoids_x)) {
    const Node n = queue.front();
    queue.pop_front();
    if (n.matched == target.size()) {
      (n.mode == x.size() ? extends_x : avoids_x) = true;
    }
    if (n.depth == horizon) continue;
    for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
      const BitString& w = f.codeword(n.table, s);
      const std::size_t overlap = std::min(w.size(), target.size() - n.matched);
      bool fits = true;
      for (std::size_t t = 0; t < overlap && fits; ++t) fits = w[t] == target[n.matched + t];
      if (!fits) continue;
      std::size_t mode = n.mode;
      if (mode < x.size()) mode = x[mode] == s ? mode + 1 : diverged;
      const Node next{f.next(n.table, s), n.matched + overlap, mode, n.depth + 1};
      const std::size_t key = id(next.table, next.matched, next.mode);
      if (seen[key]) continue;
      seen[key] = true;
      queue.push_back(next);
    }
  }
  if (!avoids_x) return PairClass::Positive;
  if (!extends_x) return PairClass::Negative;
  return PairClass::Neither;
}

}  // namespace delaycode
