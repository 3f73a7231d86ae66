#pragma once

// Huffman baseline and bounded branch-and-bound search for code-tuples of
// small average length.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "delaycode/core.hpp"
#include "delaycode/cost.hpp"
#include "delaycode/decodability.hpp"
#include "delaycode/followsets.hpp"
#include "delaycode/markov.hpp"

namespace delaycode {

struct HuffmanResult {
  CodeTuple tuple;
  Rational average;
};

/// Classical Huffman code as a one-table tuple. The two lightest nodes are
/// merged, ties going to the node holding the smaller symbol index; the first
/// of the pair gets bit 0.
inline HuffmanResult huffman_baseline(const Alphabet& alphabet, const SourceDistribution& mu) {
  if (mu.size() != alphabet.size()) throw InvalidDistribution("distribution size does not match the alphabet");
  struct Node {
    Rational weight;
    SymbolId min_symbol;
    std::vector<SymbolId> symbols;
  };
  auto later = [](const Node& a, const Node& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.min_symbol > b.min_symbol;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(later)> heap(later);
  for (SymbolId s = 0; s < mu.size(); ++s) heap.push({mu[s], s, {s}});
  std::vector<BitString> reversed(mu.size());
  while (heap.size() > 1) {
    Node zero = heap.top();
    heap.pop();
    Node one = heap.top();
    heap.pop();
    for (SymbolId s : zero.symbols) reversed[s].push_back(false);
    for (SymbolId s : one.symbols) reversed[s].push_back(true);
    Node merged{zero.weight + one.weight, std::min(zero.min_symbol, one.min_symbol), std::move(zero.symbols)};
    merged.symbols.insert(merged.symbols.end(), one.symbols.begin(), one.symbols.end());
    heap.push(std::move(merged));
  }
  CodeTable table;
  for (const BitString& r : reversed) {
    BitString w;
    for (std::size_t t = r.size(); t-- > 0;) w.push_back(r[t]);
    table.push_back({w, 0});
  }
  CodeTuple tuple(alphabet, {std::move(table)});
  Rational avg = table_length(tuple, mu, 0);
  return {std::move(tuple), std::move(avg)};
}

struct SearchBounds {
  std::size_t max_tables = 1;
  std::size_t max_codeword_len = 1;
  /// Complete enumeration within the bounds. Otherwise codeword lengths are
  /// restricted to be non-increasing in probability and the node budget applies.
  bool exhaustive = true;
};

struct SearchOptions {
  std::size_t jobs = 1;
  /// Disables every cut except the final validity checks.
  bool prune = true;
  /// Nodes per shard in non-exhaustive mode; 0 means unlimited.
  std::uint64_t node_budget = 200000;
  /// Starting incumbent; must lie within the bounds.
  std::optional<CodeTuple> seed;
};

struct SearchResult {
  CodeTuple best;
  Rational best_length;
  std::uint64_t explored = 0;
  /// True when the whole bounded space was covered.
  bool complete = false;
};

/// Regular, extendable and k-bit delay decodable.
inline bool is_admissible(const CodeTuple& f, std::size_t k) {
  return is_regular(f) && is_extendable(f) && is_k_delay_decodable(f, k).decodable;
}

namespace detail {

/// All bit strings of length lo..hi in shortlex order.
inline std::vector<BitString> words_up_to(std::size_t lo, std::size_t hi) {
  std::vector<BitString> out;
  for (std::size_t len = lo; len <= hi; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) out.push_back(BitString::from_value(v, len));
  }
  return out;
}

struct Shard {
  std::size_t tables;
  std::size_t first_word;
};

struct ShardOutcome {
  std::optional<CodeTuple> best;
  Rational best_length;
  std::uint64_t explored = 0;
  bool exhausted = true;
};

class ShardSearch {
 public:
  ShardSearch(const Alphabet& alphabet, const SourceDistribution& mu, std::size_t k, const SearchBounds& bounds,
              const SearchOptions& options, const std::vector<BitString>& words, std::optional<Rational> incumbent)
      : alphabet_(alphabet), mu_(mu), k_(k), bounds_(bounds), options_(options), words_(words),
        sigma_(alphabet.size()) {
    if (incumbent) {
      out_.best_length = *incumbent;
      has_bound_ = true;
    }
  }

  ShardOutcome run(const Shard& shard) {
    m_ = shard.tables;
    word_.assign(m_ * sigma_, 0);
    next_.assign(m_ * sigma_, 0);
    assign(0, shard.first_word);
    return std::move(out_);
  }

 private:
  std::size_t cell(TableIndex t, SymbolId s) const { return t * sigma_ + s; }
  const BitString& word(TableIndex t, SymbolId s) const { return words_[word_[cell(t, s)]]; }

  bool budget_left() {
    if (bounds_.exhaustive || options_.node_budget == 0) return true;
    if (out_.explored < options_.node_budget) return true;
    out_.exhausted = false;
    return false;
  }

  /// Cuts that only look at the codewords chosen so far for (t, s).
  bool codeword_ok(TableIndex t, SymbolId s) const {
    const BitString& w = word(t, s);
    if (!bounds_.exhaustive) {
      for (SymbolId u = 0; u < s; ++u) {
        const std::size_t lu = word(t, u).size();
        if ((mu_[u] > mu_[s] && lu > w.size()) || (mu_[u] < mu_[s] && lu < w.size())) return false;
      }
    }
    if (!options_.prune) return true;
    if (k_ == 0) {
      for (SymbolId u = 0; u < s; ++u) {
        if (is_prefix(word(t, u), w) || is_prefix(w, word(t, u))) return false;
      }
    }
    // Tables are kept in nondecreasing order of their codeword lists.
    if (t > 0) {
      for (SymbolId u = 0; u <= s; ++u) {
        const std::size_t a = word_[cell(t - 1, u)];
        const std::size_t b = word_[cell(t, u)];
        if (a != b) return b > a;
      }
    }
    return true;
  }

  bool pair_ok(TableIndex t, SymbolId s) const {
    if (!options_.prune) return true;
    for (SymbolId u = 0; u < s; ++u) {
      if (word_[cell(t, u)] == word_[cell(t, s)] && next_[cell(t, u)] == next_[cell(t, s)]) return false;
    }
    return true;
  }

  /// min_i of L_i with unassigned codewords at their shortest admissible length.
  bool may_improve(std::size_t filled) const {
    if (!options_.prune || !has_bound_) return true;
    const std::size_t shortest = k_ == 0 ? 1 : 0;
    Rational bound;
    bool first = true;
    for (TableIndex t = 0; t < m_; ++t) {
      Rational value = 0;
      for (SymbolId s = 0; s < sigma_; ++s) {
        const std::size_t len = cell(t, s) < filled ? word(t, s).size() : shortest;
        value += Rational(len) * mu_[s];
      }
      if (first || value < bound) bound = value;
      first = false;
    }
    return bound < out_.best_length;
  }

  void assign(std::size_t filled, std::optional<std::size_t> forced_word = std::nullopt) {
    if (!budget_left()) return;
    if (filled == m_ * sigma_) {
      leaf();
      return;
    }
    const TableIndex t = filled / sigma_;
    const SymbolId s = filled % sigma_;
    const std::size_t lo = forced_word ? *forced_word : 0;
    const std::size_t hi = forced_word ? *forced_word + 1 : words_.size();
    for (std::size_t wi = lo; wi < hi; ++wi) {
      word_[filled] = wi;
      if (!codeword_ok(t, s)) continue;
      if (may_improve(filled + 1)) {
        for (TableIndex nx = 0; nx < m_; ++nx) {
          next_[filled] = nx;
          if (!pair_ok(t, s)) continue;
          ++out_.explored;
          assign(filled + 1);
          if (!budget_left()) break;
        }
      }
      if (!budget_left()) return;
    }
  }

  void leaf() {
    std::vector<CodeTable> tables(m_);
    for (TableIndex t = 0; t < m_; ++t) {
      for (SymbolId s = 0; s < sigma_; ++s) tables[t].push_back({word(t, s), next_[cell(t, s)]});
    }
    CodeTuple f(alphabet_, std::move(tables));
    if (!is_irreducible(f) || !is_extendable(f) || !is_k_delay_decodable(f, k_).decodable) return;
    Rational length = average_length(f, mu_);
    if (has_bound_ && length >= out_.best_length) return;
    out_.best = std::move(f);
    out_.best_length = std::move(length);
    has_bound_ = true;
  }

  const Alphabet& alphabet_;
  const SourceDistribution& mu_;
  std::size_t k_;
  const SearchBounds& bounds_;
  const SearchOptions& options_;
  const std::vector<BitString>& words_;
  std::size_t sigma_;
  std::size_t m_ = 0;
  std::vector<std::size_t> word_;
  std::vector<TableIndex> next_;
  bool has_bound_ = false;
  ShardOutcome out_;
};

}  // namespace detail

/// Smallest average length over regular, extendable, k-bit delay decodable
/// tuples with at most `max_tables` tables and codewords of at most
/// `max_codeword_len` bits. Optimal within those bounds when the result is
/// complete. The answer does not depend on the number of jobs.
inline SearchResult search_optimal(const Alphabet& alphabet, const SourceDistribution& mu, std::size_t k,
                                   const SearchBounds& bounds, const SearchOptions& options = {}) {
  if (mu.size() != alphabet.size()) throw InvalidDistribution("distribution size does not match the alphabet");
  if (bounds.max_tables < 1) throw PreconditionFailed("max_tables must be at least 1");
  if (bounds.max_codeword_len < 1) throw PreconditionFailed("max_codeword_len must be at least 1");
  if (k < 6 && bounds.max_tables > (std::size_t{1} << (std::size_t{1} << k)))
    throw PreconditionFailed("max_tables exceeds 2^(2^k)");
  if (bounds.max_codeword_len > 16) throw PreconditionFailed("max_codeword_len is capped at 16");

  std::optional<Rational> seed_length;
  if (options.seed) {
    const CodeTuple& seed = *options.seed;
    if (seed.alphabet() != alphabet) throw PreconditionFailed("seed uses a different alphabet");
    if (seed.size() > bounds.max_tables) throw PreconditionFailed("seed has too many tables");
    for (const CodeTable& table : seed.tables()) {
      for (const CodeEntry& e : table) {
        if (e.codeword.size() > bounds.max_codeword_len) throw PreconditionFailed("seed has an overlong codeword");
      }
    }
    if (!is_admissible(seed, k)) throw PreconditionFailed("seed is not regular, extendable and decodable");
    seed_length = average_length(seed, mu);
  }

  // λ is a prefix of every codeword, so it never occurs in a prefix-free table.
  const std::vector<BitString> words = detail::words_up_to(k == 0 && options.prune ? 1 : 0, bounds.max_codeword_len);
  std::vector<detail::Shard> shards;
  for (std::size_t m = 1; m <= bounds.max_tables; ++m) {
    for (std::size_t w = 0; w < words.size(); ++w) shards.push_back({m, w});
  }

  std::vector<detail::ShardOutcome> outcomes(shards.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t idx = cursor++; idx < shards.size(); idx = cursor++) {
      detail::ShardSearch search(alphabet, mu, k, bounds, options, words, seed_length);
      outcomes[idx] = search.run(shards[idx]);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, shards.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  std::optional<CodeTuple> best = options.seed;
  Rational best_length = seed_length.value_or(Rational(0));
  std::uint64_t explored = 0;
  bool complete = bounds.exhaustive;
  for (detail::ShardOutcome& o : outcomes) {
    explored += o.explored;
    complete = complete && o.exhausted;
    if (o.best && (!best || o.best_length < best_length)) {
      best = std::move(o.best);
      best_length = o.best_length;
    }
  }
  if (!best) throw InfeasibleBounds("no admissible code-tuple within the bounds");
  if (!is_admissible(*best, k) || average_length(*best, mu) != best_length)
    throw InternalError("search result failed re-validation");
  return {std::move(*best), std::move(best_length), explored, complete};
}

}  // namespace delaycode
