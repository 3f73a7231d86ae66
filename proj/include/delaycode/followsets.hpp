#pragma once

// Achievable-prefix sets W_i^(j), the continuation sets P^k / P̄^k, prefix
// membership and extendability.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delaycode/core.hpp"

namespace delaycode {

/// Default upper bound on the depth of follow-set computations.
inline constexpr std::size_t kDefaultMaxDepth = 16;

/// A set of bit strings that all have the same length, stored as a bitmap
/// indexed by the big-endian value of each word.
class WordSet {
 public:
  WordSet() : WordSet(0) {}
  explicit WordSet(std::size_t length) : length_(length), present_(std::size_t{1} << length, false) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), true)); }
  bool empty() const noexcept { return std::find(present_.begin(), present_.end(), true) == present_.end(); }

  bool contains_value(std::uint64_t v) const { return present_[v]; }
  bool contains(const BitString& w) const { return w.size() == length_ && present_[w.value()]; }

  /// Returns true when the value was not yet present.
  bool insert_value(std::uint64_t v) {
    if (present_[v]) return false;
    present_[v] = true;
    return true;
  }

  void insert(const BitString& w) {
    if (w.size() != length_) throw Error("word length does not match the set");
    present_[w.value()] = true;
  }

  template <class Fn>
  void for_each_value(Fn&& fn) const {
    for (std::uint64_t v = 0; v < present_.size(); ++v) {
      if (present_[v]) fn(v);
    }
  }

  /// Members in increasing order.
  std::vector<BitString> words() const {
    std::vector<BitString> out;
    for_each_value([&](std::uint64_t v) { out.push_back(BitString::from_value(v, length_)); });
    return out;
  }

  bool intersects(const WordSet& other) const { return first_common(other).has_value(); }

  /// Smallest common member, if any.
  std::optional<BitString> first_common(const WordSet& other) const {
    if (other.length_ != length_) return std::nullopt;
    for (std::uint64_t v = 0; v < present_.size(); ++v) {
      if (present_[v] && other.present_[v]) return BitString::from_value(v, length_);
    }
    return std::nullopt;
  }

  bool is_subset_of(const WordSet& other) const {
    if (other.length_ != length_) return empty();
    for (std::size_t v = 0; v < present_.size(); ++v) {
      if (present_[v] && !other.present_[v]) return false;
    }
    return true;
  }

  /// "{00, 01}" style rendering; λ prints as "λ".
  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (const BitString& w : words()) {
      if (!first) out += ", ";
      first = false;
      out += w.empty() ? "λ" : w.str();
    }
    return out + "}";
  }

  friend bool operator==(const WordSet&, const WordSet&) = default;

  /// Canonical order used for families: by length, then by sorted member list.
  friend bool operator<(const WordSet& a, const WordSet& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.words() < b.words();
  }

 private:
  std::size_t length_;
  std::vector<bool> present_;
};

/// W_i^(j) for every table i and every depth j ≤ k.
class FollowSetTable {
 public:
  FollowSetTable(std::size_t depth, std::vector<std::vector<WordSet>> sets)
      : depth_(depth), sets_(std::move(sets)) {}

  std::size_t depth() const noexcept { return depth_; }
  std::size_t tables() const noexcept { return sets_.size(); }
  const WordSet& at(TableIndex i, std::size_t j) const { return sets_.at(i).at(j); }

 private:
  std::size_t depth_;
  std::vector<std::vector<WordSet>> sets_;
};

namespace detail {

inline void require_depth(std::size_t k, std::size_t max_depth) {
  if (k > max_depth)
    throw PreconditionFailed("depth " + std::to_string(k) + " exceeds the cap of " + std::to_string(max_depth));
}

using WordGrid = std::vector<std::vector<WordSet>>;

/// Adds prefix_len(r) if |r| ≥ len, else r·W where W holds words of length len − |r|.
template <class Lookup>
bool add_continuations(WordSet& out, const BitString& r, const Lookup& lookup, TableIndex next) {
  const std::size_t len = out.length();
  if (r.size() >= len) return out.insert_value(r.prefix(len).value());
  bool changed = false;
  const std::size_t rest = len - r.size();
  const std::uint64_t head = r.value() << rest;
  lookup(next, rest).for_each_value([&](std::uint64_t v) { changed |= out.insert_value(head | v); });
  return changed;
}

}  // namespace detail

/// Least fixed point of W_i^(j) = ∪_s {prefix_j(f_i(s)) or f_i(s)·W_{τ_i(s)}^(j−|f_i(s)|)}.
inline FollowSetTable build_follow_sets(const CodeTuple& f, std::size_t k, std::size_t max_depth = kDefaultMaxDepth) {
  detail::require_depth(k, max_depth);
  const std::size_t m = f.size();
  detail::WordGrid sets(m);
  for (TableIndex i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= k; ++j) sets[i].emplace_back(j);
    sets[i][0].insert_value(0);
  }
  auto lookup = [&sets](TableIndex t, std::size_t d) -> const WordSet& { return sets[t][d]; };
  // Depth j only depends on depths ≤ j, so each depth is iterated to stability in turn.
  for (std::size_t j = 1; j <= k; ++j) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (TableIndex i = 0; i < m; ++i) {
        WordSet next = sets[i][j];
        bool grew = false;
        for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
          grew |= detail::add_continuations(next, f.codeword(i, s), lookup, f.next(i, s));
        }
        if (grew) {
          sets[i][j] = std::move(next);
          changed = true;
        }
      }
    }
  }
  return FollowSetTable(k, std::move(sets));
}

namespace detail {

inline WordSet continuation_set(const CodeTuple& f, const FollowSetTable& w, TableIndex i, std::size_t k,
                                const BitString& b, bool strict) {
  WordSet out(k);
  for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
    const BitString& word = f.codeword(i, s);
    if (!is_prefix(b, word) || (strict && word.size() == b.size())) continue;
    add_continuations(
        out, word.substr(b.size()), [&w](TableIndex t, std::size_t d) -> const WordSet& { return w.at(t, d); },
        f.next(i, s));
  }
  return out;
}

}  // namespace detail

/// P^k_{F,i}(b) from precomputed follow sets of depth ≥ k.
inline WordSet pk_set(const CodeTuple& f, const FollowSetTable& w, TableIndex i, std::size_t k, const BitString& b) {
  require_table(f, i);
  return detail::continuation_set(f, w, i, k, b, false);
}

/// P̄^k_{F,i}(b) from precomputed follow sets of depth ≥ k.
inline WordSet pbar_set(const CodeTuple& f, const FollowSetTable& w, TableIndex i, std::size_t k, const BitString& b) {
  require_table(f, i);
  return detail::continuation_set(f, w, i, k, b, true);
}

/// P^k_{F,i}(b): k-bit continuations after b, where the first codeword extends b.
inline WordSet pk_set(const CodeTuple& f, TableIndex i, std::size_t k, const BitString& b = {}) {
  return pk_set(f, build_follow_sets(f, k), i, k, b);
}

/// P̄^k_{F,i}(b): as pk_set, but the first codeword must extend b strictly.
inline WordSet pbar_set(const CodeTuple& f, TableIndex i, std::size_t k, const BitString& b = {}) {
  return pbar_set(f, build_follow_sets(f, k), i, k, b);
}

/// Nondeterministic recognizer of the bit strings achievable from a table.
/// State ids below |F| are codeword boundaries (the table about to be used);
/// larger ids are positions strictly inside a codeword.
class PrefixNfa {
 public:
  using StateSet = std::vector<std::size_t>;

  explicit PrefixNfa(const CodeTuple& f) : f_(f) {
    const std::size_t m = f.size();
    for (TableIndex j = 0; j < m; ++j) {
      for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
        const std::size_t len = f.codeword(j, s).size();
        for (std::size_t p = 1; p < len; ++p) inner_.push_back({j, s, p});
      }
    }
    std::sort(inner_.begin(), inner_.end());
  }

  std::size_t state_count() const noexcept { return f_.size() + inner_.size(); }

  StateSet start(TableIndex i) const { return closure({i}); }

  /// States after reading one more bit; empty when the bit is impossible.
  StateSet step(const StateSet& from, bool bit) const {
    StateSet out;
    for (std::size_t q : from) {
      if (q < f_.size()) {
        for (SymbolId s = 0; s < f_.alphabet_size(); ++s) {
          const BitString& w = f_.codeword(q, s);
          if (w.empty() || w[0] != bit) continue;
          out.push_back(w.size() == 1 ? f_.next(q, s) : inner_id(q, s, 1));
        }
      } else {
        const Inner& st = inner_[q - f_.size()];
        const BitString& w = f_.codeword(st.table, st.symbol);
        if (w[st.pos] != bit) continue;
        out.push_back(st.pos + 1 == w.size() ? f_.next(st.table, st.symbol) : inner_id(st.table, st.symbol, st.pos + 1));
      }
    }
    return closure(std::move(out));
  }

  bool accepts(TableIndex i, const BitString& b) const {
    StateSet cur = start(i);
    for (std::size_t t = 0; t < b.size() && !cur.empty(); ++t) cur = step(cur, b[t]);
    return !cur.empty();
  }

 private:
  struct Inner {
    TableIndex table;
    SymbolId symbol;
    std::size_t pos;
    friend auto operator<=>(const Inner&, const Inner&) = default;
  };

  std::size_t inner_id(TableIndex j, SymbolId s, std::size_t p) const {
    auto it = std::lower_bound(inner_.begin(), inner_.end(), Inner{j, s, p});
    return f_.size() + static_cast<std::size_t>(it - inner_.begin());
  }

  /// Adds boundary states reachable through λ codewords, then sorts and dedups.
  StateSet closure(StateSet states) const {
    std::vector<bool> seen(state_count(), false);
    StateSet stack;
    for (std::size_t q : states) {
      if (!seen[q]) {
        seen[q] = true;
        stack.push_back(q);
      }
    }
    while (!stack.empty()) {
      const std::size_t q = stack.back();
      stack.pop_back();
      if (q >= f_.size()) continue;
      for (SymbolId s = 0; s < f_.alphabet_size(); ++s) {
        if (!f_.codeword(q, s).empty()) continue;
        const std::size_t nxt = f_.next(q, s);
        if (!seen[nxt]) {
          seen[nxt] = true;
          stack.push_back(nxt);
        }
      }
    }
    StateSet out;
    for (std::size_t q = 0; q < seen.size(); ++q) {
      if (seen[q]) out.push_back(q);
    }
    return out;
  }

  const CodeTuple& f_;
  std::vector<Inner> inner_;
};

/// True iff some source string x has f*_i(x) ⪰ b.
inline bool mem_pstar(const CodeTuple& f, TableIndex i, const BitString& b) {
  require_table(f, i);
  return PrefixNfa(f).accepts(i, b);
}

/// Every table can eventually emit at least one bit.
inline bool is_extendable(const CodeTuple& f) {
  const FollowSetTable w = build_follow_sets(f, 1);
  for (TableIndex i = 0; i < f.size(); ++i) {
    if (w.at(i, 1).empty()) return false;
  }
  return true;
}

/// The distinct sets among P^k_{F,i}, in canonical order.
inline std::vector<WordSet> pk_family(const CodeTuple& f, std::size_t k) {
  const FollowSetTable w = build_follow_sets(f, k);
  std::vector<WordSet> family;
  for (TableIndex i = 0; i < f.size(); ++i) family.push_back(w.at(i, k));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

}  // namespace delaycode
