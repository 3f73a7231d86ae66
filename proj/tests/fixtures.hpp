#pragma once

// Shared code-tuples, hand-rolled random generators and brute-force oracles.
// Oracles here work from the definitions directly and never call the
// library's follow-set, decoder or automaton code.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "delaycode/delaycode.hpp"

namespace fixtures {

using namespace delaycode;

inline Alphabet abcd() { return Alphabet{"a", "b", "c", "d"}; }

inline BitString bits(const char* s) { return BitString(std::string_view(s)); }

inline SymbolString syms(const CodeTuple& f, const char* s) { return f.alphabet().parse(s); }

inline CodeTuple alpha() {
  return make_code_tuple(abcd(), {{{"01", 0}, {"10", 1}, {"0100", 0}, {"01", 2}},
                                  {{"00", 1}, {"-", 0}, {"00111", 1}, {"00111", 2}},
                                  {{"1100", 1}, {"1110", 2}, {"111000", 2}, {"110", 2}}});
}

inline CodeTuple beta() {
  return make_code_tuple(abcd(), {{{"-", 1}, {"101", 2}, {"1011", 1}, {"1101", 2}},
                                  {{"0110", 1}, {"01", 1}, {"0111", 1}, {"01111", 1}},
                                  {{"-", 2}, {"-", 2}, {"-", 2}, {"-", 2}}});
}

inline CodeTuple gamma() {
  return make_code_tuple(abcd(), {{{"0010", 2}, {"0011", 0}, {"000", 1}, {"-", 2}},
                                  {{"100", 1}, {"00", 0}, {"01", 1}, {"1", 2}},
                                  {{"1100", 1}, {"11", 2}, {"01", 1}, {"10", 0}},
                                  {{"010", 0}, {"011", 1}, {"100", 0}, {"1", 2}}});
}

inline CodeTuple delta() {
  return make_code_tuple(abcd(), {{{"100", 0}, {"00", 0}, {"01", 0}, {"1", 1}},
                                  {{"1100", 0}, {"11", 1}, {"01", 0}, {"10", 0}}});
}

/// Single-table code with the given codewords, every successor 0.
inline CodeTuple single_table(const std::vector<std::string>& words) {
  std::vector<std::string> names;
  for (std::size_t s = 0; s < words.size(); ++s) names.push_back(std::string(1, static_cast<char>('a' + s)));
  CodeTable table;
  for (const std::string& w : words) table.push_back({w == "-" ? BitString() : BitString(w), 0});
  return CodeTuple(Alphabet(names), {table});
}

inline SourceDistribution mu() {
  return SourceDistribution({Rational(1, 10), Rational(2, 10), Rational(3, 10), Rational(4, 10)});
}

inline WordSet word_set(std::size_t len, const std::vector<std::string>& words) {
  WordSet out(len);
  for (const std::string& w : words) out.insert(w == "-" ? BitString() : BitString(w));
  return out;
}

// ---------------------------------------------------------------------------
// Random generation

struct TupleShape {
  std::size_t max_sigma = 4;
  std::size_t min_sigma = 2;
  std::size_t max_tables = 3;
  std::size_t max_len = 3;
};

inline BitString random_word(std::mt19937_64& rng, std::size_t max_len) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  BitString w;
  for (std::size_t t = 0; t < len; ++t) w.push_back(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
  return w;
}

inline Alphabet alphabet_of(std::size_t sigma) {
  std::vector<std::string> names;
  for (std::size_t s = 0; s < sigma; ++s) names.push_back(std::string(1, static_cast<char>('a' + s)));
  return Alphabet(names);
}

/// Uniformly random codewords and successors.
inline CodeTuple random_tuple(std::mt19937_64& rng, const TupleShape& shape = {}) {
  const std::size_t sigma = std::uniform_int_distribution<std::size_t>(shape.min_sigma, shape.max_sigma)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, shape.max_tables)(rng);
  std::vector<CodeTable> tables(m);
  for (CodeTable& t : tables) {
    for (std::size_t s = 0; s < sigma; ++s)
      t.push_back({random_word(rng, shape.max_len), std::uniform_int_distribution<std::size_t>(0, m - 1)(rng)});
  }
  return CodeTuple(alphabet_of(sigma), tables);
}

/// Each table is a random prefix-free code, so the tuple is 0-bit delay
/// decodable and extendable.
inline CodeTuple random_prefix_free_tuple(std::mt19937_64& rng, const TupleShape& shape = {}) {
  for (;;) {
    const std::size_t sigma = std::uniform_int_distribution<std::size_t>(shape.min_sigma, shape.max_sigma)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, shape.max_tables)(rng);
    std::vector<CodeTable> tables(m);
    bool ok = true;
    for (CodeTable& t : tables) {
      for (std::size_t s = 0; s < sigma && ok; ++s) {
        bool placed = false;
        for (int attempt = 0; attempt < 50 && !placed; ++attempt) {
          BitString w = random_word(rng, shape.max_len);
          if (w.empty()) continue;
          placed = std::none_of(t.begin(), t.end(), [&](const CodeEntry& e) {
            return is_prefix(e.codeword, w) || is_prefix(w, e.codeword);
          });
          if (placed) t.push_back({w, std::uniform_int_distribution<std::size_t>(0, m - 1)(rng)});
        }
        ok = placed;
      }
      if (!ok) break;
    }
    if (ok) return CodeTuple(alphabet_of(sigma), tables);
  }
}

/// Mix of unconstrained and prefix-free tuples.
inline CodeTuple random_mixed_tuple(std::mt19937_64& rng, const TupleShape& shape = {}) {
  return std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? random_tuple(rng, shape)
                                                            : random_prefix_free_tuple(rng, shape);
}

inline SymbolString random_symbols(std::mt19937_64& rng, std::size_t sigma, std::size_t max_len) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  SymbolString x;
  for (std::size_t t = 0; t < len; ++t) x.push_back(std::uniform_int_distribution<std::size_t>(0, sigma - 1)(rng));
  return x;
}

/// Random positive distribution with small denominators.
inline SourceDistribution random_distribution(std::mt19937_64& rng, std::size_t sigma) {
  std::vector<Integer> weights;
  Integer total = 0;
  for (std::size_t s = 0; s < sigma; ++s) {
    weights.push_back(std::uniform_int_distribution<int>(1, 9)(rng));
    total += weights.back();
  }
  std::vector<Rational> probs;
  for (const Integer& w : weights) probs.push_back(Rational(w, total));
  return SourceDistribution(probs);
}

/// Calls fn on every tuple with the given alphabet size, table count and
/// codewords of length at most max_len.
inline void for_each_tuple(std::size_t sigma, std::size_t m, std::size_t max_len,
                           const std::function<void(const CodeTuple&)>& fn) {
  std::vector<BitString> words;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) words.push_back(BitString::from_value(v, len));
  }
  const std::size_t cells = sigma * m;
  const std::size_t choices = words.size() * m;
  std::vector<std::size_t> digit(cells, 0);
  const Alphabet alphabet = alphabet_of(sigma);
  for (;;) {
    std::vector<CodeTable> tables(m);
    for (std::size_t c = 0; c < cells; ++c) tables[c / sigma].push_back({words[digit[c] / m], digit[c] % m});
    fn(CodeTuple(alphabet, tables));
    std::size_t c = 0;
    while (c < cells && ++digit[c] == choices) digit[c++] = 0;
    if (c == cells) break;
  }
}

// ---------------------------------------------------------------------------
// Oracles

inline BitString oracle_encode(const CodeTuple& f, TableIndex i, const SymbolString& x, TableIndex* final = nullptr) {
  BitString out;
  for (SymbolId s : x) {
    out = out + f.codeword(i, s);
    i = f.next(i, s);
  }
  if (final) *final = i;
  return out;
}

/// Every length-`need` prefix of enc·f*_t(y) over source strings y. Explores
/// (table, bits so far) pairs breadth first, each pair once.
inline std::set<BitString> extensions(const CodeTuple& f, TableIndex t, const BitString& enc, std::size_t need) {
  std::set<BitString> out;
  std::set<std::pair<TableIndex, BitString>> seen{{t, enc}};
  std::vector<std::pair<TableIndex, BitString>> frontier{{t, enc}};
  while (!frontier.empty()) {
    auto [table, sofar] = frontier.back();
    frontier.pop_back();
    if (sofar.size() >= need) {
      out.insert(sofar.prefix(need));
      continue;
    }
    for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
      std::pair<TableIndex, BitString> next{f.next(table, s), sofar + f.codeword(table, s)};
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return out;
}

/// { c ∈ C^k : ∃x ∈ S⁺, f*_i(x) ⪰ bc, f_i(x₁) ⪰ b }, with x = s·y split at the
/// first symbol; strict requires f_i(x₁) ≻ b.
inline std::set<BitString> oracle_pk(const CodeTuple& f, TableIndex i, std::size_t k, const BitString& b,
                                     bool strict = false) {
  std::set<BitString> out;
  for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
    const BitString& first = f.codeword(i, s);
    if (!is_prefix(b, first) || (strict && first.size() == b.size())) continue;
    for (const BitString& w : extensions(f, f.next(i, s), first, b.size() + k)) out.insert(w.substr(b.size()));
  }
  return out;
}

/// Achievable prefixes W_i^(j) = { c ∈ C^j : ∃x, f*_i(x) ⪰ c }.
inline std::set<BitString> oracle_follow(const CodeTuple& f, TableIndex i, std::size_t j) {
  return extensions(f, i, BitString(), j);
}

inline bool oracle_pstar(const CodeTuple& f, TableIndex i, const BitString& b) {
  return oracle_follow(f, i, b.size()).count(b) != 0;
}

inline std::set<BitString> to_set(const WordSet& w) {
  const std::vector<BitString> v = w.words();
  return {v.begin(), v.end()};
}

/// Both conditions of the delay test evaluated with the enumeration oracle.
inline bool oracle_decodable(const CodeTuple& f, std::size_t k) {
  auto meets = [](const std::set<BitString>& a, const std::set<BitString>& b) {
    return std::any_of(a.begin(), a.end(), [&](const BitString& c) { return b.count(c) != 0; });
  };
  for (TableIndex i = 0; i < f.size(); ++i) {
    for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
      const std::set<BitString> after = oracle_follow(f, f.next(i, s), k);
      if (meets(after, oracle_pk(f, i, k, f.codeword(i, s), true))) return false;
      for (SymbolId t = s + 1; t < f.alphabet_size(); ++t) {
        if (f.codeword(i, s) == f.codeword(i, t) && meets(after, oracle_follow(f, f.next(i, t), k))) return false;
      }
    }
  }
  return true;
}

/// min over x ∈ S^n of |f*_i(x)|, by dynamic programming over tables.
inline std::size_t oracle_min_length(const CodeTuple& f, TableIndex i, std::size_t n) {
  const std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> cur(f.size(), inf);
  cur[i] = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::size_t> nxt(f.size(), inf);
    for (TableIndex t = 0; t < f.size(); ++t) {
      if (cur[t] == inf) continue;
      for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
        const TableIndex u = f.next(t, s);
        nxt[u] = std::min(nxt[u], cur[t] + f.codeword(t, s).size());
      }
    }
    cur = nxt;
  }
  return *std::min_element(cur.begin(), cur.end());
}

/// max over x ∈ S^≤n of |f*_i(x)|.
inline std::size_t oracle_max_length(const CodeTuple& f, TableIndex i, std::size_t n) {
  const long none = -1;
  std::vector<long> cur(f.size(), none);
  cur[i] = 0;
  long best = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<long> nxt(f.size(), none);
    for (TableIndex t = 0; t < f.size(); ++t) {
      if (cur[t] == none) continue;
      for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
        const TableIndex u = f.next(t, s);
        nxt[u] = std::max(nxt[u], cur[t] + static_cast<long>(f.codeword(t, s).size()));
      }
    }
    cur = nxt;
    best = std::max(best, *std::max_element(cur.begin(), cur.end()));
  }
  return static_cast<std::size_t>(best);
}

/// Exact check of πQ = π and Σπ = 1.
inline bool is_stationary(const TransitionMatrix& q, const std::vector<Rational>& pi) {
  Rational sum = 0;
  for (const Rational& p : pi) sum += p;
  if (sum != 1) return false;
  for (std::size_t j = 0; j < q.size(); ++j) {
    Rational v = 0;
    for (std::size_t i = 0; i < q.size(); ++i) v += pi[i] * q[i][j];
    if (v != pi[j]) return false;
  }
  return true;
}

/// Reachability by repeated relaxation, independent of the library's search.
inline std::set<TableIndex> oracle_r_set(const CodeTuple& f) {
  const std::size_t m = f.size();
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (TableIndex i = 0; i < m; ++i) reach[i][i] = true;
  for (std::size_t round = 0; round < m; ++round) {
    for (TableIndex i = 0; i < m; ++i) {
      for (TableIndex j = 0; j < m; ++j) {
        if (!reach[i][j]) continue;
        for (SymbolId s = 0; s < f.alphabet_size(); ++s) reach[i][f.next(j, s)] = true;
      }
    }
  }
  std::set<TableIndex> out;
  for (TableIndex j = 0; j < m; ++j) {
    bool all = true;
    for (TableIndex i = 0; i < m; ++i) all = all && reach[i][j];
    if (all) out.insert(j);
  }
  return out;
}

inline SymbolString concat_syms(SymbolString a, const SymbolString& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace fixtures
