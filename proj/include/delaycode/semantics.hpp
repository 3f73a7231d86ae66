#pragma once

// Encoding with f*_i / τ*_i and delayed decoding of a finite bit string.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "delaycode/core.hpp"
#include "delaycode/decodability.hpp"

namespace delaycode {

struct EncodeResult {
  BitString codeword;
  TableIndex final_table = 0;

  friend bool operator==(const EncodeResult&, const EncodeResult&) = default;
};

/// f*_i(x) and τ*_i(x).
inline EncodeResult encode_star(const CodeTuple& f, TableIndex i, const SymbolString& x) {
  require_table(f, i);
  EncodeResult out{{}, i};
  for (SymbolId s : x) {
    if (s >= f.alphabet_size()) throw IndexOutOfRange("symbol index " + std::to_string(s) + " out of range");
    out.codeword.append(f.codeword(out.final_table, s));
    out.final_table = f.next(out.final_table, s);
  }
  return out;
}

struct DecodeResult {
  SymbolString decoded;
  std::size_t bits_consumed = 0;
  bool ambiguous_tail = false;

  friend bool operator==(const DecodeResult&, const DecodeResult&) = default;
};

namespace detail {

/// Parses of c from table i as a graph over (bit position, table) nodes.
/// Edge (p, j) --s--> (p + |f_j(s)|, τ_j(s)) exists when f_j(s) occurs in c at p.
/// With `overhang`, a codeword that runs past the end of c while agreeing with
/// the remaining bits leads to an extra terminal node.
class ParseGraph {
 public:
  ParseGraph(const CodeTuple& f, const BitString& c, bool overhang)
      : f_(f), c_(c), m_(f.size()), end_(overhang ? (c.size() + 1) * f.size() : npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t node(std::size_t pos, TableIndex t) const { return pos * m_ + t; }
  std::size_t pos(std::size_t n) const { return n == end_ ? c_.size() : n / m_; }
  std::size_t count() const { return (c_.size() + 1) * m_ + (end_ == npos ? 0 : 1); }
  bool accepting(std::size_t n) const { return end_ == npos ? n / m_ == c_.size() : n == end_; }
  bool is_end(std::size_t n) const { return n == end_; }

  /// Target of the edge labelled s out of n, or npos.
  std::size_t edge(std::size_t n, SymbolId s) const {
    if (n == end_) return npos;
    const std::size_t p = n / m_;
    const TableIndex t = n % m_;
    const BitString& w = f_.codeword(t, s);
    const std::size_t left = c_.size() - p;
    const std::size_t overlap = std::min(left, w.size());
    for (std::size_t q = 0; q < overlap; ++q) {
      if (w[q] != c_[p + q]) return npos;
    }
    if (w.size() <= left) return node(p + w.size(), f_.next(t, s));
    return end_;
  }

  /// Nodes from which an accepting node is reachable.
  std::vector<bool> useful() const {
    const std::size_t n = count();
    std::vector<std::vector<std::size_t>> reverse(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (SymbolId s = 0; s < f_.alphabet_size(); ++s) {
        const std::size_t v = edge(u, s);
        if (v != npos) reverse[v].push_back(u);
      }
    }
    std::vector<bool> good(n, false);
    std::vector<std::size_t> stack;
    for (std::size_t u = 0; u < n; ++u) {
      if (accepting(u)) {
        good[u] = true;
        stack.push_back(u);
      }
    }
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u : reverse[v]) {
        if (!good[u]) {
          good[u] = true;
          stack.push_back(u);
        }
      }
    }
    return good;
  }

 private:
  const CodeTuple& f_;
  const BitString& c_;
  std::size_t m_;
  std::size_t end_;
};

}  // namespace detail

/// Decodes the longest source prefix that every parse of c agrees on.
///
/// Parses that consume c exactly are preferred. When none exist, parses whose
/// last codeword runs past the end of c are used instead; the symbol of that
/// last codeword is never emitted.
inline DecodeResult decode_delayed(const CodeTuple& f, TableIndex i, std::size_t k, const BitString& c) {
  require_table(f, i);
  if (const DecodabilityVerdict v = is_k_delay_decodable(f, k); !v.decodable)
    throw NotDecodable("code-tuple is not " + std::to_string(k) + "-bit delay decodable");

  for (bool overhang : {false, true}) {
    const detail::ParseGraph g(f, c, overhang);
    const std::vector<bool> good = g.useful();
    std::size_t cur = g.node(0, i);
    if (!good[cur]) continue;

    DecodeResult out;
    std::vector<bool> visited(g.count(), false);
    while (!g.accepting(cur) && !visited[cur]) {
      visited[cur] = true;
      std::size_t choices = 0;
      SymbolId pick = 0;
      std::size_t target = 0;
      for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
        const std::size_t v = g.edge(cur, s);
        if (v != detail::ParseGraph::npos && good[v]) {
          ++choices;
          pick = s;
          target = v;
        }
      }
      if (choices != 1 || g.is_end(target)) break;
      out.decoded.push_back(pick);
      cur = target;
    }
    out.bits_consumed = g.pos(cur);
    bool more = false;
    for (SymbolId s = 0; s < f.alphabet_size() && !more; ++s) {
      const std::size_t v = g.edge(cur, s);
      more = v != detail::ParseGraph::npos && good[v];
    }
    out.ambiguous_tail = overhang || out.bits_consumed < c.size() || more;
    return out;
  }
  throw InconsistentBits("bit string is not a prefix of any encoding from table " + std::to_string(i));
}

}  // namespace delaycode
