#pragma once

// Foundational value types: bit strings, symbol strings, exact rationals,
// alphabets, code-tuples and source distributions.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "delaycode/errors.hpp"

namespace delaycode {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using SymbolId = std::size_t;
using TableIndex = std::size_t;

/// A finite sequence of source symbols, stored as alphabet indices.
using SymbolString = std::vector<SymbolId>;

/// A finite sequence over {0, 1}. Equality and hashing are bitwise; the
/// ordering is shortlex (shorter first, then lexicographic).
class BitString {
 public:
  BitString() = default;

  /// Parses a string of '0'/'1'. The empty string denotes the empty sequence.
  explicit BitString(std::string_view text) {
    bits_.reserve(text.size());
    for (char ch : text) {
      if (ch == '0') {
        bits_.push_back(false);
      } else if (ch == '1') {
        bits_.push_back(true);
      } else {
        throw Error(std::string("invalid bit character '") + ch + "'");
      }
    }
  }

  BitString(std::initializer_list<int> bits) {
    for (int b : bits) bits_.push_back(b != 0);
  }

  /// The `length` low bits of `value`, most significant first.
  static BitString from_value(std::uint64_t value, std::size_t length) {
    BitString out;
    out.bits_.resize(length);
    for (std::size_t t = 0; t < length; ++t) out.bits_[t] = ((value >> (length - 1 - t)) & 1U) != 0;
    return out;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t pos) const { return bits_[pos]; }

  void push_back(bool bit) { bits_.push_back(bit); }

  BitString& append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    return *this;
  }

  friend BitString operator+(BitString lhs, const BitString& rhs) { return std::move(lhs.append(rhs)); }

  /// First `n` bits; `n` is clamped to the length.
  BitString prefix(std::size_t n) const {
    BitString out;
    n = std::min(n, size());
    out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
  }

  /// Bits from `pos` to the end.
  BitString substr(std::size_t pos) const {
    BitString out;
    if (pos < size()) out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos), bits_.end());
    return out;
  }

  /// Big-endian integer value. Only meaningful for at most 64 bits.
  std::uint64_t value() const noexcept {
    std::uint64_t v = 0;
    for (bool b : bits_) v = (v << 1U) | static_cast<std::uint64_t>(b);
    return v;
  }

  /// '0'/'1' characters; the empty sequence renders as "".
  std::string str() const {
    std::string out;
    out.reserve(size());
    for (bool b : bits_) out.push_back(b ? '1' : '0');
    return out;
  }

  std::size_t hash() const noexcept { return std::hash<std::vector<bool>>{}(bits_); }

  friend bool operator==(const BitString&, const BitString&) = default;

  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t t = 0; t < a.size(); ++t) {
      if (a.bits_[t] != b.bits_[t]) return a.bits_[t] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<bool> bits_;
};

/// x ⪯ y: x is a (possibly equal) prefix of y.
template <class Seq>
bool is_prefix(const Seq& x, const Seq& y) {
  if (x.size() > y.size()) return false;
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (x[t] != y[t]) return false;
  }
  return true;
}

/// x ≺ y: x is a proper prefix of y.
template <class Seq>
bool is_strict_prefix(const Seq& x, const Seq& y) {
  return x.size() < y.size() && is_prefix(x, y);
}

/// The unique z with x·z = y. Throws NotAPrefix when x is not a prefix of y.
inline BitString strip_prefix(const BitString& x, const BitString& y) {
  if (!is_prefix(x, y)) throw NotAPrefix();
  return y.substr(x.size());
}

inline SymbolString strip_prefix(const SymbolString& x, const SymbolString& y) {
  if (!is_prefix(x, y)) throw NotAPrefix();
  return SymbolString(y.begin() + static_cast<std::ptrdiff_t>(x.size()), y.end());
}

/// Drops the last element.
inline BitString pref(const BitString& x) {
  if (x.empty()) throw EmptySequence();
  return x.prefix(x.size() - 1);
}

/// Drops the first element.
inline BitString suff(const BitString& x) {
  if (x.empty()) throw EmptySequence();
  return x.substr(1);
}

inline SymbolString pref(const SymbolString& x) {
  if (x.empty()) throw EmptySequence();
  return SymbolString(x.begin(), x.end() - 1);
}

inline SymbolString suff(const SymbolString& x) {
  if (x.empty()) throw EmptySequence();
  return SymbolString(x.begin() + 1, x.end());
}

inline SymbolString concat(SymbolString x, const SymbolString& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

/// Ordered source alphabet. Symbols are indices 0..σ-1; names are I/O labels.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 2) throw InvalidCodeTuple("alphabet needs at least two symbols");
    for (SymbolId s = 0; s < names_.size(); ++s) {
      const std::string& name = names_[s];
      if (name.empty()) throw InvalidCodeTuple("empty symbol name");
      if (name.find_first_of(" \t\r\n#") != std::string::npos)
        throw InvalidCodeTuple("symbol name '" + name + "' contains whitespace or '#'");
      if (!index_.emplace(name, s).second) throw InvalidCodeTuple("duplicate symbol name '" + name + "'");
    }
  }

  Alphabet(std::initializer_list<const char*> names) : Alphabet(std::vector<std::string>(names.begin(), names.end())) {}

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(SymbolId s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

  SymbolId index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw IndexOutOfRange("unknown symbol '" + std::string(name) + "'");
    return it->second;
  }

  /// True when every name is a single character, so strings can be written unseparated.
  bool single_char_names() const {
    return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
  }

  /// Parses "badb" (single-character alphabets) or "b a d b".
  SymbolString parse(std::string_view text) const {
    SymbolString out;
    if (text.find(' ') == std::string_view::npos && single_char_names()) {
      for (char ch : text) out.push_back(index(std::string_view(&ch, 1)));
      return out;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && text[pos] == ' ') ++pos;
      std::size_t end = text.find(' ', pos);
      if (end == std::string_view::npos) end = text.size();
      if (end > pos) out.push_back(index(text.substr(pos, end - pos)));
      pos = end;
    }
    return out;
  }

  std::string render(const SymbolString& x) const {
    std::string out;
    const bool compact = single_char_names();
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (!compact && t > 0) out.push_back(' ');
      out += name(x[t]);
    }
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> index_;
};

/// One row of a code table: the codeword of a symbol and the index of the
/// table used for the following symbol.
struct CodeEntry {
  BitString codeword;
  TableIndex next = 0;

  friend bool operator==(const CodeEntry&, const CodeEntry&) = default;
};

using CodeTable = std::vector<CodeEntry>;

/// An m-code-tuple: m code tables f_i and m successor maps τ_i over a shared
/// alphabet. Immutable once constructed.
class CodeTuple {
 public:
  CodeTuple(Alphabet alphabet, std::vector<CodeTable> tables)
      : alphabet_(std::move(alphabet)), tables_(std::move(tables)) {
    if (alphabet_.size() < 2) throw InvalidCodeTuple("alphabet needs at least two symbols");
    if (tables_.empty()) throw InvalidCodeTuple("a code-tuple needs at least one table");
    for (TableIndex i = 0; i < tables_.size(); ++i) {
      if (tables_[i].size() != alphabet_.size())
        throw InvalidCodeTuple("table " + std::to_string(i) + " does not define every symbol");
      for (const CodeEntry& e : tables_[i]) {
        if (e.next >= tables_.size())
          throw InvalidCodeTuple("table " + std::to_string(i) + " has successor " + std::to_string(e.next) +
                                 " out of range");
      }
    }
  }

  /// Number of tables |F|.
  std::size_t size() const noexcept { return tables_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  const CodeTable& table(TableIndex i) const { return tables_.at(i); }
  const std::vector<CodeTable>& tables() const noexcept { return tables_; }

  const BitString& codeword(TableIndex i, SymbolId s) const { return tables_.at(i).at(s).codeword; }
  TableIndex next(TableIndex i, SymbolId s) const { return tables_.at(i).at(s).next; }

  friend bool operator==(const CodeTuple& a, const CodeTuple& b) {
    return a.alphabet_ == b.alphabet_ && a.tables_ == b.tables_;
  }

 private:
  Alphabet alphabet_;
  std::vector<CodeTable> tables_;
};

/// Row shorthand for building tuples in code: {"0100", 2}; "" or "-" is λ.
struct RowSpec {
  std::string_view codeword;
  TableIndex next;
};

inline CodeTuple make_code_tuple(Alphabet alphabet, const std::vector<std::vector<RowSpec>>& rows) {
  std::vector<CodeTable> tables;
  tables.reserve(rows.size());
  for (const auto& table_rows : rows) {
    CodeTable table;
    for (const RowSpec& r : table_rows) {
      table.push_back({r.codeword == "-" ? BitString() : BitString(r.codeword), r.next});
    }
    tables.push_back(std::move(table));
  }
  return CodeTuple(std::move(alphabet), std::move(tables));
}

/// Exact positive probabilities, one per symbol, summing to exactly 1.
class SourceDistribution {
 public:
  explicit SourceDistribution(std::vector<Rational> probs) : probs_(std::move(probs)) {
    if (probs_.size() < 2) throw InvalidDistribution("distribution needs at least two symbols");
    Rational total = 0;
    for (const Rational& p : probs_) {
      if (p <= 0) throw InvalidDistribution("probabilities must be positive");
      total += p;
    }
    if (total != 1) throw InvalidDistribution("probabilities sum to " + total.str() + ", not 1");
  }

  std::size_t size() const noexcept { return probs_.size(); }
  const Rational& operator[](SymbolId s) const { return probs_.at(s); }
  const std::vector<Rational>& probs() const noexcept { return probs_; }
  friend bool operator==(const SourceDistribution&, const SourceDistribution&) = default;

 private:
  std::vector<Rational> probs_;
};

inline void require_table(const CodeTuple& f, TableIndex i) {
  if (i >= f.size())
    throw IndexOutOfRange("table index " + std::to_string(i) + " out of range for " + std::to_string(f.size()) +
                          " tables");
}

inline void require_matching(const CodeTuple& f, const SourceDistribution& mu) {
  if (mu.size() != f.alphabet_size()) throw InvalidDistribution("distribution size does not match the alphabet");
}

}  // namespace delaycode

template <>
struct std::hash<delaycode::BitString> {
  std::size_t operator()(const delaycode::BitString& b) const noexcept { return b.hash(); }
};
