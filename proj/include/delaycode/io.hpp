#pragma once

// Text formats for code-tuples and source distributions, and rendering of
// exact rationals.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "delaycode/core.hpp"

namespace delaycode {

inline constexpr std::string_view kTupleHeader = "delaycode-tuple 1";
inline constexpr std::string_view kDistHeader = "delaycode-dist 1";

namespace detail {

/// Non-empty lines with comments stripped, split into whitespace-separated fields.
struct Line {
  std::size_t number;
  std::vector<std::string> fields;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::vector<std::string> fields;
    for (std::string f; in >> f;) fields.push_back(f);
    if (!fields.empty()) out.push_back({number, std::move(fields)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (const std::string& f : fields) out += (out.empty() ? "" : " ") + f;
  return out;
}

inline std::size_t parse_index(const std::string& text, std::size_t line, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line, std::string("expected ") + what + ", got '" + text + "'");
  if (text.size() > 9) throw ParseError(line, std::string(what) + " too large");
  return std::stoul(text);
}

inline void expect_header(const std::vector<Line>& lines, std::string_view header) {
  if (lines.empty()) throw ParseError(1, "empty document");
  if (join(lines.front().fields) != header)
    throw ParseError(lines.front().number, "expected header '" + std::string(header) + "'");
}

}  // namespace detail

/// Reads the tuple format:
///
///     delaycode-tuple 1
///     alphabet a b c d
///     tables 2
///     table 0
///     a 100 -> 0
///     b - -> 1        # '-' is the empty codeword
///     ...
inline CodeTuple parse_code_tuple(std::string_view text) {
  const std::vector<detail::Line> lines = detail::tokenize(text);
  detail::expect_header(lines, kTupleHeader);
  std::size_t idx = 1;
  auto eof_line = [&] { return lines.back().number + 1; };

  if (idx >= lines.size() || lines[idx].fields.front() != "alphabet")
    throw ParseError(idx < lines.size() ? lines[idx].number : eof_line(), "expected 'alphabet' line");
  std::vector<std::string> names(lines[idx].fields.begin() + 1, lines[idx].fields.end());
  Alphabet alphabet;
  try {
    alphabet = Alphabet(names);
  } catch (const InvalidCodeTuple& e) {
    throw ParseError(lines[idx].number, e.what());
  }
  ++idx;

  if (idx >= lines.size() || lines[idx].fields.front() != "tables" || lines[idx].fields.size() != 2)
    throw ParseError(idx < lines.size() ? lines[idx].number : eof_line(), "expected 'tables N' line");
  const std::size_t m = detail::parse_index(lines[idx].fields[1], lines[idx].number, "table count");
  if (m == 0) throw ParseError(lines[idx].number, "table count must be positive");
  ++idx;

  std::vector<CodeTable> tables;
  for (TableIndex i = 0; i < m; ++i) {
    if (idx >= lines.size()) throw ParseError(eof_line(), "missing 'table " + std::to_string(i) + "'");
    const detail::Line& head = lines[idx];
    if (head.fields.size() != 2 || head.fields[0] != "table" ||
        detail::parse_index(head.fields[1], head.number, "table index") != i)
      throw ParseError(head.number, "expected 'table " + std::to_string(i) + "'");
    ++idx;
    std::vector<std::optional<CodeEntry>> rows(alphabet.size());
    while (idx < lines.size() && lines[idx].fields.front() != "table") {
      const detail::Line& row = lines[idx];
      std::vector<std::string> f = row.fields;
      if (f.size() == 4 && f[2] == "->") f.erase(f.begin() + 2);
      if (f.size() != 3) throw ParseError(row.number, "expected 'symbol codeword -> next'");
      if (!alphabet.contains(f[0])) throw ParseError(row.number, "unknown symbol '" + f[0] + "'");
      const SymbolId s = alphabet.index(f[0]);
      if (rows[s]) throw ParseError(row.number, "duplicate row for symbol '" + f[0] + "'");
      BitString word;
      if (f[1] != "-") {
        if (!std::all_of(f[1].begin(), f[1].end(), [](char c) { return c == '0' || c == '1'; }))
          throw ParseError(row.number, "codeword '" + f[1] + "' is not a bit string");
        word = BitString(f[1]);
      }
      const std::size_t next = detail::parse_index(f[2], row.number, "next table index");
      if (next >= m)
        throw ParseError(row.number, "next table index " + std::to_string(next) + " out of range for " +
                                         std::to_string(m) + " tables");
      rows[s] = CodeEntry{std::move(word), next};
      ++idx;
    }
    CodeTable table;
    for (SymbolId s = 0; s < alphabet.size(); ++s) {
      if (!rows[s])
        throw ParseError(idx < lines.size() ? lines[idx].number : eof_line(),
                         "table " + std::to_string(i) + " has no row for symbol '" + alphabet.name(s) + "'");
      table.push_back(*rows[s]);
    }
    tables.push_back(std::move(table));
  }
  if (idx < lines.size()) throw ParseError(lines[idx].number, "unexpected content after the last table");
  return CodeTuple(std::move(alphabet), std::move(tables));
}

inline std::string serialize_code_tuple(const CodeTuple& f) {
  std::ostringstream out;
  out << kTupleHeader << "\nalphabet";
  for (const std::string& name : f.alphabet().names()) out << ' ' << name;
  out << "\ntables " << f.size() << '\n';
  for (TableIndex i = 0; i < f.size(); ++i) {
    out << "table " << i << '\n';
    for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
      const BitString& w = f.codeword(i, s);
      out << f.alphabet().name(s) << ' ' << (w.empty() ? "-" : w.str()) << " -> " << f.next(i, s) << '\n';
    }
  }
  return out.str();
}

/// Exact value of "p/q", an integer, or a decimal such as "0.125".
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw Error("malformed fraction '" + std::string(text) + "'");
    const Integer d(std::string{den});
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    return Rational(Integer(std::string{num}), d);
  }
  const std::size_t dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !digits(whole)) || (!frac.empty() && !digits(frac)) ||
      (dot != std::string_view::npos && frac.empty()))
    throw Error("malformed number '" + std::string(text) + "'");
  Integer scale = 1;
  for (std::size_t t = 0; t < frac.size(); ++t) scale *= 10;
  const Integer w = whole.empty() ? Integer(0) : Integer(std::string{whole});
  const Integer f = frac.empty() ? Integer(0) : Integer(std::string{frac});
  return Rational(w * scale + f, scale);
}

struct DistributionDocument {
  Alphabet alphabet;
  SourceDistribution distribution;
};

/// Reads "delaycode-dist 1" followed by one "symbol probability" line per symbol.
inline DistributionDocument parse_distribution(std::string_view text) {
  const std::vector<detail::Line> lines = detail::tokenize(text);
  detail::expect_header(lines, kDistHeader);
  std::vector<std::string> names;
  std::vector<Rational> probs;
  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const detail::Line& row = lines[idx];
    if (row.fields.size() != 2) throw ParseError(row.number, "expected 'symbol probability'");
    if (std::find(names.begin(), names.end(), row.fields[0]) != names.end())
      throw ParseError(row.number, "duplicate symbol '" + row.fields[0] + "'");
    names.push_back(row.fields[0]);
    try {
      probs.push_back(parse_rational(row.fields[1]));
    } catch (const Error& e) {
      throw ParseError(row.number, e.what());
    }
  }
  const std::size_t last = lines.back().number;
  try {
    Alphabet alphabet(std::move(names));
    SourceDistribution mu(std::move(probs));
    return {std::move(alphabet), std::move(mu)};
  } catch (const Error& e) {
    throw ParseError(last, e.what());
  }
}

/// Reorders a distribution to follow `alphabet`; both must name the same symbols.
inline SourceDistribution align_distribution(const DistributionDocument& doc, const Alphabet& alphabet) {
  if (doc.alphabet.size() != alphabet.size())
    throw InvalidDistribution("distribution and code-tuple alphabets differ in size");
  std::vector<Rational> probs;
  for (const std::string& name : alphabet.names()) {
    if (!doc.alphabet.contains(name)) throw InvalidDistribution("distribution has no symbol '" + name + "'");
    probs.push_back(doc.distribution[doc.alphabet.index(name)]);
  }
  return SourceDistribution(std::move(probs));
}

inline std::string serialize_distribution(const Alphabet& alphabet, const SourceDistribution& mu) {
  std::string out = std::string(kDistHeader) + "\n";
  for (SymbolId s = 0; s < alphabet.size(); ++s) out += alphabet.name(s) + " " + mu[s].str() + "\n";
  return out;
}

/// "809/200", or "2" for integers.
inline std::string render_rational(const Rational& r) { return r.str(); }

/// Fixed-point rendering with `places` decimals, rounded half away from zero,
/// trailing zeros dropped.
inline std::string render_decimal(const Rational& r, std::size_t places = 6) {
  Integer scale = 1;
  for (std::size_t t = 0; t < places; ++t) scale *= 10;
  const bool negative = r < 0;
  const Rational a = negative ? Rational(-r) : r;
  const Integer num = numerator(a) * scale * 2 + denominator(a);
  const Integer scaled = num / (denominator(a) * 2);
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string whole = digits.substr(0, digits.size() - places);
  std::string frac = digits.substr(digits.size() - places);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative && scaled != 0 ? "-" : "") + whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

/// Renders the vector over its least common denominator: "1/20 3/20 16/20".
inline std::string render_common_denominator(const std::vector<Rational>& v) {
  Integer den = 1;
  for (const Rational& r : v) den = boost::multiprecision::lcm(den, denominator(r));
  std::string out;
  for (const Rational& r : v) {
    const Integer num = numerator(r) * (den / denominator(r));
    if (!out.empty()) out += ' ';
    out += den == 1 || num == 0 ? num.str() : num.str() + "/" + den.str();
  }
  return out;
}

/// Bit string for reports; the empty string shows as "λ".
inline std::string render_bits(const BitString& b) { return b.empty() ? "λ" : b.str(); }

}  // namespace delaycode
