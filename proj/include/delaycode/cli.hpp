#pragma once

// Command-line front end. run_cli returns the process exit code:
// 0 on success, 1 when the requested property does not hold, 2 on usage,
// input or parse errors, 3 when an internal consistency check fails.

#include <CLI11.hpp>

#include <cstddef>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "delaycode/core.hpp"
#include "delaycode/cost.hpp"
#include "delaycode/decodability.hpp"
#include "delaycode/followsets.hpp"
#include "delaycode/io.hpp"
#include "delaycode/markov.hpp"
#include "delaycode/optimality.hpp"
#include "delaycode/reduce.hpp"
#include "delaycode/search.hpp"
#include "delaycode/semantics.hpp"

namespace delaycode {

namespace cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline CodeTuple load_tuple(const std::string& path) {
  try {
    return parse_code_tuple(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline SourceDistribution load_distribution(const std::string& path, const Alphabet& alphabet) {
  try {
    return align_distribution(parse_distribution(read_file(path)), alphabet);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string render_set(const IndexSet& s) {
  std::string out = "{";
  for (TableIndex i : s) out += (out.size() > 1 ? ", " : "") + std::to_string(i);
  return out + "}";
}

inline std::string render_family(const std::vector<WordSet>& family) {
  std::string out = "{";
  for (std::size_t t = 0; t < family.size(); ++t) out += (t ? ", " : "") + family[t].str();
  return out + "}";
}

inline std::string with_decimal(const Rational& r, std::size_t places) {
  return render_rational(r) + " (" + render_decimal(r, places) + ")";
}

inline std::string describe(const DecodabilityWitness& w, const Alphabet& a) {
  std::string out = "condition " + to_string(w.condition) + " at table " + std::to_string(w.table) + ", symbol " +
                    a.name(w.symbol);
  if (w.other) out += " and " + a.name(*w.other);
  return out + ", continuation " + render_bits(w.lookahead);
}

inline BitString parse_bits(const std::string& text) {
  if (text == "-") return {};
  try {
    return BitString(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace cli

/// Runs one CLI invocation; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis toolkit for multi-table k-bit delay decodable codes", "delaycode"};
  app.require_subcommand(1);

  std::string tuple_path;
  std::string dist_path;
  std::size_t delay = 0;
  std::size_t table = 0;
  std::size_t decimals = 6;
  std::size_t jobs = 1;

  auto add_tuple = [&](CLI::App* sub) { sub->add_option("tuple", tuple_path, "code-tuple file")->required(); };
  auto add_delay = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--delay,-k", delay, "decoding delay k in bits");
    if (required) opt->required();
  };
  auto add_dist = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--dist", dist_path, "source distribution file");
    if (required) opt->required();
  };
  auto add_decimals = [&](CLI::App* sub) {
    sub->add_option("--decimals", decimals, "decimal places in rendered numbers")->capture_default_str();
  };

  CLI::App* validate = app.add_subcommand("validate", "check decodability, extendability and regularity");
  add_tuple(validate);
  add_delay(validate, false);

  CLI::App* analyze = app.add_subcommand("analyze", "transition matrix, stationary distribution and lengths");
  add_tuple(analyze);
  add_dist(analyze, true);
  add_decimals(analyze);

  std::string symbols;
  CLI::App* encode = app.add_subcommand("encode", "encode a source string");
  add_tuple(encode);
  encode->add_option("--table", table, "initial table")->capture_default_str();
  encode->add_option("symbols", symbols, "source string such as badb or '-' for the empty string")->required();

  std::string bits;
  CLI::App* decode = app.add_subcommand("decode", "decode a bit string with delay k");
  add_tuple(decode);
  add_delay(decode, true);
  decode->add_option("--table", table, "initial table")->capture_default_str();
  decode->add_option("bits", bits, "bit string or '-' for the empty string")->required();

  std::optional<std::size_t> pk_table;
  std::string prefix;
  bool strict = false;
  CLI::App* pk = app.add_subcommand("pk", "print P^k sets and their family");
  add_tuple(pk);
  add_delay(pk, true);
  pk->add_option("--table", pk_table, "restrict to one table");
  pk->add_option("--prefix", prefix, "bit string b of P^k(b)");
  pk->add_flag("--strict", strict, "print the strict variant P̄^k(b)");

  CLI::App* reduce = app.add_subcommand("reduce", "merge tables with equal P^k sets");
  add_tuple(reduce);
  add_dist(reduce, true);
  add_delay(reduce, true);
  add_decimals(reduce);

  CLI::App* necessary = app.add_subcommand("necessary", "check the two-children condition for optimality");
  add_tuple(necessary);
  add_delay(necessary, true);
  add_dist(necessary, false);

  std::size_t max_tables = 1;
  std::size_t max_len = 4;
  bool exhaustive = false;
  bool no_prune = false;
  std::uint64_t budget = SearchOptions{}.node_budget;
  std::string seed_path;
  CLI::App* search = app.add_subcommand("search", "bounded search for a short admissible code-tuple");
  add_dist(search, true);
  add_delay(search, true);
  add_decimals(search);
  search->add_option("--max-tables", max_tables, "largest number of tables")->capture_default_str();
  search->add_option("--max-len", max_len, "longest codeword in bits")->capture_default_str();
  search->add_flag("--exhaustive", exhaustive, "cover the whole bounded space");
  search->add_flag("--no-prune", no_prune, "disable branch-and-bound cuts");
  search->add_option("--budget", budget, "nodes per shard without --exhaustive (0 = unlimited)")
      ->capture_default_str();
  search->add_option("--seed", seed_path, "code-tuple file used as the starting incumbent");
  search->add_option("--jobs,-j", jobs, "worker threads")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return cli::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return cli::kUsage;
  }

  try {
    if (validate->parsed()) {
      const CodeTuple f = cli::load_tuple(tuple_path);
      const DecodabilityVerdict v = is_k_delay_decodable(f, delay);
      out << "tables: " << f.size() << '\n';
      out << "extendable: " << cli::yes_no(is_extendable(f)) << '\n';
      out << "regular: " << cli::yes_no(is_regular(f)) << '\n';
      out << "irreducible: " << cli::yes_no(is_irreducible(f)) << '\n';
      out << delay << "-bit delay decodable: " << cli::yes_no(v.decodable) << '\n';
      if (v.witness) out << "witness: " << cli::describe(*v.witness, f.alphabet()) << '\n';
      return v.decodable ? cli::kOk : cli::kFailed;
    }

    if (analyze->parsed()) {
      const CodeTuple f = cli::load_tuple(tuple_path);
      const SourceDistribution mu = cli::load_distribution(dist_path, f.alphabet());
      const TransitionMatrix q = transition_matrix(f, mu);
      out << "tables: " << f.size() << '\n';
      out << "Q =\n";
      for (const RationalVector& row : q) {
        out << " ";
        for (const Rational& v : row) out << ' ' << render_rational(v);
        out << '\n';
      }
      const IndexSet r = r_set(f);
      out << "R_F = " << cli::render_set(r) << '\n';
      out << "regular: " << cli::yes_no(!r.empty()) << '\n';
      out << "irreducible: " << cli::yes_no(r.size() == f.size()) << '\n';
      const std::vector<Rational> lengths = table_lengths(f, mu);
      for (TableIndex i = 0; i < f.size(); ++i)
        out << "L_" << i << " = " << cli::with_decimal(lengths[i], decimals) << '\n';
      if (r.empty()) {
        out << "pi: not unique (code-tuple is not regular)\n";
        return cli::kOk;
      }
      out << "pi = " << render_common_denominator(stationary_distribution(f, mu)) << '\n';
      out << "L = " << cli::with_decimal(average_length(f, mu), decimals) << '\n';
      if (r.size() == f.size()) {
        out << "h =";
        for (const Rational& v : bias_vector(f, mu)) out << ' ' << render_rational(v);
        out << '\n';
      }
      return cli::kOk;
    }

    if (encode->parsed()) {
      const CodeTuple f = cli::load_tuple(tuple_path);
      const SymbolString x = symbols == "-" ? SymbolString{} : f.alphabet().parse(symbols);
      const EncodeResult e = encode_star(f, table, x);
      out << "codeword: " << render_bits(e.codeword) << '\n';
      out << "final table: " << e.final_table << '\n';
      return cli::kOk;
    }

    if (decode->parsed()) {
      const CodeTuple f = cli::load_tuple(tuple_path);
      const DecodeResult d = decode_delayed(f, table, delay, cli::parse_bits(bits));
      out << "decoded: " << (d.decoded.empty() ? "λ" : f.alphabet().render(d.decoded)) << '\n';
      out << "bits consumed: " << d.bits_consumed << '\n';
      out << "ambiguous tail: " << cli::yes_no(d.ambiguous_tail) << '\n';
      return cli::kOk;
    }

    if (pk->parsed()) {
      const CodeTuple f = cli::load_tuple(tuple_path);
      const BitString b = cli::parse_bits(prefix);
      if (pk_table) require_table(f, *pk_table);
      const FollowSetTable w = build_follow_sets(f, delay);
      const std::string name = std::string(strict ? "Pbar^" : "P^") + std::to_string(delay);
      const std::string arg = prefix.empty() ? "" : "(" + render_bits(b) + ")";
      for (TableIndex i = 0; i < f.size(); ++i) {
        if (pk_table && *pk_table != i) continue;
        const WordSet s = strict ? pbar_set(f, w, i, delay, b) : pk_set(f, w, i, delay, b);
        out << name << "_" << i << arg << " = " << s.str() << '\n';
      }
      if (!pk_table && prefix.empty() && !strict) out << "family = " << cli::render_family(pk_family(f, delay)) << '\n';
      return cli::kOk;
    }

    if (reduce->parsed()) {
      const CodeTuple f = cli::load_tuple(tuple_path);
      const SourceDistribution mu = cli::load_distribution(dist_path, f.alphabet());
      const ReductionResult res = reduce_to_distinct(f, mu, delay);
      auto list = [](const std::vector<TableIndex>& v) {
        std::string s = "{";
        for (std::size_t t = 0; t < v.size(); ++t) s += (t ? ", " : "") + std::to_string(v[t]);
        return s + "}";
      };
      for (std::size_t n = 0; n < res.trace.steps.size(); ++n) {
        const ReductionStep& st = res.trace.steps[n];
        out << "step " << n + 1 << ": dropped " << list(st.dropped) << ", merged " << list(st.merged_class)
            << " into " << st.representative << ", L " << cli::with_decimal(st.length_before, decimals) << " -> "
            << cli::with_decimal(st.length_after, decimals) << '\n';
      }
      out << "final: dropped " << list(res.trace.final_dropped) << '\n';
      out << "L = " << cli::with_decimal(average_length(res.tuple, mu), decimals) << '\n';
      out << "family = " << cli::render_family(pk_family(res.tuple, delay)) << '\n';
      out << serialize_code_tuple(res.tuple);
      return cli::kOk;
    }

    if (necessary->parsed()) {
      const CodeTuple f = cli::load_tuple(tuple_path);
      if (!dist_path.empty()) cli::load_distribution(dist_path, f.alphabet());
      const OptimalityVerdict v = check_necessary_condition(f, delay);
      out << "necessary condition: " << (v.passes ? "pass" : "fail") << '\n';
      if (v.witness)
        out << "witness: table " << v.witness->table << ", unachievable " << render_bits(v.witness->bits) << '\n';
      return v.passes ? cli::kOk : cli::kFailed;
    }

    if (search->parsed()) {
      const DistributionDocument doc = parse_distribution(cli::read_file(dist_path));
      SearchOptions options;
      options.jobs = jobs;
      options.prune = !no_prune;
      options.node_budget = budget;
      if (!seed_path.empty()) options.seed = cli::load_tuple(seed_path);
      const SearchBounds bounds{max_tables, max_len, exhaustive};
      const SearchResult res = search_optimal(doc.alphabet, doc.distribution, delay, bounds, options);
      out << "L = " << cli::with_decimal(res.best_length, decimals) << '\n';
      out << "explored: " << res.explored << '\n';
      out << "complete: " << cli::yes_no(res.complete) << '\n';
      out << serialize_code_tuple(res.best);
      return cli::kOk;
    }
  } catch (const cli::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return cli::kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return cli::kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return cli::kInternal;
  } catch (const NotDecodable& e) {
    err << "error: " << e.what() << '\n';
    return cli::kFailed;
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << '\n';
    return cli::kFailed;
  } catch (const InfeasibleBounds& e) {
    err << "error: " << e.what() << '\n';
    return cli::kFailed;
  } catch (const NonRegular& e) {
    err << "error: " << e.what() << '\n';
    return cli::kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return cli::kUsage;
  }
  return cli::kUsage;
}

}  // namespace delaycode
