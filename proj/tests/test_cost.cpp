#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace delaycode;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

CodeTuple random_irreducible(std::mt19937_64& rng) {
  for (;;) {
    CodeTuple f = fixtures::random_tuple(rng);
    if (is_irreducible(f)) return f;
  }
}

CodeTuple with_successors(const CodeTuple& f, const std::vector<std::vector<TableIndex>>& next) {
  std::vector<CodeTable> tables;
  for (TableIndex i = 0; i < f.size(); ++i) {
    CodeTable t;
    for (SymbolId s = 0; s < f.alphabet_size(); ++s) t.push_back({f.codeword(i, s), next[i][s]});
    tables.push_back(t);
  }
  return CodeTuple(f.alphabet(), tables);
}

}  // namespace

TEST(TableLengthTest, Examples) {
  const SourceDistribution mu = fixtures::mu();
  EXPECT_EQ(table_length(fixtures::alpha(), mu, 0), r(13, 5));
  EXPECT_EQ(table_length(fixtures::alpha(), mu, 1), r(37, 10));
  EXPECT_EQ(table_length(fixtures::alpha(), mu, 2), r(21, 5));
  EXPECT_EQ(table_length(fixtures::single_table({"-", "-", "-", "-"}), mu, 0), r(0));
  EXPECT_THROW(table_length(fixtures::alpha(), mu, 3), IndexOutOfRange);
}

TEST(AverageLengthTest, Examples) {
  const SourceDistribution mu = fixtures::mu();
  EXPECT_EQ(average_length(fixtures::alpha(), mu), r(809, 200));
  EXPECT_EQ(average_length(fixtures::delta(), mu), r(28, 15));
  EXPECT_EQ(average_length(fixtures::gamma(), mu), r(586, 295));
  EXPECT_EQ(average_length(fixtures::single_table({"00", "01", "10", "11"}), mu), r(2));
  EXPECT_THROW(average_length(fixtures::beta(), mu), NonRegular);
  EXPECT_THROW(average_length(fixtures::alpha(), SourceDistribution({r(1, 2), r(1, 2)})), InvalidDistribution);
}

TEST(BiasVectorTest, Examples) {
  const SourceDistribution mu = fixtures::mu();
  EXPECT_EQ(bias_vector(fixtures::delta(), mu), (std::vector<Rational>{r(0), r(5, 12)}));
  EXPECT_EQ(bias_vector(fixtures::alpha(), mu), (std::vector<Rational>{r(0), r(11, 8), r(117, 40)}));
  EXPECT_EQ(bias_vector(fixtures::single_table({"0", "10", "110", "111"}), mu), (std::vector<Rational>{r(0)}));
  EXPECT_THROW(bias_vector(fixtures::gamma(), mu), NonIrreducible);
  EXPECT_THROW(bias_vector(fixtures::beta(), mu), NonIrreducible);
}

TEST(CostProfileTest, Alpha) {
  const CostProfile p = cost_profile(fixtures::alpha(), fixtures::mu());
  EXPECT_EQ(p.table_lengths, (std::vector<Rational>{r(13, 5), r(37, 10), r(21, 5)}));
  EXPECT_EQ(p.average, r(809, 200));
  EXPECT_EQ(p.bias.size(), 3u);
}

TEST(CostProperty, AverageIsStationaryMixture) {
  std::mt19937_64 rng(61);
  for (int n = 0; n < 200; ++n) {
    const CodeTuple f = fixtures::random_tuple(rng);
    if (!is_regular(f)) continue;
    const SourceDistribution mu = fixtures::random_distribution(rng, f.alphabet_size());
    const StationaryVector pi = stationary_distribution(f, mu);
    Rational sum = 0;
    for (TableIndex i = 0; i < f.size(); ++i) sum += pi[i] * table_length(f, mu, i);
    EXPECT_EQ(average_length(f, mu), sum);
  }
}

TEST(CostProperty, BiasResidualVanishes) {
  std::mt19937_64 rng(62);
  for (int n = 0; n < 200; ++n) {
    const CodeTuple f = random_irreducible(rng);
    const SourceDistribution mu = fixtures::random_distribution(rng, f.alphabet_size());
    const std::vector<Rational> h = bias_vector(f, mu);
    EXPECT_EQ(h.front(), 0);
    for (const Rational& x : bias_residual(f, mu, h, average_length(f, mu))) EXPECT_EQ(x, 0);
    // Shifting h by a constant keeps the residual at zero.
    std::vector<Rational> shifted = h;
    for (Rational& x : shifted) x += Rational(7, 3);
    for (const Rational& x : bias_residual(f, mu, shifted, average_length(f, mu))) EXPECT_EQ(x, 0);
  }
}

TEST(CostProperty, RedirectingTowardSmallerBiasNeverLengthens) {
  std::mt19937_64 rng(63);
  int checked = 0;
  for (int n = 0; n < 400; ++n) {
    const CodeTuple f = random_irreducible(rng);
    if (f.size() < 2) continue;
    const SourceDistribution mu = fixtures::random_distribution(rng, f.alphabet_size());
    const std::vector<Rational> h = bias_vector(f, mu);
    std::vector<std::vector<TableIndex>> next(f.size());
    for (TableIndex i = 0; i < f.size(); ++i) {
      for (SymbolId s = 0; s < f.alphabet_size(); ++s) {
        std::vector<TableIndex> options;
        for (TableIndex j = 0; j < f.size(); ++j) {
          if (h[j] <= h[f.next(i, s)]) options.push_back(j);
        }
        next[i].push_back(options[rng() % options.size()]);
      }
    }
    const CodeTuple g = with_successors(f, next);
    if (!is_regular(g)) continue;
    ++checked;
    EXPECT_LE(average_length(g, mu), average_length(f, mu));
  }
  EXPECT_GT(checked, 100);
}

TEST(CostProperty, HomomorphismPreservesLength) {
  std::mt19937_64 rng(64);
  for (int n = 0; n < 200; ++n) {
    const CodeTuple f = fixtures::random_tuple(rng);
    if (!is_regular(f)) continue;
    const SourceDistribution mu = fixtures::random_distribution(rng, f.alphabet_size());
    const auto [part, phi] = irreducible_part(f);
    EXPECT_EQ(average_length(part, mu), average_length(f, mu));
  }
}

TEST(CostProperty, CommonSuffixAddsItsLength) {
  std::mt19937_64 rng(65);
  for (int n = 0; n < 200; ++n) {
    const CodeTuple f = fixtures::random_tuple(rng);
    if (!is_regular(f)) continue;
    const SourceDistribution mu = fixtures::random_distribution(rng, f.alphabet_size());
    const BitString suffix = fixtures::random_word(rng, 3);
    std::vector<CodeTable> tables;
    for (TableIndex i = 0; i < f.size(); ++i) {
      CodeTable t;
      for (SymbolId s = 0; s < f.alphabet_size(); ++s) t.push_back({f.codeword(i, s) + suffix, f.next(i, s)});
      tables.push_back(t);
    }
    const CodeTuple g(f.alphabet(), tables);
    EXPECT_EQ(average_length(g, mu), average_length(f, mu) + static_cast<long>(suffix.size()));
  }
}
