#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace delaycode;
using fixtures::bits;

TEST(BitStringTest, ParsesAndRenders) {
  EXPECT_EQ(bits("0100").str(), "0100");
  EXPECT_EQ(bits("").size(), 0u);
  EXPECT_THROW(BitString("012"), Error);
  EXPECT_EQ(BitString::from_value(5, 4), bits("0101"));
  EXPECT_EQ(bits("0101").value(), 5u);
}

TEST(BitStringTest, ShortlexOrder) {
  EXPECT_LT(bits(""), bits("1"));
  EXPECT_LT(bits("1"), bits("00"));
  EXPECT_LT(bits("01"), bits("10"));
  EXPECT_EQ(bits("10") <=> bits("10"), std::strong_ordering::equal);
}

TEST(PrefixTest, IsPrefixExamples) {
  EXPECT_TRUE(is_prefix(bits(""), bits("10")));
  EXPECT_TRUE(is_prefix(bits("01"), bits("0100")));
  EXPECT_FALSE(is_prefix(bits("10"), bits("01")));
  EXPECT_TRUE(is_strict_prefix(bits("01"), bits("0100")));
  EXPECT_FALSE(is_strict_prefix(bits("01"), bits("01")));
}

TEST(PrefixTest, StripPrefixExamples) {
  EXPECT_EQ(strip_prefix(bits("10"), bits("1000")), bits("00"));
  EXPECT_EQ(strip_prefix(bits("00"), bits("00111")), bits("111"));
  EXPECT_EQ(strip_prefix(bits("0110"), bits("0110")), bits(""));
  EXPECT_THROW(strip_prefix(bits("11"), bits("1000")), NotAPrefix);
}

TEST(PrefixTest, PrefSuff) {
  EXPECT_EQ(pref(bits("110")), bits("11"));
  EXPECT_EQ(pref(bits("0")), bits(""));
  EXPECT_THROW(pref(bits("")), EmptySequence);
  EXPECT_THROW(suff(bits("")), EmptySequence);
  const Alphabet a = fixtures::abcd();
  EXPECT_EQ(a.render(suff(a.parse("badb"))), "adb");
  EXPECT_EQ(a.render(pref(a.parse("badb"))), "bad");
  EXPECT_THROW(suff(SymbolString{}), EmptySequence);
}

TEST(PrefixProperty, PartialOrderAndRoundTrip) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 2000; ++n) {
    const BitString x = fixtures::random_word(rng, 3);
    const BitString y = x + fixtures::random_word(rng, 2);
    const BitString z = fixtures::random_word(rng, 1) == bits("") ? y : y + fixtures::random_word(rng, 2);
    EXPECT_TRUE(is_prefix(x, x));
    EXPECT_TRUE(is_prefix(x, y));
    EXPECT_TRUE(is_prefix(y, z));
    EXPECT_TRUE(is_prefix(x, z));
    EXPECT_EQ(x + strip_prefix(x, y), y);
    EXPECT_EQ(strip_prefix(x, x), bits(""));
    // (xy)⁻¹z = y⁻¹x⁻¹z
    const BitString rest = strip_prefix(x, y);
    EXPECT_EQ(strip_prefix(x + rest, z), strip_prefix(rest, strip_prefix(x, z)));
    const BitString u = fixtures::random_word(rng, 3);
    if (is_prefix(x, u) && is_prefix(u, x)) {
      EXPECT_EQ(x, u);
    }
    if (!x.empty()) {
      EXPECT_EQ(pref(x) + x.substr(x.size() - 1), x);
      EXPECT_EQ(x.prefix(1) + suff(x), x);
    }
  }
}

TEST(AlphabetTest, RejectsBadNames) {
  EXPECT_THROW(Alphabet({"a"}), InvalidCodeTuple);
  EXPECT_THROW(Alphabet({"a", "a"}), InvalidCodeTuple);
  EXPECT_THROW(Alphabet({"a", "b c"}), InvalidCodeTuple);
  const Alphabet multi({"x1", "x2"});
  EXPECT_EQ(multi.parse("x2 x1"), (SymbolString{1, 0}));
  EXPECT_EQ(multi.render({1, 0}), "x2 x1");
}

TEST(CodeTupleTest, Validation) {
  EXPECT_THROW(CodeTuple(fixtures::abcd(), {}), InvalidCodeTuple);
  EXPECT_THROW(make_code_tuple(fixtures::abcd(), {{{"0", 0}, {"1", 0}, {"10", 0}}}), InvalidCodeTuple);
  EXPECT_THROW(make_code_tuple(fixtures::abcd(), {{{"0", 0}, {"1", 0}, {"10", 0}, {"11", 1}}}), InvalidCodeTuple);
  const CodeTuple f = fixtures::alpha();
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.codeword(0, 2), bits("0100"));
  EXPECT_EQ(f.next(2, 1), 2u);
  EXPECT_TRUE(f.codeword(1, 1).empty());
}

TEST(SourceDistributionTest, Validation) {
  EXPECT_NO_THROW(fixtures::mu());
  EXPECT_THROW(SourceDistribution({Rational(1, 2), Rational(1, 3)}), InvalidDistribution);
  EXPECT_THROW(SourceDistribution({Rational(1), Rational(0)}), InvalidDistribution);
  EXPECT_THROW(SourceDistribution({Rational(3, 2), Rational(-1, 2)}), InvalidDistribution);
  EXPECT_THROW(SourceDistribution({Rational(1)}), InvalidDistribution);
}

TEST(SourceDistributionProperty, RandomVectors) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 300; ++n) {
    std::vector<Rational> p;
    Rational sum = 0;
    const int sigma = 2 + n % 3;
    for (int s = 0; s < sigma; ++s) {
      p.push_back(Rational(static_cast<int>(rng() % 7) - 1, 1 + static_cast<int>(rng() % 5)));
      sum += p.back();
    }
    const bool valid = sum == 1 && std::all_of(p.begin(), p.end(), [](const Rational& r) { return r > 0; });
    if (valid) {
      EXPECT_NO_THROW(SourceDistribution{p});
    } else {
      EXPECT_THROW(SourceDistribution{p}, InvalidDistribution);
    }
  }
}
