#include <gtest/gtest.h>

#include <dyck/generate.hpp>
#include <dyck/word.hpp>

#include "oracles.hpp"

using namespace dyck;

TEST(Parse, CanonicalText) {
  const auto w = parse("UUDD");
  EXPECT_EQ(w.semilength(), 2u);
  EXPECT_EQ(render(w), "UUDD");
}

TEST(Parse, EmptyIsTheMinimum) {
  const auto w = parse("");
  EXPECT_TRUE(w.empty());
  EXPECT_EQ(w.semilength(), 0u);
  EXPECT_EQ(parse("   "), dyck_word{});
}

TEST(Parse, BelowBaselineReportsPosition) {
  try {
    parse("UDD");
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.reason(), parse_failure::below_baseline);
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(Parse, Unbalanced) {
  try {
    parse("UUDUD");
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.reason(), parse_failure::unbalanced);
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Parse, BadCharacterAndMixedAlphabets) {
  try {
    parse("UXDD");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.reason(), parse_failure::bad_character);
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    parse("U)");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.reason(), parse_failure::bad_character);
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse("(1"), parse_error);
}

TEST(Parse, AlternateAlphabetsRenderCanonically) {
  EXPECT_EQ(render(parse("(()())")), "UUDUDD");
  EXPECT_EQ(render(parse("110100")), "UUDUDD");
  EXPECT_EQ(render(parse("uUdD")), "UUDD");
}

TEST(Parse, RoundTripOverAllWordsUpTo10) {
  for (std::size_t n = 0; n <= 10; ++n)
    for (const auto& w : generate_all(n)) ASSERT_EQ(parse(render(w)), w);
}

TEST(Word, ConstructorValidates) {
  EXPECT_THROW(dyck_word({step::down, step::up}), parse_error);
  EXPECT_NO_THROW(dyck_word({step::up, step::down}));
}

TEST(Factorize, SplitsAtBaselineReturns) {
  const auto dec = factorize(parse("UUDDUD"));
  ASSERT_EQ(dec.count(), 2u);
  EXPECT_EQ(render(dec.factors[0].word), "UUDD");
  EXPECT_EQ(render(dec.factors[1].word), "UD");
  EXPECT_EQ(dec.factors[0].semilength, 2u);
  EXPECT_EQ(dec.factors[1].semilength, 1u);
  EXPECT_EQ(dec.factors[0].ascents, 1u);
  EXPECT_EQ(dec.factors[1].ascents, 1u);
}

TEST(Factorize, SingleFactorAndEmpty) {
  const auto dec = factorize(parse("UUUDDD"));
  ASSERT_EQ(dec.count(), 1u);
  EXPECT_EQ(dec.factors[0].semilength, 3u);
  EXPECT_EQ(dec.factors[0].ascents, 1u);
  EXPECT_EQ(factorize(dyck_word{}).count(), 0u);
}

// A path with three factors, ascents (2,1,2), |UDU| = 3 and |DUD| = 2.
TEST(Factorize, ThreeFactorPathStatistics) {
  const auto q = parse("UUDUDDUDUUDUUDDD");
  const auto dec = factorize(q);
  ASSERT_EQ(dec.count(), 3u);
  EXPECT_EQ(dec.factors[0].ascents, 2u);
  EXPECT_EQ(dec.factors[1].ascents, 1u);
  EXPECT_EQ(dec.factors[2].ascents, 2u);
  const auto st = statistics(q);
  EXPECT_EQ(st.udu, 3u);
  EXPECT_EQ(st.dud, 2u);
}

TEST(Statistics, WindowCounts) {
  auto st = statistics(parse("UDUD"));
  EXPECT_EQ(st.peaks, 2u);
  EXPECT_EQ(st.udu, 1u);
  EXPECT_EQ(st.dud, 1u);
  st = statistics(parse("UUUDDD"));
  EXPECT_EQ(st.peaks, 1u);
  EXPECT_EQ(st.udu, 0u);
  EXPECT_EQ(st.dud, 0u);
}

TEST(Factorize, InvariantsOverAllWordsUpTo9) {
  for (std::size_t n = 0; n <= 9; ++n) {
    for (const auto& w : generate_all(n)) {
      const auto dec = factorize(w);
      dyck_word joined;
      std::size_t semi = 0, ascents = 0;
      for (const auto& f : dec.factors) {
        joined = joined + f.word;
        semi += f.semilength;
        ascents += f.ascents;
        // interior strictly above the baseline
        long h = 0;
        for (std::size_t i = 0; i + 1 < f.word.length(); ++i) {
          h += f.word[i] == step::up ? 1 : -1;
          ASSERT_GT(h, 0);
        }
        const auto fst = statistics(f.word);
        ASSERT_EQ(fst.peaks, f.ascents);
      }
      ASSERT_EQ(joined, w);
      ASSERT_EQ(semi, w.semilength());
      ASSERT_EQ(ascents, statistics(w).peaks);
      ASSERT_EQ(static_cast<int>(statistics(w).peaks), oracle::peaks(render(w)));
    }
  }
}

TEST(Packed, ObservationallyIdentical) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& w : generate_all(n)) {
      const auto p = pack(w);
      ASSERT_TRUE(p.has_value());
      ASSERT_EQ(unpack(*p), w);
      for (unsigned i = 0; i < w.length(); ++i) ASSERT_EQ(p->at(i), w[i]);
    }
  }
  EXPECT_FALSE(pack(pyramid(32)).has_value());
  EXPECT_TRUE(pack(pyramid(31)).has_value());
}
