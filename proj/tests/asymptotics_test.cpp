#include <gtest/gtest.h>

#include <dyck/asymptotics.hpp>

#include "oracles.hpp"

using namespace dyck;

namespace {

std::vector<int> as_ints(const partition& p) {
  return std::vector<int>(p.parts().begin(), p.parts().end());
}

}  // namespace

TEST(Runs, Examples) {
  auto r = leading_runs(parse("UUDDUD"));
  EXPECT_EQ(r.leading_ups, 2u);
  EXPECT_EQ(r.trailing_downs, 1u);
  r = leading_runs(parse("UDUDUD"));
  EXPECT_EQ(r.leading_ups, 1u);
  EXPECT_EQ(r.trailing_downs, 1u);
  r = leading_runs(parse("UUUDDD"));
  EXPECT_EQ(r.leading_ups, 3u);
  EXPECT_EQ(r.trailing_downs, 3u);
  EXPECT_THROW(leading_runs(dyck_word{}), error);
}

TEST(Runs, RederivedFromRawWord) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& w : generate_all(n)) {
      const auto s = render(w);
      const auto r = leading_runs(w);
      ASSERT_EQ(r.leading_ups, s.find('D'));
      ASSERT_EQ(r.trailing_downs, s.size() - 1 - s.rfind('U'));
    }
}

TEST(Partition, Validation) {
  EXPECT_THROW(partition({1, 2}), error);
  EXPECT_THROW(partition({2, 0}), error);
  EXPECT_EQ(partition({3, 2, 1}).cell_count(), 6u);
  EXPECT_TRUE(partition{}.empty());
}

TEST(Shape, Examples) {
  EXPECT_TRUE(complement_shape(pyramid(4)).empty());
  EXPECT_TRUE(complement_shape(dyck_word{}).empty());
  EXPECT_EQ(as_ints(complement_shape(parse("UDUDUD"))), (std::vector<int>{2, 1}));
  EXPECT_EQ(as_ints(complement_shape(parse("UUDUDD"))), (std::vector<int>{1}));
}

TEST(Shape, CellCountIsFlipDistance) {
  for (std::size_t n = 0; n <= 7; ++n)
    for (const auto& w : generate_all(n))
      ASSERT_EQ(static_cast<int>(complement_shape(w).cell_count()), oracle::area_gap(render(w))) << w;
}

TEST(Syt, Examples) {
  EXPECT_EQ(syt_count(partition{}), 1);
  EXPECT_EQ(syt_count(partition({2, 1})), 2);
  EXPECT_EQ(syt_count(partition({3, 2, 1})), 16);
}

TEST(Syt, MatchesStandardFillings) {
  const std::vector<std::vector<int>> shapes = {{1}, {2}, {1, 1}, {3, 1}, {2, 2}, {2, 1, 1}, {3, 2}, {3, 3}, {4, 2, 1}};
  for (const auto& s : shapes) {
    partition p(std::vector<std::size_t>(s.begin(), s.end()));
    EXPECT_EQ(syt_count(p), oracle::standard_fillings(s)) << render(p);
  }
}

TEST(LatticeChains, Examples) {
  EXPECT_EQ(dyck_lattice_chain_count(pyramid(3)), 1);
  EXPECT_EQ(dyck_lattice_chain_count(parse("UUDDUD")), 1);
  EXPECT_EQ(dyck_lattice_chain_count(parse("UDUDUD")), 2);
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& w : generate_all(n))
      ASSERT_EQ(dyck_lattice_chain_count(w), oracle::flip_chains(render(w))) << w;
}

TEST(Alpha, BothRoutesAgreeUpTo6) {
  std::size_t seen = 0;
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& w : generate_all(n)) {
      ASSERT_EQ(syt_count(complement_shape(w)), dyck_lattice_chain_count(w)) << w;
      ASSERT_NO_THROW(alpha(w));
      ++seen;
    }
  EXPECT_EQ(seen, 1u + 1 + 2 + 5 + 14 + 42 + 132);
}

TEST(Conjecture, HillThreeIsConstantFour) {
  const auto rep = conjecture_report_for(parse("UUDUDD"), 12);
  EXPECT_EQ(rep.x, 3u);
  EXPECT_EQ(rep.a, 2u);
  EXPECT_EQ(rep.b, 2u);
  EXPECT_EQ(rep.k_exp, 0);
  EXPECT_EQ(rep.alpha, 1);
  ASSERT_TRUE(rep.predicted);
  EXPECT_EQ(*rep.predicted, 4);
  for (const auto& r : rep.rows)
    if (r.n >= 3) {
      EXPECT_EQ(r.count, 4);
    }
  EXPECT_FALSE(rep.diverges());
}

TEST(Conjecture, PlateauThreeLinear) {
  const auto rep = conjecture_report_for(parse("UUDDUD"), 10);
  EXPECT_EQ(rep.k_exp, 1);
  EXPECT_EQ(*rep.predicted, 2);
  for (const auto& r : rep.rows)
    if (r.n >= 3) {
      EXPECT_EQ(r.ratio, big_rational(2 * static_cast<long>(r.n) - 2, static_cast<long>(r.n)));
    }
}

TEST(Conjecture, StaircaseThreeFlagsDivergence) {
  const auto rep = conjecture_report_for(parse("UDUDUD"), 11, {{20, 1}, false, 1});
  EXPECT_EQ(rep.k_exp, 2);
  EXPECT_EQ(rep.alpha, 2);
  EXPECT_EQ(*rep.predicted, 1);
  for (const auto& r : rep.rows) {
    EXPECT_EQ(r.source, engine::brute);
    EXPECT_EQ(r.count, 1 + binomial(static_cast<long>(r.n), 2));
  }
  EXPECT_TRUE(rep.diverges());
}

TEST(Conjecture, PyramidHasNoPrediction) {
  const auto rep = conjecture_report_for(parse("UUDD"), 6);
  EXPECT_EQ(rep.k_exp, -2);
  EXPECT_FALSE(rep.predicted.has_value());
  EXPECT_EQ(rep.rows[0].n_pow_k, big_rational(1, 1));
  EXPECT_EQ(rep.rows[2].ratio, 0);
}

TEST(Conjecture, FormulaRoutingMatchesBrute) {
  for (const char* p : {"UUDUDD", "UUDDUD", "UDUDUD", "UUUDDUDD"}) {
    const auto a = conjecture_report_for(parse(p), 10);
    const auto b = conjecture_report_for(parse(p), 10, {{20, 1}, false, 1});
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].count, b.rows[i].count) << p;
  }
}

TEST(Conjecture, NonFamilyNeedsCap) {
  EXPECT_THROW(conjecture_report_for(parse("UDUUDD"), 21), cap_exceeded);
  EXPECT_NO_THROW(conjecture_report_for(parse("UUDUDD"), 40));
}
