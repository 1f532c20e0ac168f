#include <suptilt/closed_forms.hpp>

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace suptilt {
namespace {

using boost::multiprecision::cpp_rational;

ExactInt sum(const std::vector<ExactInt>& row) {
  ExactInt total = 0;
  for (const auto& v : row) total += v;
  return total;
}

TEST(Binom, SmallValuesAndEdges) {
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(10, 5), 252);
  EXPECT_EQ(binom(4, 5), 0);
  EXPECT_THROW(binom(4, -1), std::out_of_range);
  EXPECT_EQ(binom(100, 50), ExactInt("100891344545564193334812497256"));
}

// Brackets against their rational definitions, evaluated with exact fractions.
TEST(Brackets, MatchRationalDefinitions) {
  for (long t = 1; t <= 60; ++t) {
    for (long s = 0; s <= t; ++s) {
      const cpp_rational lucas = cpp_rational(s + t, t) * cpp_rational(binom(t, s));
      EXPECT_EQ(cpp_rational(bailey(t, s)), lucas) << t << " " << s;
      if (t - 2 * s + 1 >= 0) {
        const cpp_rational ballot = cpp_rational(t - 2 * s + 1, t - s + 1) * cpp_rational(binom(t, s));
        EXPECT_EQ(cpp_rational(catalan_bracket(t, s)), ballot) << t << " " << s;
      }
    }
  }
}

TEST(Brackets, CornerAndDomain) {
  EXPECT_THROW(bailey(0, 0), std::domain_error);
  EXPECT_EQ(bailey(1, 0), 1);
  EXPECT_EQ(bailey(1, 1), 2);
  EXPECT_EQ(bailey(3, 4), 0);
  EXPECT_EQ(catalan_bracket(3, 2), 0);  // boundary t - 2s + 1 = 0
  EXPECT_EQ(catalan_bracket(4, 2), 2);
}

// Totals of the classical families: Catalan numbers, central binomials and
// the type D count (3n-2)/n * C(2n-2, n-1).
TEST(SupportTilting, ClassicalTotals) {
  for (int n = 1; n <= 30; ++n) {
    EXPECT_EQ(a_total(Series::A, n), binom(2 * n + 2, n + 1) / (n + 2)) << n;
    EXPECT_EQ(a_total(Series::B, n), binom(2 * n, n)) << n;
    if (n >= 2) EXPECT_EQ(a_total(Series::C, n), binom(2 * n, n)) << n;
  }
  for (int n = 4; n <= 30; ++n) {
    EXPECT_EQ(a_total(Series::D, n), ExactInt(3 * n - 2) * binom(2 * n - 2, n - 1) / n) << n;
  }
}

TEST(SupportTilting, RowsSumToTotals) {
  for (Series series : {Series::A, Series::B, Series::D}) {
    const int first = series == Series::D ? 4 : 1;
    for (int n = first; n <= 25; ++n) EXPECT_EQ(sum(a_row(series, n)), a_total(series, n));
  }
}

TEST(SupportTilting, KnownRows) {
  EXPECT_EQ(a_row(Series::A, 3), (std::vector<ExactInt>{1, 3, 5, 5}));
  EXPECT_EQ(a_row(Series::B, 2), (std::vector<ExactInt>{1, 2, 3}));
  EXPECT_EQ(convention_row(Series::D, 6), (std::vector<ExactInt>{1, 6, 20, 50, 105, 196, 294}));
  EXPECT_EQ(convention_row(Series::G, 2), (std::vector<ExactInt>{1, 2, 5}));
  EXPECT_EQ(a_row(Series::A, 0), (std::vector<ExactInt>{1}));
}

TEST(Convolution, DisjointUnions) {
  const auto a1 = a_row(Series::A, 1);
  EXPECT_EQ(convolve(a1, a1), (std::vector<ExactInt>{1, 2, 1}));
  EXPECT_EQ(convention_row(Series::D, 2), convolve(a1, a1));
  EXPECT_EQ(convention_row(Series::D, 3), a_row(Series::A, 3));
  EXPECT_EQ(convention_row(Series::E, 3), convolve(a_row(Series::A, 2), a1));
  EXPECT_EQ(convention_row(Series::E, 4), a_row(Series::A, 4));
  EXPECT_EQ(convention_row(Series::E, 5), a_row(Series::D, 5));
  EXPECT_EQ(convention_row(Series::B, 1), a1);
}

TEST(Exceptional, TableTotals) {
  for (const auto& row : exceptional_table()) EXPECT_EQ(sum(row.values), row.total) << row.label;
}

TEST(Identities, HoldInRange) {
  for (int n = 1; n <= 20; ++n) {
    for (int s = 1; s <= n; ++s) EXPECT_TRUE(hook_check(Series::A, n, s));
    EXPECT_TRUE(total_split_check(Series::A, n));
  }
  for (int n = 2; n <= 20; ++n) EXPECT_TRUE(comparison_check(n));
  EXPECT_THROW(hook_check(Series::A, 3, 4), std::out_of_range);
  EXPECT_THROW(comparison_check(1), std::out_of_range);
}

TEST(Identities, ShearFamilies) {
  for (ShearFamily family : {ShearFamily::catalan, ShearFamily::pascal, ShearFamily::lucas}) {
    for (long t = 2; t <= 30; ++t) {
      for (long s = 1; s <= t; ++s) {
        if (in_recursion_region(family, t, s)) EXPECT_TRUE(shear_recursion_check(family, t, s)) << t << " " << s;
      }
    }
  }
}

}  // namespace
}  // namespace suptilt
