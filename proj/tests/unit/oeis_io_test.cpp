#include <suptilt/closed_forms.hpp>
#include <suptilt/oeis_io.hpp>

#include <gtest/gtest.h>

#include <sstream>
#include <string>

namespace suptilt {
namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Triangle, BRowNineAsCsv) {
  const auto out = lines(render_triangle(build_triangle(TriangleSeries::b, 10), TriangleFormat::csv));
  ASSERT_EQ(out.size(), 10u);
  EXPECT_EQ(out[9], "1,9,45,165,495,1287,3003,6435,12870,24310");
  EXPECT_EQ(out[0], "1");
}

TEST(Triangle, PrettyHasSumsAndPlaceholders) {
  const std::string text = render_triangle(build_triangle(TriangleSeries::d, 5), TriangleFormat::pretty);
  const auto out = lines(text);
  ASSERT_GE(out.size(), 6u);
  EXPECT_NE(out[2].find("·"), std::string::npos);
  EXPECT_EQ(out.back().substr(0, 10), "4 |  1  4 ") << out.back();
  EXPECT_EQ(out.back().substr(out.back().size() - 5), "|  50") << out.back();  // a(D_4) = 50
  const auto a = lines(render_triangle(build_triangle(TriangleSeries::a, 4), TriangleFormat::pretty));
  EXPECT_NE(a.back().find("14"), std::string::npos);  // a(A_3) = C_4
}

TEST(Triangle, CsvSkipsPlaceholderRows) {
  const auto out = lines(render_triangle(build_triangle(TriangleSeries::d, 4), TriangleFormat::csv));
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], "1,2,1");
}

TEST(Triangle, LucasCornerOnlyInOeisMode) {
  const TriangleDoc plain = build_triangle(TriangleSeries::lucas, 3);
  const TriangleDoc oeis = build_triangle(TriangleSeries::lucas, 3, true);
  EXPECT_EQ(plain.terms().size(), 5u);
  ASSERT_EQ(oeis.terms().size(), 6u);
  EXPECT_EQ(oeis.terms().front(), 2);
  EXPECT_TRUE(oeis.corner_convention);
  EXPECT_NE(render_triangle(oeis, TriangleFormat::bfile).find("# corner"), std::string::npos);
  EXPECT_EQ(render_triangle(plain, TriangleFormat::bfile).find("# corner"), std::string::npos);
}

TEST(Triangle, PascalAndCatalanCells) {
  const TriangleDoc pascal = build_triangle(TriangleSeries::pascal, 12);
  const TriangleDoc catalan = build_triangle(TriangleSeries::catalan_sheared, 12);
  for (long t = 0; t < 12; ++t) {
    const auto& row = pascal.rows[std::size_t(t)];
    ASSERT_EQ(row.cells.size(), std::size_t(t + 1));
    for (long s = 0; s <= t; ++s) EXPECT_EQ(*row.cells[std::size_t(s)], binom(t, s));
    for (std::size_t s = 0; s < catalan.rows[std::size_t(t)].cells.size(); ++s) {
      EXPECT_EQ(*catalan.rows[std::size_t(t)].cells[s], binom(t, long(s)) - (s == 0 ? 0 : binom(t, long(s) - 1)));
    }
  }
}

TEST(Triangle, DDiagonal) {
  const TriangleDoc doc = build_triangle(TriangleSeries::d_diagonal, 10);
  const auto terms = doc.terms();
  const ExactInt expected[] = {1, 5, 20, 77, 294, 1122, 4290, 16445};
  ASSERT_EQ(terms.size(), 8u);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(terms[k], expected[k]);
}

TEST(Triangle, ParseNames) {
  EXPECT_EQ(parse_triangle_series("d-diagonal"), TriangleSeries::d_diagonal);
  EXPECT_EQ(parse_triangle_series("Catalan"), TriangleSeries::catalan_sheared);
  EXPECT_FALSE(parse_triangle_series("E").has_value());
  EXPECT_EQ(parse_triangle_format("bfile"), TriangleFormat::bfile);
  EXPECT_FALSE(parse_triangle_format("json").has_value());
  EXPECT_THROW(build_triangle(TriangleSeries::a, 0), std::out_of_range);
}

TEST(BFile, RoundTrip) {
  const TriangleDoc doc = build_triangle(TriangleSeries::a, 9);
  const BFile parsed = parse_bfile(render_triangle(doc, TriangleFormat::bfile), "A009766");
  const auto terms = doc.terms();
  ASSERT_EQ(parsed.entries.size(), terms.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    EXPECT_EQ(parsed.entries[k].first, long(k));
    EXPECT_EQ(parsed.entries[k].second, terms[k]);
  }
}

TEST(BFile, ParsesCommentsAndBlankLines) {
  const BFile b = parse_bfile("# header\n\n3 7\n4 123456789012345678901234567890\n", "X");
  ASSERT_EQ(b.entries.size(), 2u);
  EXPECT_EQ(b.entries[0].first, 3);
  EXPECT_EQ(b.entries[1].second, ExactInt("123456789012345678901234567890"));
}

TEST(BFile, MalformedLinesReportTheirLine) {
  try {
    parse_bfile("0 1\n1 1\nabc def\n", "X");
    FAIL() << "no error";
  } catch (const BFileError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_bfile("0 1\n2 1\n", "X"), BFileError);   // gap in the indices
  EXPECT_THROW(parse_bfile("0 -1\n", "X"), BFileError);       // negative term
  EXPECT_THROW(parse_bfile("0 1 2\n", "X"), BFileError);      // trailing field
}

TEST(BFile, Names) { EXPECT_EQ(bfile_name("A009766"), "b009766.txt"); }

TEST(Reconcile, FixturesAgree) {
  for (const auto& info : known_sequences()) {
    const auto fetched = fetch_bfile(info.id, {SUPTILT_TEST_FIXTURE_DIR, false, {}});
    const auto report = reconcile(info, fetched.bfile);
    EXPECT_TRUE(report.passed()) << report.serialize();
  }
}

TEST(Reconcile, DetectsAMismatch) {
  const auto info = *find_sequence("A007318");
  BFile bad = parse_bfile("0 1\n1 1\n2 1\n3 1\n4 3\n", "A007318");
  const auto report = reconcile(info, bad, 5);
  EXPECT_FALSE(report.passed());
  EXPECT_NE(report.serialize().find("a(4)"), std::string::npos) << report.serialize();
}

TEST(Reconcile, TooFewTermsFails) {
  const auto info = *find_sequence("A007318");
  EXPECT_FALSE(reconcile(info, parse_bfile("0 1\n1 1\n", "A007318"), 5).passed());
}

TEST(Fetch, MissingFixtureThrows) {
  EXPECT_THROW(fetch_bfile("A009766", {"/nonexistent", false, {}}), std::runtime_error);
  EXPECT_FALSE(find_sequence("A000045").has_value());
}

}  // namespace
}  // namespace suptilt
