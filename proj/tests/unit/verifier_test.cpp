#include <suptilt/verifier.hpp>

#include <gtest/gtest.h>

#include <string>

namespace suptilt {
namespace {

bool is_size_check(const Check& c) { return c.id.rfind("equidistribution.size.", 0) == 0; }

TEST(Verifier, ReferenceTablesPass) {
  EXPECT_TRUE(verify_triangles().passed()) << verify_triangles().serialize();
  EXPECT_TRUE(verify_exceptional().passed()) << verify_exceptional().serialize();
}

TEST(Verifier, IdentitiesPass) {
  const auto report = verify_identities(30);
  EXPECT_TRUE(report.passed()) << report.serialize();
  EXPECT_GE(report.checks().size(), 20u);
}

TEST(Verifier, SincereStructureAndEta) {
  EXPECT_TRUE(verify_sincere_structure(5).passed()) << verify_sincere_structure(5).serialize();
  EXPECT_TRUE(verify_linear_a_eta(5).passed()) << verify_linear_a_eta(5).serialize();
}

TEST(Verifier, BEqualsC) { EXPECT_TRUE(verify_b_equals_c(5).passed()); }

TEST(Verifier, IntegralityShortRange) { EXPECT_TRUE(verify_integrality(150).passed()); }

TEST(Verifier, MaximalityD5) { EXPECT_TRUE(verify_maximality({Series::D, 5}).passed()); }

// Counting checks pass; the antichain size distribution is reported but differs.
TEST(Verifier, TypeChecks) {
  const auto report = verify_type({Series::D, 4}, all_orientations(shape_of({Series::D, 4})));
  int size_checks = 0;
  for (const auto& c : report.checks()) {
    if (is_size_check(c)) {
      ++size_checks;
      continue;
    }
    EXPECT_TRUE(c.pass) << c.id << ": " << c.expected << " vs " << c.actual;
  }
  EXPECT_EQ(size_checks, 8);
  EXPECT_THROW(verify_type({Series::E, 9}, {OrientationSpec{}}), std::invalid_argument);
}

TEST(Verifier, QuickSuiteOnlyFailsOnSizeChecks) {
  SuiteOptions options;
  options.max_n = 20;
  options.fixture_dir = SUPTILT_TEST_FIXTURE_DIR;
  const auto report = run_suite(options);
  for (const auto& c : report.checks()) {
    if (!is_size_check(c)) EXPECT_TRUE(c.pass) << c.id << ": " << c.expected << " vs " << c.actual;
  }
  options.threads = 4;
  EXPECT_EQ(run_suite(options).serialize(), report.serialize());
}

TEST(Report, Serialization) {
  VerificationReport report;
  report.note("hello");
  report.expect_equal("x.1", "tab\there", "1", "1");
  report.expect_equal("x.2", "line\nbreak", "1", "2");
  const std::string text = report.serialize();
  EXPECT_EQ(text,
            "# suptilt verification report\n"
            "# hello\n"
            "x.1\ttab here\t1\t1\tPASS\n"
            "x.2\tline break\t1\t2\tFAIL\n"
            "# summary: 2 checks, 1 failed\n");
  EXPECT_EQ(report.failures(), 1u);
  EXPECT_FALSE(report.passed());
}

}  // namespace
}  // namespace suptilt
