#include <suptilt/root_datum.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace suptilt {
namespace {

std::vector<DynkinType> all_types(int max_rank) {
  std::vector<DynkinType> types;
  for (int n = 1; n <= max_rank; ++n) types.push_back({Series::A, n});
  for (int n = 2; n <= max_rank; ++n) types.push_back({Series::B, n});
  for (int n = 2; n <= max_rank; ++n) types.push_back({Series::C, n});
  for (int n = 4; n <= max_rank; ++n) types.push_back({Series::D, n});
  for (int n = 6; n <= std::min(max_rank, 8); ++n) types.push_back({Series::E, n});
  if (max_rank >= 4) types.push_back({Series::F, 4});
  types.push_back({Series::G, 2});
  return types;
}

// Grows the orbit of the simple roots until nothing new appears, without
// any of the library's bookkeeping.
std::set<std::vector<int>> naive_positive_roots(const CartanDatum& datum) {
  const int n = datum.rank();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    frontier.push_back(e);
    seen.insert(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier) {
      for (int i = 0; i < n; ++i) {
        std::vector<int> y = x;
        int value = -x[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
          if (j != i) value -= datum.cartan(i, j) * x[static_cast<std::size_t>(j)];
        }
        y[static_cast<std::size_t>(i)] = value;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  std::set<std::vector<int>> positive;
  for (const auto& r : seen) {
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positive.insert(r);
  }
  return positive;
}

TEST(Reflection, Examples) {
  const CartanDatum a2 = build_cartan({Series::A, 2});
  EXPECT_EQ(simple_reflection(a2, 0, simple_root(2, 0)).coords, (std::vector<int>{-1, 0}));
  EXPECT_EQ(simple_reflection(a2, 0, simple_root(2, 1)).coords, (std::vector<int>{1, 1}));

  // The doubled entry sits in row 1 of C2: A_12 = -2, A_21 = -1.
  const CartanDatum c2 = build_cartan({Series::C, 2});
  ASSERT_EQ(c2.cartan(0, 1), -2);
  ASSERT_EQ(c2.cartan(1, 0), -1);
  EXPECT_EQ(simple_reflection(c2, 0, simple_root(2, 1)).coords, (std::vector<int>{2, 1}));
  EXPECT_EQ(positive_roots(c2).size(), 4u);
}

TEST(Reflection, IsAnInvolution) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-10, 10);
  for (const auto& type : all_types(8)) {
    const CartanDatum datum = build_cartan(type);
    for (int trial = 0; trial < 50; ++trial) {
      RootVector x;
      for (int k = 0; k < datum.rank(); ++k) x.coords.push_back(coord(rng));
      for (int i = 0; i < datum.rank(); ++i) {
        EXPECT_EQ(simple_reflection(datum, i, simple_reflection(datum, i, x)), x) << label(type);
      }
    }
  }
}

TEST(PositiveRoots, CountsMatchTheClassification) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(positive_roots(build_cartan({Series::A, n})).size(), std::size_t(n * (n + 1) / 2));
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(positive_roots(build_cartan({Series::B, n})).size(), std::size_t(n * n));
    EXPECT_EQ(positive_roots(build_cartan({Series::C, n})).size(), std::size_t(n * n));
  }
  for (int n = 4; n <= 8; ++n) EXPECT_EQ(positive_roots(build_cartan({Series::D, n})).size(), std::size_t(n * (n - 1)));
  EXPECT_EQ(positive_roots(build_cartan({Series::E, 6})).size(), 36u);
  EXPECT_EQ(positive_roots(build_cartan({Series::E, 7})).size(), 63u);
  EXPECT_EQ(positive_roots(build_cartan({Series::E, 8})).size(), 120u);
  EXPECT_EQ(positive_roots(build_cartan({Series::F, 4})).size(), 24u);
  EXPECT_EQ(positive_roots(build_cartan({Series::G, 2})).size(), 6u);
}

TEST(PositiveRoots, AgreeWithNaiveClosure) {
  for (const auto& type : all_types(8)) {
    const CartanDatum datum = build_cartan(type);
    std::set<std::vector<int>> library;
    for (const auto& r : positive_roots(datum)) library.insert(r.coords);
    EXPECT_EQ(library, naive_positive_roots(datum)) << label(type);
    EXPECT_EQ(static_cast<int>(library.size()), expected_root_count(type)) << label(type);
  }
}

TEST(Cartan, BIsTransposeOfC) {
  for (int n = 2; n <= 8; ++n) {
    const CartanDatum b = build_cartan({Series::B, n});
    const CartanDatum c = build_cartan({Series::C, n});
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) EXPECT_EQ(b.cartan(i, j), c.cartan(j, i));
    }
  }
}

// Positive definiteness via leading principal minors, in exact arithmetic.
TEST(Cartan, SymmetrizedIsPositiveDefinite) {
  for (const auto& type : all_types(8)) {
    const CartanDatum datum = build_cartan(type);
    const int n = datum.rank();
    const auto m = datum.symmetrized();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) EXPECT_EQ(m[std::size_t(i * n + j)], m[std::size_t(j * n + i)]);
    }
    std::vector<long double> a(m.begin(), m.end());
    for (int k = 0; k < n; ++k) {
      const long double pivot = a[std::size_t(k * n + k)];
      EXPECT_GT(pivot, 0.0L) << label(type);
      for (int i = k + 1; i < n; ++i) {
        const long double f = a[std::size_t(i * n + k)] / pivot;
        for (int j = k; j < n; ++j) a[std::size_t(i * n + j)] -= f * a[std::size_t(k * n + j)];
      }
    }
  }
}

TEST(Orientation, ParseAndSinkOrder) {
  EXPECT_TRUE(OrientationSpec::parse("default").is_default());
  const CartanDatum linear = build_cartan({Series::A, 3});
  EXPECT_EQ(sink_order(linear), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(sink_order(build_cartan({Series::D, 4})), (std::vector<int>{0, 1, 2, 3}));

  const CartanDatum v = build_cartan({Series::A, 3}, OrientationSpec::parse("1>2,3>2"));
  const auto order = sink_order(v);
  EXPECT_EQ(order.front(), 1);
  for (const auto& arrow : v.arrows()) {
    const auto from = std::find(order.begin(), order.end(), arrow.from);
    const auto to = std::find(order.begin(), order.end(), arrow.to);
    EXPECT_LT(to, from);
  }
  EXPECT_EQ(OrientationSpec::parse("3>2,1>2").to_string(), OrientationSpec::parse("1>2,3>2").to_string());
}

TEST(Orientation, RejectsMalformedText) {
  for (const char* text : {"", "1>", "a>b", "1>1", "1-2", "1>2,,2>3"}) {
    EXPECT_THROW(OrientationSpec::parse(text), std::invalid_argument) << text;
  }
  // Arrows must match the diagram edges exactly.
  EXPECT_THROW(build_cartan({Series::A, 3}, OrientationSpec::parse("1>3,2>1")), std::invalid_argument);
  EXPECT_THROW(build_cartan({Series::A, 3}, OrientationSpec::parse("2>1")), std::invalid_argument);
}

TEST(Orientation, EnumerationAndSampling) {
  EXPECT_EQ(all_orientations(shape_of({Series::A, 4})).size(), 8u);
  EXPECT_EQ(all_orientations(shape_of({Series::D, 4})).size(), 8u);
  EXPECT_EQ(all_orientations(shape_of({Series::E, 6})).size(), 32u);
  const auto first = sampled_orientations(shape_of({Series::D, 6}), 10, 42);
  const auto second = sampled_orientations(shape_of({Series::D, 6}), 10, 42);
  ASSERT_EQ(first.size(), 10u);
  for (std::size_t k = 0; k < first.size(); ++k) EXPECT_EQ(first[k].to_string(), second[k].to_string());
}

TEST(DynkinTypes, Admissibility) {
  EXPECT_TRUE(is_admissible({Series::E, 8}));
  EXPECT_FALSE(is_admissible({Series::E, 9}));
  EXPECT_FALSE(is_admissible({Series::G, 3}));
  EXPECT_FALSE(is_admissible({Series::A, 0}));
  EXPECT_THROW(build_cartan({Series::F, 5}), std::invalid_argument);
  EXPECT_EQ(label({Series::D, 5}), "D5");
}

}  // namespace
}  // namespace suptilt
