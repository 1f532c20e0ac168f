#include <suptilt/ar_orbits.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace suptilt {
namespace {

std::vector<std::vector<int>> dims(const ModCategory& cat) {
  std::vector<std::vector<int>> out;
  for (const auto& x : cat.indecs()) out.push_back(x.dim.coords);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> roots(const CartanDatum& datum) {
  std::vector<std::vector<int>> out;
  for (const auto& r : positive_roots(datum)) out.push_back(r.coords);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Knit, A2Linear) {
  const ModCategory cat = knit_category(build_cartan({Series::A, 2}));
  ASSERT_EQ(cat.size(), 3u);
  EXPECT_EQ(cat.orbit_lengths(), (std::vector<int>{1, 0}));
  EXPECT_EQ(cat[cat.at({0, 0})].dim.coords, (std::vector<int>{1, 0}));
  EXPECT_EQ(cat[cat.at({0, 1})].dim.coords, (std::vector<int>{0, 1}));
  EXPECT_EQ(cat[cat.at({1, 0})].dim.coords, (std::vector<int>{1, 1}));
  EXPECT_TRUE(cat.is_projective(cat.at({1, 0})));
  EXPECT_TRUE(cat.is_injective(cat.at({1, 0})));
  EXPECT_FALSE(cat.is_injective(cat.at({0, 0})));
  EXPECT_THROW(cat.at({1, 1}), std::out_of_range);
  EXPECT_FALSE(cat.index_of({0, 2}).has_value());
}

TEST(Knit, B2Dimensions) {
  const ModCategory cat = knit_category(build_cartan({Series::B, 2}));
  EXPECT_EQ(cat.size(), 4u);
  EXPECT_EQ(dims(cat), roots(cat.datum()));
  EXPECT_EQ(sincere_indecomposables(cat).size(), 2u);
}

TEST(Knit, MatchesPositiveRootsForEveryOrientation) {
  std::vector<DynkinType> types = {{Series::A, 5}, {Series::B, 4}, {Series::C, 4}, {Series::D, 5},
                                   {Series::E, 6}, {Series::F, 4}, {Series::G, 2}};
  for (const auto& type : types) {
    for (const auto& orientation : all_orientations(shape_of(type))) {
      const ModCategory cat = knit_category(build_cartan(type, orientation));
      EXPECT_EQ(dims(cat), roots(cat.datum())) << label(type) << " " << orientation.to_string();
    }
  }
  for (int n : {7, 8}) {
    const ModCategory cat = knit_category(build_cartan({Series::E, n}));
    EXPECT_EQ(dims(cat), roots(cat.datum()));
  }
}

TEST(Knit, ForestsKnitComponentwise) {
  const ModCategory d2 = knit_category(build_cartan({Series::D, 2}));
  EXPECT_EQ(d2.size(), 2u);
  const ModCategory e3 = knit_category(build_cartan({Series::E, 3}));
  EXPECT_EQ(e3.size(), 4u);
}

TEST(Knit, SincereModulesOfB4) {
  const ModCategory cat = knit_category(build_cartan({Series::B, 4}));
  const auto sincere = sincere_indecomposables(cat);
  ASSERT_EQ(sincere.size(), 4u);
  // X(i) = tau^{i-n} P(i); X(4) = P(4) has dimension vector (1,1,1,1).
  for (int i = 1; i <= 4; ++i) {
    const auto& x = cat[cat.at({i - 1, 4 - i})];
    EXPECT_TRUE(x.support == VertexSet::full(4)) << i;
  }
  EXPECT_EQ(cat[cat.at({3, 0})].dim.coords, (std::vector<int>{1, 1, 1, 1}));
}

TEST(Knit, InjectivesEndTheirOrbits) {
  for (DynkinType type : {DynkinType{Series::A, 4}, DynkinType{Series::D, 5}, DynkinType{Series::F, 4}}) {
    const ModCategory cat = knit_category(build_cartan(type));
    int injectives = 0;
    for (std::size_t x = 0; x < cat.size(); ++x) injectives += cat.is_injective(x) ? 1 : 0;
    EXPECT_EQ(injectives, type.rank) << label(type);
  }
}

TEST(Knit, SupportsAgreeBetweenBAndC) {
  for (int n = 2; n <= 6; ++n) {
    const ModCategory b = knit_category(build_cartan({Series::B, n}));
    const ModCategory c = knit_category(build_cartan({Series::C, n}));
    ASSERT_EQ(b.size(), c.size());
    for (std::size_t x = 0; x < b.size(); ++x) {
      EXPECT_EQ(b[x].coord, c[x].coord);
      EXPECT_TRUE(b[x].support == c[x].support) << n << " " << x;
    }
  }
}

TEST(VertexSetText, Formatting) {
  VertexSet s;
  s.insert(0);
  s.insert(2);
  EXPECT_EQ(to_string(s), "{1,3}");
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.is_subset_of(VertexSet::full(3)));
}

TEST(Dump, GoldenA3) {
  const ModCategory cat = knit_category(build_cartan({Series::A, 3}));
  std::ifstream file(SUPTILT_TEST_DATA_DIR "/a3_dump.txt");
  ASSERT_TRUE(file) << "missing golden file";
  std::stringstream golden;
  golden << file.rdbuf();
  EXPECT_EQ(dump_category(cat), golden.str());
}

}  // namespace
}  // namespace suptilt
