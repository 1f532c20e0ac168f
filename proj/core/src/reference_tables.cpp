#include <suptilt/reference_tables.hpp>

#include <stdexcept>

namespace suptilt::reference {
namespace {

const std::vector<TriangleRow> kA = {
    {0, {1}, 1},
    {1, {1, 1}, 2},
    {2, {1, 2, 2}, 5},
    {3, {1, 3, 5, 5}, 14},
    {4, {1, 4, 9, 14, 14}, 42},
    {5, {1, 5, 14, 28, 42, 42}, 132},
    {6, {1, 6, 20, 48, 90, 132, 132}, 429},
    {7, {1, 7, 27, 75, 165, 297, 429, 429}, 1430},
    {8, {1, 8, 35, 110, 275, 572, 1001, 1430, 1430}, 4862},
    {9, {1, 9, 44, 154, 429, 1001, 2002, 3432, 4862, 4862}, 16796},
};

const std::vector<TriangleRow> kB = {
    {0, {1}, 1},
    {1, {1, 1}, 2},
    {2, {1, 2, 3}, 6},
    {3, {1, 3, 6, 10}, 20},
    {4, {1, 4, 10, 20, 35}, 70},
    {5, {1, 5, 15, 35, 70, 126}, 252},
    {6, {1, 6, 21, 56, 126, 252, 462}, 924},
    {7, {1, 7, 28, 84, 210, 462, 924, 1716}, 3432},
    {8, {1, 8, 36, 120, 330, 792, 1716, 3432, 6435}, 12870},
    {9, {1, 9, 45, 165, 495, 1287, 3003, 6435, 12870, 24310}, 48620},
};

const std::vector<TriangleRow> kD = {
    {0, {}, std::nullopt},
    {1, {}, std::nullopt},
    {2, {1, 2, 1}, 4},
    {3, {1, 3, 5, 5}, 14},
    {4, {1, 4, 9, 16, 20}, 50},
    {5, {1, 5, 14, 30, 55, 77}, 182},
    {6, {1, 6, 20, 50, 105, 196, 294}, 672},
    {7, {1, 7, 27, 77, 182, 378, 714, 1122}, 2508},
    {8, {1, 8, 35, 112, 294, 672, 1386, 2640, 4290}, 9438},
    {9, {1, 9, 44, 156, 450, 1122, 2508, 5148, 9867, 16445}, 35750},
};

const std::vector<ComparisonRow> kComparison = {
    {2, 2, 1, 1},         {3, 7, 5, 2},           {4, 25, 20, 5},         {5, 91, 77, 14},
    {6, 336, 294, 42},    {7, 1254, 1122, 132},   {8, 4719, 4290, 429},   {9, 17875, 16445, 1430},
};

const std::vector<ExceptionalReference> kExceptional = {
    {Series::E, 3, {1, 3, 4, 2}, 10},
    {Series::E, 4, {1, 4, 9, 14, 14}, 42},
    {Series::E, 5, {1, 5, 14, 30, 55, 77}, 182},
    {Series::E, 6, {1, 6, 20, 50, 110, 228, 418}, 833},
    {Series::E, 7, {1, 7, 27, 77, 187, 429, 1001, 2431}, 4160},
    {Series::E, 8, {1, 8, 35, 112, 299, 728, 1771, 4784, 17342}, 25080},
    {Series::B, 3, {1, 3, 6, 10}, 20},
    {Series::F, 4, {1, 4, 10, 24, 66}, 105},
    {Series::G, 2, {1, 2, 5}, 8},
};

const std::vector<std::uint64_t> kTotals = {833, 4160, 25080, 105, 8};

const std::vector<std::uint64_t> kDiagonal = {1, 5, 20, 77, 294, 1122, 4290, 16445};

}  // namespace

std::span<const TriangleRow> triangle(Series series) {
  switch (series) {
    case Series::A: return kA;
    case Series::B: return kB;
    case Series::D: return kD;
    default: throw std::invalid_argument("no reference triangle for this series");
  }
}

std::span<const ComparisonRow> lucas_comparison() { return kComparison; }
std::span<const ExceptionalReference> exceptional_rows() { return kExceptional; }
std::span<const std::uint64_t> exceptional_totals() { return kTotals; }
std::span<const std::uint64_t> d_main_diagonal() { return kDiagonal; }

}  // namespace suptilt::reference
