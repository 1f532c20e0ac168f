#pragma once

#include <suptilt/dynkin_type.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Published reference values, transcribed by hand. Nothing here is computed;
// these tables are what the generators are checked against.

namespace suptilt::reference {

struct TriangleRow {
  int n;
  std::vector<std::uint64_t> values;  // a_0 .. a_n; empty where undefined
  std::optional<std::uint64_t> sum;
};

/// Rows n = 0..9 of the A, B and D triangles. D rows 0 and 1 are undefined.
std::span<const TriangleRow> triangle(Series series);

struct ComparisonRow {
  int n;
  std::uint64_t lucas;       // [2n-2 over n]
  std::uint64_t d_diagonal;  // [2n-2 over n-2] = a_n(D_n)
  std::uint64_t difference;  // C(2n-2, n-1) / n
};

/// n = 2..9.
std::span<const ComparisonRow> lucas_comparison();

struct ExceptionalReference {
  Series series;
  int rank;
  std::vector<std::uint64_t> values;
  std::uint64_t total;
};

/// E3..E8, B3, F4, G2.
std::span<const ExceptionalReference> exceptional_rows();

/// Totals for E6, E7, E8, F4, G2 as listed together.
std::span<const std::uint64_t> exceptional_totals();

/// First terms of the D main diagonal, n = 2..9.
std::span<const std::uint64_t> d_main_diagonal();

}  // namespace suptilt::reference
