#pragma once

#include <suptilt/ar_orbits.hpp>
#include <suptilt/exact_int.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace suptilt {

/// A set of indecomposables, by index into ModCategory::indecs().
struct IndecSet {
  std::vector<std::size_t> members;  // ascending
  IndecBits bits;
  VertexSet support;

  friend bool operator==(const IndecSet& a, const IndecSet& b) { return a.members == b.members; }
};

IndecSet make_set(const ModCategory& cat, std::vector<std::size_t> members);

enum class Statistic { antichain, support_tilting };

/// Pairwise Hom-orthogonal.
bool is_antichain(const ModCategory& cat, const IndecSet& set);
/// Pairwise Ext-free in both directions.
bool is_rigid(const ModCategory& cat, const IndecSet& set);
/// Rigid with as many members as support vertices.
bool is_support_tilting(const ModCategory& cat, const IndecSet& set);

/// Lexicographic backtracking over indec indices; the empty set comes first.
void for_each_antichain(const ModCategory& cat, const std::function<void(const IndecSet&)>& visit);
void for_each_support_tilting(const ModCategory& cat, const std::function<void(const IndecSet&)>& visit);

std::vector<IndecSet> enumerate_antichains(const ModCategory& cat);
std::vector<IndecSet> enumerate_support_tilting(const ModCategory& cat);
std::vector<IndecSet> enumerate(const ModCategory& cat, Statistic statistic);

struct CountTable {
  std::string label;
  int n = 0;
  std::vector<ExactInt> by_support_rank;  // index s = 0..n
  std::vector<ExactInt> by_size;
  ExactInt total;

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Tallies both statistics in one pass. The search is split by smallest
/// member across `threads` workers; the merged table does not depend on it.
CountTable count_table(const ModCategory& cat, Statistic statistic, int threads = 1);

/// "1 6 20 50 105 196 294 | total 672"
std::string format_counts(const std::vector<ExactInt>& row, const ExactInt& total);

/// "(1,0) (2,1)" with 1-based vertices; the empty set prints as "{}".
std::string format_set(const ModCategory& cat, const IndecSet& set);

struct SincereClassification {
  ExactInt u;  // sincere antichains containing a sincere indecomposable
  ExactInt v;  // sincere antichains without one
  /// (index of a sincere indecomposable, number of sincere antichains containing it)
  std::vector<std::pair<std::size_t, ExactInt>> per_element;
};

/// Throws std::logic_error if some antichain holds two sincere members.
SincereClassification classify_sincere(const ModCategory& cat, const std::vector<IndecSet>& antichains);

/// Removes the injective member of a sincere antichain, if any. Throws
/// std::invalid_argument when `set` is not a sincere antichain and
/// std::logic_error when it holds two injectives.
IndecSet eta_map(const ModCategory& cat, const IndecSet& set);

/// Inverse of eta_map on antichains without injectives: a non-sincere
/// antichain gains I(i) for the smallest vertex i outside its support.
IndecSet eta_inverse(const ModCategory& cat, const IndecSet& set);

/// Whether adding any indecomposable supported inside supp(set) breaks rigidity.
bool is_maximal_rigid_in_support(const ModCategory& cat, const IndecSet& set);

}  // namespace suptilt
