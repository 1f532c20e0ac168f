#pragma once

#include <suptilt/dynkin_type.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Valued Dynkin diagrams, orientations and root-lattice arithmetic.
//
// Vertices are 0-based internally; every textual interface (orientation
// specs, listings, dumps) uses the 1-based labels 1..n.

namespace suptilt {

/// Edge {i, j} with i < j. The Cartan entries are A_ij = -ij and A_ji = -ji,
/// stored as positive magnitudes; ij * ji is 1, 2 or 3.
struct Edge {
  int i = 0;
  int j = 0;
  int ij = 1;
  int ji = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct DiagramShape {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> components;  // sorted vertex lists, sorted by first vertex
};

/// Canonical shape of an admissible type. Labelling follows the linear
/// pictures: a chain 1 - 2 - ... with the branching (D, E) or the multiple
/// edge (B, C, F, G) at the far end. Degenerate ranks come out as the
/// identified forests (D2 = A1+A1, E3 = A2+A1, ...).
DiagramShape shape_of(const DynkinType& type);

/// Directed arrow from -> to (0-based vertices).
struct Arrow {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Either the linear default (every arrow points towards vertex 1, branch
/// arrows point into the chain) or an explicit arrow set.
class OrientationSpec {
 public:
  static OrientationSpec linear_default() { return OrientationSpec{}; }
  static OrientationSpec explicit_arrows(std::vector<Arrow> arrows);

  /// "default" or a comma-separated list such as "2>1,3>2" (1-based labels).
  /// Throws std::invalid_argument on malformed text.
  static OrientationSpec parse(std::string_view text);

  bool is_default() const { return is_default_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// "default" or the canonical "a>b,..." text with arrows sorted.
  std::string to_string() const;

 private:
  bool is_default_ = true;
  std::vector<Arrow> arrows_;
};

/// Coefficients over the simple roots.
struct RootVector {
  std::vector<int> coords;

  bool is_positive() const;
  int height() const;

  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

std::string to_string(const RootVector& root);

/// A valued diagram with an acyclic orientation and its generalized Cartan
/// matrix. Immutable once built.
class CartanDatum {
 public:
  CartanDatum(DynkinType type, DiagramShape shape, std::vector<Arrow> arrows);

  const DynkinType& type() const { return type_; }
  const DiagramShape& shape() const { return shape_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int rank() const { return shape_.vertex_count; }

  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank() + j)]; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  /// Symmetric matrix diag(d) * A, row-major.
  std::vector<std::int64_t> symmetrized() const;

 private:
  DynkinType type_;
  DiagramShape shape_;
  std::vector<Arrow> arrows_;
  std::vector<int> cartan_;
  std::vector<int> symmetrizer_;
};

/// Throws std::invalid_argument for an inadmissible rank, an arrow that is not
/// an edge of the diagram, a missing or doubled edge, or a cycle.
CartanDatum build_cartan(const DynkinType& type,
                         const OrientationSpec& orientation = OrientationSpec::linear_default());

/// Ordering v1, ..., vn in which every arrow points from a later vertex to an
/// earlier one. Among the available sinks the smallest index is taken first.
std::vector<int> sink_order(const CartanDatum& datum);

/// s_i(x): coordinate i becomes -x_i - sum_{j != i} A_ij x_j.
RootVector simple_reflection(const CartanDatum& datum, int i, const RootVector& x);

RootVector simple_root(int rank, int i);

/// Positive roots, sorted. Throws std::domain_error when the closure does not
/// terminate within a generous cap, which means the matrix is not of finite type.
std::vector<RootVector> positive_roots(const CartanDatum& datum);

/// Number of positive roots of the type (n(n+1)/2 for A, n^2 for B and C, ...).
int expected_root_count(const DynkinType& type);

/// Whether diag(d) * A is symmetric and positive definite (Sylvester's criterion).
bool is_finite_type(const CartanDatum& datum);

/// All 2^|edges| orientations of the diagram, in binary-counter order over the
/// edge list (bit k set: edge k points from its larger to its smaller vertex).
std::vector<OrientationSpec> all_orientations(const DiagramShape& shape);

/// `count` orientations drawn from a seeded 64-bit Mersenne twister.
std::vector<OrientationSpec> sampled_orientations(const DiagramShape& shape, int count,
                                                  std::uint64_t seed);

}  // namespace suptilt
