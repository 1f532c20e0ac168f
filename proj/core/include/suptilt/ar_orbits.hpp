#pragma once

#include <suptilt/root_datum.hpp>

#include <bit>
#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Combinatorial model of the module category: the indecomposables
// M(i,u) = tau^{-u} P(i), 0 <= u <= q(i), with their dimension vectors.

namespace suptilt {

/// Upper bound on the number of indecomposables (E8 has 120).
inline constexpr std::size_t kMaxIndecs = 128;

using IndecBits = std::bitset<kMaxIndecs>;

/// Set of vertices, stored as a bit mask (rank <= 32).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr VertexSet full(int rank) {
    return VertexSet(rank >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << rank) - 1U);
  }

  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint32_t{1} << v; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet other) const { return VertexSet(bits_ | other.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// "{1,3}" with 1-based labels.
std::string to_string(VertexSet set);

/// Orbit coordinates (i, u) of M(i,u); vertex is 0-based.
struct OrbitCoord {
  int vertex = 0;
  int power = 0;

  friend auto operator<=>(const OrbitCoord&, const OrbitCoord&) = default;
};

struct Indec {
  OrbitCoord coord;
  RootVector dim;
  VertexSet support;
};

/// The indecomposables of one (type, orientation), sorted by (i, u), plus the
/// Hom and Ext non-vanishing matrices once build_matrices has run.
class ModCategory {
 public:
  const CartanDatum& datum() const { return datum_; }
  const std::vector<Indec>& indecs() const { return indecs_; }
  std::size_t size() const { return indecs_.size(); }
  const Indec& operator[](std::size_t index) const { return indecs_[index]; }

  /// q(i) for each vertex: the last u with M(i,u) defined.
  const std::vector<int>& orbit_lengths() const { return q_; }

  std::optional<std::size_t> index_of(OrbitCoord coord) const;
  std::size_t at(OrbitCoord coord) const;  // throws std::out_of_range

  bool is_projective(std::size_t x) const { return indecs_[x].coord.power == 0; }
  bool is_injective(std::size_t x) const {
    const auto& c = indecs_[x].coord;
    return c.power == q_[static_cast<std::size_t>(c.vertex)];
  }

  bool has_matrices() const { return !hom_.empty(); }
  /// hom(x, y): Hom(M_x, M_y) != 0. Requires build_matrices.
  bool hom(std::size_t x, std::size_t y) const { return hom_[x][y]; }
  bool ext(std::size_t x, std::size_t y) const { return ext_[x][y]; }
  const IndecBits& hom_row(std::size_t x) const { return hom_[x]; }
  const IndecBits& ext_row(std::size_t x) const { return ext_[x]; }

 private:
  explicit ModCategory(CartanDatum datum) : datum_(std::move(datum)) {}

  CartanDatum datum_;
  std::vector<Indec> indecs_;
  std::vector<int> q_;
  std::vector<std::size_t> offsets_;  // index of M(i,0) for each vertex
  std::vector<IndecBits> hom_;
  std::vector<IndecBits> ext_;

  friend ModCategory knit_category(const CartanDatum& datum);
  friend ModCategory build_matrices(ModCategory cat);
};

/// Projectives from the sink ordering v1..vn,
///   dim P(v_k) = s_{v1} s_{v2} ... s_{v_{k-1}} (alpha_{v_k}),
/// and the tau^- orbit dim M(i,u+1) = s_{v1} s_{v2} ... s_{vn} (dim M(i,u))
/// (s_{vn} applied first), iterated while the image stays positive.
/// The result is checked against the positive roots before returning.
ModCategory knit_category(const CartanDatum& datum);

VertexSet support(const Indec& indec);

/// Indecomposables with full support.
std::vector<Indec> sincere_indecomposables(const ModCategory& cat);

/// Plain-text dump, one indecomposable per line:
///   "<i> <u> | <dim_1> ... <dim_n> | <support labels>"
/// preceded by a "# <type> orientation=<spec>" header; labels are 1-based.
std::string dump_category(const ModCategory& cat);

}  // namespace suptilt
