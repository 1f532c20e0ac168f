#pragma once

#include <suptilt/ar_orbits.hpp>

#include <cstddef>
#include <vector>

namespace suptilt {

/// Hom(M(i,u), M(j,v)) != 0  iff  u <= v and i lies in the support of M(j, v-u).
/// Arguments are indices into cat.indecs(); works before build_matrices.
bool hom_nonzero(const ModCategory& cat, std::size_t x, std::size_t y);

/// Ext(X, Y) != 0 via Ext(X,Y) = D Hom(Y, tau X); false for projective X.
bool ext_nonzero(const ModCategory& cat, std::size_t x, std::size_t y);

/// Fills the Hom and Ext bit-matrices.
ModCategory build_matrices(ModCategory cat);

/// knit_category followed by build_matrices.
ModCategory make_category(const CartanDatum& datum);

/// For each vertex i the index of the injective envelope I(i), identified as
/// the injective J with Hom(X, J) != 0 exactly when i is in the support of X.
/// Requires matrices.
std::vector<std::size_t> injective_envelopes(const ModCategory& cat);

}  // namespace suptilt
