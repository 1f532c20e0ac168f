#include <suptilt/hom_calculus.hpp>

#include <stdexcept>

namespace suptilt {

bool hom_nonzero(const ModCategory& cat, std::size_t x, std::size_t y) {
  const OrbitCoord from = cat[x].coord;
  const OrbitCoord to = cat[y].coord;
  if (from.power > to.power) return false;
  const auto shifted = cat.index_of({to.vertex, to.power - from.power});
  return shifted && cat[*shifted].support.contains(from.vertex);
}

bool ext_nonzero(const ModCategory& cat, std::size_t x, std::size_t y) {
  const OrbitCoord from = cat[x].coord;
  if (from.power == 0) return false;
  return hom_nonzero(cat, y, cat.at({from.vertex, from.power - 1}));
}

ModCategory build_matrices(ModCategory cat) {
  const std::size_t size = cat.size();
  cat.hom_.assign(size, IndecBits{});
  cat.ext_.assign(size, IndecBits{});
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      cat.hom_[x][y] = hom_nonzero(cat, x, y);
      cat.ext_[x][y] = ext_nonzero(cat, x, y);
    }
  }
  return cat;
}

ModCategory make_category(const CartanDatum& datum) { return build_matrices(knit_category(datum)); }

std::vector<std::size_t> injective_envelopes(const ModCategory& cat) {
  if (!cat.has_matrices()) throw std::logic_error("injective_envelopes: matrices not built");
  const int n = cat.datum().rank();
  std::vector<std::size_t> out;
  for (int vertex = 0; vertex < n; ++vertex) {
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < cat.size(); ++j) {
      if (!cat.is_injective(j)) continue;
      bool matches = true;
      for (std::size_t x = 0; x < cat.size() && matches; ++x) {
        matches = cat.hom(x, j) == cat[x].support.contains(vertex);
      }
      if (!matches) continue;
      if (found) throw std::logic_error("injective_envelopes: two candidates for one vertex");
      found = j;
    }
    if (!found) {
      throw std::logic_error("injective_envelopes: no injective for vertex " + std::to_string(vertex + 1));
    }
    out.push_back(*found);
  }
  return out;
}

}  // namespace suptilt
