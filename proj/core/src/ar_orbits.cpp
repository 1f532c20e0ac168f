#include <suptilt/ar_orbits.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace suptilt {

std::string to_string(VertexSet set) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < 32; ++v) {
    if (!set.contains(v)) continue;
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

std::optional<std::size_t> ModCategory::index_of(OrbitCoord coord) const {
  if (coord.vertex < 0 || coord.vertex >= static_cast<int>(q_.size())) return std::nullopt;
  if (coord.power < 0 || coord.power > q_[static_cast<std::size_t>(coord.vertex)]) return std::nullopt;
  return offsets_[static_cast<std::size_t>(coord.vertex)] + static_cast<std::size_t>(coord.power);
}

std::size_t ModCategory::at(OrbitCoord coord) const {
  const auto index = index_of(coord);
  if (!index) {
    throw std::out_of_range("no indecomposable M(" + std::to_string(coord.vertex + 1) + "," +
                            std::to_string(coord.power) + ")");
  }
  return *index;
}

VertexSet support(const Indec& indec) {
  VertexSet set;
  for (std::size_t j = 0; j < indec.dim.coords.size(); ++j) {
    if (indec.dim.coords[j] != 0) set.insert(static_cast<int>(j));
  }
  return set;
}

ModCategory knit_category(const CartanDatum& datum) {
  const int n = datum.rank();
  const std::vector<int> order = sink_order(datum);
  const auto roots = positive_roots(datum);
  if (roots.size() > kMaxIndecs) {
    throw std::length_error(label(datum.type()) + " has " + std::to_string(roots.size()) +
                            " indecomposables; at most " + std::to_string(kMaxIndecs) + " supported");
  }

  auto coxeter_inverse = [&](RootVector x) {
    for (int k = n - 1; k >= 0; --k) x = simple_reflection(datum, order[static_cast<std::size_t>(k)], x);
    return x;
  };

  ModCategory cat(datum);
  cat.q_.assign(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<RootVector>> orbits(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int vertex = order[static_cast<std::size_t>(k)];
    RootVector dim = simple_root(n, vertex);
    for (int l = k - 1; l >= 0; --l) dim = simple_reflection(datum, order[static_cast<std::size_t>(l)], dim);
    if (!dim.is_positive()) {
      throw std::logic_error("knit_category: projective P(" + std::to_string(vertex + 1) +
                             ") is not positive; sink ordering is broken");
    }
    auto& orbit = orbits[static_cast<std::size_t>(vertex)];
    while (dim.is_positive()) {
      if (orbit.size() > roots.size()) throw std::logic_error("knit_category: orbit does not end");
      orbit.push_back(dim);
      dim = coxeter_inverse(std::move(dim));
    }
  }

  for (int vertex = 0; vertex < n; ++vertex) {
    const auto& orbit = orbits[static_cast<std::size_t>(vertex)];
    cat.offsets_.push_back(cat.indecs_.size());
    cat.q_[static_cast<std::size_t>(vertex)] = static_cast<int>(orbit.size()) - 1;
    for (std::size_t u = 0; u < orbit.size(); ++u) {
      Indec indec{{vertex, static_cast<int>(u)}, orbit[u], {}};
      indec.support = support(indec);
      cat.indecs_.push_back(std::move(indec));
    }
  }

  std::vector<RootVector> dims;
  for (const auto& indec : cat.indecs_) dims.push_back(indec.dim);
  std::sort(dims.begin(), dims.end());
  if (dims != roots) {
    throw std::logic_error("knit_category: dimension vectors of " + label(datum.type()) +
                           " do not enumerate the positive roots");
  }
  return cat;
}

std::vector<Indec> sincere_indecomposables(const ModCategory& cat) {
  const VertexSet all = VertexSet::full(cat.datum().rank());
  std::vector<Indec> out;
  for (const auto& indec : cat.indecs()) {
    if (indec.support == all) out.push_back(indec);
  }
  return out;
}

std::string dump_category(const ModCategory& cat) {
  std::ostringstream out;
  out << "# " << label(cat.datum().type()) << " orientation=";
  if (cat.datum().arrows().empty()) {
    out << "none";
  } else {
    bool first = true;
    for (const auto& a : cat.datum().arrows()) {
      out << (first ? "" : ",") << a.from + 1 << '>' << a.to + 1;
      first = false;
    }
  }
  out << '\n';
  for (const auto& indec : cat.indecs()) {
    out << indec.coord.vertex + 1 << ' ' << indec.coord.power << " |";
    for (int c : indec.dim.coords) out << ' ' << c;
    out << " |";
    for (int v = 0; v < cat.datum().rank(); ++v) {
      if (indec.support.contains(v)) out << ' ' << v + 1;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace suptilt
