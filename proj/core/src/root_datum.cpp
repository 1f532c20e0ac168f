#include <suptilt/root_datum.hpp>

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace suptilt {

namespace {

constexpr std::size_t kRootCap = 4096;
constexpr int kCoordCap = 64;

std::vector<std::vector<int>> connected_components(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (const auto& e : edges) {
    const int a = find(e.i);
    const int b = find(e.j);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) groups[static_cast<std::size_t>(find(v))].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& g : groups) {
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

int parse_label(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto result = std::from_chars(token.data(), end, value);
  if (token.empty() || result.ec != std::errc{} || result.ptr != end || value < 1) {
    throw std::invalid_argument("orientation: bad vertex label '" + std::string(token) + "'");
  }
  return value;
}

// Determinant of the leading k x k block, by fraction-free elimination.
std::int64_t leading_minor(std::vector<std::int64_t> m, int n, int k) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(k * k));
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) a[static_cast<std::size_t>(r * k + c)] = m[static_cast<std::size_t>(r * n + c)];
  }
  auto at = [&](int r, int c) -> std::int64_t& { return a[static_cast<std::size_t>(r * k + c)]; };
  std::int64_t prev = 1;
  int sign = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (at(p, p) == 0) {
      int swap_row = -1;
      for (int r = p + 1; r < k; ++r) {
        if (at(r, p) != 0) { swap_row = r; break; }
      }
      if (swap_row < 0) return 0;
      for (int c = 0; c < k; ++c) std::swap(at(p, c), at(swap_row, c));
      sign = -sign;
    }
    for (int r = p + 1; r < k; ++r) {
      for (int c = p + 1; c < k; ++c) at(r, c) = (at(r, c) * at(p, p) - at(r, p) * at(p, c)) / prev;
    }
    prev = at(p, p);
  }
  return sign * at(k - 1, k - 1);
}

}  // namespace

// ---------------------------------------------------------------------------

DiagramShape shape_of(const DynkinType& type) {
  require_admissible(type);
  const int n = type.rank;
  DiagramShape shape;
  shape.vertex_count = n;
  auto chain = [&](int last) {
    for (int k = 0; k < last; ++k) shape.edges.push_back({k, k + 1, 1, 1});
  };
  switch (type.series) {
    case Series::A: chain(n - 1); break;
    case Series::B:
    case Series::C:
      chain(n - 2);
      // B: the n-th simple root is short, A_{n,n-1} = -2. C is the transpose.
      if (n >= 2) {
        shape.edges.push_back(type.series == Series::B ? Edge{n - 2, n - 1, 1, 2}
                                                       : Edge{n - 2, n - 1, 2, 1});
      }
      break;
    case Series::D:
      chain(n - 3);
      if (n >= 3) {
        shape.edges.push_back({n - 3, n - 2, 1, 1});
        shape.edges.push_back({n - 3, n - 1, 1, 1});
      }
      break;
    case Series::E:
      chain(n - 4);
      if (n >= 4) {
        shape.edges.push_back({n - 4, n - 3, 1, 1});
        shape.edges.push_back({n - 4, n - 2, 1, 1});
      }
      shape.edges.push_back({n - 2, n - 1, 1, 1});
      break;
    case Series::F:
      shape.edges = {{0, 1, 1, 1}, {1, 2, 1, 2}, {2, 3, 1, 1}};
      break;
    case Series::G:
      shape.edges = {{0, 1, 3, 1}};
      break;
  }
  shape.components = connected_components(n, shape.edges);
  return shape;
}

// ---------------------------------------------------------------------------

OrientationSpec OrientationSpec::explicit_arrows(std::vector<Arrow> arrows) {
  OrientationSpec spec;
  spec.is_default_ = false;
  std::sort(arrows.begin(), arrows.end());
  spec.arrows_ = std::move(arrows);
  return spec;
}

OrientationSpec OrientationSpec::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "default") return linear_default();
  std::vector<Arrow> arrows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t gt = item.find('>');
    if (gt == std::string_view::npos) {
      throw std::invalid_argument("orientation: expected 'a>b', got '" + std::string(item) + "'");
    }
    const Arrow arrow{parse_label(item.substr(0, gt)) - 1, parse_label(item.substr(gt + 1)) - 1};
    if (arrow.from == arrow.to) throw std::invalid_argument("orientation: loop at vertex " + std::to_string(arrow.from + 1));
    arrows.push_back(arrow);
    pos = comma + 1;
  }
  return explicit_arrows(std::move(arrows));
}

std::string OrientationSpec::to_string() const {
  if (is_default_) return "default";
  std::string out;
  for (const auto& a : arrows_) {
    if (!out.empty()) out += ',';
    out += std::to_string(a.from + 1) + ">" + std::to_string(a.to + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------

bool RootVector::is_positive() const {
  bool any = false;
  for (int c : coords) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

int RootVector::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

std::string to_string(const RootVector& root) {
  std::string out = "(";
  for (std::size_t k = 0; k < root.coords.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(root.coords[k]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

CartanDatum::CartanDatum(DynkinType type, DiagramShape shape, std::vector<Arrow> arrows)
    : type_(type), shape_(std::move(shape)), arrows_(std::move(arrows)) {
  const int n = shape_.vertex_count;
  cartan_.assign(static_cast<std::size_t>(n * n), 0);
  for (int v = 0; v < n; ++v) cartan_[static_cast<std::size_t>(v * n + v)] = 2;
  for (const auto& e : shape_.edges) {
    cartan_[static_cast<std::size_t>(e.i * n + e.j)] = -e.ij;
    cartan_[static_cast<std::size_t>(e.j * n + e.i)] = -e.ji;
  }

  // d_i A_ij = d_j A_ji, propagated along each tree as a fraction.
  std::vector<long> num(static_cast<std::size_t>(n), 0);
  std::vector<long> den(static_cast<std::size_t>(n), 1);
  for (const auto& component : shape_.components) {
    std::deque<int> queue{component.front()};
    num[static_cast<std::size_t>(component.front())] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (const auto& e : shape_.edges) {
        int w = -1;
        long a_vw = 0;
        long a_wv = 0;
        if (e.i == v) { w = e.j; a_vw = e.ij; a_wv = e.ji; }
        if (e.j == v) { w = e.i; a_vw = e.ji; a_wv = e.ij; }
        if (w < 0 || num[static_cast<std::size_t>(w)] != 0) continue;
        long p = num[static_cast<std::size_t>(v)] * a_vw;
        long q = den[static_cast<std::size_t>(v)] * a_wv;
        const long g = std::gcd(p, q);
        num[static_cast<std::size_t>(w)] = p / g;
        den[static_cast<std::size_t>(w)] = q / g;
        queue.push_back(w);
      }
    }
    long scale = 1;
    for (int v : component) scale = std::lcm(scale, den[static_cast<std::size_t>(v)]);
    long g = 0;
    for (int v : component) {
      num[static_cast<std::size_t>(v)] *= scale / den[static_cast<std::size_t>(v)];
      den[static_cast<std::size_t>(v)] = 1;
      g = std::gcd(g, num[static_cast<std::size_t>(v)]);
    }
    for (int v : component) num[static_cast<std::size_t>(v)] /= g;
  }
  symmetrizer_.assign(num.begin(), num.end());
}

std::vector<std::int64_t> CartanDatum::symmetrized() const {
  const int n = rank();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(i * n + j)] =
          static_cast<std::int64_t>(symmetrizer_[static_cast<std::size_t>(i)]) * cartan(i, j);
    }
  }
  return out;
}

CartanDatum build_cartan(const DynkinType& type, const OrientationSpec& orientation) {
  DiagramShape shape = shape_of(type);
  std::vector<Arrow> arrows;
  if (orientation.is_default()) {
    for (const auto& e : shape.edges) arrows.push_back({e.j, e.i});
  } else {
    std::vector<int> used(shape.edges.size(), 0);
    for (const auto& a : orientation.arrows()) {
      const auto lo = std::min(a.from, a.to);
      const auto hi = std::max(a.from, a.to);
      const auto it = std::find_if(shape.edges.begin(), shape.edges.end(),
                                   [&](const Edge& e) { return e.i == lo && e.j == hi; });
      if (a.from == a.to || it == shape.edges.end()) {
        throw std::invalid_argument("orientation: " + std::to_string(a.from + 1) + ">" +
                                    std::to_string(a.to + 1) + " is not an edge of " + label(type));
      }
      auto& slot = used[static_cast<std::size_t>(it - shape.edges.begin())];
      const int direction = a.from > a.to ? 1 : 2;
      if (slot == direction) {
        throw std::invalid_argument("orientation: duplicate arrow " + std::to_string(a.from + 1) +
                                    ">" + std::to_string(a.to + 1));
      }
      if (slot != 0) {
        throw std::invalid_argument("orientation: cyclic orientation, both directions given between " +
                                    std::to_string(lo + 1) + " and " + std::to_string(hi + 1));
      }
      slot = direction;
      arrows.push_back(a);
    }
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (used[k] == 0) {
        throw std::invalid_argument("orientation: no arrow given for edge " +
                                    std::to_string(shape.edges[k].i + 1) + "-" +
                                    std::to_string(shape.edges[k].j + 1));
      }
    }
  }
  std::sort(arrows.begin(), arrows.end());
  CartanDatum datum(type, std::move(shape), std::move(arrows));
  (void)sink_order(datum);  // rejects cycles
  return datum;
}

std::vector<int> sink_order(const CartanDatum& datum) {
  const int n = datum.rank();
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(order.size()) < n) {
    int next = -1;
    for (int v = 0; v < n && next < 0; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      const bool sink = std::none_of(datum.arrows().begin(), datum.arrows().end(), [&](const Arrow& a) {
        return a.from == v && !placed[static_cast<std::size_t>(a.to)];
      });
      if (sink) next = v;
    }
    if (next < 0) throw std::invalid_argument("orientation: cyclic orientation has no sink ordering");
    placed[static_cast<std::size_t>(next)] = true;
    order.push_back(next);
  }
  return order;
}

RootVector simple_reflection(const CartanDatum& datum, int i, const RootVector& x) {
  RootVector out = x;
  int pairing = 0;
  for (int j = 0; j < datum.rank(); ++j) pairing += datum.cartan(i, j) * x.coords[static_cast<std::size_t>(j)];
  out.coords[static_cast<std::size_t>(i)] -= pairing;
  return out;
}

RootVector simple_root(int rank, int i) {
  RootVector r{std::vector<int>(static_cast<std::size_t>(rank), 0)};
  r.coords[static_cast<std::size_t>(i)] = 1;
  return r;
}

std::vector<RootVector> positive_roots(const CartanDatum& datum) {
  const int n = datum.rank();
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < n; ++i) {
    seen.insert(simple_root(n, i));
    queue.push_back(simple_root(n, i));
  }
  while (!queue.empty()) {
    const RootVector root = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      RootVector image = simple_reflection(datum, i, root);
      if (!image.is_positive() || seen.contains(image)) continue;
      const bool runaway = std::any_of(image.coords.begin(), image.coords.end(),
                                       [](int c) { return c > kCoordCap; });
      if (runaway || seen.size() >= kRootCap) {
        throw std::domain_error("positive_roots: closure does not terminate; " + label(datum.type()) +
                                " is not of finite type");
      }
      seen.insert(image);
      queue.push_back(std::move(image));
    }
  }
  return {seen.begin(), seen.end()};
}

int expected_root_count(const DynkinType& type) {
  require_admissible(type);
  const int n = type.rank;
  switch (type.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: {
      constexpr int counts[] = {0, 0, 0, 4, 10, 20, 36, 63, 120};
      return counts[n];
    }
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

bool is_finite_type(const CartanDatum& datum) {
  const int n = datum.rank();
  const auto sym = datum.symmetrized();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (sym[static_cast<std::size_t>(i * n + j)] != sym[static_cast<std::size_t>(j * n + i)]) return false;
    }
  }
  for (int k = 1; k <= n; ++k) {
    if (leading_minor(sym, n, k) <= 0) return false;
  }
  return true;
}

std::vector<OrientationSpec> all_orientations(const DiagramShape& shape) {
  const std::size_t m = shape.edges.size();
  std::vector<OrientationSpec> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<Arrow> arrows;
    for (std::size_t k = 0; k < m; ++k) {
      const auto& e = shape.edges[k];
      arrows.push_back((bits >> k) & 1U ? Arrow{e.j, e.i} : Arrow{e.i, e.j});
    }
    out.push_back(OrientationSpec::explicit_arrows(std::move(arrows)));
  }
  return out;
}

std::vector<OrientationSpec> sampled_orientations(const DiagramShape& shape, int count,
                                                  std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<OrientationSpec> out;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t bits = engine();
    std::vector<Arrow> arrows;
    for (std::size_t e = 0; e < shape.edges.size(); ++e) {
      const auto& edge = shape.edges[e];
      arrows.push_back((bits >> e) & 1U ? Arrow{edge.j, edge.i} : Arrow{edge.i, edge.j});
    }
    out.push_back(OrientationSpec::explicit_arrows(std::move(arrows)));
  }
  return out;
}

}  // namespace suptilt
