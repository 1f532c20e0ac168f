#include <suptilt/enumerator.hpp>
#include <suptilt/hom_calculus.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace suptilt {
namespace {

// Two-word mask for the inner search loop; std::bitset has no portable
// find-first.
struct Mask {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool empty() const { return (lo | hi) == 0; }
  void set(std::size_t i) { (i < 64 ? lo : hi) |= std::uint64_t{1} << (i % 64); }
  std::size_t pop_first() {
    if (lo != 0) {
      const auto i = static_cast<std::size_t>(std::countr_zero(lo));
      lo &= lo - 1;
      return i;
    }
    const auto i = static_cast<std::size_t>(std::countr_zero(hi));
    hi &= hi - 1;
    return 64 + i;
  }
  Mask operator&(const Mask& o) const { return {lo & o.lo, hi & o.hi}; }
};

struct SearchContext {
  const ModCategory* cat = nullptr;
  Statistic statistic = Statistic::antichain;
  std::vector<Mask> compatible;  // compatible[x]: indices y > x that may join x
  std::vector<std::uint32_t> support;
};

SearchContext make_context(const ModCategory& cat, Statistic statistic) {
  if (!cat.has_matrices()) throw std::logic_error("enumeration needs build_matrices first");
  SearchContext ctx;
  ctx.cat = &cat;
  ctx.statistic = statistic;
  const std::size_t size = cat.size();
  for (std::size_t x = 0; x < size; ++x) {
    Mask m;
    for (std::size_t y = x + 1; y < size; ++y) {
      const bool ok = statistic == Statistic::antichain ? !cat.hom(x, y) && !cat.hom(y, x)
                                                        : !cat.ext(x, y) && !cat.ext(y, x);
      if (ok) m.set(y);
    }
    ctx.compatible.push_back(m);
    ctx.support.push_back(cat[x].support.bits());
  }
  return ctx;
}

bool admissible_singleton(const SearchContext& ctx, std::size_t x) {
  return ctx.statistic == Statistic::antichain || !ctx.cat->ext(x, x);
}

bool emits(const SearchContext& ctx, int size, std::uint32_t support) {
  return ctx.statistic == Statistic::antichain || std::popcount(support) == size;
}

// Visits every admissible set whose smallest member is members[0], with the
// given candidates for the next member.
template <class Visit>
void extend(const SearchContext& ctx, std::array<std::size_t, kMaxIndecs>& members, int size,
            std::uint32_t support, Mask candidates, Visit& visit) {
  if (emits(ctx, size, support)) visit(members.data(), size, support);
  while (!candidates.empty()) {
    const std::size_t y = candidates.pop_first();
    if (!admissible_singleton(ctx, y)) continue;
    members[static_cast<std::size_t>(size)] = y;
    extend(ctx, members, size + 1, support | ctx.support[y], candidates & ctx.compatible[y], visit);
  }
}

template <class Visit>
void search_from(const SearchContext& ctx, std::size_t first, Visit& visit) {
  if (!admissible_singleton(ctx, first)) return;
  std::array<std::size_t, kMaxIndecs> members{};
  members[0] = first;
  extend(ctx, members, 1, ctx.support[first], ctx.compatible[first], visit);
}

template <class Visit>
void search_all(const SearchContext& ctx, Visit& visit) {
  visit(nullptr, 0, 0U);
  for (std::size_t x = 0; x < ctx.cat->size(); ++x) search_from(ctx, x, visit);
}

void for_each_impl(const ModCategory& cat, Statistic statistic,
                   const std::function<void(const IndecSet&)>& visit) {
  const SearchContext ctx = make_context(cat, statistic);
  auto emit = [&](const std::size_t* members, int size, std::uint32_t) {
    visit(make_set(cat, std::vector<std::size_t>(members, members + size)));
  };
  search_all(ctx, emit);
}

struct Tally {
  std::vector<std::uint64_t> by_support_rank;
  std::vector<std::uint64_t> by_size;
};

}  // namespace

IndecSet make_set(const ModCategory& cat, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  IndecSet set;
  for (std::size_t x : members) {
    if (x >= cat.size()) throw std::out_of_range("make_set: index out of range");
    set.bits.set(x);
    set.support = set.support | cat[x].support;
  }
  set.members = std::move(members);
  return set;
}

bool is_antichain(const ModCategory& cat, const IndecSet& set) {
  for (std::size_t a : set.members) {
    for (std::size_t b : set.members) {
      if (a != b && cat.hom(a, b)) return false;
    }
  }
  return true;
}

bool is_rigid(const ModCategory& cat, const IndecSet& set) {
  for (std::size_t a : set.members) {
    for (std::size_t b : set.members) {
      if (cat.ext(a, b)) return false;
    }
  }
  return true;
}

bool is_support_tilting(const ModCategory& cat, const IndecSet& set) {
  return is_rigid(cat, set) && static_cast<int>(set.members.size()) == set.support.size();
}

void for_each_antichain(const ModCategory& cat, const std::function<void(const IndecSet&)>& visit) {
  for_each_impl(cat, Statistic::antichain, visit);
}

void for_each_support_tilting(const ModCategory& cat, const std::function<void(const IndecSet&)>& visit) {
  for_each_impl(cat, Statistic::support_tilting, visit);
}

std::vector<IndecSet> enumerate(const ModCategory& cat, Statistic statistic) {
  std::vector<IndecSet> out;
  for_each_impl(cat, statistic, [&](const IndecSet& set) { out.push_back(set); });
  return out;
}

std::vector<IndecSet> enumerate_antichains(const ModCategory& cat) {
  return enumerate(cat, Statistic::antichain);
}

std::vector<IndecSet> enumerate_support_tilting(const ModCategory& cat) {
  return enumerate(cat, Statistic::support_tilting);
}

CountTable count_table(const ModCategory& cat, Statistic statistic, int threads) {
  const SearchContext ctx = make_context(cat, statistic);
  const int n = cat.datum().rank();
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  const std::size_t tasks = cat.size();

  std::vector<Tally> tallies(tasks, Tally{std::vector<std::uint64_t>(width), std::vector<std::uint64_t>(width)});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task = next++; task < tasks; task = next++) {
      Tally& tally = tallies[task];
      auto visit = [&](const std::size_t*, int size, std::uint32_t support) {
        ++tally.by_support_rank[static_cast<std::size_t>(std::popcount(support))];
        ++tally.by_size[static_cast<std::size_t>(size)];
      };
      search_from(ctx, task, visit);
    }
  };
  const int workers = std::clamp(threads, 1, 256);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  CountTable table;
  table.label = label(cat.datum().type());
  table.n = n;
  table.by_support_rank.assign(width, ExactInt{0});
  table.by_size.assign(width, ExactInt{0});
  table.by_support_rank[0] = 1;
  table.by_size[0] = 1;
  for (const Tally& tally : tallies) {
    for (std::size_t s = 0; s < width; ++s) {
      table.by_support_rank[s] += tally.by_support_rank[s];
      table.by_size[s] += tally.by_size[s];
    }
  }
  for (const auto& c : table.by_support_rank) table.total += c;
  return table;
}

std::string format_counts(const std::vector<ExactInt>& row, const ExactInt& total) {
  std::string out;
  for (const auto& c : row) out += to_string(c) + " ";
  return out + "| total " + to_string(total);
}

std::string format_set(const ModCategory& cat, const IndecSet& set) {
  if (set.members.empty()) return "{}";
  std::string out;
  for (std::size_t x : set.members) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(cat[x].coord.vertex + 1) + "," + std::to_string(cat[x].coord.power) + ")";
  }
  return out;
}

SincereClassification classify_sincere(const ModCategory& cat, const std::vector<IndecSet>& antichains) {
  const VertexSet all = VertexSet::full(cat.datum().rank());
  SincereClassification out;
  for (std::size_t x = 0; x < cat.size(); ++x) {
    if (cat[x].support == all) out.per_element.emplace_back(x, ExactInt{0});
  }
  for (const IndecSet& set : antichains) {
    if (set.support != all) continue;
    int hits = 0;
    for (auto& [x, count] : out.per_element) {
      if (set.bits[x]) {
        ++count;
        ++hits;
      }
    }
    if (hits > 1) throw std::logic_error("classify_sincere: antichain with two sincere members");
    if (hits == 1) {
      ++out.u;
    } else {
      ++out.v;
    }
  }
  return out;
}

IndecSet eta_map(const ModCategory& cat, const IndecSet& set) {
  if (set.support != VertexSet::full(cat.datum().rank())) throw std::invalid_argument("eta_map: not sincere");
  if (!is_antichain(cat, set)) throw std::invalid_argument("eta_map: not an antichain");
  std::vector<std::size_t> kept;
  int injectives = 0;
  for (std::size_t x : set.members) {
    if (cat.is_injective(x)) {
      ++injectives;
    } else {
      kept.push_back(x);
    }
  }
  if (injectives > 1) throw std::logic_error("eta_map: antichain with two injectives");
  return make_set(cat, std::move(kept));
}

IndecSet eta_inverse(const ModCategory& cat, const IndecSet& set) {
  const int n = cat.datum().rank();
  if (set.support == VertexSet::full(n)) return set;
  int missing = 0;
  while (set.support.contains(missing)) ++missing;
  std::vector<std::size_t> members = set.members;
  members.push_back(injective_envelopes(cat)[static_cast<std::size_t>(missing)]);
  return make_set(cat, std::move(members));
}

bool is_maximal_rigid_in_support(const ModCategory& cat, const IndecSet& set) {
  for (std::size_t x = 0; x < cat.size(); ++x) {
    if (set.bits[x] || !cat[x].support.is_subset_of(set.support)) continue;
    bool breaks = cat.ext(x, x);
    for (std::size_t y : set.members) breaks = breaks || cat.ext(x, y) || cat.ext(y, x);
    if (!breaks) return false;
  }
  return true;
}

}  // namespace suptilt
