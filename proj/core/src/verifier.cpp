#include <suptilt/verifier.hpp>

#include <suptilt/closed_forms.hpp>
#include <suptilt/enumerator.hpp>
#include <suptilt/hom_calculus.hpp>
#include <suptilt/oeis_io.hpp>
#include <suptilt/reference_tables.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>
#include <type_traits>

namespace suptilt {
namespace {

std::string orientation_tag(const OrientationSpec& o) {
  const std::string text = o.to_string();
  return text.empty() ? "none" : text;
}

std::string row_text(const std::vector<ExactInt>& row) {
  ExactInt total = 0;
  for (const auto& c : row) total += c;
  return format_counts(row, total);
}

template <class T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ' ';
    if constexpr (std::is_same_v<T, ExactInt>) {
      out += to_string(v);
    } else if constexpr (std::is_same_v<T, std::string>) {
      out += v;
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

// Runs an identity over a range of arguments; arguments the identity
// rejects with std::out_of_range are outside its range and are skipped.
class Sweep {
 public:
  template <class F>
  void at(const std::string& argument, F&& holds) {
    bool ok = false;
    try {
      ok = holds();
    } catch (const std::out_of_range&) {
      return;
    }
    ++count_;
    if (!ok && failure_.empty()) failure_ = argument;
  }

  void report(VerificationReport& report, const std::string& id, const std::string& subject) const {
    const std::string expected = "holds at all " + std::to_string(count_) + " admissible arguments";
    if (failure_.empty()) {
      report.add(id, subject, expected, count_ > 0 ? expected : "no admissible arguments", count_ > 0);
    } else {
      report.add(id, subject, expected, "fails at " + failure_, false);
    }
  }

 private:
  long count_ = 0;
  std::string failure_;
};

std::string arg(int n) { return "n=" + std::to_string(n); }
std::string arg(long n, long s, const char* first = "n") {
  return std::string(first) + "=" + std::to_string(n) + ",s=" + std::to_string(s);
}

std::string table_text(const CountTable& st, const CountTable& an) {
  return "tilting " + format_counts(st.by_support_rank, st.total) + "; antichain " +
         format_counts(an.by_support_rank, an.total) + "; by size " + format_counts(an.by_size, an.total);
}

const char* family_name(ShearFamily family) {
  switch (family) {
    case ShearFamily::catalan: return "catalan";
    case ShearFamily::pascal: return "pascal";
    case ShearFamily::lucas: return "lucas";
  }
  return "?";
}

// Shared part of the two eta checks: S = sincere antichains, W = antichains
// without injectives.
void check_eta(VerificationReport& report, const ModCategory& cat, const std::vector<IndecSet>& antichains,
               const std::string& id, const std::string& subject, const ExactInt& expected_count) {
  const VertexSet all = VertexSet::full(cat.datum().rank());
  std::vector<IndecSet> sincere;
  std::vector<IndecSet> injective_free;
  for (const auto& a : antichains) {
    if (a.support == all) sincere.push_back(a);
    if (std::none_of(a.members.begin(), a.members.end(), [&](std::size_t x) { return cat.is_injective(x); })) {
      injective_free.push_back(a);
    }
  }
  std::string problem;
  try {
    for (const auto& a : sincere) {
      const IndecSet b = eta_map(cat, a);
      const bool in_w = is_antichain(cat, b) &&
                        std::none_of(b.members.begin(), b.members.end(), [&](std::size_t x) { return cat.is_injective(x); });
      if (!in_w) problem = "eta(" + format_set(cat, a) + ") leaves W";
      else if (eta_inverse(cat, b) != a) problem = "eta^-1 eta(" + format_set(cat, a) + ") differs";
      if (!problem.empty()) break;
    }
    for (const auto& b : injective_free) {
      if (!problem.empty()) break;
      const IndecSet a = eta_inverse(cat, b);
      if (a.support != all || !is_antichain(cat, a)) problem = "eta^-1(" + format_set(cat, b) + ") leaves S";
      else if (eta_map(cat, a) != b) problem = "eta eta^-1(" + format_set(cat, b) + ") differs";
    }
  } catch (const std::exception& e) {
    problem = e.what();
  }
  const std::string count = to_string(expected_count);
  const std::string expected = "|S| = |W| = " + count + ", round trips";
  const std::string s_count = std::to_string(sincere.size());
  const std::string w_count = std::to_string(injective_free.size());
  const std::string sizes = s_count == w_count ? "|S| = |W| = " + s_count : "|S| = " + s_count + ", |W| = " + w_count;
  const std::string actual = sizes + (problem.empty() ? ", round trips" : ", " + problem);
  report.expect_equal(id, subject, expected, actual);
}

}  // namespace

VerificationReport verify_type(const DynkinType& type, const std::vector<OrientationSpec>& orientations, int threads) {
  require_admissible(type);
  const int indecs = expected_root_count(type);
  if (indecs > static_cast<int>(kMaxIndecs)) {
    throw std::invalid_argument(label(type) + " has " + std::to_string(indecs) +
                                " indecomposables; enumeration handles at most " + std::to_string(kMaxIndecs));
  }
  VerificationReport report;
  const std::string name = label(type);
  const std::string expected = row_text(convention_row(type.series, type.rank));

  std::string reference_tables;
  std::string reference_orientation;
  std::string disagreement;
  for (const auto& o : orientations) {
    const std::string tag = name + "." + orientation_tag(o);
    const std::string subject = name + " " + orientation_tag(o);
    const ModCategory cat = make_category(build_cartan(type, o));
    const CountTable st = count_table(cat, Statistic::support_tilting, threads);
    const CountTable an = count_table(cat, Statistic::antichain, threads);
    report.expect_equal("count." + tag + ".tilting", subject + " support-tilting by support-rank", expected,
                        format_counts(st.by_support_rank, st.total));
    report.expect_equal("count." + tag + ".antichain", subject + " antichains by support-rank", expected,
                        format_counts(an.by_support_rank, an.total));
    report.expect_equal("equidistribution.size." + tag, subject + " antichains by size", expected,
                        format_counts(an.by_size, an.total));
    const std::string tables = table_text(st, an);
    if (reference_tables.empty()) {
      reference_tables = tables;
      reference_orientation = orientation_tag(o);
    } else if (tables != reference_tables && disagreement.empty()) {
      disagreement = orientation_tag(o) + ": " + tables;
    }
  }
  if (orientations.size() > 1) {
    const std::string agree = std::to_string(orientations.size()) + " orientations agree";
    report.add("orientation." + name, name + " count tables across orientations", agree,
               disagreement.empty() ? agree : "differs from " + reference_orientation + " at " + disagreement,
               disagreement.empty());
  }
  return report;
}

VerificationReport verify_b_equals_c(int n_max) {
  VerificationReport report;
  for (int n = 2; n <= n_max; ++n) {
    auto tables = [&](Series series) {
      const ModCategory cat = make_category(build_cartan({series, n}));
      return table_text(count_table(cat, Statistic::support_tilting), count_table(cat, Statistic::antichain));
    };
    report.expect_equal("b_equals_c.n" + std::to_string(n), "B" + std::to_string(n) + " vs C" + std::to_string(n),
                        tables(Series::B), tables(Series::C));
  }
  return report;
}

VerificationReport verify_identities(int max_n) {
  VerificationReport report;
  const std::vector<Series> abd = {Series::A, Series::B, Series::D};

  for (Series x : {Series::A, Series::B, Series::D, Series::E}) {
    Sweep sweep;
    const int top = x == Series::E ? std::min(max_n, 8) : max_n;
    for (int n = 0; n <= top; ++n) {
      for (int s = 0; s <= n + 1; ++s) sweep.at(arg(n, s), [&] { return hook_check(x, n, s); });
    }
    sweep.report(report, std::string("identity.hook.") + series_letter(x), "hook formula");
  }
  for (Series x : {Series::D, Series::E}) {
    Sweep sweep;
    const int top = x == Series::E ? std::min(max_n, 8) : max_n;
    for (int n = 0; n <= top; ++n) sweep.at(arg(n), [&] { return modified_hook_check(x, n); });
    sweep.report(report, std::string("identity.modified_hook.") + series_letter(x),
                 x == Series::D ? "modified hook formula and a_{n-1}(D_n) = [2n-3 over n-1]"
                                : "modified hook formula");
  }
  for (Series x : abd) {
    Sweep sweep;
    for (int n = 0; n <= max_n; ++n) {
      for (int s = 0; s <= n; ++s) sweep.at(arg(n, s), [&] { return summation_check(x, n, s); });
    }
    sweep.report(report, std::string("identity.summation.") + series_letter(x), "partial row sums");
  }
  for (Series x : abd) {
    Sweep sweep;
    for (int n = 0; n <= max_n; ++n) sweep.at(arg(n), [&] { return total_split_check(x, n); });
    sweep.report(report, std::string("identity.total_split.") + series_letter(x), "a(X_n) = a_n(X_n) + a_{n-1}(X_{n+1})");
  }
  {
    Sweep sweep;
    for (int n = 0; n <= max_n; ++n) sweep.at(arg(n), [&] { return comparison_check(n); });
    sweep.report(report, "identity.comparison", "[2n-2 over n] - a_n(D_n) = a_{n-1}(A_{n-1})");
  }
  for (Series x : abd) {
    Sweep sweep;
    for (int n = 0; n <= max_n; ++n) sweep.at(arg(n), [&] { return diagonal_checks(x, n); });
    sweep.report(report, std::string("identity.diagonal.") + series_letter(x), "sum sequence and main diagonal as diagonals");
  }
  {
    Sweep sweep;
    for (int n = 0; n <= max_n; ++n) sweep.at(arg(n), [&] { return b_decomposition_check(n); });
    sweep.report(report, "identity.b_decomposition", "u/v split of a_n(B_n)");
  }
  for (ShearFamily f : {ShearFamily::catalan, ShearFamily::pascal, ShearFamily::lucas}) {
    Sweep recursion;
    Sweep hockey;
    for (long t = 0; t <= 2L * max_n; ++t) {
      for (long s = 0; s <= t + 1; ++s) {
        recursion.at(arg(t, s, "t"), [&] { return shear_recursion_check(f, t, s); });
        hockey.at(arg(t, s, "t"), [&] { return hockey_stick_check(f, t, s); });
      }
    }
    recursion.report(report, std::string("identity.shear_recursion.") + family_name(f), "z_s(t) = z_{s-1}(t-1) + z_s(t-1)");
    hockey.report(report, std::string("identity.hockey_stick.") + family_name(f), "z_s(t) = sum_i z_i(t-s-1+i)");
  }
  {
    Sweep a;
    Sweep b;
    Sweep d;
    for (int n = 1; n <= max_n; ++n) {
      for (int s = 0; s <= n; ++s) {
        a.at(arg(n, s), [&] { return a_s(Series::A, n, s) == sheared(ShearFamily::catalan, n + s - 1, s); });
        b.at(arg(n, s), [&] { return a_s(Series::B, n, s) == sheared(ShearFamily::pascal, n + s - 1, s); });
        if (n >= 2 && s < n && n + s - 2 >= 1) {
          d.at(arg(n, s), [&] { return a_s(Series::D, n, s) == sheared(ShearFamily::lucas, n + s - 2, s); });
        }
      }
    }
    a.report(report, "identity.shear.A", "a_s(A_n) = z_s(n+s-1), Catalan");
    b.report(report, "identity.shear.B", "a_s(B_n) = z_s(n+s-1), Pascal");
    d.report(report, "identity.shear.D", "a_s(D_n) = z_s(n+s-2), Lucas, s < n");
  }
  return report;
}

VerificationReport verify_triangles() {
  VerificationReport report;
  for (Series series : {Series::A, Series::B, Series::D}) {
    for (const auto& row : reference::triangle(series)) {
      if (row.values.empty()) continue;
      std::vector<ExactInt> values(row.values.begin(), row.values.end());
      const std::string expected = join(values) + (row.sum ? " | sum " + std::to_string(*row.sum) : "");
      const auto generated = convention_row(series, row.n);
      const std::string actual = join(generated) + (row.sum ? " | sum " + to_string(a_total(series, row.n)) : "");
      report.expect_equal(std::string("triangle.") + series_letter(series) + ".n" + std::to_string(row.n),
                          std::string("a_s(") + series_letter(series) + "_" + std::to_string(row.n) + ")", expected, actual);
    }
  }
  for (const auto& row : reference::lucas_comparison()) {
    const int n = row.n;
    const ExactInt central = binom(2L * n - 2, n - 1);
    const std::string expected =
        std::to_string(row.lucas) + " " + std::to_string(row.d_diagonal) + " " + std::to_string(row.difference);
    const std::string actual = to_string(bailey(2L * n - 2, n)) + " " + to_string(convention_row(Series::D, n)[static_cast<std::size_t>(n)]) +
                               " " + to_string(central / n);
    report.expect_equal("comparison.n" + std::to_string(n), "[2n-2 over n], a_n(D_n), C(2n-2,n-1)/n", expected, actual);
  }
  {
    std::vector<ExactInt> diagonal;
    for (int n = 2; n <= 9; ++n) diagonal.push_back(convention_row(Series::D, n)[static_cast<std::size_t>(n)]);
    const auto ref = reference::d_main_diagonal();
    report.expect_equal("triangle.D.diagonal", "a_n(D_n), n = 2..9", join(std::vector<std::uint64_t>(ref.begin(), ref.end())),
                        join(diagonal));
  }
  return report;
}

VerificationReport verify_exceptional() {
  VerificationReport report;
  const auto table = exceptional_table();
  for (const auto& ref : reference::exceptional_rows()) {
    const std::string name = label({ref.series, ref.rank});
    const std::string expected =
        join(std::vector<ExactInt>(ref.values.begin(), ref.values.end())) + " | total " + std::to_string(ref.total);
    auto it = std::find_if(table.begin(), table.end(),
                           [&](const ExceptionalRow& r) { return r.series == ref.series && r.rank == ref.rank; });
    report.expect_equal("exceptional." + name + ".table", name + " closed-form table row", expected,
                        it == table.end() ? "missing" : join(it->values) + " | total " + to_string(it->total));
    const auto row = a_row(ref.series, ref.rank);
    report.expect_equal("exceptional." + name + ".row", name + " a_s row", expected,
                        join(row) + " | total " + to_string(a_total(ref.series, ref.rank)));
    if (ref.series == Series::E && ref.rank <= 5) {
      const auto identified = convention_row(ref.series, ref.rank);
      ExactInt total = 0;
      for (const auto& v : identified) total += v;
      report.expect_equal("exceptional." + name + ".identified", name + " through its identification", expected,
                          join(identified) + " | total " + to_string(total));
    }
  }
  const auto totals = reference::exceptional_totals();
  const std::vector<ExactInt> computed = {a_total(Series::E, 6), a_total(Series::E, 7), a_total(Series::E, 8),
                                          a_total(Series::F, 4), a_total(Series::G, 2)};
  report.expect_equal("exceptional.totals", "a(E6) a(E7) a(E8) a(F4) a(G2)",
                      join(std::vector<std::uint64_t>(totals.begin(), totals.end())), join(computed));
  return report;
}

VerificationReport verify_sincere_structure(int n_max) {
  VerificationReport report;
  for (int n = 2; n <= n_max; ++n) {
    const std::string name = "B" + std::to_string(n);
    const ModCategory cat = make_category(build_cartan({Series::B, n}));
    const auto antichains = enumerate_antichains(cat);
    SincereClassification cls;
    try {
      cls = classify_sincere(cat, antichains);
    } catch (const std::exception& e) {
      report.add("sincere." + name + ".classify", name + " sincere antichains", "at most one sincere member", e.what(), false);
      continue;
    }
    report.expect_equal("sincere." + name + ".u", name + " sincere antichains with a sincere member",
                        to_string(binom(2L * n - 2, n - 1)), to_string(cls.u));
    report.expect_equal("sincere." + name + ".v", name + " sincere antichains without one",
                        to_string(binom(2L * n - 2, n - 2)), to_string(cls.v));

    std::vector<ExactInt> expected;
    std::vector<std::string> actual;
    std::set<std::size_t> seen;
    for (int i = 1; i <= n; ++i) {
      expected.push_back(sincere_u_term(n, i));
      const std::size_t x = cat.at({i - 1, n - i});
      auto it = std::find_if(cls.per_element.begin(), cls.per_element.end(), [&](const auto& p) { return p.first == x; });
      if (it == cls.per_element.end()) {
        actual.push_back("X(" + std::to_string(i) + ")-not-sincere");
      } else {
        actual.push_back(to_string(it->second));
        seen.insert(x);
      }
    }
    std::string actual_text = join(actual);
    if (seen.size() != cls.per_element.size()) {
      actual_text += " (+" + std::to_string(cls.per_element.size() - seen.size()) + " other sincere)";
    }
    report.expect_equal("sincere." + name + ".per_i", name + " u_i for X(i) = M(i,n-i)", join(expected), actual_text);
    check_eta(report, cat, antichains, "eta." + name, name + " eta bijection", a_s(Series::B, n, n));
  }
  return report;
}

VerificationReport verify_linear_a_eta(int n_max) {
  VerificationReport report;
  for (int n = 1; n <= n_max; ++n) {
    const std::string name = "A" + std::to_string(n);
    const ModCategory cat = make_category(build_cartan({Series::A, n}));
    const auto antichains = enumerate_antichains(cat);
    report.expect_equal("eta." + name + ".count", name + " a_n(A_n) = a(A_{n-1})", to_string(a_s(Series::A, n, n)),
                        to_string(a_total(Series::A, n - 1)));
    check_eta(report, cat, antichains, "eta." + name, name + " eta bijection", a_s(Series::A, n, n));
  }
  return report;
}

VerificationReport verify_maximality(const DynkinType& type) {
  VerificationReport report;
  const ModCategory cat = make_category(build_cartan(type));
  long count = 0;
  std::string failure;
  for_each_support_tilting(cat, [&](const IndecSet& set) {
    ++count;
    if (failure.empty() && !is_maximal_rigid_in_support(cat, set)) failure = format_set(cat, set);
  });
  const std::string expected = "all " + std::to_string(count) + " maximal rigid in their support";
  report.add("maximality." + label(type), label(type) + " support-tilting sets", expected,
             failure.empty() ? expected : "not maximal: " + failure, failure.empty());
  return report;
}

VerificationReport verify_integrality(int t_max, int threads) {
  struct Result {
    long count = 0;
    std::string failure;
  };
  enum { kBailey, kCatalan, kA, kFamilies };
  const int blocks = std::max(1, std::min(threads, t_max));
  std::vector<std::array<Result, kFamilies>> results(static_cast<std::size_t>(blocks));

  // Block b handles the rows t with t % blocks == b and builds each row (and
  // the row above it) directly, so blocks share nothing.
  auto run_block = [&](int b) {
    auto& res = results[static_cast<std::size_t>(b)];
    auto fail = [](Result& r, const std::string& what) {
      if (r.failure.empty()) r.failure = what;
    };
    std::vector<ExactInt> prev;
    std::vector<ExactInt> row;
    for (long t = b; t <= t_max; t += blocks) {
      row.assign(static_cast<std::size_t>(t) + 1, ExactInt{});
      prev.assign(static_cast<std::size_t>(std::max(t, 1L)), ExactInt{});
      row[0] = 1;
      for (long s = 1; s <= t; ++s) row[static_cast<std::size_t>(s)] = row[static_cast<std::size_t>(s - 1)] * (t - s + 1) / s;
      if (t >= 1) {
        prev[0] = 1;
        for (long s = 1; s <= t - 1; ++s) prev[static_cast<std::size_t>(s)] = prev[static_cast<std::size_t>(s - 1)] * (t - s) / s;
      }
      const bool sample = t <= 60 || t % 97 == 0;
      for (long s = 0; s <= t; ++s) {
        const ExactInt& c = row[static_cast<std::size_t>(s)];
        const std::string where = "t=" + std::to_string(t) + ",s=" + std::to_string(s);
        if (t >= 1) {
          ++res[kBailey].count;
          const ExactInt numerator = c * (s + t);
          const ExactInt quotient = numerator / t;
          const ExactInt below = s >= 1 ? prev[static_cast<std::size_t>(s - 1)] : ExactInt{0};
          if (quotient * t != numerator || quotient != c + below) fail(res[kBailey], where);
          else if (sample && quotient != bailey(t, s)) fail(res[kBailey], where + " (library)");
        }
        if (t - 2 * s + 1 >= 0) {
          ++res[kCatalan].count;
          const ExactInt numerator = c * (t - 2 * s + 1);
          const ExactInt quotient = numerator / (t - s + 1);
          const ExactInt left = s >= 1 ? row[static_cast<std::size_t>(s - 1)] : ExactInt{0};
          if (quotient * (t - s + 1) != numerator || quotient != c - left) fail(res[kCatalan], where);
          else if (sample && quotient != catalan_bracket(t, s)) fail(res[kCatalan], where + " (library)");
        }
        // a_s(A_n) with n + s = t: (n-s+1)/(n+1) * C(n+s, s).
        const long n = t - s;
        if (n >= s) {
          ++res[kA].count;
          const ExactInt numerator = c * (n - s + 1);
          const ExactInt quotient = numerator / (n + 1);
          if (quotient * (n + 1) != numerator) fail(res[kA], "n=" + std::to_string(n) + ",s=" + std::to_string(s));
          else if (sample && n <= 2000 && quotient != a_s(Series::A, static_cast<int>(n), static_cast<int>(s)))
            fail(res[kA], "n=" + std::to_string(n) + ",s=" + std::to_string(s) + " (library)");
        }
      }
    }
  };

  if (blocks == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    for (int b = 0; b < blocks; ++b) pool.emplace_back(run_block, b);
  }

  VerificationReport report;
  const char* ids[kFamilies] = {"integrality.bailey", "integrality.catalan_bracket", "integrality.a_A"};
  const char* subjects[kFamilies] = {"(s+t)/t C(t,s), t <= ", "(t-2s+1)/(t-s+1) C(t,s), t <= ",
                                     "(n-s+1)/(n+1) C(n+s,s), n+s <= "};
  for (int f = 0; f < kFamilies; ++f) {
    long count = 0;
    std::string failure;
    for (const auto& block : results) {
      count += block[static_cast<std::size_t>(f)].count;
      if (failure.empty()) failure = block[static_cast<std::size_t>(f)].failure;
    }
    const std::string expected = "integral and equal at " + std::to_string(count) + " arguments";
    report.add(ids[f], subjects[f] + std::to_string(t_max), expected, failure.empty() ? expected : "fails at " + failure,
               failure.empty());
  }
  return report;
}

VerificationReport verify_oeis(const std::string& fixture_dir) {
  VerificationReport report;
  for (const auto& info : known_sequences()) {
    try {
      const auto fetched = fetch_bfile(info.id, FetchOptions{fixture_dir, false, {}});
      report.append(reconcile(info, fetched.bfile));
    } catch (const std::exception& e) {
      report.add("oeis." + info.id, info.id + " fixture", "readable b-file", e.what(), false);
    }
  }
  return report;
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::quick: return "quick";
    case Suite::full: return "full";
    case Suite::slow: return "slow";
  }
  return "?";
}

VerificationReport run_suite(const SuiteOptions& options) {
  using Task = std::function<VerificationReport()>;
  std::vector<Task> tasks;
  const bool full = options.suite != Suite::quick;
  const bool slow = options.suite == Suite::slow;

  tasks.emplace_back(verify_triangles);
  tasks.emplace_back(verify_exceptional);
  tasks.emplace_back([n = options.max_n] { return verify_identities(n); });

  std::vector<DynkinType> enumerated;
  for (int n = 1; n <= 7; ++n) enumerated.push_back({Series::A, n});
  for (int n = 1; n <= 5; ++n) enumerated.push_back({Series::B, n});
  for (int n = 2; n <= 5; ++n) enumerated.push_back({Series::C, n});
  for (int n = 2; n <= 6; ++n) enumerated.push_back({Series::D, n});
  for (int n = 3; n <= 6; ++n) enumerated.push_back({Series::E, n});
  enumerated.push_back({Series::F, 4});
  enumerated.push_back({Series::G, 2});
  if (slow) {
    enumerated.push_back({Series::E, 7});
    enumerated.push_back({Series::E, 8});
  }
  for (const auto& type : enumerated) {
    tasks.emplace_back([type] { return verify_type(type, {OrientationSpec::linear_default()}); });
  }

  std::vector<DynkinType> swept = {{Series::A, 4}, {Series::D, 4}};
  if (full) {
    swept = {{Series::A, 2}, {Series::A, 3}, {Series::A, 4}, {Series::B, 2}, {Series::B, 3}, {Series::B, 4},
             {Series::C, 3}, {Series::C, 4}, {Series::D, 4}, {Series::E, 4}, {Series::F, 4}, {Series::G, 2}};
  }
  for (const auto& type : swept) {
    tasks.emplace_back([type] { return verify_type(type, all_orientations(shape_of(type))); });
  }
  if (full) {
    const std::vector<DynkinType> sampled = {{Series::A, 5}, {Series::A, 6}, {Series::B, 5}, {Series::B, 6},
                                             {Series::C, 5}, {Series::C, 6}, {Series::D, 5}, {Series::D, 6},
                                             {Series::E, 5}, {Series::E, 6}};
    for (std::size_t k = 0; k < sampled.size(); ++k) {
      const auto type = sampled[k];
      const std::uint64_t seed = options.seed + k;
      tasks.emplace_back([type, seed] { return verify_type(type, sampled_orientations(shape_of(type), 10, seed)); });
    }
    for (const auto& type : enumerated) {
      if (type.rank <= 6) tasks.emplace_back([type] { return verify_maximality(type); });
    }
  }

  tasks.emplace_back([full] { return verify_b_equals_c(full ? 6 : 5); });
  tasks.emplace_back([] { return verify_sincere_structure(5); });
  tasks.emplace_back([] { return verify_linear_a_eta(6); });
  tasks.emplace_back([full] { return verify_integrality(full ? 2000 : 200); });
  tasks.emplace_back([dir = options.fixture_dir] { return verify_oeis(dir); });

  std::vector<VerificationReport> parts(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        parts[k] = tasks[k]();
      } catch (const std::exception& e) {
        parts[k].add("task." + std::to_string(k), "verification task", "completes", e.what(), false);
      }
    }
  };
  const int workers = std::clamp(options.threads, 1, 256);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  VerificationReport report;
  report.note("suite " + suite_name(options.suite) + ", max-n " + std::to_string(options.max_n) +
              (full ? ", seed " + std::to_string(options.seed) : ""));
  for (const auto& part : parts) report.append(part);
  return report;
}

}  // namespace suptilt
