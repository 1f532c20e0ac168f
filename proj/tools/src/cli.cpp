#include <suptilt_cli/cli.hpp>

#include <suptilt/closed_forms.hpp>
#include <suptilt/enumerator.hpp>
#include <suptilt/hom_calculus.hpp>
#include <suptilt/oeis_io.hpp>
#include <suptilt/verifier.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

#ifndef SUPTILT_DEFAULT_FIXTURE_DIR
#define SUPTILT_DEFAULT_FIXTURE_DIR "tests/fixtures/oeis"
#endif
#ifndef SUPTILT_VERSION
#define SUPTILT_VERSION "dev"
#endif

namespace suptilt::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Series series_arg(const std::string& text) {
  const auto series = parse_series(text);
  if (!series) throw UsageError("unknown series \"" + text + "\" (expected one of A B C D E F G)");
  return *series;
}

void config_line(std::ostream& err, const std::string& text) { err << "# suptilt " SUPTILT_VERSION " " << text << '\n'; }

int cmd_table(const std::string& series_text, int n, std::ostream& out, std::ostream& err) {
  const Series series = series_arg(series_text);
  const bool empty_type = n == 0 && (series == Series::A || series == Series::B);
  if (!empty_type && !is_admissible({series, n})) {
    throw UsageError("no Dynkin type " + std::string(1, series_letter(series)) + std::to_string(n));
  }
  config_line(err, "table " + std::string(1, series_letter(series)) + " " + std::to_string(n));
  const auto row = convention_row(series, n);
  ExactInt total = 0;
  for (const auto& c : row) total += c;
  out << format_counts(row, total) << '\n';
  return kSuccess;
}

int cmd_triangle(const std::string& series_text, int rows, const std::string& format_text, bool oeis,
                 std::ostream& out, std::ostream& err) {
  const auto series = parse_triangle_series(series_text);
  if (!series) throw UsageError("unknown triangle \"" + series_text + "\" (A, B, D, D-diagonal, catalan, pascal, lucas)");
  const auto format = parse_triangle_format(format_text);
  if (!format) throw UsageError("unknown format \"" + format_text + "\" (pretty, csv, bfile)");
  if (rows < 1 || rows > 1000) throw UsageError("--rows must lie in 1..1000");
  config_line(err, "triangle " + series_name(*series) + " rows=" + std::to_string(rows) + " format=" + format_text +
                       (oeis ? " oeis" : ""));
  out << render_triangle(build_triangle(*series, rows, oeis), *format);
  return kSuccess;
}

int cmd_enumerate(const std::string& series_text, int n, const std::string& orientation_text,
                  const std::string& statistic_text, bool list, bool dump, int threads, std::ostream& out,
                  std::ostream& err) {
  const DynkinType type{series_arg(series_text), n};
  if (!is_admissible(type)) throw UsageError("no Dynkin type " + label(type));
  Statistic statistic;
  if (statistic_text == "antichain") {
    statistic = Statistic::antichain;
  } else if (statistic_text == "tilting") {
    statistic = Statistic::support_tilting;
  } else {
    throw UsageError("--statistic must be antichain or tilting");
  }
  OrientationSpec orientation;
  CartanDatum datum = [&] {
    try {
      orientation = OrientationSpec::parse(orientation_text);
      return build_cartan(type, orientation);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (expected_root_count(type) > static_cast<int>(kMaxIndecs)) {
    throw UsageError(label(type) + " has " + std::to_string(expected_root_count(type)) +
                     " indecomposables; enumeration handles at most " + std::to_string(kMaxIndecs));
  }
  config_line(err, "enumerate " + label(type) + " orientation=" + orientation.to_string() +
                       " statistic=" + statistic_text + " threads=" + std::to_string(threads));

  const ModCategory cat = make_category(datum);
  if (dump) out << dump_category(cat);
  out << label(type) << " orientation=" << orientation.to_string() << " statistic=" << statistic_text << '\n';
  if (list) {
    for (const auto& set : enumerate(cat, statistic)) out << format_set(cat, set) << '\n';
    return kSuccess;
  }
  const CountTable table = count_table(cat, statistic, threads);
  out << "by support-rank: " << format_counts(table.by_support_rank, table.total) << '\n';
  if (statistic == Statistic::antichain) out << "by size:         " << format_counts(table.by_size, table.total) << '\n';
  return kSuccess;
}

int cmd_verify(Suite suite, int max_n, int threads, std::uint64_t seed, const std::string& out_path,
               const std::string& fixtures, std::ostream& out, std::ostream& err) {
  if (max_n < 0 || max_n > 400) throw UsageError("--max-n must lie in 0..400");
  config_line(err, "verify suite=" + suite_name(suite) + " max-n=" + std::to_string(max_n) + " threads=" +
                       std::to_string(threads) + " seed=" + std::to_string(seed) + " fixtures=" + fixtures +
                       (out_path.empty() ? "" : " out=" + out_path));
  const VerificationReport report = run_suite({suite, max_n, threads, seed, fixtures});
  const std::string text = report.serialize();
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    file << text;
    out << "# summary: " << report.checks().size() << " checks, " << report.failures() << " failed\n";
  }
  return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_reconcile(const std::string& sequence_id, int terms, bool online, const std::string& fixtures,
                  int timeout, std::ostream& out, std::ostream& err) {
  const auto info = find_sequence(sequence_id);
  if (!info) {
    std::string known;
    for (const auto& s : known_sequences()) known += " " + s.id;
    throw UsageError("unknown sequence \"" + sequence_id + "\"; known:" + known);
  }
  if (terms < 0) throw UsageError("--terms must be nonnegative");
  config_line(err, "reconcile " + info->id + " terms=" + std::to_string(terms) + (online ? " online" : "") +
                       " fixtures=" + fixtures);
  const auto fetched = fetch_bfile(info->id, {fixtures, online, std::chrono::seconds(timeout)});
  for (const auto& w : fetched.warnings) err << "warning: " << w << '\n';
  VerificationReport report = reconcile(*info, fetched.bfile, static_cast<std::size_t>(terms));
  report.note("source " + fetched.source);
  out << report.serialize();
  return report.passed() ? kSuccess : kVerificationFailed;
}

}  // namespace

std::string default_fixture_dir() {
  if (const char* env = std::getenv("SUPTILT_OEIS_DIR"); env != nullptr && *env != '\0') return env;
  return SUPTILT_DEFAULT_FIXTURE_DIR;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Support-tilting modules and antichains of Dynkin algebras", "suptilt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SUPTILT_VERSION);

  std::string series_text;
  std::string sequence_id;
  int n = 0;

  auto* table = app.add_subcommand("table", "Print a_s for s = 0..n and the total");
  table->add_option("series", series_text, "A, B, C, D, E, F or G")->required();
  table->add_option("n", n, "Rank")->required();

  int rows = 10;
  std::string format = "pretty";
  bool oeis = false;
  auto* triangle = app.add_subcommand("triangle", "Render a triangle, rows 0..N-1");
  triangle->add_option("series", series_text, "A, B, D, D-diagonal, catalan, pascal or lucas")->required();
  triangle->add_option("--rows", rows, "Number of rows")->capture_default_str();
  triangle->add_option("--format", format, "pretty, csv or bfile")->capture_default_str();
  triangle->add_flag("--oeis", oeis, "Use OEIS conventions (Lucas corner 2)");

  std::string orientation = "default";
  std::string statistic = "tilting";
  bool list = false;
  bool dump = false;
  int threads = 1;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count or list support-tilting sets or antichains");
  enumerate_cmd->add_option("series", series_text, "Series letter")->required();
  enumerate_cmd->add_option("n", n, "Rank")->required();
  enumerate_cmd->add_option("--orientation", orientation, "\"default\" or arrows such as \"2>1,3>2\"")
      ->capture_default_str();
  enumerate_cmd->add_option("--statistic", statistic, "antichain or tilting")->capture_default_str();
  enumerate_cmd->add_flag("--list", list, "List the sets, one per line");
  enumerate_cmd->add_flag("--dump", dump, "Print the indecomposables first");
  enumerate_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  bool quick = false;
  bool full = false;
  bool slow = false;
  int max_n = 50;
  std::uint64_t seed = SuiteOptions{}.seed;
  std::string out_path;
  std::string fixtures = default_fixture_dir();
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print the report");
  auto* quick_flag = verify->add_flag("--quick", quick, "Quick suite (default)");
  auto* full_flag = verify->add_flag("--full", full, "Adds orientation samples, maximality, integrality to 2000");
  auto* slow_flag = verify->add_flag("--slow", slow, "Full suite plus E7 and E8");
  quick_flag->excludes(full_flag)->excludes(slow_flag);
  full_flag->excludes(slow_flag);
  verify->add_option("--max-n", max_n, "Largest n for the identity checks")->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--seed", seed, "Seed for sampled orientations")->capture_default_str();
  verify->add_option("--out", out_path, "Write the report to this file");
  verify->add_option("--fixtures", fixtures, "b-file fixture directory");

  int terms = 0;
  bool online = false;
  int timeout = 10;
  auto* reconcile_cmd = app.add_subcommand("reconcile", "Compare generated terms with a b-file");
  reconcile_cmd->add_option("sequence", sequence_id, "OEIS id, e.g. A009766")->required();
  reconcile_cmd->add_option("--terms", terms, "Number of terms (0: the sequence default)")->capture_default_str();
  reconcile_cmd->add_flag("--online", online, "Fetch from oeis.org, falling back to the fixture");
  reconcile_cmd->add_option("--fixtures", fixtures, "b-file fixture directory");
  reconcile_cmd->add_option("--timeout", timeout, "Network timeout in seconds")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*table) return cmd_table(series_text, n, out, err);
    if (*triangle) return cmd_triangle(series_text, rows, format, oeis, out, err);
    if (*enumerate_cmd) return cmd_enumerate(series_text, n, orientation, statistic, list, dump, threads, out, err);
    if (*verify) {
      const Suite suite = slow ? Suite::slow : full ? Suite::full : Suite::quick;
      return cmd_verify(suite, max_n, threads, seed, out_path, fixtures, out, err);
    }
    if (*reconcile_cmd) return cmd_reconcile(sequence_id, terms, online, fixtures, timeout, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace suptilt::cli
