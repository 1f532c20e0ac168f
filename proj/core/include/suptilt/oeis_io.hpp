#pragma once

#include <suptilt/exact_int.hpp>
#include <suptilt/report.hpp>

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Triangle rendering (pretty, csv, b-file) and reconciliation against b-files.

namespace suptilt {

enum class TriangleSeries {
  a,                // a_s(A_n), rows n >= 0
  b,                // a_s(B_n), rows n >= 0
  d,                // a_s(D_n), rows n >= 2 (rows 0 and 1 are placeholders)
  d_diagonal,       // a_n(D_n), n >= 2, as a plain sequence
  catalan_sheared,  // ]t over s[ for 2s <= t, rows t >= 0
  pascal,           // C(t,s)
  lucas,            // [t over s], rows t >= 1; corner (0,0) only in OEIS mode
};

enum class TriangleFormat { pretty, csv, bfile };

/// Accepts "A", "B", "D", "D-diagonal", "catalan", "pascal", "lucas" (case-insensitive).
std::optional<TriangleSeries> parse_triangle_series(std::string_view text);
std::optional<TriangleFormat> parse_triangle_format(std::string_view text);
std::string series_name(TriangleSeries series);

struct TriangleRowDoc {
  long index = 0;
  std::vector<std::optional<ExactInt>> cells;  // nullopt: undefined placeholder
  std::optional<ExactInt> sum;
};

struct TriangleDoc {
  TriangleSeries series = TriangleSeries::a;
  std::string label;
  std::string sequence_id;
  long offset = 0;  // index of the first b-file term
  bool has_sums = false;
  bool corner_convention = false;  // Lucas corner set to 2
  std::vector<TriangleRowDoc> rows;

  /// Defined cells in row-by-row reading order.
  std::vector<ExactInt> terms() const;
};

/// Rows 0..rows-1 (for d_diagonal: n = 2..rows-1). `oeis_conventions`
/// inserts the Lucas corner value 2. Throws std::out_of_range for rows
/// outside 1..1000.
TriangleDoc build_triangle(TriangleSeries series, int rows, bool oeis_conventions = false);

std::string render_triangle(const TriangleDoc& doc, TriangleFormat format);

struct BFile {
  std::string sequence_id;
  std::vector<std::pair<long, ExactInt>> entries;
};

class BFileError : public std::runtime_error {
 public:
  BFileError(const std::string& source, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// "<index> <value>" lines; '#' comments and blank lines are skipped.
/// Indices must increase by one; values must be nonnegative.
BFile parse_bfile(std::string_view text, const std::string& sequence_id = "");

/// "A009766" -> "b009766.txt". Throws std::invalid_argument on bad ids.
std::string bfile_name(std::string_view sequence_id);

struct FetchOptions {
  std::string fixture_dir;
  bool online = false;
  std::chrono::seconds timeout{10};
};

struct FetchResult {
  BFile bfile;
  std::string source;  // "fixture:<path>" or "online:<url>"
  std::vector<std::string> warnings;
};

/// Reads the fixture, or with `online` fetches https://oeis.org/<id>/b<nnn>.txt
/// and falls back to the fixture (with a warning) on any failure.
FetchResult fetch_bfile(std::string_view sequence_id, const FetchOptions& options);

struct SequenceInfo {
  std::string id;
  TriangleSeries series;
  long offset;
  bool corner_convention;
  int default_terms;  // 0: whole fixture
};

/// The sequences this tool knows how to generate.
const std::vector<SequenceInfo>& known_sequences();
std::optional<SequenceInfo> find_sequence(std::string_view sequence_id);

/// First `terms` generated values in OEIS reading order.
std::vector<ExactInt> generate_terms(const SequenceInfo& info, std::size_t terms);

/// Compares the generated prefix with the b-file, index by index. `terms` of
/// 0 means the sequence's default. One check per sequence.
VerificationReport reconcile(const SequenceInfo& info, const BFile& bfile, std::size_t terms = 0);

}  // namespace suptilt
