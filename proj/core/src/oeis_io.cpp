#include <suptilt/oeis_io.hpp>

#include <suptilt/closed_forms.hpp>

#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace suptilt {
namespace {

constexpr int kMaxRows = 1000;
const char* const kDot = "\xC2\xB7";  // U+00B7, printed for undefined cells

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::optional<ExactInt> sum_of(const std::vector<std::optional<ExactInt>>& cells) {
  ExactInt total = 0;
  for (const auto& c : cells) {
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

TriangleRowDoc placeholder_row(long index, int width) {
  return {index, std::vector<std::optional<ExactInt>>(static_cast<std::size_t>(width)), std::nullopt};
}

// Right-aligned cell; the placeholder dot is one column wide but two bytes.
std::string pad(const std::string& text, std::size_t width) {
  const std::size_t shown = text == kDot ? 1 : text.size();
  return std::string(width > shown ? width - shown : 0, ' ') + text;
}

std::string cell_text(const std::optional<ExactInt>& cell) { return cell ? to_string(*cell) : kDot; }

const char* const kCornerNote = "# corner (0,0) set to 2 by the OEIS convention";

}  // namespace

std::optional<TriangleSeries> parse_triangle_series(std::string_view text) {
  const std::string t = lower(text);
  if (t == "a") return TriangleSeries::a;
  if (t == "b") return TriangleSeries::b;
  if (t == "d") return TriangleSeries::d;
  if (t == "d-diagonal" || t == "d_diagonal") return TriangleSeries::d_diagonal;
  if (t == "catalan" || t == "catalan-sheared") return TriangleSeries::catalan_sheared;
  if (t == "pascal") return TriangleSeries::pascal;
  if (t == "lucas") return TriangleSeries::lucas;
  return std::nullopt;
}

std::optional<TriangleFormat> parse_triangle_format(std::string_view text) {
  const std::string t = lower(text);
  if (t == "pretty") return TriangleFormat::pretty;
  if (t == "csv") return TriangleFormat::csv;
  if (t == "bfile") return TriangleFormat::bfile;
  return std::nullopt;
}

std::string series_name(TriangleSeries series) {
  switch (series) {
    case TriangleSeries::a: return "A";
    case TriangleSeries::b: return "B";
    case TriangleSeries::d: return "D";
    case TriangleSeries::d_diagonal: return "D-diagonal";
    case TriangleSeries::catalan_sheared: return "catalan";
    case TriangleSeries::pascal: return "pascal";
    case TriangleSeries::lucas: return "lucas";
  }
  return "?";
}

std::vector<ExactInt> TriangleDoc::terms() const {
  std::vector<ExactInt> out;
  for (const auto& row : rows) {
    for (const auto& c : row.cells) {
      if (c) out.push_back(*c);
    }
  }
  return out;
}

TriangleDoc build_triangle(TriangleSeries series, int rows, bool oeis_conventions) {
  if (rows < 1 || rows > kMaxRows) {
    throw std::out_of_range("rows must lie in 1.." + std::to_string(kMaxRows));
  }
  TriangleDoc doc;
  doc.series = series;
  switch (series) {
    case TriangleSeries::a:
      doc.label = "a_s(A_n)";
      doc.sequence_id = "A009766";
      doc.has_sums = true;
      for (int n = 0; n < rows; ++n) {
        TriangleRowDoc row{n, {}, a_total(Series::A, n)};
        for (int s = 0; s <= n; ++s) row.cells.emplace_back(a_s(Series::A, n, s));
        doc.rows.push_back(std::move(row));
      }
      break;
    case TriangleSeries::b:
      doc.label = "a_s(B_n)";
      doc.sequence_id = "A059481";
      doc.has_sums = true;
      for (int n = 0; n < rows; ++n) {
        TriangleRowDoc row{n, {}, a_total(Series::B, n)};
        for (int s = 0; s <= n; ++s) row.cells.emplace_back(a_s(Series::B, n, s));
        doc.rows.push_back(std::move(row));
      }
      break;
    case TriangleSeries::d:
      doc.label = "a_s(D_n)";
      doc.sequence_id = "A241188";
      doc.offset = 2;
      doc.has_sums = true;
      for (int n = 0; n < rows; ++n) {
        if (n < 2) {
          doc.rows.push_back(placeholder_row(n, n + 1));
          continue;
        }
        TriangleRowDoc row{n, {}, a_total(Series::D, n)};
        for (int s = 0; s <= n; ++s) row.cells.emplace_back(a_s(Series::D, n, s));
        doc.rows.push_back(std::move(row));
      }
      break;
    case TriangleSeries::d_diagonal:
      doc.label = "a_n(D_n)";
      doc.sequence_id = "A129869";
      doc.offset = 2;
      for (int n = 2; n < rows; ++n) doc.rows.push_back({n, {a_s(Series::D, n, n)}, std::nullopt});
      break;
    case TriangleSeries::catalan_sheared:
      doc.label = "]t over s[";
      doc.sequence_id = "A008315";
      for (int t = 0; t < rows; ++t) {
        TriangleRowDoc row{t, {}, std::nullopt};
        for (int s = 0; 2 * s <= t; ++s) row.cells.emplace_back(catalan_bracket(t, s));
        doc.rows.push_back(std::move(row));
      }
      break;
    case TriangleSeries::pascal:
      doc.label = "C(t,s)";
      doc.sequence_id = "A007318";
      for (int t = 0; t < rows; ++t) {
        TriangleRowDoc row{t, {}, std::nullopt};
        for (int s = 0; s <= t; ++s) row.cells.emplace_back(binom(t, s));
        doc.rows.push_back(std::move(row));
      }
      break;
    case TriangleSeries::lucas:
      doc.label = "[t over s]";
      doc.sequence_id = "A029635";
      doc.corner_convention = oeis_conventions;
      doc.offset = oeis_conventions ? 0 : 1;
      for (int t = 0; t < rows; ++t) {
        if (t == 0) {
          doc.rows.push_back(oeis_conventions ? TriangleRowDoc{0, {ExactInt{2}}, std::nullopt} : placeholder_row(0, 1));
          continue;
        }
        TriangleRowDoc row{t, {}, std::nullopt};
        for (int s = 0; s <= t; ++s) row.cells.emplace_back(bailey(t, s));
        doc.rows.push_back(std::move(row));
      }
      break;
  }
  return doc;
}

std::string render_triangle(const TriangleDoc& doc, TriangleFormat format) {
  std::ostringstream out;
  if (doc.corner_convention) out << kCornerNote << '\n';

  if (format == TriangleFormat::csv) {
    for (const auto& row : doc.rows) {
      if (!sum_of(row.cells)) continue;
      for (std::size_t s = 0; s < row.cells.size(); ++s) out << (s ? "," : "") << to_string(*row.cells[s]);
      out << '\n';
    }
    return out.str();
  }

  if (format == TriangleFormat::bfile) {
    out << "# " << doc.sequence_id << ' ' << doc.label << ", read by rows\n";
    long index = doc.offset;
    for (const auto& term : doc.terms()) out << index++ << ' ' << to_string(term) << '\n';
    return out.str();
  }

  std::size_t width = 1;
  std::size_t columns = 0;
  std::size_t index_width = 1;
  std::size_t sum_width = 3;
  for (const auto& row : doc.rows) {
    columns = std::max(columns, row.cells.size());
    index_width = std::max(index_width, std::to_string(row.index).size());
    for (const auto& c : row.cells) {
      if (c) width = std::max(width, to_string(*c).size());
    }
    if (row.sum) sum_width = std::max(sum_width, to_string(*row.sum).size());
  }
  width = std::max(width, std::to_string(columns ? columns - 1 : 0).size());

  out << "# " << doc.label << '\n';
  const bool by_t = doc.series == TriangleSeries::catalan_sheared || doc.series == TriangleSeries::pascal ||
                    doc.series == TriangleSeries::lucas;
  out << pad(by_t ? "t" : "n", index_width) << " |";
  if (doc.series == TriangleSeries::d_diagonal) {
    out << ' ' << pad("a", width);
  } else {
    for (std::size_t s = 0; s < columns; ++s) out << ' ' << pad(std::to_string(s), width);
  }
  if (doc.has_sums) out << " | " << pad("sum", sum_width);
  out << '\n';
  for (const auto& row : doc.rows) {
    std::string line = pad(std::to_string(row.index), index_width) + " |";
    for (const auto& c : row.cells) line += ' ' + pad(cell_text(c), width);
    if (doc.has_sums) {
      for (std::size_t s = row.cells.size(); s < columns; ++s) line += std::string(width + 1, ' ');
      line += " | " + pad(row.sum ? to_string(*row.sum) : std::string(kDot), sum_width);
    }
    out << line << '\n';
  }
  return out.str();
}

BFileError::BFileError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

BFile parse_bfile(std::string_view text, const std::string& sequence_id) {
  BFile out;
  out.sequence_id = sequence_id;
  const std::string source = sequence_id.empty() ? "b-file" : sequence_id;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_text;
    std::string value_text;
    std::string extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra)) throw BFileError(source, number, "expected \"<index> <value>\"");
    auto all_digits = [](const std::string& s, bool allow_sign) {
      std::size_t start = allow_sign && s.size() > 1 && s[0] == '-' ? 1 : 0;
      return s.size() > start && std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                              [](unsigned char c) { return std::isdigit(c); });
    };
    if (!all_digits(index_text, true)) throw BFileError(source, number, "bad index \"" + index_text + "\"");
    if (!all_digits(value_text, true)) throw BFileError(source, number, "bad value \"" + value_text + "\"");
    if (value_text[0] == '-') throw BFileError(source, number, "negative value");
    long index = 0;
    try {
      index = std::stol(index_text);
    } catch (const std::exception&) {
      throw BFileError(source, number, "index out of range");
    }
    if (!out.entries.empty() && index != out.entries.back().first + 1) {
      throw BFileError(source, number, "index " + index_text + " does not follow " +
                                           std::to_string(out.entries.back().first));
    }
    out.entries.emplace_back(index, ExactInt(value_text));
  }
  return out;
}

std::string bfile_name(std::string_view sequence_id) {
  if (sequence_id.size() != 7 || (sequence_id[0] != 'A' && sequence_id[0] != 'a') ||
      !std::all_of(sequence_id.begin() + 1, sequence_id.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw std::invalid_argument("not an OEIS id: \"" + std::string(sequence_id) + "\"");
  }
  return "b" + std::string(sequence_id.substr(1)) + ".txt";
}

FetchResult fetch_bfile(std::string_view sequence_id, const FetchOptions& options) {
  const std::string name = bfile_name(sequence_id);
  std::string id = "A" + std::string(sequence_id.substr(1));
  FetchResult result;

  if (options.online) {
    const std::string path = "/" + id + "/" + name;
    try {
      httplib::SSLClient client("oeis.org");
      client.set_connection_timeout(options.timeout);
      client.set_read_timeout(options.timeout);
      client.set_follow_location(true);
      auto response = client.Get(path);
      if (response && response->status == 200) {
        result.bfile = parse_bfile(response->body, id);
        result.source = "online:https://oeis.org" + path;
        return result;
      }
      result.warnings.push_back("fetch of https://oeis.org" + path + " failed (" +
                                (response ? "HTTP " + std::to_string(response->status)
                                          : httplib::to_string(response.error())) +
                                "); using the local fixture");
    } catch (const std::exception& e) {
      result.warnings.push_back(std::string("online fetch failed (") + e.what() + "); using the local fixture");
    }
  }

  const std::filesystem::path path = std::filesystem::path(options.fixture_dir) / name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read fixture " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  result.bfile = parse_bfile(text.str(), id);
  result.source = "fixture:" + path.string();
  return result;
}

const std::vector<SequenceInfo>& known_sequences() {
  static const std::vector<SequenceInfo> table = {
      {"A009766", TriangleSeries::a, 0, false, 55},
      {"A059481", TriangleSeries::b, 0, false, 55},
      {"A241188", TriangleSeries::d, 2, false, 0},
      {"A008315", TriangleSeries::catalan_sheared, 0, false, 40},
      {"A007318", TriangleSeries::pascal, 0, false, 55},
      {"A029635", TriangleSeries::lucas, 0, true, 40},
      {"A129869", TriangleSeries::d_diagonal, 2, false, 8},
  };
  return table;
}

std::optional<SequenceInfo> find_sequence(std::string_view sequence_id) {
  for (const auto& info : known_sequences()) {
    if (lower(info.id) == lower(sequence_id)) return info;
  }
  return std::nullopt;
}

std::vector<ExactInt> generate_terms(const SequenceInfo& info, std::size_t terms) {
  for (int rows = 4;; rows *= 2) {
    const int capped = std::min(rows, kMaxRows);
    auto all = build_triangle(info.series, capped, info.corner_convention).terms();
    if (all.size() >= terms || capped == kMaxRows) {
      all.resize(std::min(all.size(), terms));
      return all;
    }
  }
}

VerificationReport reconcile(const SequenceInfo& info, const BFile& bfile, std::size_t terms) {
  VerificationReport report;
  const std::string id = "oeis." + info.id;
  if (terms == 0) terms = info.default_terms > 0 ? static_cast<std::size_t>(info.default_terms) : bfile.entries.size();
  const std::string subject = info.id + " first " + std::to_string(terms) + " terms (" + series_name(info.series) + ")";

  if (bfile.entries.size() < terms) {
    report.add(id, subject, std::to_string(terms) + " terms",
               "b-file has only " + std::to_string(bfile.entries.size()), false);
    return report;
  }
  if (terms > 0 && bfile.entries.front().first != info.offset) {
    report.add(id, subject, "offset " + std::to_string(info.offset),
               "offset " + std::to_string(bfile.entries.front().first), false);
    return report;
  }
  const auto generated = generate_terms(info, terms);
  for (std::size_t k = 0; k < terms; ++k) {
    const auto& [index, value] = bfile.entries[k];
    if (k >= generated.size() || generated[k] != value) {
      report.add(id, subject, "a(" + std::to_string(index) + ") = " + to_string(value),
                 k < generated.size() ? "a(" + std::to_string(index) + ") = " + to_string(generated[k])
                                      : "generator ran out at a(" + std::to_string(index) + ")",
                 false);
      return report;
    }
  }
  const std::string span = terms == 0 ? "no terms"
                                      : "a(" + std::to_string(bfile.entries.front().first) + ")..a(" +
                                            std::to_string(bfile.entries[terms - 1].first) + ") match";
  report.add(id, subject, span, span, true);
  return report;
}

}  // namespace suptilt
