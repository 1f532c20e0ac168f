#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace suptilt {

enum class Series { A, B, C, D, E, F, G };

/// A Dynkin series together with its rank, e.g. {Series::E, 6}.
///
/// Admissible ranks follow the usual conventions: A n>=1, B n>=1 (B1 = A1),
/// C n>=2, D n>=2 (D2 = A1+A1, D3 = A3), E 3..8 (E3 = A2+A1, E4 = A4,
/// E5 = D5), F4 and G2.  The closed-form counts additionally accept the empty
/// types A0 and B0.
struct DynkinType {
  Series series = Series::A;
  int rank = 1;

  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

char series_letter(Series series);
std::optional<Series> parse_series(std::string_view text);

/// "A4", "E8", ...
std::string label(const DynkinType& type);

bool is_admissible(const DynkinType& type);

/// Throws std::invalid_argument with a readable message when inadmissible.
void require_admissible(const DynkinType& type);

}  // namespace suptilt
