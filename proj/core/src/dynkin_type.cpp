#include <suptilt/dynkin_type.hpp>

#include <cctype>
#include <stdexcept>

namespace suptilt {

char series_letter(Series series) {
  switch (series) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    case Series::E: return 'E';
    case Series::F: return 'F';
    case Series::G: return 'G';
  }
  return '?';
}

std::optional<Series> parse_series(std::string_view text) {
  if (text.size() != 1) return std::nullopt;
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A': return Series::A;
    case 'B': return Series::B;
    case 'C': return Series::C;
    case 'D': return Series::D;
    case 'E': return Series::E;
    case 'F': return Series::F;
    case 'G': return Series::G;
    default: return std::nullopt;
  }
}

std::string label(const DynkinType& type) {
  return std::string(1, series_letter(type.series)) + std::to_string(type.rank);
}

bool is_admissible(const DynkinType& type) {
  const int n = type.rank;
  switch (type.series) {
    case Series::A: return n >= 1;
    case Series::B: return n >= 1;
    case Series::C: return n >= 2;
    case Series::D: return n >= 2;
    case Series::E: return n >= 3 && n <= 8;
    case Series::F: return n == 4;
    case Series::G: return n == 2;
  }
  return false;
}

void require_admissible(const DynkinType& type) {
  if (!is_admissible(type)) {
    throw std::invalid_argument("inadmissible Dynkin type " + label(type));
  }
}

}  // namespace suptilt
