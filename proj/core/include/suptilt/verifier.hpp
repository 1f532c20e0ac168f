#pragma once

#include <suptilt/dynkin_type.hpp>
#include <suptilt/report.hpp>
#include <suptilt/root_datum.hpp>

#include <cstdint>
#include <string>
#include <vector>

// Cross-checks of enumeration, closed forms, reference tables and b-files.
// Every function returns a report; failing checks never abort a run.

namespace suptilt {

/// Knits, counts and compares each orientation against the closed forms:
/// support-tilting and antichains by support-rank, antichains by size, and
/// agreement across orientations. Throws std::invalid_argument when the type
/// has more indecomposables than the enumerator supports.
VerificationReport verify_type(const DynkinType& type, const std::vector<OrientationSpec>& orientations,
                               int threads = 1);

/// Count tables of B_n and C_n agree for 2 <= n <= n_max.
VerificationReport verify_b_equals_c(int n_max);

/// Every identity at every admissible argument up to max_n, one check per
/// identity and series.
VerificationReport verify_identities(int max_n);

/// Rows 0..9 of the A, B and D triangles with sums, the Lucas comparison
/// table and the D main diagonal against the reference transcriptions.
VerificationReport verify_triangles();

/// Exceptional rows and totals against the reference transcriptions.
VerificationReport verify_exceptional();

/// B_n, 2 <= n <= n_max: the u/v split of sincere antichains, the per-X(i)
/// counts, and the eta bijection by exhaustive round trip.
VerificationReport verify_sincere_structure(int n_max);

/// The same eta bijection for linear A_n, 1 <= n <= n_max.
VerificationReport verify_linear_a_eta(int n_max);

/// Support-tilting sets are maximal rigid inside their support.
VerificationReport verify_maximality(const DynkinType& type);

/// The rational forms of the brackets and of a_s(A_n) are integers for all
/// t <= t_max, and agree with the library functions.
VerificationReport verify_integrality(int t_max, int threads = 1);

/// Reconciles every known sequence against its fixture in `fixture_dir`.
VerificationReport verify_oeis(const std::string& fixture_dir);

enum class Suite { quick, full, slow };

struct SuiteOptions {
  Suite suite = Suite::quick;
  int max_n = 50;
  int threads = 1;
  std::uint64_t seed = 20140514;
  std::string fixture_dir;
};

/// quick: triangles, exceptional rows, identities, default-orientation
///        enumeration, A4/D4 orientation sweeps, B = C, sincere structure,
///        integrality (t <= 200) and b-file reconciliation.
/// full:  adds every orientation of each rank <= 4 type, 10 seeded random
///        orientations per rank 5-6 type, maximality and integrality to t <= 2000.
/// slow:  adds E7 and E8.
/// Checks run on `threads` workers; the report does not depend on it.
VerificationReport run_suite(const SuiteOptions& options);

std::string suite_name(Suite suite);

}  // namespace suptilt
