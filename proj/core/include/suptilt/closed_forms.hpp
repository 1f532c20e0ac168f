#pragma once

#include <suptilt/dynkin_type.hpp>
#include <suptilt/exact_int.hpp>

#include <span>
#include <string>
#include <vector>

// Closed-form numbers of support-tilting modules.
//
// Everything here is exact integer arithmetic. The two brackets are computed
// through binomial identities rather than through their rational definitions:
//
//   bailey(t, s)          = (s+t)/t * C(t,s)          = C(t,s) + C(t-1,s-1)
//   catalan_bracket(t, s) = (t-2s+1)/(t-s+1) * C(t,s) = C(t,s) - C(t,s-1)
//
// so integrality is structural; the rational forms are checked in the tests.

namespace suptilt {

ExactInt binom(long t, long s);

/// Lucas-triangle entry [t over s]. Requires t >= 1 and 0 <= s; zero for s > t.
/// t == 0 is rejected (0/0 is ambiguous at the corner).
ExactInt bailey(long t, long s);

/// Ballot/Catalan-triangle entry ]t over s[, defined for 0 <= s and
/// t - 2s + 1 >= 0. Zero on the boundary t - 2s + 1 == 0.
ExactInt catalan_bracket(long t, long s);

/// Number of support-tilting modules of support-rank s for the given type.
/// A0 and B0 denote the empty type (a single count a_0 = 1).
ExactInt a_s(Series series, int n, int s);

/// Total number of support-tilting modules, sum over s of a_s.
ExactInt a_total(Series series, int n);

/// The whole row (a_0, ..., a_n).
std::vector<ExactInt> a_row(Series series, int n);

/// Row of a disjoint union: coefficientwise convolution of the two rows.
std::vector<ExactInt> convolve(std::span<const ExactInt> lhs, std::span<const ExactInt> rhs);

/// Row computed through the degenerate-rank identifications (B1 = A1,
/// D2 = A1+A1, D3 = A3, E3 = A2+A1, E4 = A4, E5 = D5). Disjoint unions are
/// convolved. For non-degenerate ranks this is a_row itself.
std::vector<ExactInt> convention_row(Series series, int n);

struct ExceptionalRow {
  std::string label;
  Series series;
  int rank;
  std::vector<ExactInt> values;  // a_0 .. a_rank
  ExactInt total;
};

/// Rows E3..E8, B3, F4, G2. Each row is checked against its stored total
/// when the table is first built.
std::span<const ExceptionalRow> exceptional_table();

// ---------------------------------------------------------------------------
// Identities. Each returns whether the identity holds for the given argument
// and throws std::out_of_range when the argument is outside its range.

/// a_s(X_n) = a_s(X_{n-1}) + a_{s-1}(X_n) for X in {A,B,D,E},
/// n >= m and 1 <= s <= n-c with (m,c) = (1,0),(2,1),(3,2),(4,3).
bool hook_check(Series series, int n, int s);

/// D (n >= 3): a_{n-1}(D_n) = a_{n-1}(D_{n-1}) + a_{n-2}(D_n) + a_{n-2}(A_{n-2})
///             and a_{n-1}(D_n) = [2n-3 over n-1].
/// E (4 <= n <= 8): a_{n-2}(E_n) = a_{n-2}(E_{n-1}) + a_{n-3}(E_n) + a_{n-3}(A_{n-3}).
bool modified_hook_check(Series series, int n);

/// sum_{i<=s} a_i(X_n) = a_s(X_{n+1}) for 1 <= s <= n-1
/// (X = A with n >= 0, B with n >= 1, D with n >= 2).
bool summation_check(Series series, int n, int s);

/// a(X_n) = a_n(X_n) + a_{n-1}(X_{n+1}) for X in {A,B,D}.
bool total_split_check(Series series, int n);

/// [2n-2 over n] - a_n(D_n) = a_{n-1}(A_{n-1}) = C(2n-2,n-1)/n for n >= 2.
bool comparison_check(int n);

/// The sum sequence and the main diagonal reappear as other diagonals:
/// A: a(A_n) = a_{n+1}(A_{n+1}),   a_n(A_n) = a_{n-1}(A_n)
/// B: a(B_n) = a_n(B_{n+1}),       a_n(B_n) = a_{n-1}(B_{n+1})
/// D: a(D_n) = a_{n-1}(D_{n+2}),   a_n(D_n) = a_{n-2}(D_{n+2})
bool diagonal_checks(Series series, int n);

/// The u/v split of the sincere antichains of B_n (n >= 2) and its relation
/// to type A, evaluated through the convolution sums.
bool b_decomposition_check(int n);

/// sum_{i=1}^{n} a_{i-1}(A_{i-1}) * a_{n-i}(B_{n-i}), the predicted count of
/// sincere antichains of B_n containing a sincere module.
ExactInt sincere_u_convolution(int n);

/// The single term a_{i-1}(A_{i-1}) * a_{n-i}(B_{n-i}) of the sum above.
ExactInt sincere_u_term(int n, int i);

// ---------------------------------------------------------------------------
// Sheared triangles: a_s(n) = z_s(n+s-1) for A and B, and z_s(n+s-2) for D.

enum class ShearFamily { catalan, pascal, lucas };

/// z_s(t) of the given family: ]t+1 over s[, C(t,s) or [t over s].
/// Cells outside the family's region are zero.
ExactInt sheared(ShearFamily family, long t, long s);

/// z_s(t) = z_{s-1}(t-1) + z_s(t-1) on the family's recursion region.
bool shear_recursion_check(ShearFamily family, long t, long s);

/// z_s(t) = sum_{i=0}^{s} z_i(t-s-1+i).
bool hockey_stick_check(ShearFamily family, long t, long s);

/// Whether (t, s) lies in the region where the recursion is claimed.
bool in_recursion_region(ShearFamily family, long t, long s);

}  // namespace suptilt
