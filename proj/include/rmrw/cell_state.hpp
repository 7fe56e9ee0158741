#ifndef RMRW_CELL_STATE_HPP
#define RMRW_CELL_STATE_HPP

#include <optional>
#include <vector>

#include "rmrw/multiset_perm.hpp"

namespace rmrw {

// Vector of analog cell levels. Levels are unitless, finite and >= 0.
struct CellState {
  std::vector<double> levels;

  CellState() = default;
  explicit CellState(std::vector<double> lv);

  int n() const { return static_cast<int>(levels.size()); }
  double operator[](int cell) const { return levels[cell - 1]; }
};

// Either a valid permutation or the illegal marker F (equal levels
// straddling a rank boundary).
using DemodResult = std::optional<MsPermutation>;

/// Demodulate a cell-state vector into a permutation of {1^z,...,q^z}.
/// Cells are sorted ascending by level (stable in cell index); the cell at
/// sort position j gets rank ceil(j/z). Returns nullopt (the marker F) when
/// equal levels straddle a rank boundary.
DemodResult demodulate(const CellState& x, int q, int z);

/// Gamma_x(i): the highest level among cells of rank i under `perm`.
double gamma(const CellState& x, const MsPermutation& perm, int rank);

/// Write permutation `pi` on state `s` with the minimal level increase:
/// rank-1 cells keep their level, each higher rank clears the previous
/// rank's maximum by at least 1.
CellState modulate(const MsPermutation& pi, const CellState& s);

/// Rewrite cost alpha(s -> pi) = Gamma_x(q) - Gamma_s(q) where x is the
/// modulation of pi on s. Throws when s does not demodulate validly.
double cost_states(const CellState& s, const MsPermutation& pi);

/// Rewrite cost between permutations: max_j { sigma^-1(j) - pi^-1(j) },
/// the asymmetric Chebyshev distance.
int cost_perms(const MsPermutation& sigma, const MsPermutation& pi);

// Relation between the two cost notions, checked on one instance.
struct Prop1Report {
  double lhs;  // cost_states(s, pi)
  int rhs;     // cost_perms(demod(s), pi)
  bool tight;  // Gamma_s(q) - Gamma_s(1) == q - 1
  bool holds;  // lhs <= rhs, and lhs == rhs whenever tight
};

/// Requires Gamma_s(i+1) - Gamma_s(i) >= 1 for all i (the state must look
/// like a previous modulation output); throws otherwise.
Prop1Report prop1_check(const CellState& s, const MsPermutation& pi);

}  // namespace rmrw

#endif
