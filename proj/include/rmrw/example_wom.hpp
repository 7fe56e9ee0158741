#ifndef RMRW_EXAMPLE_WOM_HPP
#define RMRW_EXAMPLE_WOM_HPP

#include <array>
#include <utility>
#include <vector>

#include "rmrw/wom.hpp"

namespace rmrw {

// The 5-message table code on 6 cells: the 15 two-element subsets of [6]
// partitioned into 5 rows of 3 disjoint pairs (a one-factorization of K6).
// It is a (6, 5, 2/3, 1/3) constant-weight strong WOM code: every row has a
// pair inside every 4-element state.

using CellPair = std::pair<int, int>;  // 1-based cells, first < second

extern const std::array<std::array<CellPair, 3>, 5> kExampleWomTable;

/// The unique (lowest-lex when several) pair of row m contained in the
/// 4-element set U.
CellPair example_wom_encode(int m, const std::vector<int>& state_cells);

/// The row containing the pair.
int example_wom_decode(const CellPair& pair);

/// The table as a StrongWomCode over characteristic vectors.
class Example3Wom final : public StrongWomCode {
 public:
  StrongWomParams params() const override { return {6, 5, 2.0 / 3.0, 1.0 / 3.0}; }
  BinaryWord encode(std::int64_t m, const BinaryWord& state) const override;
  std::int64_t decode(const BinaryWord& codeword) const override;
};

/// The table in the shape strong_wom_oracle consumes.
std::vector<std::vector<BinaryWord>> example_wom_oracle_table();

}  // namespace rmrw

#endif
