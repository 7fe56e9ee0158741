#include "rmrw/example_wom.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmrw {

const std::array<std::array<CellPair, 3>, 5> kExampleWomTable = {{
    {{{1, 2}, {3, 4}, {5, 6}}},
    {{{1, 3}, {2, 6}, {4, 5}}},
    {{{1, 4}, {2, 5}, {3, 6}}},
    {{{1, 5}, {2, 3}, {4, 6}}},
    {{{1, 6}, {2, 4}, {3, 5}}},
}};

CellPair example_wom_encode(int m, const std::vector<int>& state_cells) {
  if (m < 1 || m > 5) throw std::out_of_range("example_wom_encode: m outside [5]");
  if (state_cells.size() != 4)
    throw std::invalid_argument("example_wom_encode: state must have 4 cells");

  auto inside = [&](const CellPair& p) {
    return std::find(state_cells.begin(), state_cells.end(), p.first) != state_cells.end() &&
           std::find(state_cells.begin(), state_cells.end(), p.second) != state_cells.end();
  };
  // Rows are stored in ascending lex order, so the first hit is the
  // lowest-lex choice when two pairs fit the state.
  for (const CellPair& p : kExampleWomTable[m - 1])
    if (inside(p)) return p;
  throw std::logic_error("example_wom_encode: no pair inside state (table broken)");
}

int example_wom_decode(const CellPair& pair) {
  CellPair p = pair;
  if (p.first > p.second) std::swap(p.first, p.second);
  for (int m = 1; m <= 5; ++m)
    for (const CellPair& q : kExampleWomTable[m - 1])
      if (q == p) return m;
  throw std::invalid_argument("example_wom_decode: not a 2-subset of [6]");
}

BinaryWord Example3Wom::encode(std::int64_t m, const BinaryWord& state) const {
  if (state.size() != 6 || state.weight() != 4)
    throw std::invalid_argument("Example3Wom: state must be 6 bits of weight 4");
  const CellPair p = example_wom_encode(static_cast<int>(m), state.support());
  return theta({p.first, p.second}, 6);
}

std::int64_t Example3Wom::decode(const BinaryWord& codeword) const {
  const std::vector<int> cells = theta_inv(codeword);
  if (cells.size() != 2)
    throw std::invalid_argument("Example3Wom: codeword must have weight 2");
  return example_wom_decode({cells[0], cells[1]});
}

std::vector<std::vector<BinaryWord>> example_wom_oracle_table() {
  std::vector<std::vector<BinaryWord>> table(5);
  for (int m = 0; m < 5; ++m)
    for (const CellPair& p : kExampleWomTable[m])
      table[m].push_back(theta({p.first, p.second}, 6));
  return table;
}

}  // namespace rmrw
