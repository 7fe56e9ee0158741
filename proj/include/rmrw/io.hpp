#ifndef RMRW_IO_HPP
#define RMRW_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rmrw/binary_word.hpp"
#include "rmrw/cell_state.hpp"
#include "rmrw/multiset_perm.hpp"

namespace rmrw {

// Cell-state CSV: one comma-separated row of decimal levels per state,
// '#' starts a comment line, blank lines ignored.
std::vector<CellState> read_cell_states(std::istream& in);
std::vector<CellState> read_cell_states_file(const std::string& path);
std::string cell_state_csv(const CellState& s);

// Permutations serialize as inverse-form integer CSV rows.
std::vector<int> parse_int_csv(const std::string& line);
std::string perm_csv(const MsPermutation& perm);

// Strong-WOM code tables as JSON:
//   {"schema":1, "n":6, "w_s":0.667, "w_x":0.333,
//    "table": [["110000","001100","000011"], ...]}
// One inner list of codeword bit strings per message.
struct WomTableFile {
  int n = 0;
  double w_s = 0.0;
  double w_x = 0.0;
  std::vector<std::vector<BinaryWord>> table;
};
WomTableFile read_wom_table_file(const std::string& path);
std::string wom_table_json(const WomTableFile& tf);

}  // namespace rmrw

#endif
