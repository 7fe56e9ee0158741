#ifndef RMRW_SIMULATE_HPP
#define RMRW_SIMULATE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rmrw/rm_codes.hpp"

namespace rmrw {

// Flash-lifetime rewrite simulation: starting from the freshly modulated
// initial permutation, write uniform random messages until the top level
// would exceed max_level.
struct SimConfig {
  const RmScheme* scheme = nullptr;
  double max_level = 0.0;  // L; must be >= q-1 or even the first write fails
  int trials = 1;
  std::uint64_t seed = 0;
};

struct SimReport {
  std::string scheme;
  int q = 0, z = 0, r = 0;
  double max_level = 0.0;
  std::uint64_t seed = 0;
  double gamma_first = 0.0;          // top level after the initial write
  std::vector<int> writes_per_trial;  // rewrites after the initial write
  int min_writes = 0;
  int max_writes = 0;
  double mean_writes = 0.0;
  double bits_per_cell_per_write = 0.0;
  double lifetime_bits_per_cell = 0.0;   // mean writes * rate
  std::map<int, std::int64_t> cost_histogram;  // measured cost -> count
};

SimReport simulate(const SimConfig& cfg);

/// JSON rendering with stable key order ("schema": 1).
std::string sim_report_json(const SimReport& rep);

/// Per-write costs as CSV rows (trial, write, cost), for external plotting.
std::string sim_costs_csv(const SimConfig& cfg);

}  // namespace rmrw

#endif
