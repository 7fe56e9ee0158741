#include "rmrw/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rmrw/cell_state.hpp"
#include "rmrw/rng.hpp"

namespace rmrw {

namespace {

// Core loop shared by the report and the cost-CSV paths. visit(trial, write
// ordinal, cost) is called for every committed write.
template <typename Visit>
std::vector<int> run_trials(const SimConfig& cfg, double& gamma_first, Visit&& visit) {
  const RmScheme& scheme = *cfg.scheme;
  const int q = scheme.q();
  if (cfg.max_level < q - 1)
    throw std::invalid_argument("simulate: max_level below q-1, nothing fits");
  if (cfg.trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");

  const std::vector<BigInt> sizes = scheme.part_sizes();
  std::vector<int> writes_per_trial;
  writes_per_trial.reserve(cfg.trials);

  const Rng root(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = root.fork(t);
    MsPermutation sigma = scheme.initial_state();
    CellState state = modulate(sigma, CellState(std::vector<double>(scheme.n(), 0.0)));
    double top = gamma(state, sigma, q);
    gamma_first = top;

    int writes = 0;
    for (;;) {
      RmMessage m;
      for (const BigInt& k : sizes) m.parts.push_back(rng.below_big(k) + 1);
      const MsPermutation pi = scheme.encode(m, sigma);
      const CellState next = modulate(pi, state);
      const double new_top = gamma(next, pi, q);
      if (new_top > cfg.max_level) break;
      ++writes;
      visit(t, writes, static_cast<int>(std::llround(new_top - top)));
      state = next;
      sigma = pi;
      top = new_top;
    }
    writes_per_trial.push_back(writes);
  }
  return writes_per_trial;
}

}  // namespace

SimReport simulate(const SimConfig& cfg) {
  if (!cfg.scheme) throw std::invalid_argument("simulate: no scheme");
  SimReport rep;
  rep.scheme = cfg.scheme->name();
  rep.q = cfg.scheme->q();
  rep.z = cfg.scheme->z();
  rep.r = cfg.scheme->r();
  rep.max_level = cfg.max_level;
  rep.seed = cfg.seed;

  rep.writes_per_trial = run_trials(cfg, rep.gamma_first, [&](int, int, int cost) {
    ++rep.cost_histogram[cost];
  });

  rep.min_writes = *std::min_element(rep.writes_per_trial.begin(),
                                     rep.writes_per_trial.end());
  rep.max_writes = *std::max_element(rep.writes_per_trial.begin(),
                                     rep.writes_per_trial.end());
  double sum = 0.0;
  for (int w : rep.writes_per_trial) sum += w;
  rep.mean_writes = sum / rep.writes_per_trial.size();
  rep.bits_per_cell_per_write = scheme_rate(*cfg.scheme).rate;
  rep.lifetime_bits_per_cell = rep.mean_writes * rep.bits_per_cell_per_write;
  return rep;
}

std::string sim_report_json(const SimReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["scheme"] = rep.scheme;
  j["q"] = rep.q;
  j["z"] = rep.z;
  j["r"] = rep.r;
  j["max_level"] = rep.max_level;
  j["seed"] = rep.seed;
  j["gamma_first"] = rep.gamma_first;
  j["trials"] = rep.writes_per_trial.size();
  j["writes_per_trial"] = rep.writes_per_trial;
  j["min_writes"] = rep.min_writes;
  j["max_writes"] = rep.max_writes;
  j["mean_writes"] = rep.mean_writes;
  j["bits_per_cell_per_write"] = rep.bits_per_cell_per_write;
  j["lifetime_bits_per_cell"] = rep.lifetime_bits_per_cell;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [cost, count] : rep.cost_histogram)
    hist[std::to_string(cost)] = count;
  j["cost_histogram"] = hist;
  return j.dump(2);
}

std::string sim_costs_csv(const SimConfig& cfg) {
  if (!cfg.scheme) throw std::invalid_argument("simulate: no scheme");
  std::ostringstream out;
  out << "trial,write,cost\n";
  double gamma_first = 0.0;
  run_trials(cfg, gamma_first, [&](int trial, int write, int cost) {
    out << trial << ',' << write << ',' << cost << '\n';
  });
  return out.str();
}

}  // namespace rmrw
