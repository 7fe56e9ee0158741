// Command-line front end: demodulate/modulate cell states, evaluate costs,
// ball sizes and capacities, run the verification oracles, drive the
// rewriting codecs on files, and simulate writes-until-erasure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmrw/cell_state.hpp"
#include "rmrw/enumerative.hpp"
#include "rmrw/example_wom.hpp"
#include "rmrw/io.hpp"
#include "rmrw/limits.hpp"
#include "rmrw/rm_codes.hpp"
#include "rmrw/scheme_presets.hpp"
#include "rmrw/simulate.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rmrw;

MsPermutation perm_from_csv(const std::string& csv, int q, int z) {
  return MsPermutation(MultisetSpec::uniform(q, z), parse_int_csv(csv));
}

// Decimal rendering that keeps a fraction marker ("2.0", not "2").
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  std::string s = buf;
  if (s.find_first_of(".einf") == std::string::npos) s += ".0";
  return s;
}

RmMessage message_from_csv(const std::string& csv) {
  RmMessage m;
  std::stringstream ss(csv);
  std::string field;
  while (std::getline(ss, field, ',')) m.parts.push_back(BigInt(field));
  return m;
}

std::string message_csv(const RmMessage& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.parts.size(); ++i) {
    if (i) out << ',';
    out << m.parts[i];
  }
  return out.str();
}

int run_demod(const std::string& file, int q, int z, bool as_json) {
  ordered_json results = ordered_json::array();
  for (const CellState& s : read_cell_states_file(file)) {
    DemodResult d = demodulate(s, q, z);
    if (as_json)
      results.push_back(d ? ordered_json(d->inv) : ordered_json(nullptr));
    else
      std::cout << (d ? perm_csv(*d) : "F") << "\n";
  }
  if (as_json) std::cout << ordered_json{{"schema", 1}, {"demod", results}}.dump(2) << "\n";
  return 0;
}

int run_modulate(const std::string& file, int q, int z, const std::string& target,
                 bool as_json) {
  const MsPermutation pi = perm_from_csv(target, q, z);
  ordered_json results = ordered_json::array();
  for (const CellState& s : read_cell_states_file(file)) {
    const CellState x = modulate(pi, s);
    if (as_json)
      results.push_back(x.levels);
    else
      std::cout << cell_state_csv(x) << "\n";
  }
  if (as_json)
    std::cout << ordered_json{{"schema", 1}, {"modulate", results}}.dump(2) << "\n";
  return 0;
}

int run_cost(int q, int z, const std::string& state_file, const std::string& from,
             const std::string& to, bool as_json) {
  ordered_json results = ordered_json::array();
  if (!state_file.empty()) {
    const MsPermutation pi = perm_from_csv(to, q, z);
    for (const CellState& s : read_cell_states_file(state_file)) {
      const double c = cost_states(s, pi);
      if (as_json)
        results.push_back(c);
      else
        std::cout << c << "\n";
    }
  } else {
    const int c = cost_perms(perm_from_csv(from, q, z), perm_from_csv(to, q, z));
    if (as_json)
      results.push_back(c);
    else
      std::cout << c << "\n";
  }
  if (as_json) std::cout << ordered_json{{"schema", 1}, {"cost", results}}.dump(2) << "\n";
  return 0;
}

ordered_json capacity_report_json(const CapacityReport& rep) {
  return ordered_json{{"schema", 1},
                      {"q", rep.q},
                      {"z", rep.z},
                      {"r", rep.r},
                      {"ball_size", rep.ball.str()},
                      {"log_ball", rep.log_ball},
                      {"rate_bound", rep.rate_bound},
                      {"c_r", rep.c_r},
                      {"c_w", rep.c_w}};
}

int run_ball(int q, int z, int r, bool verify, bool as_json) {
  const BigInt closed = ball_size(q, z, r);
  std::size_t enumerated = 0;
  if (verify) {
    const MsPermutation center = unrank_perm(MultisetSpec::uniform(q, z), 1);
    enumerated = ball_enumerate(center, r).size();
  }
  if (as_json) {
    ordered_json j = capacity_report_json(capacity_report(q, z, r));
    if (verify) {
      j["enumerated"] = enumerated;
      j["verified"] = closed == enumerated;
    }
    std::cout << j.dump(2) << "\n";
  } else if (verify) {
    std::cout << closed << " (closed form) " << (closed == enumerated ? "==" : "!=")
              << " " << enumerated << " (enumerated)\n";
  } else {
    std::cout << closed << "\n";
  }
  return verify && closed != enumerated ? 1 : 0;
}

int run_capacity(int r, int q, int z, double ws, double wx, bool as_json) {
  if (q > 0 && z > 0) {
    const CapacityReport rep = capacity_report(q, z, r);
    if (as_json)
      std::cout << capacity_report_json(rep).dump(2) << "\n";
    else
      std::cout << "C_R = " << num(rep.c_r) << "\nC_W = " << num(rep.c_w)
                << "\nrate_bound = " << num(rep.rate_bound) << "\n";
    return 0;
  }
  if (ws > 0.0) {
    const double cw = capacity_wom(ws, wx);
    if (as_json)
      std::cout << ordered_json{{"schema", 1}, {"c_w", cw}}.dump(2) << "\n";
    else
      std::cout << "C_W = " << num(cw) << "\n";
    return 0;
  }
  const double cr = capacity_rm(r);
  if (as_json)
    std::cout << ordered_json{{"schema", 1}, {"r", r}, {"c_r", cr}}.dump(2) << "\n";
  else
    std::cout << "C_R = " << num(cr) << "\n";
  return 0;
}

int run_oracle(const std::string& which, const std::string& table_path, int q,
               int z, int r, int max_level) {
  bool pass = false;
  std::ostringstream detail;
  if (which == "example3") {
    pass = strong_wom_oracle(6, 2.0 / 3.0, 1.0 / 3.0, example_wom_oracle_table());
    detail << "15 states x 5 messages";
  } else if (which == "wom-table") {
    if (table_path.empty())
      throw std::invalid_argument("oracle wom-table: --table FILE required");
    const WomTableFile tf = read_wom_table_file(table_path);
    pass = strong_wom_oracle(tf.n, tf.w_s, tf.w_x, tf.table);
    detail << "n=" << tf.n << ", " << tf.table.size() << " messages";
  } else if (which == "ball-size") {
    const BigInt closed = ball_size(q, z, r);
    pass = true;
    const MultisetSpec spec = MultisetSpec::uniform(q, z);
    const BigInt total = count_perms(spec);
    for (BigInt i = 1; i <= total; ++i) {
      const MsPermutation center = unrank_perm(spec, i);
      if (BigInt(ball_enumerate(center, r).size()) != closed) {
        pass = false;
        break;
      }
    }
    detail << "ball " << closed << " over " << total << " centers";
  } else if (which == "cost-relation") {
    // All integer states in [0, max_level]^n with valid demod and unit rank
    // gaps, against all targets.
    const MultisetSpec spec = MultisetSpec::uniform(q, z);
    const int n = spec.n();
    const BigInt total = count_perms(spec);
    pass = true;
    std::vector<double> levels(n, 0.0);
    long states = 0;
    for (;;) {
      const CellState s(levels);
      DemodResult d = demodulate(s, q, z);
      bool gaps_ok = d.has_value();
      if (d)
        for (int i = 1; i < q && gaps_ok; ++i)
          gaps_ok = gamma(s, *d, i + 1) - gamma(s, *d, i) >= 1.0;
      if (gaps_ok) {
        ++states;
        for (BigInt k = 1; k <= total && pass; ++k)
          pass = prop1_check(s, unrank_perm(spec, k)).holds;
      }
      if (!pass) break;
      int pos = 0;
      while (pos < n && levels[pos] == max_level) levels[pos++] = 0.0;
      if (pos == n) break;
      levels[pos] += 1.0;
    }
    detail << states << " states x " << total << " targets";
  } else {
    throw CLI::ValidationError("oracle", "unknown oracle '" + which + "'");
  }
  std::cout << which << ": " << (pass ? "PASS" : "FAIL") << " (" << detail.str()
            << ")\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-modulation rewrite coding toolkit"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  int q = 3, z = 2, r = 1;
  std::string state_file, target, from_csv, to_csv;

  auto* demod = app.add_subcommand("demod", "demodulate cell-state rows");
  demod->add_option("--q", q)->required();
  demod->add_option("--z", z)->required();
  demod->add_option("file", state_file, "cell-state CSV")->required();

  auto* mod = app.add_subcommand("modulate", "write a permutation onto states");
  mod->add_option("--q", q)->required();
  mod->add_option("--z", z)->required();
  mod->add_option("--target", target, "inverse-form CSV")->required();
  mod->add_option("file", state_file)->required();

  auto* cost = app.add_subcommand("cost", "rewrite cost between states/permutations");
  cost->add_option("--q", q)->required();
  cost->add_option("--z", z)->required();
  cost->add_option("--state", state_file, "cell-state CSV file (state cost mode)");
  cost->add_option("--from", from_csv, "source permutation CSV");
  cost->add_option("--to", to_csv, "target permutation CSV")->required();

  auto* ball = app.add_subcommand("ball", "cost-ball size");
  bool verify = false;
  ball->add_option("--q", q)->required();
  ball->add_option("--z", z)->required();
  ball->add_option("--r", r)->required();
  ball->add_flag("--verify", verify, "compare against brute-force enumeration");

  auto* cap = app.add_subcommand("capacity", "capacity formulas");
  int cq = 0, cz = 0;
  double ws = 0.0, wx = 0.0;
  cap->add_option("--r", r);
  cap->add_option("--q", cq);
  cap->add_option("--z", cz);
  cap->add_option("--ws", ws);
  cap->add_option("--wx", wx);

  std::string scheme_name = "con1", message_csv_arg, sigma_csv, pi_csv;
  auto* enc = app.add_subcommand("encode", "rewrite: message + state -> permutation");
  enc->add_option("--scheme", scheme_name, "preset name or JSON file");
  enc->add_option("--m", message_csv_arg, "message parts CSV")->required();
  enc->add_option("--sigma", sigma_csv, "state permutation CSV")->required();

  auto* dec = app.add_subcommand("decode", "permutation -> message");
  dec->add_option("--scheme", scheme_name);
  dec->add_option("--pi", pi_csv, "stored permutation CSV")->required();

  auto* oracle = app.add_subcommand("oracle", "run a verification oracle");
  std::string which, table_path;
  int max_level = 4;
  oracle->add_option("name", which, "example3 | wom-table | ball-size | cost-relation")->required();
  oracle->add_option("--table", table_path, "WOM table JSON (for wom-table)");
  oracle->add_option("--q", q);
  oracle->add_option("--z", z);
  oracle->add_option("--r", r);
  oracle->add_option("--max-level", max_level, "level grid bound for cost-relation");

  auto* sim = app.add_subcommand("simulate", "writes-until-erasure simulation");
  double max_l = 12.0;
  int trials = 100;
  std::uint64_t seed = 1;
  std::string out_path, costs_path;
  sim->add_option("--scheme", scheme_name);
  sim->add_option("--L", max_l, "maximal cell level")->required();
  sim->add_option("--trials", trials);
  sim->add_option("--seed", seed, "threads all randomness");
  sim->add_option("--out", out_path, "write the JSON report here");
  sim->add_option("--costs-csv", costs_path, "write per-write costs CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (demod->parsed()) return run_demod(state_file, q, z, as_json);
    if (mod->parsed()) return run_modulate(state_file, q, z, target, as_json);
    if (cost->parsed()) {
      if (state_file.empty() && from_csv.empty())
        throw std::invalid_argument("cost: need --state or --from");
      return run_cost(q, z, state_file, from_csv, to_csv, as_json);
    }
    if (ball->parsed()) return run_ball(q, z, r, verify, as_json);
    if (cap->parsed()) return run_capacity(r, cq, cz, ws, wx, as_json);
    if (enc->parsed()) {
      const auto scheme = load_scheme(scheme_name);
      const MsPermutation sigma(MultisetSpec::uniform(scheme->q(), scheme->z()),
                                parse_int_csv(sigma_csv));
      const MsPermutation pi = scheme->encode(message_from_csv(message_csv_arg), sigma);
      if (as_json)
        std::cout << ordered_json{{"schema", 1}, {"pi", pi.inv}}.dump(2) << "\n";
      else
        std::cout << perm_csv(pi) << "\n";
      return 0;
    }
    if (dec->parsed()) {
      const auto scheme = load_scheme(scheme_name);
      const MsPermutation pi(MultisetSpec::uniform(scheme->q(), scheme->z()),
                             parse_int_csv(pi_csv));
      const RmMessage m = scheme->decode(pi);
      if (as_json) {
        ordered_json parts = ordered_json::array();
        for (const BigInt& p : m.parts) parts.push_back(p.str());
        std::cout << ordered_json{{"schema", 1}, {"m", parts}}.dump(2) << "\n";
      } else {
        std::cout << message_csv(m) << "\n";
      }
      return 0;
    }
    if (oracle->parsed()) return run_oracle(which, table_path, q, z, r, max_level);
    if (sim->parsed()) {
      const auto scheme = load_scheme(scheme_name);
      SimConfig cfg;
      cfg.scheme = scheme.get();
      cfg.max_level = max_l;
      cfg.trials = trials;
      cfg.seed = seed;
      const SimReport rep = simulate(cfg);
      const std::string text = sim_report_json(rep);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << text << "\n";
      }
      if (!costs_path.empty()) {
        std::ofstream out(costs_path);
        out << sim_costs_csv(cfg);
      }
      std::cout << text << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
