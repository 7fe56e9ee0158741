#include "rmrw/limits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rmrw/cell_state.hpp"
#include "rmrw/enumerative.hpp"

namespace rmrw {

double entropy(double p) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("entropy: p outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

BigInt ball_size(int q, int z, int r) {
  if (z < 1) throw std::invalid_argument("ball_size: z must be >= 1");
  if (r < 1 || r >= q)
    throw std::invalid_argument("ball_size: r must satisfy 1 <= r <= q-1");
  BigInt b = big_pow(binomial(static_cast<long>(r + 1) * z, z), q - r);
  for (int i = 1; i <= r; ++i) b *= binomial(static_cast<long>(i) * z, z);
  return b;
}

std::vector<MsPermutation> ball_enumerate(const MsPermutation& sigma, int r) {
  static const BigInt kGuard = 1000000;
  if (count_perms(sigma.spec) > kGuard)
    throw std::invalid_argument("ball_enumerate: instance too large for brute force");

  std::vector<MsPermutation> ball;
  // Walk all arrangements in lexicographic order.
  std::vector<int> inv;
  for (int i = 0; i < sigma.spec.q(); ++i)
    inv.insert(inv.end(), sigma.spec.mult[i], sigma.spec.first + i);
  do {
    MsPermutation pi(sigma.spec, inv);
    if (cost_perms(sigma, pi) <= r) ball.push_back(std::move(pi));
  } while (std::next_permutation(inv.begin(), inv.end()));
  return ball;
}

double capacity_rm(int r) {
  if (r < 1) throw std::domain_error("capacity_rm: r must be >= 1");
  return (r + 1) * entropy(1.0 / (r + 1));
}

double capacity_wom(double w_s, double w_x) {
  if (!(w_x > 0.0 && w_x <= w_s && w_s <= 1.0))
    throw std::domain_error("capacity_wom: need 0 < w_x <= w_s <= 1");
  return w_s * entropy(w_x / w_s);
}

bool check_code_bound(const BigInt& k_r, int q, int z, int r) {
  return k_r <= ball_size(q, z, r);
}

namespace {

// All n-bit words of exactly the given weight, lexicographic.
std::vector<BinaryWord> all_of_weight(int n, int weight) {
  std::vector<BinaryWord> out;
  std::vector<int> bits(n, 0);
  std::fill(bits.end() - weight, bits.end(), 1);
  std::sort(bits.begin(), bits.end());
  do {
    BinaryWord w(n);
    for (int i = 0; i < n; ++i)
      if (bits[i]) w.set(i, true);
    out.push_back(std::move(w));
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

}  // namespace

bool strong_wom_oracle(int n, double w_s, double w_x,
                       const std::vector<std::vector<BinaryWord>>& table) {
  const int state_weight = static_cast<int>(w_s * n);
  const int code_weight = static_cast<int>(w_x * n);

  // The codeword sets may not overlap or leave J_{w_x}(n). A table that
  // merely misses codewords is not rejected here; it simply fails the
  // reachability check below for some (message, state) pair.
  std::map<std::string, int> owner;
  for (std::size_t m = 0; m < table.size(); ++m) {
    for (const BinaryWord& x : table[m]) {
      if (x.size() != n || x.weight() != code_weight)
        throw std::invalid_argument("strong_wom_oracle: codeword off-weight");
      if (!owner.emplace(x.to_string(), static_cast<int>(m)).second)
        throw std::invalid_argument("strong_wom_oracle: codeword in two messages");
    }
  }

  for (const BinaryWord& s : all_of_weight(n, state_weight)) {
    for (const auto& message_set : table) {
      bool reachable = false;
      for (const BinaryWord& x : message_set)
        if (x.covered_by(s)) {
          reachable = true;
          break;
        }
      if (!reachable) return false;
    }
  }
  return true;
}

CapacityReport capacity_report(int q, int z, int r) {
  CapacityReport rep;
  rep.q = q;
  rep.z = z;
  rep.r = r;
  rep.ball = ball_size(q, z, r);
  rep.log_ball = log2_big(rep.ball);
  rep.rate_bound = rep.log_ball / (static_cast<double>(q) * z);
  rep.c_r = capacity_rm(r);
  rep.c_w = capacity_wom(static_cast<double>(r + 1) / q, 1.0 / q);
  return rep;
}

}  // namespace rmrw
