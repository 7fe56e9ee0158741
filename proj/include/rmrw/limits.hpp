#ifndef RMRW_LIMITS_HPP
#define RMRW_LIMITS_HPP

#include <vector>

#include "rmrw/bigint.hpp"
#include "rmrw/binary_word.hpp"
#include "rmrw/multiset_perm.hpp"

namespace rmrw {

/// Binary entropy in bits; H(0) = H(1) = 0 by continuity.
double entropy(double p);

/// |B_{q,z,r}|: closed-form size of the cost-r ball around any permutation
/// of {1^z,...,q^z}: C((r+1)z, z)^(q-r) * prod_{i=1..r} C(iz, z).
BigInt ball_size(int q, int z, int r);

/// Brute-force ball membership: every pi in S_{q,z} with
/// cost_perms(sigma -> pi) <= r. Guarded against large instances.
std::vector<MsPermutation> ball_enumerate(const MsPermutation& sigma, int r);

/// C_R(r) = (r+1) H(1/(r+1)), bits per cell.
double capacity_rm(int r);

/// C_W = w_s H(w_x / w_s), bits per cell.
double capacity_wom(double w_s, double w_x);

/// K_R <= |B_{q,z,r}| (necessary for any (q,z,K_R,r) rewriting code).
bool check_code_bound(const BigInt& k_r, int q, int z, int r);

/// Exhaustively verifies that `table` (one codeword set per message, jointly
/// a partition of all weight-floor(w_x*n) words) is an (n, K, w_s, w_x)
/// constant-weight strong WOM code: every message reachable below every
/// state of weight floor(w_s*n).
bool strong_wom_oracle(int n, double w_s, double w_x,
                       const std::vector<std::vector<BinaryWord>>& table);

struct CapacityReport {
  int q = 0;
  int z = 0;
  int r = 0;
  BigInt ball;
  double log_ball = 0.0;  // bits
  double rate_bound = 0.0;  // log2(ball)/(q*z)
  double c_r = 0.0;
  double c_w = 0.0;  // at w_s=(r+1)/q, w_x=1/q
};

CapacityReport capacity_report(int q, int z, int r);

}  // namespace rmrw

#endif
