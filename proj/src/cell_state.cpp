#include "rmrw/cell_state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rmrw {

CellState::CellState(std::vector<double> lv) : levels(std::move(lv)) {
  for (double v : levels)
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("CellState: levels must be finite and >= 0");
}

namespace {

void require_uniform(const MsPermutation& perm, const char* who) {
  for (int z : perm.spec.mult)
    if (z != perm.spec.mult[0] || perm.spec.first != 1)
      throw std::invalid_argument(std::string(who) +
                                  ": permutation must be over {1^z,...,q^z}");
}

}  // namespace

DemodResult demodulate(const CellState& x, int q, int z) {
  if (q < 1 || z < 1) throw std::invalid_argument("demodulate: q, z must be >= 1");
  if (x.n() != q * z)
    throw std::invalid_argument("demodulate: state length != q*z");

  std::vector<int> order(x.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return x.levels[a] < x.levels[b];
  });

  // Illegal iff equal levels straddle a rank boundary. Equality is exact on
  // the stored doubles; modulation always leaves gaps >= 1 across ranks.
  for (int i = 1; i < q; ++i)
    if (x.levels[order[z * i - 1]] == x.levels[order[z * i]]) return std::nullopt;

  std::vector<int> inv(x.n());
  for (int j = 0; j < x.n(); ++j) inv[order[j]] = j / z + 1;
  return MsPermutation(MultisetSpec::uniform(q, z), std::move(inv));
}

double gamma(const CellState& x, const MsPermutation& perm, int rank) {
  if (rank < perm.spec.first || rank > perm.spec.last())
    throw std::out_of_range("gamma: rank outside [q]");
  if (x.n() != perm.n())
    throw std::invalid_argument("gamma: state/permutation length mismatch");
  double best = -1.0;
  bool seen = false;
  for (int j = 0; j < x.n(); ++j) {
    if (perm.inv[j] == rank) {
      best = seen ? std::max(best, x.levels[j]) : x.levels[j];
      seen = true;
    }
  }
  if (!seen) throw std::out_of_range("gamma: empty rank");
  return best;
}

CellState modulate(const MsPermutation& pi, const CellState& s) {
  require_uniform(pi, "modulate");
  if (s.n() != pi.n())
    throw std::invalid_argument("modulate: state/permutation length mismatch");

  CellState x = s;
  double prev_top = 0.0;
  for (int rank = 1; rank <= pi.spec.q(); ++rank) {
    double top = 0.0;
    bool first_cell = true;
    for (int j = 0; j < pi.n(); ++j) {
      if (pi.inv[j] != rank) continue;
      if (rank > 1) x.levels[j] = std::max(s.levels[j], prev_top + 1.0);
      top = first_cell ? x.levels[j] : std::max(top, x.levels[j]);
      first_cell = false;
    }
    prev_top = top;
  }
  return x;
}

double cost_states(const CellState& s, const MsPermutation& pi) {
  require_uniform(pi, "cost_states");
  const int q = pi.spec.q();
  const int z = pi.spec.mult[0];
  DemodResult sigma = demodulate(s, q, z);
  if (!sigma)
    throw std::invalid_argument("cost_states: state does not demodulate validly");
  const CellState x = modulate(pi, s);
  return gamma(x, pi, q) - gamma(s, *sigma, q);
}

int cost_perms(const MsPermutation& sigma, const MsPermutation& pi) {
  if (!(sigma.spec == pi.spec))
    throw std::invalid_argument("cost_perms: multiset specs differ");
  int worst = sigma.inv[0] - pi.inv[0];
  for (int j = 1; j < sigma.n(); ++j)
    worst = std::max(worst, sigma.inv[j] - pi.inv[j]);
  return worst;
}

Prop1Report prop1_check(const CellState& s, const MsPermutation& pi) {
  require_uniform(pi, "prop1_check");
  const int q = pi.spec.q();
  const int z = pi.spec.mult[0];
  DemodResult sigma = demodulate(s, q, z);
  if (!sigma)
    throw std::invalid_argument("prop1_check: state does not demodulate validly");
  for (int i = 1; i < q; ++i)
    if (gamma(s, *sigma, i + 1) - gamma(s, *sigma, i) < 1.0)
      throw std::invalid_argument("prop1_check: rank gaps below 1");

  Prop1Report rep;
  rep.lhs = cost_states(s, pi);
  rep.rhs = cost_perms(*sigma, pi);
  rep.tight = gamma(s, *sigma, q) - gamma(s, *sigma, 1) == q - 1;
  rep.holds = rep.lhs <= rep.rhs && (!rep.tight || rep.lhs == rep.rhs);
  return rep;
}

}  // namespace rmrw
