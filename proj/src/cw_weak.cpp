#include "rmrw/cw_weak.hpp"

#include <cstdlib>
#include <stdexcept>

#include "rmrw/enumerative.hpp"

namespace rmrw {

ConcentratedToWeak::ConcentratedToWeak(std::shared_ptr<const ConcentratedWomCode> inner)
    : inner_(std::move(inner)) {
  if (!inner_) throw std::invalid_argument("ConcentratedToWeak: null inner codec");
  const ConcentratedWomParams ip = inner_->params();
  if (ip.delta < 0.0 || ip.delta > 0.5)
    throw std::invalid_argument("ConcentratedToWeak: inner delta outside [0, 1/2]");
}

WeakWomParams ConcentratedToWeak::params() const {
  const ConcentratedWomParams ip = inner_->params();
  WeakWomParams p;
  p.n = ip.n;
  p.k_w = ip.k_c;
  p.k_a = bounded_count(ip.n, ip.delta);
  p.w_s = ip.w_s;
  p.w_x = ip.w_x;
  return p;
}

WeakWomCodeword ConcentratedToWeak::encode(std::int64_t m, const BinaryWord& state) const {
  const ConcentratedWomParams ip = inner_->params();
  const int n = ip.n;
  if (state.size() != n)
    throw std::invalid_argument("ConcentratedToWeak: state length mismatch");
  if (state.weight() != static_cast<int>(ip.w_s * n))
    throw std::invalid_argument("ConcentratedToWeak: state off-weight");

  const BinaryWord xc = inner_->encode(m, state);  // inner failures propagate
  if (!xc.covered_by(state))
    throw std::logic_error("ConcentratedToWeak: inner codeword not below state");

  const int target = static_cast<int>(ip.w_x * n);
  const int need = target - xc.weight();

  // Flip |need| bits, lowest eligible cell first: raises flip 0s of x_C that
  // sit under the state, trims flip 1s of x_C.
  BinaryWord flips(n);
  int left = std::abs(need);
  for (int pos = 0; pos < n && left > 0; ++pos) {
    const bool eligible =
        need > 0 ? (state.get(pos) && !xc.get(pos)) : xc.get(pos);
    if (eligible) {
      flips.set(pos, true);
      --left;
    }
  }
  if (left > 0)
    throw std::logic_error("ConcentratedToWeak: cannot reach target weight");

  WeakWomCodeword out;
  out.x = xc ^ flips;
  out.m_a = rank_bounded(flips, ip.delta);  // throws if inner overshot delta
  return out;
}

std::int64_t ConcentratedToWeak::decode(const BinaryWord& x, const BigInt& m_a) const {
  const ConcentratedWomParams ip = inner_->params();
  if (x.size() != ip.n)
    throw std::invalid_argument("ConcentratedToWeak: codeword length mismatch");
  const BinaryWord flips = unrank_bounded(ip.n, ip.delta, m_a);
  return inner_->decode(x ^ flips);
}

}  // namespace rmrw
