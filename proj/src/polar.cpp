#include "rmrw/polar.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "rmrw/limits.hpp"
#include "rmrw/rng.hpp"

namespace rmrw {

namespace {

constexpr double kLlrClamp = 40.0;

bool is_pow2(int n) { return n >= 1 && (n & (n - 1)) == 0; }

double clamp_llr(double l) { return std::clamp(l, -kLlrClamp, kLlrClamp); }

// Check-node combination, exact: ln((e^(a+b)+1)/(e^a+e^b)). The min-sum term
// plus two corrections; corrections vanish for large magnitudes.
double cnop(double a, double b) {
  const double m = (a < 0) == (b < 0) ? std::min(std::abs(a), std::abs(b))
                                      : -std::min(std::abs(a), std::abs(b));
  const double corr =
      std::log1p(std::exp(-std::abs(a + b))) - std::log1p(std::exp(-std::abs(a - b)));
  return clamp_llr(m + corr);
}

double vnop(double a, double b, int bit) { return clamp_llr(b + (bit ? -a : a)); }

// Successive-cancellation walk matching polar_transform. The leaf callback
// supplies each u-hat bit given its decision LLR; the recursion returns the
// partial transforms, so the root x-buffer ends up holding transform(u-hat).
class ScEngine {
 public:
  explicit ScEngine(int n) : n_(n), m_(0) {
    while ((1 << m_) < n) ++m_;
    llr_.resize(m_ + 1);
    xbuf_.resize(m_ + 1);
    xa_.resize(m_ + 1);
    for (int d = 0; d <= m_; ++d) {
      llr_[d].resize(n >> d);
      xbuf_[d].resize(n >> d);
      xa_[d].resize(std::max(1, n >> (d + 1)));
    }
  }

  // leaf(position, llr) -> bit. After run(), x() is transform(u-hat).
  template <typename Leaf>
  void run(const std::vector<double>& channel_llrs, Leaf&& leaf) {
    llr_[0] = channel_llrs;
    recurse(0, 0, leaf);
  }

  const std::vector<std::uint8_t>& x() const { return xbuf_[0]; }

 private:
  template <typename Leaf>
  void recurse(int d, int offset, Leaf& leaf) {
    const int len = n_ >> d;
    if (len == 1) {
      xbuf_[d][0] = static_cast<std::uint8_t>(leaf(offset, llr_[d][0]));
      return;
    }
    const int half = len / 2;
    for (int j = 0; j < half; ++j)
      llr_[d + 1][j] = cnop(llr_[d][j], llr_[d][j + half]);
    recurse(d + 1, offset, leaf);
    std::copy_n(xbuf_[d + 1].begin(), half, xa_[d].begin());
    for (int j = 0; j < half; ++j)
      llr_[d + 1][j] = vnop(llr_[d][j], llr_[d][j + half], xa_[d][j]);
    recurse(d + 1, offset + half, leaf);
    for (int j = 0; j < half; ++j) {
      xbuf_[d][j] = xa_[d][j] ^ xbuf_[d + 1][j];
      xbuf_[d][j + half] = xbuf_[d + 1][j];
    }
  }

  int n_;
  int m_;
  std::vector<std::vector<double>> llr_;
  std::vector<std::vector<std::uint8_t>> xbuf_;
  std::vector<std::vector<std::uint8_t>> xa_;
};

void check_weights(double w_s, double w_x) {
  if (!(w_x > 0.0 && w_x <= w_s && w_s <= 1.0))
    throw std::domain_error("polar: need 0 < w_x <= w_s <= 1");
}

}  // namespace

BinaryWord polar_transform(const BinaryWord& u) {
  const int n = u.size();
  if (!is_pow2(n))
    throw std::invalid_argument("polar_transform: length must be a power of two");
  std::vector<std::uint8_t> v(n);
  for (int j = 0; j < n; ++j) v[j] = u.get(j) ? 1 : 0;
  for (int b = 1; b < n; b <<= 1)
    for (int j = 0; j < n; ++j)
      if (!(j & b)) v[j] ^= v[j | b];
  BinaryWord out(n);
  for (int j = 0; j < n; ++j)
    if (v[j]) out.set(j, true);
  return out;
}

double test_channel_prob(int s, int g, int v, double w_s, double w_x) {
  check_weights(w_s, w_x);
  const int x = g ^ v;
  if (s == 1) return x == 0 ? w_s - w_x : w_x;
  return x == 0 ? 1.0 - w_s : 0.0;
}

double test_channel_llr(int s, int g, double w_s, double w_x) {
  if (s == 0) return g == 0 ? kLlrClamp : -kLlrClamp;
  const double l = std::log((w_s - w_x) / w_x);
  return clamp_llr(g == 0 ? l : -l);
}

double PolarParams::delta_n() const {
  return std::exp2(-std::pow(static_cast<double>(n), beta)) / (2.0 * n);
}

int polar_message_bits(int n, double w_s, double w_x, double eps_c) {
  check_weights(w_s, w_x);
  const double rate = capacity_wom(w_s, w_x) - eps_c;
  if (rate <= 0.0) return 0;
  return std::min(n, static_cast<int>(std::ceil(n * rate)));
}

std::vector<int> build_frozen_set(int n, double w_s, double w_x, int count,
                                  int trials, std::uint64_t seed) {
  if (!is_pow2(n)) throw std::invalid_argument("build_frozen_set: n not a power of two");
  check_weights(w_s, w_x);
  if (count < 0 || count > n)
    throw std::invalid_argument("build_frozen_set: count outside [0, n]");
  if (count == 0) return {};

  // Genie-aided Monte Carlo: transmit uniform inputs through the test
  // channel and count per-position hard-decision errors of the SC walk when
  // all previous decisions are corrected.
  std::vector<double> errors(n, 0.0);
  Rng rng(seed);
  ScEngine engine(n);
  std::vector<double> llrs(n);
  std::vector<std::uint8_t> v(n), u(n);
  BinaryWord vw(n);
  for (int t = 0; t < trials; ++t) {
    for (int j = 0; j < n; ++j) {
      v[j] = rng.next_bit() ? 1 : 0;
      const double roll = rng.unit();
      int s, g;
      if (roll < w_s - w_x) {
        s = 1;
        g = v[j];
      } else if (roll < w_s) {
        s = 1;
        g = 1 ^ v[j];
      } else {
        s = 0;
        g = v[j];
      }
      llrs[j] = test_channel_llr(s, g, w_s, w_x);
      vw.set(j, v[j] != 0);
    }
    const BinaryWord uw = polar_transform(vw);
    for (int j = 0; j < n; ++j) u[j] = uw.get(j) ? 1 : 0;
    engine.run(llrs, [&](int pos, double llr) {
      if (llr == 0.0)
        errors[pos] += 0.5;
      else if ((llr < 0.0 ? 1 : 0) != u[pos])
        errors[pos] += 1.0;
      return static_cast<int>(u[pos]);  // genie: continue with the truth
    });
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return errors[a] > errors[b]; });
  std::vector<int> frozen(order.begin(), order.begin() + count);
  std::sort(frozen.begin(), frozen.end());
  return frozen;
}

PolarParams make_polar_params(int n, double w_s, double w_x, double eps_c,
                              double delta, int trials, std::uint64_t seed) {
  PolarParams p;
  p.n = n;
  p.w_s = w_s;
  p.w_x = w_x;
  p.eps_c = eps_c;
  p.delta = delta;
  p.frozen = build_frozen_set(n, w_s, w_x,
                              polar_message_bits(n, w_s, w_x, eps_c), trials, seed);
  return p;
}

BinaryWord make_dither(int n, std::uint64_t seed) {
  Rng rng(seed ^ 0xd17be5);
  BinaryWord g(n);
  for (int j = 0; j < n; ++j) g.set(j, rng.next_bit());
  return g;
}

PolarEncodeAttempt polar_wom_encode_with(
    const PolarParams& params, const std::vector<std::uint8_t>& message,
    const BinaryWord& s, const BinaryWord& dither,
    const std::function<int(int, double)>& draw) {
  const int n = params.n;
  if (!is_pow2(n)) throw std::invalid_argument("polar_wom_encode: n not a power of two");
  if (s.size() != n || dither.size() != n)
    throw std::invalid_argument("polar_wom_encode: state/dither length mismatch");
  if (static_cast<int>(message.size()) != params.message_bits())
    throw std::invalid_argument("polar_wom_encode: message length != |F|");

  std::vector<int> msg_slot(n, -1);
  for (std::size_t i = 0; i < params.frozen.size(); ++i) {
    const int pos = params.frozen[i];
    if (pos < 0 || pos >= n)
      throw std::invalid_argument("polar_wom_encode: frozen index outside [n]");
    msg_slot[pos] = static_cast<int>(i);
  }

  std::vector<double> llrs(n);
  for (int j = 0; j < n; ++j)
    llrs[j] = test_channel_llr(s.get(j) ? 1 : 0, dither.get(j) ? 1 : 0,
                               params.w_s, params.w_x);

  ScEngine engine(n);
  engine.run(llrs, [&](int pos, double llr) -> int {
    if (msg_slot[pos] >= 0) return message[msg_slot[pos]] ? 1 : 0;
    const double p0 = 1.0 / (1.0 + std::exp(-llr));  // L/(L+1)
    return draw(pos, p0);
  });

  PolarEncodeAttempt att;
  att.x = BinaryWord(n);
  for (int j = 0; j < n; ++j) {
    const bool xj = (engine.x()[j] != 0) != dither.get(j);  // x = v XOR g
    att.x.set(j, xj);
    if (xj && !s.get(j)) ++att.cover_violations;
  }
  att.weight = att.x.weight();
  const double dev = std::abs(static_cast<double>(att.weight) / n - params.w_x);
  att.success = att.cover_violations == 0 && dev <= params.delta;
  return att;
}

BinaryWord polar_wom_encode(const PolarParams& params,
                            const std::vector<std::uint8_t>& message,
                            const BinaryWord& s, const BinaryWord& dither,
                            std::uint64_t seed) {
  Rng rng(seed);
  const PolarEncodeAttempt att = polar_wom_encode_with(
      params, message, s, dither,
      [&rng](int, double p0) { return rng.unit() < p0 ? 0 : 1; });
  if (!att.success)
    throw EncodeFailure("polar WOM encode failed its postconditions",
                        att.cover_violations, att.weight);
  return att.x;
}

std::vector<std::uint8_t> polar_wom_decode(const PolarParams& params,
                                           const BinaryWord& x,
                                           const BinaryWord& dither) {
  if (x.size() != params.n || dither.size() != params.n)
    throw std::invalid_argument("polar_wom_decode: length mismatch");
  const BinaryWord u = polar_transform(x ^ dither);  // involution: forward = inverse
  std::vector<std::uint8_t> msg(params.frozen.size());
  for (std::size_t i = 0; i < params.frozen.size(); ++i)
    msg[i] = u.get(params.frozen[i]) ? 1 : 0;
  return msg;
}

PolarAsConcentrated::PolarAsConcentrated(PolarParams params, BinaryWord dither,
                                         std::uint64_t seed)
    : p_(std::move(params)), dither_(std::move(dither)), seed_(seed) {
  if (p_.message_bits() > 62)
    throw std::invalid_argument("PolarAsConcentrated: |F| too large for integer messages");
  if (dither_.size() != p_.n)
    throw std::invalid_argument("PolarAsConcentrated: dither length mismatch");
}

ConcentratedWomParams PolarAsConcentrated::params() const {
  ConcentratedWomParams cp;
  cp.n = p_.n;
  cp.k_c = std::int64_t{1} << p_.message_bits();
  cp.w_s = p_.w_s;
  cp.w_x = p_.w_x;
  cp.delta = p_.delta;
  return cp;
}

BinaryWord PolarAsConcentrated::encode(std::int64_t m, const BinaryWord& state) const {
  if (m < 1 || m > (std::int64_t{1} << p_.message_bits()))
    throw std::out_of_range("PolarAsConcentrated: message outside [K_C]");
  std::vector<std::uint8_t> bits(p_.message_bits());
  for (int i = 0; i < p_.message_bits(); ++i) bits[i] = ((m - 1) >> i) & 1;
  // Reproducible given (seed, message, state).
  std::uint64_t call_seed = seed_ ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(m));
  for (int j = 0; j < state.size(); ++j)
    call_seed = (call_seed * 1099511628211ULL) ^ (state.get(j) ? 2u : 1u);
  return polar_wom_encode(p_, bits, state, dither_, call_seed);
}

std::int64_t PolarAsConcentrated::decode(const BinaryWord& codeword) const {
  const std::vector<std::uint8_t> bits = polar_wom_decode(p_, codeword, dither_);
  std::int64_t m = 0;
  for (int i = p_.message_bits() - 1; i >= 0; --i) m = (m << 1) | bits[i];
  return m + 1;
}

namespace {

nlohmann::json key_to_json(const FrozenCacheKey& key) {
  return {{"n", key.n},         {"w_s", key.w_s},     {"w_x", key.w_x},
          {"eps_c", key.eps_c}, {"trials", key.trials}, {"seed", key.seed}};
}

}  // namespace

bool load_frozen_cache(const std::string& path, const FrozenCacheKey& key,
                       std::vector<int>& frozen_out) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error&) {
    return false;
  }
  if (!doc.is_array()) return false;
  const nlohmann::json want = key_to_json(key);
  for (const auto& entry : doc) {
    if (entry.contains("key") && entry["key"] == want && entry.contains("frozen")) {
      frozen_out = entry["frozen"].get<std::vector<int>>();
      return true;
    }
  }
  return false;
}

void save_frozen_cache(const std::string& path, const FrozenCacheKey& key,
                       const std::vector<int>& frozen) {
  nlohmann::json doc = nlohmann::json::array();
  {
    std::ifstream in(path);
    if (in) {
      try {
        in >> doc;
      } catch (const nlohmann::json::parse_error&) {
        doc = nlohmann::json::array();
      }
      if (!doc.is_array()) doc = nlohmann::json::array();
    }
  }
  const nlohmann::json want = key_to_json(key);
  for (auto& entry : doc) {
    if (entry.contains("key") && entry["key"] == want) {
      entry["frozen"] = frozen;
      std::ofstream out(path);
      out << doc.dump(2) << "\n";
      return;
    }
  }
  doc.push_back({{"key", want}, {"frozen", frozen}});
  std::ofstream out(path);
  out << doc.dump(2) << "\n";
}

}  // namespace rmrw
