#ifndef RMRW_POLAR_HPP
#define RMRW_POLAR_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rmrw/binary_word.hpp"
#include "rmrw/wom.hpp"

namespace rmrw {

/// x = u * G2^(kron log2 n) over GF(2), G2 = [[1,0],[1,1]]. An involution.
BinaryWord polar_transform(const BinaryWord& u);

/// W(s,g | v) of the WOM test channel, with x = g XOR v:
/// w_s-w_x for (s,x)=(1,0); w_x for (1,1); 1-w_s for (0,0); 0 for (0,1).
double test_channel_prob(int s, int g, int v, double w_s, double w_x);

/// Channel LLR ln(W(s,g|0)/W(s,g|1)), clamped to +-40 nats.
double test_channel_llr(int s, int g, double w_s, double w_x);

// Parameters of the randomized-rounding polar WOM codec. The set F holds
// the message positions: those are the sub-channels whose input is nearly
// uniform given the channel output (highest unreliability), so forcing
// message bits there leaves the compression typical. All other positions
// are drawn by the successive-cancellation rounding.
struct PolarParams {
  int n = 0;
  double w_s = 0.0;
  double w_x = 0.0;
  double eps_c = 0.0;   // rate back-off: |F| = ceil(n*(C_W - eps_c))
  double beta = 0.3;    // in (0, 1/2); only enters delta_n()
  double delta = 0.0;   // success band: |weight(x)/n - w_x| <= delta
  std::vector<int> frozen;  // message positions, 0-based, sorted

  int message_bits() const { return static_cast<int>(frozen.size()); }
  /// The vanishing threshold scale 2^(-n^beta)/(2n) of the asymptotic rule.
  double delta_n() const;
};

/// Message length for a rate of C_W - eps_c bits per cell.
int polar_message_bits(int n, double w_s, double w_x, double eps_c);

/// Monte-Carlo genie-aided estimate of per-subchannel unreliability (hard
/// decision error rate across `trials` transmissions); returns the `count`
/// most unreliable indices, sorted. trials should be >= 1000.
std::vector<int> build_frozen_set(int n, double w_s, double w_x, int count,
                                  int trials, std::uint64_t seed);

/// Convenience: params with F built by Monte Carlo (or loaded by the caller
/// via the cache below).
PolarParams make_polar_params(int n, double w_s, double w_x, double eps_c,
                              double delta, int trials, std::uint64_t seed);

/// Uniform dither word; the seed is the common randomness shared by encoder
/// and decoder.
BinaryWord make_dither(int n, std::uint64_t seed);

/// Randomized-rounding encoder. message has exactly |F| bits, assigned to
/// the F positions in ascending index order. Throws EncodeFailure when the
/// produced word violates x <= s or the weight band (the scheme only
/// succeeds with high probability).
BinaryWord polar_wom_encode(const PolarParams& params,
                            const std::vector<std::uint8_t>& message,
                            const BinaryWord& s, const BinaryWord& dither,
                            std::uint64_t seed);

/// Deterministic inverse of the encoder's transform chain.
std::vector<std::uint8_t> polar_wom_decode(const PolarParams& params,
                                           const BinaryWord& x,
                                           const BinaryWord& dither);

/// Test hook: like polar_wom_encode but non-message bits come from `draw`,
/// called as draw(position, prob_of_zero). Does not throw on failure;
/// reports the violations instead.
struct PolarEncodeAttempt {
  BinaryWord x;
  bool success = false;
  int cover_violations = 0;
  int weight = 0;
};
PolarEncodeAttempt polar_wom_encode_with(
    const PolarParams& params, const std::vector<std::uint8_t>& message,
    const BinaryWord& s, const BinaryWord& dither,
    const std::function<int(int, double)>& draw);

// The polar codec as a concentrated-weight WOM code, usable as the inner
// codec of the weak-WOM adapter. Messages are indices in [2^|F|] (so |F|
// must stay below 63 bits here); the dither and the rounding seed are fixed
// per instance, with the per-call seed derived from (message, state).
class PolarAsConcentrated final : public ConcentratedWomCode {
 public:
  PolarAsConcentrated(PolarParams params, BinaryWord dither, std::uint64_t seed);

  ConcentratedWomParams params() const override;
  BinaryWord encode(std::int64_t m, const BinaryWord& state) const override;
  std::int64_t decode(const BinaryWord& codeword) const override;

 private:
  PolarParams p_;
  BinaryWord dither_;
  std::uint64_t seed_;
};

// Frozen-set cache: a JSON file mapping parameter keys to index lists so
// repeated runs skip the Monte-Carlo estimation.
struct FrozenCacheKey {
  int n;
  double w_s;
  double w_x;
  double eps_c;
  int trials;
  std::uint64_t seed;
};
bool load_frozen_cache(const std::string& path, const FrozenCacheKey& key,
                       std::vector<int>& frozen_out);
void save_frozen_cache(const std::string& path, const FrozenCacheKey& key,
                       const std::vector<int>& frozen);

}  // namespace rmrw

#endif
