#ifndef RMRW_CW_WEAK_HPP
#define RMRW_CW_WEAK_HPP

#include <memory>

#include "rmrw/wom.hpp"

namespace rmrw {

// Constant-weight weak WOM code from a concentrated-weight one: the inner
// codeword is padded or trimmed to weight exactly floor(w_x*n) by flipping
// bits, and the flip word travels as the side index m_a through the
// bounded-weight enumerative code h_{<=delta}.
class ConcentratedToWeak final : public WeakWomCode {
 public:
  explicit ConcentratedToWeak(std::shared_ptr<const ConcentratedWomCode> inner);

  WeakWomParams params() const override;
  WeakWomCodeword encode(std::int64_t m, const BinaryWord& state) const override;
  std::int64_t decode(const BinaryWord& x, const BigInt& m_a) const override;

 private:
  std::shared_ptr<const ConcentratedWomCode> inner_;
};

}  // namespace rmrw

#endif
