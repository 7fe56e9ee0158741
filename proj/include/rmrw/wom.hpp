#ifndef RMRW_WOM_HPP
#define RMRW_WOM_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rmrw/bigint.hpp"
#include "rmrw/binary_word.hpp"

namespace rmrw {

// WOM code parameter records. Weights are fractions of the block length;
// codewords and states carry weight exactly floor(w*n) unless noted.

struct StrongWomParams {
  int n = 0;
  std::int64_t k_w = 0;
  double w_s = 0.0;
  double w_x = 0.0;
};

struct WeakWomParams {
  int n = 0;
  std::int64_t k_w = 0;
  BigInt k_a;  // side-index alphabet size
  double w_s = 0.0;
  double w_x = 0.0;

  /// R_W = (1/n) log2(K_W / K_a).
  double rate() const {
    return (std::log2(static_cast<double>(k_w)) - log2_big(k_a)) / n;
  }
};

struct ConcentratedWomParams {
  int n = 0;
  std::int64_t k_c = 0;
  double w_s = 0.0;
  double w_x = 0.0;
  double delta = 0.0;  // |weight/n - w_x| <= delta
};

// Messages are 1-based, m in [K]. Encoders must return a codeword covered by
// the state; misuse of the contracts throws.

class StrongWomCode {
 public:
  virtual ~StrongWomCode() = default;
  virtual StrongWomParams params() const = 0;
  virtual BinaryWord encode(std::int64_t m, const BinaryWord& state) const = 0;
  virtual std::int64_t decode(const BinaryWord& codeword) const = 0;
};

class ConcentratedWomCode {
 public:
  virtual ~ConcentratedWomCode() = default;
  virtual ConcentratedWomParams params() const = 0;
  virtual BinaryWord encode(std::int64_t m, const BinaryWord& state) const = 0;
  virtual std::int64_t decode(const BinaryWord& codeword) const = 0;
};

struct WeakWomCodeword {
  BinaryWord x;
  BigInt m_a;  // side index in [K_a], 1-based
};

class WeakWomCode {
 public:
  virtual ~WeakWomCode() = default;
  virtual WeakWomParams params() const = 0;
  virtual WeakWomCodeword encode(std::int64_t m, const BinaryWord& state) const = 0;
  virtual std::int64_t decode(const BinaryWord& x, const BigInt& m_a) const = 0;
};

/// Raised by randomized encoders (polar WOM) when the produced codeword
/// violates its postconditions; carries the diagnosable violations.
struct EncodeFailure : std::runtime_error {
  EncodeFailure(std::string what, int cover_violations_, int weight_)
      : std::runtime_error(std::move(what)),
        cover_violations(cover_violations_),
        weight(weight_) {}
  int cover_violations;  // positions with x=1 while s=0
  int weight;
};

}  // namespace rmrw

#endif
