#ifndef RMRW_HASH_WOM_HPP
#define RMRW_HASH_WOM_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rmrw/bigint.hpp"
#include "rmrw/binary_word.hpp"
#include "rmrw/gf2n.hpp"

namespace rmrw {

// Constant-weight concatenated WOM code built from the affine hash family
// over GF(2^n). The block matrix is t1 x t2; the t1 blocks of a column share
// one hash index, found by brute-force search.
struct ConcatWomParams {
  int n = 0;
  int t1 = 1;
  int t2 = 1;
  int k = 0;  // hash family H^{n,k,l}; each block carries k-l message bits
  int l = 0;
  double w_s = 0.0;
  double w_x = 0.0;

  int t() const { return t1 * t2; }
  std::int64_t k_b() const { return std::int64_t{1} << (k - l); }
  std::uint64_t k_a() const { return std::uint64_t{1} << (2 * n); }  // per column
  /// Side alphabet of one whole encode call: K_a^(t2).
  BigInt k_a_total() const { return BigInt(1) << (2 * n * t2); }
  int state_weight() const { return static_cast<int>(w_s * n); }
  int code_weight() const { return static_cast<int>(w_x * n); }
  /// R_W = (t1*k' - 2n)/(n*t1) with k' = k-l message bits per block.
  double rate() const {
    return (static_cast<double>(t1) * (k - l) - 2.0 * n) / (static_cast<double>(n) * t1);
  }
};

/// Desk-scale t2 is a free choice; the asymptotic recipe fixes everything else
/// from (eps, c, w_s, w_x): n = ceil((c/eps) log2(1/eps)), message bits per
/// block floor(n(C_W - 2eps/3)), hash slack l = ceil(eps*n/3),
/// t1 = floor((1/eps)^(c/12) - 1).
ConcatWomParams concat_params_from_recipe(double eps, double c, double w_s,
                                          double w_x, int t2);

using MessageMatrix = std::vector<std::vector<std::int64_t>>;  // [t1][t2], 1-based
using WordMatrix = std::vector<std::vector<BinaryWord>>;

struct ConcatWomCodeword {
  WordMatrix x;                      // [t1][t2]
  std::vector<std::uint64_t> m_a;    // [t2], 1-based hash indices in [K_a]
};

/// Raised when the brute-force search exhausts the hash family for some
/// column; desk-scale parameters sit far below the regime where success is
/// guaranteed.
struct NoEncoding : std::runtime_error {
  NoEncoding(std::string what, int column_, std::uint64_t searched_)
      : std::runtime_error(std::move(what)), column(column_), searched(searched_) {}
  int column;
  std::uint64_t searched;
};

class ConcatWomCode {
 public:
  virtual ~ConcatWomCode() = default;
  virtual ConcatWomParams params() const = 0;
  virtual ConcatWomCodeword encode(const MessageMatrix& m, const WordMatrix& s) const = 0;
  virtual MessageMatrix decode(const WordMatrix& x,
                               const std::vector<std::uint64_t>& m_a) const = 0;
};

class HashWomCode final : public ConcatWomCode {
 public:
  explicit HashWomCode(ConcatWomParams p);

  ConcatWomParams params() const override { return p_; }

  /// For each column, the smallest hash index under which every block has an
  /// eligible codeword (x <= s, weight exactly floor(w_x*n)) hashing to its
  /// message; per block the lexicographically first such codeword is taken.
  ConcatWomCodeword encode(const MessageMatrix& m, const WordMatrix& s) const override;

  MessageMatrix decode(const WordMatrix& x,
                       const std::vector<std::uint64_t>& m_a) const override;

  /// The hash pair (a, b) of 1-based index m_a: m_a - 1 = a * 2^n + b.
  std::pair<Gf2nElement, Gf2nElement> hash_of_index(std::uint64_t m_a) const;

 private:
  ConcatWomParams p_;
};

}  // namespace rmrw

#endif
