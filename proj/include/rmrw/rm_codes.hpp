#ifndef RMRW_RM_CODES_HPP
#define RMRW_RM_CODES_HPP

#include <memory>
#include <string>
#include <vector>

#include "rmrw/bigint.hpp"
#include "rmrw/hash_wom.hpp"
#include "rmrw/multiset_perm.hpp"
#include "rmrw/wom.hpp"

namespace rmrw {

// Message of a (q,z,K_R,r) rewriting scheme: q-r-1 parts carried by the
// ingredient WOM code, then the top-ranks part carried by the enumerative
// code. All parts are 1-based.
struct RmMessage {
  std::vector<BigInt> parts;
};

/// Smallest a with |S_{r+1,a}| >= k_a (cells per rank of an index
/// sub-permutation storing a side index from [k_a]).
int a_min(const BigInt& k_a, int r);

// A rewriting scheme: encode writes any message over any codebook state at
// rank-drop cost at most r; decode inverts. Implementations are immutable
// and pure.
class RmScheme {
 public:
  virtual ~RmScheme() = default;

  virtual std::string name() const = 0;
  virtual int q() const = 0;
  virtual int z() const = 0;
  virtual int r() const = 0;
  int n() const { return q() * z(); }

  /// Sizes of the message parts, in order; K_R is their product.
  virtual std::vector<BigInt> part_sizes() const = 0;
  BigInt k_r() const;

  virtual bool in_codebook(const MsPermutation& pi) const;

  /// The lexicographically first codebook permutation (fresh-block state).
  virtual MsPermutation initial_state() const;

  virtual MsPermutation encode(const RmMessage& m, const MsPermutation& sigma) const = 0;
  virtual RmMessage decode(const MsPermutation& pi) const = 0;

 protected:
  void check_message(const RmMessage& m) const;
  void check_state(const MsPermutation& sigma) const;
};

struct SchemeRate {
  double rate;          // (1/n) log2 K_R
  double capacity_gap;  // C_R(r) - rate, positive for every valid scheme
};
SchemeRate scheme_rate(const RmScheme& scheme);

/// Ingredient failure of Construction 6 surfaced with its diagnostics.
struct RewriteFailure : std::runtime_error {
  RewriteFailure(std::string what, int rank_, int column_, std::uint64_t searched_)
      : std::runtime_error(std::move(what)),
        rank(rank_),
        column(column_),
        searched(searched_) {}
  int rank;
  int column;
  std::uint64_t searched;
};

// The q=3, z=2, r=1 scheme built from the 5-message table code and the
// lexicographic enumerative code over {2,2,3,3}; K_R = 5*6 = 30.
class Construction1Scheme final : public RmScheme {
 public:
  std::string name() const override { return "con1"; }
  int q() const override { return 3; }
  int z() const override { return 2; }
  int r() const override { return 1; }
  std::vector<BigInt> part_sizes() const override { return {5, 6}; }
  MsPermutation encode(const RmMessage& m, const MsPermutation& sigma) const override;
  RmMessage decode(const MsPermutation& pi) const override;
};

// General (q, z, r) scheme from a constant-weight strong WOM ingredient.
// With r = q-1 there are no WOM rounds and no ingredient is needed: the
// scheme degenerates to the pure enumerative code over S_{q,z}.
class Construction2Scheme final : public RmScheme {
 public:
  Construction2Scheme(int q, int z, int r, std::shared_ptr<const StrongWomCode> wom);

  std::string name() const override { return "con2"; }
  int q() const override { return q_; }
  int z() const override { return z_; }
  int r() const override { return r_; }
  std::vector<BigInt> part_sizes() const override;
  MsPermutation encode(const RmMessage& m, const MsPermutation& sigma) const override;
  RmMessage decode(const MsPermutation& pi) const override;

 private:
  int q_, z_, r_;
  std::shared_ptr<const StrongWomCode> wom_;
  MultisetSpec top_spec_;
};

// Scheme from a constant-weight weak WOM ingredient. The permutation is a
// concatenation (main | q-r-1 index parts | balance part): the main part
// carries the WOM codewords and the top-ranks message, each index part is a
// permutation of {1^a,...,(r+1)^a} storing the WOM side index, and the
// balance part (ranks r+2..q) is copied from the state.
class Construction3Scheme final : public RmScheme {
 public:
  Construction3Scheme(int q, int z_w, int r, std::shared_ptr<const WeakWomCode> wom);

  std::string name() const override { return "con3"; }
  int q() const override { return q_; }
  int z() const override { return z_; }
  int r() const override { return r_; }
  int z_w() const { return z_w_; }
  int index_mult() const { return a_; }

  std::vector<BigInt> part_sizes() const override;
  bool in_codebook(const MsPermutation& pi) const override;
  MsPermutation initial_state() const override;
  MsPermutation encode(const RmMessage& m, const MsPermutation& sigma) const override;
  RmMessage decode(const MsPermutation& pi) const override;

 private:
  int q_, z_w_, r_, a_, z_;
  std::shared_ptr<const WeakWomCode> wom_;
  MultisetSpec top_spec_;
};

// Scheme from a constant-weight concatenated WOM ingredient. Layout:
// (q-r-1 index parts | balance part | t main blocks); every main block is a
// permutation of {1^z_w,...,q^z_w} and carries its own top-ranks message so
// the per-block balance survives rewriting.
class Construction6Scheme final : public RmScheme {
 public:
  Construction6Scheme(int q, int z_w, int r, std::shared_ptr<const ConcatWomCode> wom);

  std::string name() const override { return "con6"; }
  int q() const override { return q_; }
  int z() const override { return z_; }
  int r() const override { return r_; }
  int z_w() const { return z_w_; }
  int block_count() const { return t_; }
  int index_mult() const { return a_; }

  std::vector<BigInt> part_sizes() const override;
  bool in_codebook(const MsPermutation& pi) const override;
  MsPermutation initial_state() const override;
  MsPermutation encode(const RmMessage& m, const MsPermutation& sigma) const override;
  RmMessage decode(const MsPermutation& pi) const override;

 private:
  int q_, z_w_, r_, t_, a_, z_;
  std::shared_ptr<const ConcatWomCode> wom_;
  MultisetSpec top_spec_;  // per main block
};

}  // namespace rmrw

#endif
