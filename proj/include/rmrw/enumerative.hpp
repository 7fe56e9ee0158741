#ifndef RMRW_ENUMERATIVE_HPP
#define RMRW_ENUMERATIVE_HPP

#include "rmrw/bigint.hpp"
#include "rmrw/binary_word.hpp"
#include "rmrw/multiset_perm.hpp"

namespace rmrw {

/// |S_M|: the number of permutations of the multiset, n!/(z_1!...z_q!).
BigInt count_perms(const MultisetSpec& spec);

// Enumerative code h_M over multiset permutations. The order is
// lexicographic over the inverse-form vector, ascending; indices are
// 1-based, i.e. idx in [1, count_perms(spec)].
MsPermutation unrank_perm(const MultisetSpec& spec, const BigInt& idx);
BigInt rank_perm(const MsPermutation& perm);

/// Number of n-bit words of weight at most floor(delta*n).
BigInt bounded_count(int n, double delta);

// Enumerative code h_{<=delta} over all n-bit words of weight at most
// floor(delta*n). Order: weight-major, then lexicographic (as bit strings)
// within each weight class. Indices are 1-based.
BinaryWord unrank_bounded(int n, double delta, const BigInt& idx);
BigInt rank_bounded(const BinaryWord& w, double delta);

}  // namespace rmrw

#endif
