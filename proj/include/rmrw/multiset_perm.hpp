#ifndef RMRW_MULTISET_PERM_HPP
#define RMRW_MULTISET_PERM_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

namespace rmrw {

// The multiset M = {a^z_1, (a+1)^z_2, ..., (a+q-1)^z_q} whose permutations
// carry the data. Element labels are consecutive integers starting at
// `first`; the symmetric case {1^z,...,q^z} uses first = 1.
struct MultisetSpec {
  int first = 1;
  std::vector<int> mult;

  MultisetSpec() = default;
  MultisetSpec(int first_label, std::vector<int> multiplicities)
      : first(first_label), mult(std::move(multiplicities)) {
    if (mult.empty()) throw std::invalid_argument("MultisetSpec: q must be >= 1");
    for (int z : mult)
      if (z < 1) throw std::invalid_argument("MultisetSpec: multiplicities must be >= 1");
  }

  /// The symmetric multiset {1^z, 2^z, ..., q^z}.
  static MultisetSpec uniform(int q, int z) {
    if (q < 1 || z < 1) throw std::invalid_argument("MultisetSpec: q, z must be >= 1");
    return MultisetSpec(1, std::vector<int>(q, z));
  }

  int q() const { return static_cast<int>(mult.size()); }
  int n() const { return std::accumulate(mult.begin(), mult.end(), 0); }
  int last() const { return first + q() - 1; }

  /// Multiplicity of label v.
  int mult_of(int label) const {
    if (label < first || label > last())
      throw std::out_of_range("MultisetSpec: label outside multiset");
    return mult[label - first];
  }

  bool operator==(const MultisetSpec& o) const {
    return first == o.first && mult == o.mult;
  }
};

// A permutation of a multiset, stored in inverse form: inv[j] is the rank
// (label) of cell j+1. The direct form sigma(i) is recovered on demand.
struct MsPermutation {
  MultisetSpec spec;
  std::vector<int> inv;

  MsPermutation() = default;
  MsPermutation(MultisetSpec s, std::vector<int> inverse)
      : spec(std::move(s)), inv(std::move(inverse)) {
    validate();
  }

  int n() const { return static_cast<int>(inv.size()); }

  /// Rank of cell j (1-based).
  int rank_of(int cell) const { return inv[cell - 1]; }

  /// Cells of rank `label`, ascending (the direct form of the permutation).
  std::vector<int> cells_of_rank(int label) const {
    std::vector<int> cells;
    for (int j = 0; j < n(); ++j)
      if (inv[j] == label) cells.push_back(j + 1);
    return cells;
  }

  bool operator==(const MsPermutation& o) const {
    return spec == o.spec && inv == o.inv;
  }

  void validate() const {
    if (static_cast<int>(inv.size()) != spec.n())
      throw std::invalid_argument("MsPermutation: length does not match multiset");
    std::vector<int> seen(spec.q(), 0);
    for (int v : inv) {
      if (v < spec.first || v > spec.last())
        throw std::invalid_argument("MsPermutation: label outside multiset");
      ++seen[v - spec.first];
    }
    for (int i = 0; i < spec.q(); ++i)
      if (seen[i] != spec.mult[i])
        throw std::invalid_argument("MsPermutation: multiplicity invariant violated");
  }
};

/// U_{i1,i2}: cells whose rank lies in [i1, i2]; empty when i1 > i2.
/// Out-of-range endpoints are tolerated (clamped to the label range).
inline std::vector<int> rank_union(const MsPermutation& perm, int i1, int i2) {
  std::vector<int> cells;
  if (i1 > i2) return cells;
  for (int j = 0; j < perm.n(); ++j)
    if (perm.inv[j] >= i1 && perm.inv[j] <= i2) cells.push_back(j + 1);
  return cells;
}

}  // namespace rmrw

#endif
