#include "rmrw/enumerative.hpp"

#include <stdexcept>

namespace rmrw {

BigInt count_perms(const MultisetSpec& spec) {
  // Running multinomial: after consuming each group the partial product
  // is itself a multinomial coefficient, so every division is exact.
  BigInt r = 1;
  long placed = 0;
  for (int z : spec.mult) {
    for (int k = 1; k <= z; ++k) {
      r *= ++placed;
      r /= k;
    }
  }
  return r;
}

namespace {

// Arrangements of the remaining multiset after fixing a prefix.
struct Remaining {
  std::vector<int> mult;
  int total;

  explicit Remaining(const MultisetSpec& spec)
      : mult(spec.mult), total(spec.n()) {}

  // count * mult[i] / total = arrangements that continue with label i.
  BigInt take(const BigInt& count, int i) const {
    return count * mult[i] / total;
  }

  void consume(int i) {
    --mult[i];
    --total;
  }
};

}  // namespace

MsPermutation unrank_perm(const MultisetSpec& spec, const BigInt& idx) {
  const BigInt total = count_perms(spec);
  if (idx < 1 || idx > total)
    throw std::out_of_range("unrank_perm: index outside [1, count_perms]");

  Remaining rem(spec);
  BigInt count = total;
  BigInt target = idx;
  std::vector<int> inv;
  inv.reserve(spec.n());
  for (int pos = 0; pos < spec.n(); ++pos) {
    for (int i = 0; i < spec.q(); ++i) {
      if (rem.mult[i] == 0) continue;
      BigInt with_i = rem.take(count, i);
      if (target > with_i) {
        target -= with_i;
      } else {
        inv.push_back(spec.first + i);
        count = with_i;
        rem.consume(i);
        break;
      }
    }
  }
  return MsPermutation(spec, std::move(inv));
}

BigInt rank_perm(const MsPermutation& perm) {
  perm.validate();
  const MultisetSpec& spec = perm.spec;
  Remaining rem(spec);
  BigInt count = count_perms(spec);
  BigInt rank = 1;
  for (int pos = 0; pos < spec.n(); ++pos) {
    const int chosen = perm.inv[pos] - spec.first;
    for (int i = 0; i < chosen; ++i)
      if (rem.mult[i] > 0) rank += rem.take(count, i);
    count = rem.take(count, chosen);
    rem.consume(chosen);
  }
  return rank;
}

namespace {

int bounded_max_weight(int n, double delta) {
  if (n < 1) throw std::invalid_argument("bounded code: n must be >= 1");
  if (delta < 0.0 || delta > 0.5)
    throw std::domain_error("bounded code: delta must be in [0, 1/2]");
  return static_cast<int>(delta * n);
}

// Rank (1-based) of w within the lexicographic order of all n-bit words of
// its own weight. Words with bit 1 at the front come after all words with
// bit 0 there, so each set bit at position p (0-based) skips C(n-p-1, left).
BigInt rank_within_weight(const BinaryWord& w) {
  const int n = w.size();
  int left = w.weight();
  BigInt r = 1;
  for (int p = 0; p < n && left > 0; ++p) {
    if (w.get(p)) {
      r += binomial(n - p - 1, left);
      --left;
    }
  }
  return r;
}

BinaryWord unrank_within_weight(int n, int weight, BigInt idx) {
  BinaryWord w(n);
  int left = weight;
  for (int p = 0; p < n && left > 0; ++p) {
    const BigInt zero_branch = binomial(n - p - 1, left);
    if (idx > zero_branch) {
      idx -= zero_branch;
      w.set(p, true);
      --left;
    }
  }
  return w;
}

}  // namespace

BigInt bounded_count(int n, double delta) {
  const int wmax = bounded_max_weight(n, delta);
  BigInt total = 0;
  for (int j = 0; j <= wmax; ++j) total += binomial(n, j);
  return total;
}

BinaryWord unrank_bounded(int n, double delta, const BigInt& idx) {
  const int wmax = bounded_max_weight(n, delta);
  if (idx < 1) throw std::out_of_range("unrank_bounded: index must be >= 1");
  BigInt rest = idx;
  for (int j = 0; j <= wmax; ++j) {
    const BigInt block = binomial(n, j);
    if (rest <= block) return unrank_within_weight(n, j, rest);
    rest -= block;
  }
  throw std::out_of_range("unrank_bounded: index outside the code");
}

BigInt rank_bounded(const BinaryWord& w, double delta) {
  const int wmax = bounded_max_weight(w.size(), delta);
  if (w.weight() > wmax)
    throw std::invalid_argument("rank_bounded: weight exceeds floor(delta*n)");
  BigInt r = 0;
  for (int j = 0; j < w.weight(); ++j) r += binomial(w.size(), j);
  return r + rank_within_weight(w);
}

}  // namespace rmrw
