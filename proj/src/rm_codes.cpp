#include "rmrw/rm_codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rmrw/enumerative.hpp"
#include "rmrw/example_wom.hpp"
#include "rmrw/limits.hpp"

namespace rmrw {

int a_min(const BigInt& k_a, int r) {
  if (k_a < 1) throw std::invalid_argument("a_min: k_a must be >= 1");
  if (r < 1) throw std::invalid_argument("a_min: r must be >= 1");
  int a = 1;
  while (count_perms(MultisetSpec::uniform(r + 1, a)) < k_a) ++a;
  return a;
}

BigInt RmScheme::k_r() const {
  BigInt k = 1;
  for (const BigInt& p : part_sizes()) k *= p;
  return k;
}

bool RmScheme::in_codebook(const MsPermutation& pi) const {
  return pi.spec == MultisetSpec::uniform(q(), z());
}

MsPermutation RmScheme::initial_state() const {
  return unrank_perm(MultisetSpec::uniform(q(), z()), 1);
}

void RmScheme::check_message(const RmMessage& m) const {
  const std::vector<BigInt> sizes = part_sizes();
  if (m.parts.size() != sizes.size())
    throw std::invalid_argument("RmScheme: wrong number of message parts");
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (m.parts[i] < 1 || m.parts[i] > sizes[i])
      throw std::out_of_range("RmScheme: message part outside its range");
}

void RmScheme::check_state(const MsPermutation& sigma) const {
  if (!(sigma.spec == MultisetSpec::uniform(q(), z())))
    throw std::invalid_argument("RmScheme: state has the wrong multiset");
  if (!in_codebook(sigma))
    throw std::invalid_argument("RmScheme: state outside the codebook");
}

SchemeRate scheme_rate(const RmScheme& scheme) {
  SchemeRate sr;
  sr.rate = log2_big(scheme.k_r()) / scheme.n();
  sr.capacity_gap = capacity_rm(scheme.r()) - sr.rate;
  return sr;
}

namespace {

std::int64_t to_i64(const BigInt& v, const char* who) {
  if (v > std::numeric_limits<std::int64_t>::max())
    throw std::out_of_range(std::string(who) + ": message part exceeds 64 bits");
  return v.convert_to<std::int64_t>();
}

// State vector of WOM round i over an n-cell segment: cells of sigma-rank
// <= i+r that pi has not placed yet.
BinaryWord wom_round_state(const std::vector<int>& sigma_inv,
                           const std::vector<int>& pi_inv, int i, int r) {
  const int n = static_cast<int>(sigma_inv.size());
  BinaryWord s(n);
  for (int j = 0; j < n; ++j)
    if (sigma_inv[j] <= i + r && pi_inv[j] == 0) s.set(j, true);
  return s;
}

void place_rank(std::vector<int>& pi_inv, const BinaryWord& x, int rank) {
  for (int cell : x.support()) pi_inv[cell - 1] = rank;
}

// Unassigned cells ascending get the labels of the enumerative top part.
void place_top(std::vector<int>& pi_inv, const MsPermutation& top) {
  int t = 0;
  for (int& v : pi_inv)
    if (v == 0) v = top.inv[t++];
  if (t != top.n()) throw std::logic_error("top part size mismatch");
}

// Labels of the top ranks read off the unassigned-complement, used by the
// decoders: cells with rank >= lo, ascending cell order.
std::vector<int> read_top(const std::vector<int>& pi_inv, int lo) {
  std::vector<int> labels;
  for (int v : pi_inv)
    if (v >= lo) labels.push_back(v);
  return labels;
}

std::vector<int> slice(const std::vector<int>& inv, int offset, int len) {
  return std::vector<int>(inv.begin() + offset, inv.begin() + offset + len);
}

bool counts_match(const std::vector<int>& inv, int first, const std::vector<int>& mult) {
  std::vector<int> seen(mult.size(), 0);
  for (int v : inv) {
    if (v < first || v >= first + static_cast<int>(mult.size())) return false;
    ++seen[v - first];
  }
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (seen[i] != mult[i]) return false;
  return true;
}

void check_ingredient_word(const BinaryWord& x, const BinaryWord& s, int weight) {
  if (!x.covered_by(s))
    throw std::runtime_error("ingredient codeword not below its state");
  if (x.weight() != weight)
    throw std::runtime_error("ingredient codeword off-weight");
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction 1

MsPermutation Construction1Scheme::encode(const RmMessage& m,
                                          const MsPermutation& sigma) const {
  check_message(m);
  check_state(sigma);

  const CellPair pair = example_wom_encode(
      static_cast<int>(to_i64(m.parts[0], "con1")), rank_union(sigma, 1, 2));

  std::vector<int> pi_inv(6, 0);
  pi_inv[pair.first - 1] = 1;
  pi_inv[pair.second - 1] = 1;

  const MultisetSpec top_spec(2, {2, 2});
  place_top(pi_inv, unrank_perm(top_spec, m.parts[1]));
  return MsPermutation(sigma.spec, std::move(pi_inv));
}

RmMessage Construction1Scheme::decode(const MsPermutation& pi) const {
  check_state(pi);
  const std::vector<int> rank1 = pi.cells_of_rank(1);
  RmMessage m;
  m.parts.push_back(example_wom_decode({rank1[0], rank1[1]}));
  const MultisetSpec top_spec(2, {2, 2});
  m.parts.push_back(rank_perm(MsPermutation(top_spec, read_top(pi.inv, 2))));
  return m;
}

// ---------------------------------------------------------------------------
// Construction 2

Construction2Scheme::Construction2Scheme(int q, int z, int r,
                                         std::shared_ptr<const StrongWomCode> wom)
    : q_(q), z_(z), r_(r), wom_(std::move(wom)),
      top_spec_(q - r, std::vector<int>(r + 1, z)) {
  if (q < 2 || z < 1 || r < 1 || r > q - 1)
    throw std::invalid_argument("con2: need q >= 2, z >= 1, 1 <= r <= q-1");
  if (r_ < q_ - 1) {
    if (!wom_) throw std::invalid_argument("con2: ingredient required for r < q-1");
    const StrongWomParams p = wom_->params();
    if (p.n != q_ * z_ || std::abs(p.w_s - double(r_ + 1) / q_) > 1e-9 ||
        std::abs(p.w_x - 1.0 / q_) > 1e-9)
      throw std::invalid_argument("con2: ingredient parameters do not match (n,(r+1)/q,1/q)");
  }
}

std::vector<BigInt> Construction2Scheme::part_sizes() const {
  std::vector<BigInt> sizes(q_ - r_ - 1, wom_ ? BigInt(wom_->params().k_w) : BigInt(1));
  sizes.push_back(count_perms(top_spec_));
  return sizes;
}

MsPermutation Construction2Scheme::encode(const RmMessage& m,
                                          const MsPermutation& sigma) const {
  check_message(m);
  check_state(sigma);

  std::vector<int> pi_inv(n(), 0);
  for (int i = 1; i <= q_ - r_ - 1; ++i) {
    const BinaryWord s = wom_round_state(sigma.inv, pi_inv, i, r_);
    if (s.weight() != (r_ + 1) * z_)
      throw std::logic_error("con2: round state off-weight");
    const BinaryWord x = wom_->encode(to_i64(m.parts[i - 1], "con2"), s);
    check_ingredient_word(x, s, z_);
    place_rank(pi_inv, x, i);
  }
  place_top(pi_inv, unrank_perm(top_spec_, m.parts.back()));
  return MsPermutation(sigma.spec, std::move(pi_inv));
}

RmMessage Construction2Scheme::decode(const MsPermutation& pi) const {
  check_state(pi);
  RmMessage m;
  for (int i = 1; i <= q_ - r_ - 1; ++i)
    m.parts.push_back(wom_->decode(theta(pi.cells_of_rank(i), n())));
  m.parts.push_back(rank_perm(MsPermutation(top_spec_, read_top(pi.inv, q_ - r_))));
  return m;
}

// ---------------------------------------------------------------------------
// Construction 3

Construction3Scheme::Construction3Scheme(int q, int z_w, int r,
                                         std::shared_ptr<const WeakWomCode> wom)
    : q_(q), z_w_(z_w), r_(r), wom_(std::move(wom)),
      top_spec_(q - r, std::vector<int>(r + 1, z_w)) {
  if (q < 2 || z_w < 1 || r < 1 || r > q - 2)
    throw std::invalid_argument("con3: need q >= 2, z_w >= 1, 1 <= r <= q-2");
  if (!wom_) throw std::invalid_argument("con3: ingredient required");
  const WeakWomParams p = wom_->params();
  if (p.n != q_ * z_w_ || std::abs(p.w_s - double(r_ + 1) / q_) > 1e-9 ||
      std::abs(p.w_x - 1.0 / q_) > 1e-9)
    throw std::invalid_argument("con3: ingredient parameters do not match (n_W,(r+1)/q,1/q)");
  a_ = a_min(p.k_a, r_);
  z_ = z_w_ + (q_ - r_ - 1) * a_;
}

std::vector<BigInt> Construction3Scheme::part_sizes() const {
  std::vector<BigInt> sizes(q_ - r_ - 1, BigInt(wom_->params().k_w));
  sizes.push_back(count_perms(top_spec_));
  return sizes;
}

bool Construction3Scheme::in_codebook(const MsPermutation& pi) const {
  if (!(pi.spec == MultisetSpec::uniform(q_, z_))) return false;
  const int n_w = q_ * z_w_;
  const int rounds = q_ - r_ - 1;
  if (!counts_match(slice(pi.inv, 0, n_w), 1, std::vector<int>(q_, z_w_)))
    return false;
  for (int i = 0; i < rounds; ++i)
    if (!counts_match(slice(pi.inv, n_w + i * (r_ + 1) * a_, (r_ + 1) * a_), 1,
                      std::vector<int>(r_ + 1, a_)))
      return false;
  const int bal_off = n_w + rounds * (r_ + 1) * a_;
  const int bal_len = rounds * rounds * a_;
  if (rounds > 0 &&
      !counts_match(slice(pi.inv, bal_off, bal_len), r_ + 2,
                    std::vector<int>(rounds, rounds * a_)))
    return false;
  return true;
}

MsPermutation Construction3Scheme::initial_state() const {
  std::vector<int> inv;
  auto sorted_run = [&inv](int first, int labels, int each) {
    for (int v = 0; v < labels; ++v)
      inv.insert(inv.end(), each, first + v);
  };
  sorted_run(1, q_, z_w_);                                    // main
  for (int i = 0; i < q_ - r_ - 1; ++i) sorted_run(1, r_ + 1, a_);  // index parts
  sorted_run(r_ + 2, q_ - r_ - 1, (q_ - r_ - 1) * a_);        // balance
  return MsPermutation(MultisetSpec::uniform(q_, z_), std::move(inv));
}

MsPermutation Construction3Scheme::encode(const RmMessage& m,
                                          const MsPermutation& sigma) const {
  check_message(m);
  check_state(sigma);

  const int n_w = q_ * z_w_;
  const int rounds = q_ - r_ - 1;
  const std::vector<int> sigma_main = slice(sigma.inv, 0, n_w);
  std::vector<int> pi_main(n_w, 0);
  std::vector<std::vector<int>> index_parts(rounds);

  for (int i = 1; i <= rounds; ++i) {
    const BinaryWord s = wom_round_state(sigma_main, pi_main, i, r_);
    if (s.weight() != (r_ + 1) * z_w_)
      throw std::logic_error("con3: round state off-weight");
    const WeakWomCodeword cw = wom_->encode(to_i64(m.parts[i - 1], "con3"), s);
    check_ingredient_word(cw.x, s, z_w_);
    place_rank(pi_main, cw.x, i);
    index_parts[i - 1] = unrank_perm(MultisetSpec::uniform(r_ + 1, a_), cw.m_a).inv;
  }
  place_top(pi_main, unrank_perm(top_spec_, m.parts.back()));

  std::vector<int> pi_inv = pi_main;
  for (const auto& part : index_parts)
    pi_inv.insert(pi_inv.end(), part.begin(), part.end());
  const int bal_off = n_w + rounds * (r_ + 1) * a_;
  pi_inv.insert(pi_inv.end(), sigma.inv.begin() + bal_off, sigma.inv.end());
  return MsPermutation(sigma.spec, std::move(pi_inv));
}

RmMessage Construction3Scheme::decode(const MsPermutation& pi) const {
  if (!in_codebook(pi))
    throw std::invalid_argument("con3: permutation outside the codebook");
  const int n_w = q_ * z_w_;
  const int rounds = q_ - r_ - 1;
  const std::vector<int> main = slice(pi.inv, 0, n_w);

  RmMessage m;
  for (int i = 1; i <= rounds; ++i) {
    BinaryWord x(n_w);
    for (int j = 0; j < n_w; ++j)
      if (main[j] == i) x.set(j, true);
    const std::vector<int> part =
        slice(pi.inv, n_w + (i - 1) * (r_ + 1) * a_, (r_ + 1) * a_);
    const BigInt m_a =
        rank_perm(MsPermutation(MultisetSpec::uniform(r_ + 1, a_), part));
    m.parts.push_back(wom_->decode(x, m_a));
  }
  m.parts.push_back(rank_perm(MsPermutation(top_spec_, read_top(main, q_ - r_))));
  return m;
}

// ---------------------------------------------------------------------------
// Construction 6

Construction6Scheme::Construction6Scheme(int q, int z_w, int r,
                                         std::shared_ptr<const ConcatWomCode> wom)
    : q_(q), z_w_(z_w), r_(r), wom_(std::move(wom)),
      top_spec_(q - r, std::vector<int>(r + 1, z_w)) {
  if (q < 2 || z_w < 1 || r < 1 || r > q - 2)
    throw std::invalid_argument("con6: need q >= 2, z_w >= 1, 1 <= r <= q-2");
  if (!wom_) throw std::invalid_argument("con6: ingredient required");
  const ConcatWomParams p = wom_->params();
  if (p.n != q_ * z_w_ || std::abs(p.w_s - double(r_ + 1) / q_) > 1e-9 ||
      std::abs(p.w_x - 1.0 / q_) > 1e-9)
    throw std::invalid_argument("con6: ingredient parameters do not match (n_W,(r+1)/q,1/q)");
  t_ = p.t();
  a_ = a_min(p.k_a_total(), r_);
  z_ = t_ * z_w_ + (q_ - r_ - 1) * a_;
}

std::vector<BigInt> Construction6Scheme::part_sizes() const {
  const ConcatWomParams p = wom_->params();
  std::vector<BigInt> sizes(q_ - r_ - 1, big_pow(p.k_b(), t_));
  sizes.push_back(big_pow(count_perms(top_spec_), t_));
  return sizes;
}

bool Construction6Scheme::in_codebook(const MsPermutation& pi) const {
  if (!(pi.spec == MultisetSpec::uniform(q_, z_))) return false;
  const int rounds = q_ - r_ - 1;
  const int n_w = q_ * z_w_;
  for (int i = 0; i < rounds; ++i)
    if (!counts_match(slice(pi.inv, i * (r_ + 1) * a_, (r_ + 1) * a_), 1,
                      std::vector<int>(r_ + 1, a_)))
      return false;
  const int bal_off = rounds * (r_ + 1) * a_;
  const int bal_len = rounds * rounds * a_;
  if (rounds > 0 &&
      !counts_match(slice(pi.inv, bal_off, bal_len), r_ + 2,
                    std::vector<int>(rounds, rounds * a_)))
    return false;
  const int main_off = bal_off + bal_len;
  for (int b = 0; b < t_; ++b)
    if (!counts_match(slice(pi.inv, main_off + b * n_w, n_w), 1,
                      std::vector<int>(q_, z_w_)))
      return false;
  return true;
}

MsPermutation Construction6Scheme::initial_state() const {
  std::vector<int> inv;
  auto sorted_run = [&inv](int first, int labels, int each) {
    for (int v = 0; v < labels; ++v)
      inv.insert(inv.end(), each, first + v);
  };
  for (int i = 0; i < q_ - r_ - 1; ++i) sorted_run(1, r_ + 1, a_);
  sorted_run(r_ + 2, q_ - r_ - 1, (q_ - r_ - 1) * a_);
  for (int b = 0; b < t_; ++b) sorted_run(1, q_, z_w_);
  return MsPermutation(MultisetSpec::uniform(q_, z_), std::move(inv));
}

MsPermutation Construction6Scheme::encode(const RmMessage& m,
                                          const MsPermutation& sigma) const {
  check_message(m);
  check_state(sigma);

  const ConcatWomParams p = wom_->params();
  const int n_w = q_ * z_w_;
  const int rounds = q_ - r_ - 1;
  const int main_off = rounds * (r_ + 1) * a_ + rounds * rounds * a_;

  std::vector<std::vector<int>> sigma_blocks(t_), pi_blocks(t_);
  for (int b = 0; b < t_; ++b) {
    sigma_blocks[b] = slice(sigma.inv, main_off + b * n_w, n_w);
    pi_blocks[b].assign(n_w, 0);
  }
  std::vector<std::vector<int>> index_parts(rounds);

  const BigInt col_alpha = BigInt(1) << (2 * p.n);  // hash indices per column
  for (int i = 1; i <= rounds; ++i) {
    WordMatrix s(p.t1, std::vector<BinaryWord>(p.t2));
    MessageMatrix mm(p.t1, std::vector<std::int64_t>(p.t2));
    BigInt digits = m.parts[i - 1] - 1;
    for (int b = 0; b < t_; ++b) {
      const int bi = b % p.t1;
      const int bj = b / p.t1;
      s[bi][bj] = wom_round_state(sigma_blocks[b], pi_blocks[b], i, r_);
      if (s[bi][bj].weight() != (r_ + 1) * z_w_)
        throw std::logic_error("con6: round state off-weight");
      mm[bi][bj] = static_cast<std::int64_t>(digits % p.k_b()) + 1;
      digits /= p.k_b();
    }
    ConcatWomCodeword cw;
    try {
      cw = wom_->encode(mm, s);
    } catch (const NoEncoding& e) {
      throw RewriteFailure(std::string("con6: ingredient failed: ") + e.what(), i,
                           e.column, e.searched);
    }
    for (int b = 0; b < t_; ++b) {
      const int bi = b % p.t1;
      const int bj = b / p.t1;
      check_ingredient_word(cw.x[bi][bj], s[bi][bj], z_w_);
      place_rank(pi_blocks[b], cw.x[bi][bj], i);
    }
    BigInt combined = 0;
    for (int j = p.t2 - 1; j >= 0; --j)
      combined = combined * col_alpha + (cw.m_a[j] - 1);
    index_parts[i - 1] =
        unrank_perm(MultisetSpec::uniform(r_ + 1, a_), combined + 1).inv;
  }

  const BigInt k_m = count_perms(top_spec_);
  BigInt top_digits = m.parts.back() - 1;
  for (int b = 0; b < t_; ++b) {
    place_top(pi_blocks[b], unrank_perm(top_spec_, top_digits % k_m + 1));
    top_digits /= k_m;
  }

  std::vector<int> pi_inv;
  for (const auto& part : index_parts)
    pi_inv.insert(pi_inv.end(), part.begin(), part.end());
  const int bal_off = rounds * (r_ + 1) * a_;
  pi_inv.insert(pi_inv.end(), sigma.inv.begin() + bal_off,
                sigma.inv.begin() + main_off);
  for (const auto& block : pi_blocks)
    pi_inv.insert(pi_inv.end(), block.begin(), block.end());
  return MsPermutation(sigma.spec, std::move(pi_inv));
}

RmMessage Construction6Scheme::decode(const MsPermutation& pi) const {
  if (!in_codebook(pi))
    throw std::invalid_argument("con6: permutation outside the codebook");
  const ConcatWomParams p = wom_->params();
  const int n_w = q_ * z_w_;
  const int rounds = q_ - r_ - 1;
  const int main_off = rounds * (r_ + 1) * a_ + rounds * rounds * a_;

  std::vector<std::vector<int>> blocks(t_);
  for (int b = 0; b < t_; ++b)
    blocks[b] = slice(pi.inv, main_off + b * n_w, n_w);

  const BigInt col_alpha = BigInt(1) << (2 * p.n);
  RmMessage m;
  for (int i = 1; i <= rounds; ++i) {
    WordMatrix x(p.t1, std::vector<BinaryWord>(p.t2, BinaryWord(n_w)));
    for (int b = 0; b < t_; ++b) {
      const int bi = b % p.t1;
      const int bj = b / p.t1;
      for (int j = 0; j < n_w; ++j)
        if (blocks[b][j] == i) x[bi][bj].set(j, true);
    }
    BigInt combined =
        rank_perm(MsPermutation(MultisetSpec::uniform(r_ + 1, a_),
                                slice(pi.inv, (i - 1) * (r_ + 1) * a_, (r_ + 1) * a_))) -
        1;
    std::vector<std::uint64_t> m_a(p.t2);
    for (int j = 0; j < p.t2; ++j) {
      m_a[j] = static_cast<std::uint64_t>(combined % col_alpha) + 1;
      combined /= col_alpha;
    }
    const MessageMatrix mm = wom_->decode(x, m_a);
    BigInt part = 0;
    for (int b = t_ - 1; b >= 0; --b)
      part = part * p.k_b() + (mm[b % p.t1][b / p.t1] - 1);
    m.parts.push_back(part + 1);
  }

  const BigInt k_m = count_perms(top_spec_);
  BigInt top = 0;
  for (int b = t_ - 1; b >= 0; --b)
    top = top * k_m + (rank_perm(MsPermutation(top_spec_, read_top(blocks[b], q_ - r_))) - 1);
  m.parts.push_back(top + 1);
  return m;
}

}  // namespace rmrw
