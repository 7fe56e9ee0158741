#include "rmrw/hash_wom.hpp"

#include <algorithm>
#include <cmath>

#include "rmrw/limits.hpp"

namespace rmrw {

ConcatWomParams concat_params_from_recipe(double eps, double c, double w_s,
                                          double w_x, int t2) {
  if (!(eps > 0.0 && eps < 0.5)) throw std::domain_error("recipe: eps in (0, 1/2)");
  ConcatWomParams p;
  p.n = static_cast<int>(std::ceil(c / eps * std::log2(1.0 / eps)));
  const double cw = capacity_wom(w_s, w_x);
  const int message_bits = static_cast<int>(p.n * (cw - 2.0 * eps / 3.0));
  p.l = static_cast<int>(std::ceil(eps * p.n / 3.0));
  p.k = message_bits + p.l;
  p.t1 = static_cast<int>(std::pow(1.0 / eps, c / 12.0) - 1.0);
  p.t2 = t2;
  p.w_s = w_s;
  p.w_x = w_x;
  return p;
}

HashWomCode::HashWomCode(ConcatWomParams p) : p_(p) {
  if (p_.n < 2 || p_.n > 16)
    throw std::invalid_argument("HashWomCode: n must be in [2, 16] (field degree)");
  if (p_.l < 0 || p_.l > p_.k || p_.k > p_.n)
    throw std::invalid_argument("HashWomCode: need 0 <= l <= k <= n");
  if (p_.t1 < 1 || p_.t2 < 1)
    throw std::invalid_argument("HashWomCode: t1, t2 must be >= 1");
  if (!(p_.w_x > 0.0 && p_.w_x <= p_.w_s && p_.w_s <= 1.0))
    throw std::invalid_argument("HashWomCode: need 0 < w_x <= w_s <= 1");
}

std::pair<Gf2nElement, Gf2nElement> HashWomCode::hash_of_index(std::uint64_t m_a) const {
  if (m_a < 1 || m_a > p_.k_a())
    throw std::out_of_range("HashWomCode: hash index outside [K_a]");
  const std::uint64_t idx = m_a - 1;
  const std::uint32_t a = static_cast<std::uint32_t>(idx >> p_.n);
  const std::uint32_t b = static_cast<std::uint32_t>(idx & ((1u << p_.n) - 1));
  return {Gf2nElement(a, p_.n), Gf2nElement(b, p_.n)};
}

namespace {

// All weight-w words covered by the state, ascending as bit strings.
std::vector<BinaryWord> eligible_codewords(const BinaryWord& s, int w) {
  const std::vector<int> sup = s.support();
  const int k = static_cast<int>(sup.size());
  std::vector<BinaryWord> out;
  if (w > k) return out;
  std::vector<int> pick(w);
  // Enumerate w-combinations of the support.
  for (int i = 0; i < w; ++i) pick[i] = i;
  for (;;) {
    BinaryWord x(s.size());
    for (int i : pick) x.set(sup[i] - 1, true);
    out.push_back(std::move(x));
    int j = w - 1;
    while (j >= 0 && pick[j] == k - w + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int i = j + 1; i < w; ++i) pick[i] = pick[i - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ConcatWomCodeword HashWomCode::encode(const MessageMatrix& m, const WordMatrix& s) const {
  const auto shape_ok = [&](const auto& mat) {
    if (static_cast<int>(mat.size()) != p_.t1) return false;
    for (const auto& row : mat)
      if (static_cast<int>(row.size()) != p_.t2) return false;
    return true;
  };
  if (!shape_ok(m) || !shape_ok(s))
    throw std::invalid_argument("HashWomCode::encode: shape mismatch");
  for (const auto& row : s)
    for (const BinaryWord& st : row)
      if (st.size() != p_.n || st.weight() != p_.state_weight())
        throw std::invalid_argument("HashWomCode::encode: state block off-weight");
  for (const auto& row : m)
    for (std::int64_t v : row)
      if (v < 1 || v > p_.k_b())
        throw std::out_of_range("HashWomCode::encode: message outside [K_b]");

  const HashParams hp{p_.n, p_.k, p_.l};
  ConcatWomCodeword out;
  out.x.assign(p_.t1, std::vector<BinaryWord>(p_.t2));
  out.m_a.assign(p_.t2, 0);

  for (int j = 0; j < p_.t2; ++j) {
    std::vector<std::vector<BinaryWord>> eligible(p_.t1);
    for (int i = 0; i < p_.t1; ++i)
      eligible[i] = eligible_codewords(s[i][j], p_.code_weight());

    bool found = false;
    for (std::uint64_t idx = 1; idx <= p_.k_a() && !found; ++idx) {
      const auto [a, b] = hash_of_index(idx);
      std::vector<BinaryWord> chosen(p_.t1);
      bool all_blocks = true;
      for (int i = 0; i < p_.t1 && all_blocks; ++i) {
        const std::uint32_t target = static_cast<std::uint32_t>(m[i][j] - 1);
        all_blocks = false;
        for (const BinaryWord& x : eligible[i]) {
          if (hash_eval(a, b, hp, x) == target) {
            chosen[i] = x;
            all_blocks = true;
            break;
          }
        }
      }
      if (all_blocks) {
        for (int i = 0; i < p_.t1; ++i) out.x[i][j] = chosen[i];
        out.m_a[j] = idx;
        found = true;
      }
    }
    if (!found)
      throw NoEncoding("hash WOM: no hash index encodes column", j + 1, p_.k_a());
  }
  return out;
}

MessageMatrix HashWomCode::decode(const WordMatrix& x,
                                  const std::vector<std::uint64_t>& m_a) const {
  if (static_cast<int>(x.size()) != p_.t1 ||
      static_cast<int>(m_a.size()) != p_.t2)
    throw std::invalid_argument("HashWomCode::decode: shape mismatch");
  for (const auto& row : x)
    if (static_cast<int>(row.size()) != p_.t2)
      throw std::invalid_argument("HashWomCode::decode: shape mismatch");

  const HashParams hp{p_.n, p_.k, p_.l};
  MessageMatrix m(p_.t1, std::vector<std::int64_t>(p_.t2));
  for (int j = 0; j < p_.t2; ++j) {
    const auto [a, b] = hash_of_index(m_a[j]);
    for (int i = 0; i < p_.t1; ++i)
      m[i][j] = static_cast<std::int64_t>(hash_eval(a, b, hp, x[i][j])) + 1;
  }
  return m;
}

}  // namespace rmrw
