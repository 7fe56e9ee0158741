#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "rmrw/cell_state.hpp"
#include "rmrw/enumerative.hpp"
#include "rmrw/rng.hpp"

using namespace rmrw;

namespace {

// Independent demodulation oracle: walk the levels through an ordered
// multimap instead of sorting, assign rank ceil(position/z), detect
// boundary ties directly.
std::vector<int> demod_oracle(const std::vector<double>& levels, int q, int z,
                              bool& legal) {
  std::multimap<double, int> by_level;
  for (int j = 0; j < static_cast<int>(levels.size()); ++j)
    by_level.emplace(levels[j], j);
  std::vector<int> sorted_cells;
  std::vector<double> sorted_levels;
  for (const auto& [lv, cell] : by_level) {
    sorted_levels.push_back(lv);
    sorted_cells.push_back(cell);
  }
  legal = true;
  for (int i = 1; i < q; ++i)
    if (sorted_levels[z * i - 1] == sorted_levels[z * i]) legal = false;
  std::vector<int> inv(levels.size());
  for (int pos = 0; pos < static_cast<int>(levels.size()); ++pos)
    inv[sorted_cells[pos]] = pos / z + 1;
  return inv;
}

MsPermutation perm(int q, int z, std::vector<int> inv) {
  return MsPermutation(MultisetSpec::uniform(q, z), std::move(inv));
}

CellState random_state(Rng& rng, int n, double span) {
  std::vector<double> lv(n);
  for (double& v : lv) v = rng.unit() * span;
  return CellState(lv);
}

}  // namespace

TEST_CASE("demodulate: worked example and ties") {
  const DemodResult d = demodulate(CellState({1, 1.5, 0.3, 0.5, 2, 0.3}), 3, 2);
  REQUIRE(d.has_value());
  CHECK(d->inv == std::vector<int>{2, 3, 1, 2, 3, 1});

  CHECK_FALSE(demodulate(CellState({0, 0, 0, 0}), 2, 2).has_value());
  // Ties inside one rank are fine.
  CHECK(demodulate(CellState({1, 1, 2, 3}), 2, 2).has_value());
  CHECK_THROWS_AS(demodulate(CellState({1, 2, 3}), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(CellState({1.0, -0.5}), std::invalid_argument);

  // Hand-sorted instance, confirmed by the independent checker.
  bool legal = false;
  const std::vector<double> lv = {5, 1, 2, 7, 3, 9};
  const std::vector<int> expect = demod_oracle(lv, 3, 2, legal);
  REQUIRE(legal);
  CHECK(expect == std::vector<int>{2, 1, 1, 3, 2, 3});
  CHECK(demodulate(CellState(lv), 3, 2)->inv == expect);
}

TEST_CASE("demodulate agrees with the oracle on random states") {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    const int q = 2 + static_cast<int>(rng.below(3));
    const int z = 1 + static_cast<int>(rng.below(3));
    // Coarse grid so ties actually happen.
    std::vector<double> lv(q * z);
    for (double& v : lv) v = static_cast<double>(rng.below(4));
    bool legal = false;
    const std::vector<int> expect = demod_oracle(lv, q, z, legal);
    const DemodResult got = demodulate(CellState(lv), q, z);
    CHECK(got.has_value() == legal);
    if (got && legal) CHECK(got->inv == expect);
  }
}

TEST_CASE("gamma") {
  const CellState x({2.7, 4, 5, 5, 6, 6});
  const MsPermutation pi = *demodulate(x, 3, 2);
  CHECK(gamma(x, pi, 1) == 4.0);
  CHECK(gamma(x, pi, 2) == 5.0);
  CHECK(gamma(x, pi, 3) == 6.0);

  const CellState y({1, 1.5, 0.3, 0.5, 2, 0.3});
  CHECK(gamma(y, *demodulate(y, 3, 2), 3) == 2.0);

  // z = 1: gamma is the unique cell's level.
  const CellState z1({3, 1, 2});
  const MsPermutation p1 = *demodulate(z1, 3, 1);
  CHECK(gamma(z1, p1, 3) == 3.0);
  CHECK_THROWS_AS(gamma(z1, p1, 4), std::out_of_range);
}

TEST_CASE("modulate: worked example and base cases") {
  const CellState s({2.7, 4, 1.5, 2.5, 3.8, 0.5});
  const CellState x = modulate(perm(3, 2, {1, 1, 2, 2, 3, 3}), s);
  CHECK(x.levels == std::vector<double>{2.7, 4, 5, 5, 6, 6});

  CHECK(modulate(perm(2, 1, {1, 2}), CellState({0, 0})).levels ==
        std::vector<double>{0, 1});

  // Rewriting the own permutation of a gap>=1 state changes nothing.
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> lv(6);
    for (int j = 0; j < 6; ++j) lv[j] = (j / 2) * 2.0 + rng.unit();  // gaps >= 1
    const CellState st(lv);
    const MsPermutation pi = *demodulate(st, 3, 2);
    CHECK(modulate(pi, st).levels == st.levels);
  }
}

TEST_CASE("modulate invariants: roundtrip, monotonicity, rank gaps") {
  // Exhaustive over integer states for q=2,z=2 and a grid slice for q=3,z=2.
  for (int q : {2, 3}) {
    const int z = 2, n = q * z;
    const double top = q == 2 ? 4.0 : 2.0;
    const MultisetSpec spec = MultisetSpec::uniform(q, z);
    const BigInt total = count_perms(spec);
    std::vector<double> lv(n, 0.0);
    for (;;) {
      const CellState s(lv);
      for (BigInt k = 1; k <= total; ++k) {
        const MsPermutation pi = unrank_perm(spec, k);
        const CellState x = modulate(pi, s);
        for (int j = 0; j < n; ++j) CHECK(x.levels[j] >= s.levels[j]);
        const DemodResult back = demodulate(x, q, z);
        REQUIRE(back.has_value());
        CHECK(back->inv == pi.inv);
        for (int i = 1; i < q; ++i)
          CHECK(gamma(x, pi, i + 1) - gamma(x, pi, i) >= 1.0);
      }
      int pos = 0;
      while (pos < n && lv[pos] == top) lv[pos++] = 0.0;
      if (pos == n) break;
      lv[pos] += 1.0;
    }
  }

  // Randomized real-valued states.
  Rng rng(31);
  const MultisetSpec spec = MultisetSpec::uniform(4, 2);
  for (int t = 0; t < 300; ++t) {
    const CellState s = random_state(rng, 8, 5.0);
    const MsPermutation pi = unrank_perm(spec, rng.below_big(count_perms(spec)) + 1);
    const CellState x = modulate(pi, s);
    REQUIRE(demodulate(x, 4, 2).has_value());
    CHECK(demodulate(x, 4, 2)->inv == pi.inv);
    for (int j = 0; j < 8; ++j) CHECK(x.levels[j] >= s.levels[j]);
  }
}

TEST_CASE("modulate is minimal over brute-forced alternatives") {
  // Every x' >= s that demodulates to pi with rank gaps >= 1 has a top level
  // at least as high as the modulation output. Integer grids keep the brute
  // force finite.
  const int q = 3, z = 1, n = 3;
  const MultisetSpec spec = MultisetSpec::uniform(q, z);
  std::vector<double> lv(n, 0.0);
  for (;;) {
    const CellState s(lv);
    for (BigInt k = 1; k <= count_perms(spec); ++k) {
      const MsPermutation pi = unrank_perm(spec, k);
      const CellState x = modulate(pi, s);
      const double best = gamma(x, pi, q);
      double cap = 0.0;
      for (double v : lv) cap = std::max(cap, v);
      cap += q;
      std::vector<double> alt(lv);
      for (;;) {
        const CellState xa(alt);
        const DemodResult d = demodulate(xa, q, z);
        if (d && d->inv == pi.inv) {
          bool gaps = true;
          for (int i = 1; i < q; ++i)
            gaps = gaps && gamma(xa, *d, i + 1) - gamma(xa, *d, i) >= 1.0;
          if (gaps) CHECK(gamma(xa, *d, q) >= best);
        }
        int pos = 0;
        while (pos < n && alt[pos] >= cap) alt[pos] = lv[pos], ++pos;
        if (pos == n) break;
        alt[pos] += 1.0;
      }
    }
    int pos = 0;
    while (pos < n && lv[pos] == 2.0) lv[pos++] = 0.0;
    if (pos == n) break;
    lv[pos] += 1.0;
  }
}

TEST_CASE("cost_states") {
  CHECK(cost_states(CellState({2.7, 4, 1.5, 2.5, 3.8, 0.5}),
                    perm(3, 2, {1, 1, 2, 2, 3, 3})) == 2.0);

  // pi = demod(s) with gaps >= 1: no increase.
  const CellState s({0, 0, 1, 1, 2, 2});
  CHECK(cost_states(s, *demodulate(s, 3, 2)) == 0.0);

  CHECK_THROWS_AS(cost_states(CellState({0, 0, 0, 0, 0, 0}),
                              perm(3, 2, {1, 1, 2, 2, 3, 3})),
                  std::invalid_argument);
}

TEST_CASE("cost_perms: examples and exhaustive sign property") {
  CHECK(cost_perms(perm(3, 2, {1, 2, 1, 3, 2, 3}), perm(3, 2, {2, 1, 3, 2, 1, 3})) == 1);
  const MsPermutation id = perm(3, 2, {1, 1, 2, 2, 3, 3});
  CHECK(cost_perms(id, id) == 0);
  CHECK(cost_perms(perm(3, 2, {3, 3, 2, 2, 1, 1}), perm(3, 2, {1, 1, 2, 2, 3, 3})) == 2);
  CHECK_THROWS_AS(cost_perms(id, perm(3, 1, {1, 2, 3})), std::invalid_argument);

  // Over all 90x90 pairs: cost >= 0, zero iff equal, max equals q-1.
  const MultisetSpec spec = MultisetSpec::uniform(3, 2);
  int max_seen = 0;
  for (BigInt a = 1; a <= 90; ++a) {
    const MsPermutation pa = unrank_perm(spec, a);
    for (BigInt b = 1; b <= 90; ++b) {
      const MsPermutation pb = unrank_perm(spec, b);
      const int c = cost_perms(pa, pb);
      CHECK(c >= 0);
      CHECK((c == 0) == (pa.inv == pb.inv));
      max_seen = std::max(max_seen, c);
    }
  }
  CHECK(max_seen == 2);
}

TEST_CASE("prop1_check: equality when tight, inequality otherwise") {
  const MultisetSpec spec = MultisetSpec::uniform(3, 2);

  // Tightly packed state: equality against every target.
  const CellState tight({0, 0, 1, 1, 2, 2});
  for (BigInt k = 1; k <= 90; ++k) {
    const Prop1Report rep = prop1_check(tight, unrank_perm(spec, k));
    CHECK(rep.tight);
    CHECK(rep.holds);
    CHECK(rep.lhs == rep.rhs);
  }

  // Loose state: inequality holds, sometimes strictly.
  const CellState loose({0, 0, 2, 2, 4, 4});
  bool strict_seen = false;
  for (BigInt k = 1; k <= 90; ++k) {
    const Prop1Report rep = prop1_check(loose, unrank_perm(spec, k));
    CHECK_FALSE(rep.tight);
    CHECK(rep.holds);
    strict_seen = strict_seen || rep.lhs < rep.rhs;
  }
  CHECK(strict_seen);

  // pi = demod(s): both sides zero.
  const Prop1Report self = prop1_check(tight, *demodulate(tight, 3, 2));
  CHECK(self.lhs == 0.0);
  CHECK(self.rhs == 0);

  // Sub-unit rank gaps violate the precondition.
  CHECK_THROWS_AS(prop1_check(CellState({0, 0, 0.5, 0.5, 1.5, 1.5}),
                              perm(3, 2, {1, 1, 2, 2, 3, 3})),
                  std::invalid_argument);
}
