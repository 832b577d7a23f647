#include <gtest/gtest.h>

#include <vector>

#include "stabur/dyadic.hpp"
#include "stabur/gf2.hpp"
#include "stabur/random.hpp"
#include "stabur/rng.hpp"

using namespace stabur;

TEST(Dyadic, Normalizes) {
  EXPECT_EQ(Dyadic(4, 3), Dyadic(1, 1));
  EXPECT_EQ(Dyadic(0, 7), Dyadic());
  EXPECT_EQ(Dyadic(3, -2), Dyadic(12, 0));
  EXPECT_EQ(Dyadic(6, 2).str(), "3/2^1");
  EXPECT_EQ(Dyadic(5).str(), "5");
}

TEST(Dyadic, Arithmetic) {
  const Dyadic half(1, 1);
  const Dyadic quarter(1, 2);
  EXPECT_EQ(half + quarter, Dyadic(3, 2));
  EXPECT_EQ(half - quarter, quarter);
  EXPECT_EQ(half * half, quarter);
  EXPECT_EQ(Dyadic(1).half(), half);
  EXPECT_EQ((-half).abs(), half);
  EXPECT_LT(quarter, half);
  EXPECT_EQ(Dyadic::pow2(-3), Dyadic(1, 3));
  EXPECT_EQ(Dyadic::pow2(4), Dyadic(16));
  EXPECT_DOUBLE_EQ(Dyadic(-3, 3).to_double(), -0.375);
  EXPECT_EQ(Dyadic(-3, 3).sign(), -1);
}

namespace {

// Rank by straightforward row reduction of 128-bit rows stored as pairs.
int naive_rank(std::vector<SymplecticKey> rows) {
  int rank = 0;
  for (int bit = 0; bit < 128; ++bit) {
    auto has = [bit](const SymplecticKey& k) {
      return bit < 64 ? ((k.x >> bit) & 1) : ((k.z >> (bit - 64)) & 1);
    };
    std::size_t pivot = rank;
    while (pivot < rows.size() && !has(rows[pivot])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && has(rows[r])) {
        rows[r].x ^= rows[rank].x;
        rows[r].z ^= rows[rank].z;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Gf2, RankMatchesNaive) {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const int m = 1 + static_cast<int>(rng.below(2 * n + 2));
    std::vector<SymplecticKey> rows;
    for (int k = 0; k < m; ++k) {
      // sparse rows so that dependencies are common
      SymplecticKey key{rng.next() & rng.next() & low_mask(n), rng.next() & rng.next() & low_mask(n)};
      if (rng.below(4) == 0 && !rows.empty()) {
        key = rows[rng.below(rows.size())];
      }
      rows.push_back(key);
    }
    SymplecticSolver solver(rows);
    EXPECT_EQ(solver.rank(), naive_rank(rows));
    EXPECT_EQ(static_cast<int>(solver.kernel().size()), m - solver.rank());
    for (const auto& combo : solver.kernel()) {
      SymplecticKey sum;
      for (int k = 0; k < m; ++k) {
        if (combo.test(k)) {
          sum.x ^= rows[k].x;
          sum.z ^= rows[k].z;
        }
      }
      EXPECT_TRUE(sum.is_zero());
      EXPECT_TRUE(combo.any());
    }
  }
}

TEST(Gf2, ExpressReconstructsVector) {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    std::vector<SymplecticKey> rows;
    for (int k = 0; k < n; ++k) rows.push_back({rng.next() & low_mask(n), rng.next() & low_mask(n)});
    SymplecticSolver solver(rows);
    const SymplecticKey target{rng.next() & low_mask(n), rng.next() & low_mask(n)};
    const auto combo = solver.express(target);
    if (!combo) {
      std::vector<SymplecticKey> extended = rows;
      extended.push_back(target);
      EXPECT_EQ(naive_rank(extended), solver.rank() + 1);
      continue;
    }
    SymplecticKey sum;
    for (int k = 0; k < n; ++k) {
      if (combo->test(k)) {
        sum.x ^= rows[k].x;
        sum.z ^= rows[k].z;
      }
    }
    EXPECT_EQ(sum, target);
  }
}
