#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "reference.hpp"
#include "stabur/errors.hpp"
#include "stabur/oracle.hpp"
#include "stabur/random.hpp"
#include "stabur/rng.hpp"
#include "stabur/stabgroup.hpp"

using namespace stabur;

namespace {

StabilizerGroup group(std::initializer_list<const char*> gens) {
  std::vector<PauliOperator> ops;
  for (const char* g : gens) ops.push_back(parse_pauli(g));
  return validate_group(std::move(ops));
}

}  // namespace

TEST(DensePauli, Examples) {
  ref::Mat x(2, 2);
  x << 0, 1, 1, 0;
  EXPECT_EQ(dense_pauli(parse_pauli("+X")), x);
  ref::Mat y(2, 2);
  y << 0, ref::cd(0, -1), ref::cd(0, 1), 0;
  EXPECT_EQ(dense_pauli(parse_pauli("+Y")), y);
  ref::Mat zz = ref::Mat::Zero(4, 4);
  zz.diagonal() << -1, 1, 1, -1;
  EXPECT_EQ(dense_pauli(parse_pauli("-ZZ")), zz);
  EXPECT_THROW(dense_pauli(PauliOperator(11)), ResourceError);
}

TEST(DensePauli, HomomorphismExhaustiveOnGenerators) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<PauliOperator> gens;
    for (int q = 0; q < n; ++q)
      for (char c : {'X', 'Y', 'Z'}) gens.push_back(PauliOperator::single(n, q, c));
    gens.push_back(PauliOperator(n, 0, 0, 1));
    for (const auto& a : gens)
      for (const auto& b : gens) EXPECT_EQ(dense_pauli(a * b), dense_pauli(a) * dense_pauli(b));
  }
}

TEST(StabilizerStateDense, Examples) {
  const auto zero = stabilizer_state_dense(group({"+Z"}));
  EXPECT_NEAR(std::abs(zero.amplitudes()(0)), 1.0, 1e-12);

  const auto bell = stabilizer_state_dense(group({"+XX", "+ZZ"}));
  ref::Vec expected(4);
  expected << 1, 0, 0, 1;
  expected /= std::sqrt(2.0);
  EXPECT_NEAR(fidelity_amplitude(bell.amplitudes(), expected), 1.0, 1e-12);
}

TEST(StabilizerStateDense, GeneratorsHaveEigenvalueOne) {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const auto g = random_stabilizer_group(n, rng);
    const auto psi = stabilizer_state_dense(g);
    for (const auto& gen : g.generators()) {
      const ref::Vec image = ref::pauli_matrix(gen.str()) * psi.amplitudes();
      EXPECT_LT((image - psi.amplitudes()).norm(), 1e-10);
    }
  }
}

TEST(DenseState, Validation) {
  ref::Vec v(2);
  v << 1, 1;
  EXPECT_THROW(DenseState::pure(v), ValidationError);
  EXPECT_THROW(DenseState::pure(ref::Vec::Ones(3) / std::sqrt(3.0)), ValidationError);
  ref::Mat rho = ref::Mat::Identity(2, 2) / 2.0;
  EXPECT_NO_THROW(DenseState::mixed(rho));
  ref::Mat bad = rho;
  bad(0, 1) = 0.3;
  EXPECT_THROW(DenseState::mixed(bad), ValidationError);
  ref::Mat negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  EXPECT_THROW(DenseState::mixed(negative), ValidationError);
}

TEST(MeasureDistribution, Examples) {
  const auto plus = graph_state_dense(Graph(1));
  const auto basis = stabilizer_basis_dense(group({"+Z"}));
  const auto p = measure_distribution(basis, plus);
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[1], 0.5, 1e-12);

  const auto own = measure_distribution(stabilizer_basis_dense(group({"+X"})), plus);
  EXPECT_NEAR(own[0], 1.0, 1e-12);

  const auto fig_a = stabilizer_basis_dense(graph_group(Graph::complete(4)));
  const auto fig_b = graph_state_dense(Graph::path(4));
  const auto dist = measure_distribution(fig_a, fig_b);
  double largest = 0;
  for (double v : dist.probs()) {
    EXPECT_NEAR(v * 16, std::round(v * 16), 1e-10);
    largest = std::max(largest, v);
  }
  EXPECT_NEAR(largest, 1.0 / 16, 1e-12);  // r^2 with r = 1/4

  std::vector<ref::Vec> skewed{ref::Vec::Unit(2, 0), ref::Vec::Ones(2) / std::sqrt(2.0)};
  EXPECT_THROW(measure_distribution(skewed, plus), ValidationError);
}

TEST(MeasureDistribution, MatchesStabilizerExpectations) {
  SplitMix64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const auto [s, t] = random_group_pair(n, rng);
    const auto basis = stabilizer_basis_dense(t);
    const auto state = stabilizer_state_dense(s);
    const auto dist = measure_distribution(basis, state);
    // p(label) = 2^{-n} sum_k sign_label(t_k) <t_k>_s
    for (std::uint64_t label = 0; label < t.size(); ++label) {
      const auto flipped = basis_state_group(t, BasisLabel{label});
      double total = 0;
      for (std::uint64_t m = 0; m < flipped.size(); ++m) total += stabilizer_expectation(s, flipped.element(m));
      EXPECT_NEAR(dist[label], total / static_cast<double>(flipped.size()), 1e-12);
    }
  }
}

TEST(RandomPureState, NormalizedAndSeeded) {
  SplitMix64 a(5);
  SplitMix64 b(5);
  const auto s1 = random_pure_state(3, a);
  const auto s2 = random_pure_state(3, b);
  EXPECT_EQ(s1.amplitudes(), s2.amplitudes());
  EXPECT_NEAR(s1.amplitudes().norm(), 1.0, 1e-12);
}

TEST(Rng, SplitMixReferenceSequence) {
  // First outputs of splitmix64 seeded with 0, from the published reference.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
  SplitMix64 bounded(9);
  for (int k = 0; k < 1000; ++k) EXPECT_LT(bounded.below(7), 7u);
  for (int k = 0; k < 1000; ++k) {
    const double u = bounded.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(MinimizeEntropySum, SingleObservableReachesZero) {
  const std::vector<PauliOperator> obs{parse_pauli("Z")};
  SearchOptions options;
  options.restarts = 4;
  const auto result = minimize_entropy_sum(obs, EntropySpec::shannon(), options);
  EXPECT_NEAR(result.min_value, 0.0, 1e-6);
}

TEST(MinimizeEntropySum, XYZAttainsTwoThirds) {
  const std::vector<PauliOperator> obs{parse_pauli("X"), parse_pauli("Y"), parse_pauli("Z")};
  SearchOptions options;
  options.restarts = 20;
  const auto result = minimize_entropy_sum(obs, EntropySpec::shannon(), options);
  EXPECT_NEAR(result.min_value, 2.0 / 3.0, 1e-6);
  EXPECT_GE(result.min_value, 2.0 / 3.0 - 1e-9);
}

TEST(MinimizeEntropySum, TwoBasesAttainHalf) {
  const std::vector<std::vector<ComplexVector>> bases{stabilizer_basis_dense(group({"+X"})),
                                                     stabilizer_basis_dense(group({"+Z"}))};
  SearchOptions options;
  options.restarts = 10;
  const auto result = minimize_entropy_sum(bases, EntropySpec::shannon(), options);
  EXPECT_NEAR(result.min_value, 0.5, 1e-6);
}

TEST(MinimizeEntropySum, DeterministicAcrossJobCounts) {
  const std::vector<PauliOperator> obs{parse_pauli("XX"), parse_pauli("ZI")};
  SearchOptions serial;
  serial.restarts = 6;
  SearchOptions parallel = serial;
  parallel.jobs = 3;
  const auto a = minimize_entropy_sum(obs, EntropySpec::tsallis(2), serial);
  const auto b = minimize_entropy_sum(obs, EntropySpec::tsallis(2), parallel);
  EXPECT_EQ(a.min_value, b.min_value);
  EXPECT_EQ(a.argmin.amplitudes(), b.argmin.amplitudes());
}
