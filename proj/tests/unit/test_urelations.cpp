#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "reference.hpp"
#include "stabur/errors.hpp"
#include "stabur/graphstate.hpp"
#include "stabur/oracle.hpp"
#include "stabur/random.hpp"
#include "stabur/rng.hpp"
#include "stabur/stabgroup.hpp"
#include "stabur/urelations.hpp"

using namespace stabur;

namespace {

StabilizerGroup group(std::initializer_list<const char*> gens) {
  std::vector<PauliOperator> ops;
  for (const char* g : gens) ops.push_back(parse_pauli(g));
  return validate_group(std::move(ops));
}

ObservableSet observables(std::initializer_list<const char*> ops) {
  std::vector<PauliOperator> out;
  for (const char* o : ops) out.push_back(parse_pauli(o));
  return ObservableSet(std::move(out));
}

DenseState ket(std::initializer_list<std::complex<double>> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index k = 0;
  for (auto a : amps) v(k++) = a;
  return DenseState::pure(v.normalized());
}

DenseState maximally_mixed(int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  return DenseState::mixed(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

const auto kFig1a = {"+XZZZ", "+ZXZZ", "+ZZXZ", "+ZZZX"};
const auto kFig1b = {"+XZII", "+ZXZI", "+IZXZ", "+IIZX"};

}  // namespace

TEST(ObservableSet, Validation) {
  EXPECT_THROW(observables({"+iX"}), ValidationError);
  EXPECT_THROW(observables({"-II"}), ValidationError);
  EXPECT_THROW(observables({"X", "XX"}), DimensionError);
  EXPECT_TRUE(observables({"X", "Y", "Z"}).pairwise_anticommuting());
  EXPECT_FALSE(observables({"XX", "ZZ"}).pairwise_anticommuting());
  EXPECT_THROW(observables({"XX", "ZZ"}).require_anticommuting("ctx"), HypothesisError);
}

TEST(EntropyOfObservable, Examples) {
  const auto z = parse_pauli("Z");
  EXPECT_NEAR(entropy_of_observable(z, ket({1, 0}), EntropySpec::shannon()), 0.0, 1e-12);
  EXPECT_NEAR(entropy_of_observable(z, ket({1, 1}), EntropySpec::shannon()), 1.0, 1e-12);
  EXPECT_NEAR(entropy_of_observable(parse_pauli("X"), maximally_mixed(1), EntropySpec::tsallis(2)), 0.5,
              1e-12);
  EXPECT_THROW(entropy_of_observable(parse_pauli("XX"), ket({1, 0}), EntropySpec::shannon()),
               DimensionError);
  EXPECT_EQ(entropy_of_observable(parse_pauli("Z"), group({"+X"}), EntropySpec::shannon()), 1.0);
  EXPECT_EQ(entropy_of_observable(parse_pauli("-X"), group({"+X"}), EntropySpec::shannon()), 0.0);
}

TEST(MuBoundGeneral, Examples) {
  const auto comp = stabilizer_basis_dense(group({"+Z"}));
  const auto had = stabilizer_basis_dense(group({"+X"}));
  EXPECT_NEAR(mu_bound_general(comp, comp), 0.0, 1e-12);
  EXPECT_NEAR(mu_bound_general(comp, had), 0.5, 1e-12);
  // Fourier basis is unbiased to the computational basis in any dimension.
  for (int n = 1; n <= 3; ++n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    std::vector<ComplexVector> standard;
    std::vector<ComplexVector> fourier;
    for (Eigen::Index j = 0; j < d; ++j) {
      standard.push_back(ComplexVector::Unit(d, j));
      ComplexVector f(d);
      for (Eigen::Index k = 0; k < d; ++k)
        f(k) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), 2 * M_PI * j * k / static_cast<double>(d));
      fourier.push_back(f);
    }
    EXPECT_NEAR(mu_bound_general(standard, fourier), 0.5 * n, 1e-12);
  }
}

TEST(CheckTightness, Examples) {
  const auto same = check_tightness(group({"+Z"}), group({"+Z"}));
  EXPECT_EQ(same.bound, 0.0);
  EXPECT_TRUE(same.tight);

  const auto xz = check_tightness(group({"+X"}), group({"+Z"}));
  EXPECT_DOUBLE_EQ(xz.bound, 0.5);
  EXPECT_TRUE(xz.tight);
  EXPECT_NEAR(xz.achieved, 0.5, 1e-12);
  EXPECT_EQ(xz.basis_values.size(), 4u);
  EXPECT_EQ(xz.witness, "s-basis label 0");

  const auto fig = check_tightness(group(kFig1a), group(kFig1b));
  EXPECT_DOUBLE_EQ(fig.bound, 2.0);
  EXPECT_TRUE(fig.tight);
  EXPECT_TRUE(fig.all_basis_states_attain);
  EXPECT_EQ(fig.basis_values.size(), 32u);
}

TEST(CheckTightness, MaassenUffinkHoldsForRandomStates) {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const auto [s, t] = random_group_pair(n, rng);
    const double bound = mu_bound_stabilizer(s, t);
    const auto a = stabilizer_basis_dense(s);
    const auto b = stabilizer_basis_dense(t);
    for (int k = 0; k < 200; ++k) {
      const auto psi = random_pure_state(n, rng);
      const double avg = 0.5 * (entropy(EntropySpec::shannon(), measure_distribution(a, psi)) +
                                entropy(EntropySpec::shannon(), measure_distribution(b, psi)));
      EXPECT_GE(avg, bound - 1e-9);
    }
  }
}

TEST(MetaCheck, Examples) {
  const auto xyz = observables({"X", "Y", "Z"});
  const auto zero = meta_check(xyz, ket({1, 0}));
  EXPECT_NEAR(zero.sum_squares, 1.0, 1e-12);
  EXPECT_TRUE(zero.holds);
  EXPECT_NEAR(zero.variance_sum, 2.0, 1e-12);
  EXPECT_NEAR(meta_check(xyz, maximally_mixed(1)).sum_squares, 0.0, 1e-12);
  EXPECT_NEAR(meta_check(observables({"X", "Y"}), ket({1, 1})).sum_squares, 1.0, 1e-12);
  EXPECT_THROW(meta_check(observables({"X", "X"}), ket({1, 0})), HypothesisError);
}

TEST(StateFromExpectations, Examples) {
  const auto xyz = observables({"X", "Y", "Z"});
  const std::vector<double> zeros{0, 0, 0};
  const auto mixed = state_from_expectations(xyz, zeros);
  EXPECT_LT((mixed.density() - ComplexMatrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff(), 1e-15);

  const std::vector<double> plus{1, 0, 0};
  const auto rho = state_from_expectations(xyz, plus);
  ref::Vec v(2);
  v << 1, 1;
  v /= std::sqrt(2.0);
  EXPECT_LT((rho.density() - v * v.adjoint()).cwiseAbs().maxCoeff(), 1e-15);

  const auto pair = observables({"XX", "YX"});
  const std::vector<double> targets{0.6, 0.8};
  const auto state = state_from_expectations(pair, targets);
  EXPECT_NEAR((state.density() * ref::pauli_matrix("XX")).trace().real(), 0.6, 1e-12);
  EXPECT_NEAR((state.density() * ref::pauli_matrix("YX")).trace().real(), 0.8, 1e-12);
  EXPECT_GE(min_eigenvalue(state.density()), -1e-10);

  const std::vector<double> too_big{0.8, 0.8};
  EXPECT_THROW(state_from_expectations(pair, too_big), HypothesisError);
  EXPECT_THROW(state_from_expectations(observables({"XX", "ZZ"}), targets), HypothesisError);
}

TEST(AnticommutingBound, Examples) {
  EXPECT_DOUBLE_EQ(anticommuting_bound(3, EntropySpec::shannon()), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(anticommuting_bound(2, EntropySpec::tsallis(2)), 0.25);
  EXPECT_EQ(anticommuting_bound(1, EntropySpec::tsallis(8)), 0.0);
  EXPECT_THROW(anticommuting_bound(2, EntropySpec::tsallis(2.5)), HypothesisError);
  EXPECT_THROW(anticommuting_bound(2, EntropySpec::min()), HypothesisError);
}

TEST(AnticommutingBound, EigenstatesAttainIt) {
  // {X,Y,Z}: |0> gives entropies (1, 1, 0)
  const auto xyz = observables({"X", "Y", "Z"});
  double total = 0;
  for (const auto& a : xyz.observables()) total += entropy_of_observable(a, ket({1, 0}), EntropySpec::shannon());
  EXPECT_NEAR(total / 3, 2.0 / 3.0, 1e-12);
  // anticommuting pair at n=2, eigenstate of the first
  const auto pair = observables({"XZ", "ZI"});
  const auto eigen = stabilizer_state_dense(group({"+XZ", "+IZ"}));
  double pair_total = 0;
  for (const auto& a : pair.observables()) pair_total += entropy_of_observable(a, eigen, EntropySpec::shannon());
  EXPECT_NEAR(pair_total / 2, 0.5, 1e-12);
}

TEST(AnticommutationCount, Examples) {
  EXPECT_EQ(anticommutation_count(group({"+X"}), parse_pauli("Z")), 1u);
  EXPECT_EQ(anticommutation_count(group(kFig1a), parse_pauli("+ZIII")), 8u);
  EXPECT_EQ(anticommutation_count(group(kFig1a), parse_pauli("+XZZZ")), 0u);
  int exhaustive = 0;
  for (const auto& e : enumerate_elements(group(kFig1a))) exhaustive += !commutes(e, parse_pauli("+ZIII"));
  EXPECT_EQ(exhaustive, 8);
}

TEST(SymmetricDifference, Examples) {
  const auto xz = symmetric_difference(group({"+X"}), group({"+Z"}));
  EXPECT_EQ(xz.size(), 2u);
  EXPECT_EQ(xz.s_count, 1u);
  EXPECT_EQ(xz.observables[0].str(), "+X");
  EXPECT_EQ(xz.observables[1].str(), "+Z");

  const auto fig = symmetric_difference(group(kFig1a), group(kFig1b));
  EXPECT_GE(fig.size(), 16u);
  EXPECT_LE(fig.size(), 30u);
  // elements of either group missing from the other, by enumeration
  std::set<std::pair<std::uint64_t, std::uint64_t>> a;
  std::set<std::pair<std::uint64_t, std::uint64_t>> b;
  for (const auto& e : enumerate_elements(group(kFig1a))) a.insert({e.x(), e.z()});
  for (const auto& e : enumerate_elements(group(kFig1b))) b.insert({e.x(), e.z()});
  std::size_t expected = 0;
  for (const auto& k : a) expected += !b.contains(k);
  for (const auto& k : b) expected += !a.contains(k);
  EXPECT_EQ(fig.size(), expected);

  // sharing a subgroup of size 2^{n-1}
  const auto shared = symmetric_difference(group({"+ZI", "+IZ"}), group({"+ZI", "+IX"}));
  EXPECT_EQ(shared.size(), 4u);

  EXPECT_THROW(symmetric_difference(group({"+X"}), group({"-X"})), HypothesisError);
}

TEST(PerfectMatching, Examples) {
  const auto xz = symmetric_difference(group({"+X"}), group({"+Z"}));
  const auto one = perfect_matching(xz);
  ASSERT_EQ(one.pairs.size(), 1u);
  EXPECT_EQ(one.pairs[0], (std::pair<std::size_t, std::size_t>{0, 1}));

  for (const auto& [s, t] : {std::pair{group({"+XX", "+ZZ"}), group({"+XI", "+IX"})},
                             std::pair{group(kFig1a), group(kFig1b)}}) {
    const auto m = symmetric_difference(s, t);
    const auto result = perfect_matching(m);
    EXPECT_EQ(result.pairs.size() * 2, m.size());
    std::set<std::size_t> used;
    for (const auto& [k, l] : result.pairs) {
      EXPECT_LT(k, m.s_count);
      EXPECT_GE(l, m.s_count);
      EXPECT_FALSE(commutes(m.observables[k], m.observables[l]));
      used.insert(k);
      used.insert(l);
    }
    EXPECT_EQ(used.size(), m.size());
  }
}

TEST(GroupUR, Examples) {
  GroupUROptions options;
  options.random_states = 200;
  const auto shannon = group_ur_verify(group({"+X"}), group({"+Z"}), EntropySpec::shannon(), options);
  EXPECT_EQ(shannon.bound, 0.5);
  EXPECT_TRUE(shannon.all_basis_states_attain);
  EXPECT_TRUE(shannon.tight);
  for (const auto& v : shannon.basis_values) EXPECT_EQ(v.value, 0.5);

  const auto tsallis = group_ur_verify(group(kFig1a), group(kFig1b), EntropySpec::tsallis(2), options);
  EXPECT_EQ(tsallis.bound, 0.25);
  EXPECT_TRUE(tsallis.tight);
  EXPECT_GE(tsallis.random_min, 0.25 - 1e-9);

  // maximally mixed: every expectation vanishes
  const auto m = symmetric_difference(group(kFig1a), group(kFig1b));
  double total = 0;
  for (const auto& a : m.observables.observables()) total += entropy_of_observable(a, maximally_mixed(4), EntropySpec::shannon());
  EXPECT_NEAR(total / static_cast<double>(m.size()), 1.0, 1e-12);

  EXPECT_THROW(group_ur_verify(group({"+X"}), group({"+Z"}), EntropySpec::min()), HypothesisError);
  EXPECT_THROW(group_ur_verify(group({"+X"}), group({"+X"}), EntropySpec::shannon()), HypothesisError);
}

TEST(MinEntropyMultibasis, Examples) {
  const std::vector<StabilizerGroup> two{group({"+X"}), group({"+Z"})};
  EXPECT_NEAR(min_entropy_multibasis_bound(two), -std::log2((1 + 1 / std::sqrt(2.0)) / 2), 1e-12);
  EXPECT_NEAR(min_entropy_multibasis_bound(two), 0.228447, 1e-6);
  const std::vector<StabilizerGroup> three{group({"+X"}), group({"+Y"}), group({"+Z"})};
  EXPECT_NEAR(min_entropy_multibasis_bound(three), -std::log2((1 + 2 / std::sqrt(2.0)) / 3), 1e-12);
  const std::vector<StabilizerGroup> shared{group({"+Z"}), group({"-Z"}), group({"+X"})};
  EXPECT_NEAR(min_entropy_multibasis_bound(shared), 0.0, 1e-15);
  EXPECT_THROW(min_entropy_multibasis_bound(std::vector<StabilizerGroup>{group({"+X"})}), ValidationError);
}
