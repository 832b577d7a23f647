#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabur/entropy.hpp"
#include "stabur/oracle.hpp"
#include "stabur/pauli.hpp"
#include "stabur/stabgroup.hpp"

namespace stabur {

/// Dichotomic Pauli observables: Hermitian, not proportional to the
/// identity, all on the same number of qubits.
class ObservableSet {
 public:
  explicit ObservableSet(std::vector<PauliOperator> observables);

  std::size_t size() const { return observables_.size(); }
  int num_qubits() const { return n_; }
  const std::vector<PauliOperator>& observables() const { return observables_; }
  const PauliOperator& operator[](std::size_t k) const { return observables_[k]; }

  bool pairwise_anticommuting() const;
  /// Throws HypothesisError naming `context` unless pairwise anticommuting.
  void require_anticommuting(const std::string& context) const;

 private:
  int n_ = 0;
  std::vector<PauliOperator> observables_;
};

/// S(a | rho) from <a> = tr(a rho) and the two-outcome distribution.
double entropy_of_observable(const PauliOperator& a, const DenseState& state,
                             const EntropySpec& spec);

/// Same quantity on the stabilizer state of g, computed group-theoretically.
double entropy_of_observable(const PauliOperator& a, const StabilizerGroup& g,
                             const EntropySpec& spec);

/// -log2 max_{i,j} |<a_i|b_j>| for two orthonormal bases.
double mu_bound_general(std::span<const ComplexVector> basis_a,
                        std::span<const ComplexVector> basis_b);

/// Entropy average of one basis state of one of the two groups.
struct BasisStateValue {
  char basis = 's';  ///< 's' or 't'
  BasisLabel label;
  double value = 0.0;
};

struct URReport {
  double bound = 0.0;
  /// Minimum entropy average over the tested states.
  double achieved = 0.0;
  bool tight = false;
  /// Human-readable description of the attaining state.
  std::string witness;

  std::vector<BasisStateValue> basis_values;
  bool all_basis_states_attain = false;

  int random_samples = 0;
  double random_min = std::numeric_limits<double>::infinity();
};

/// Tolerance for "attains the bound" comparisons.
inline constexpr double kTightnessTolerance = 1e-9;

/// Maassen-Uffink tightness for two stabilizer bases: evaluates
/// (1/2)[S(A|rho) + S(B|rho)] (Shannon) on every basis state of both bases
/// with the dense oracle and compares the minimum with mu_bound_stabilizer.
URReport check_tightness(const StabilizerGroup& s, const StabilizerGroup& t,
                         int max_qubits = kOracleMaxQubits);

struct MetaCheck {
  double sum_squares = 0.0;  ///< sum_k <A_k>^2
  bool holds = false;        ///< sum_squares <= 1 + 1e-9
  double variance_sum = 0.0; ///< sum_k Var(A_k) = L - sum_squares
};

/// Sum of squared expectations of pairwise anticommuting observables.
MetaCheck meta_check(const ObservableSet& obs, const DenseState& state);

/// rho = (I + sum_k a_k A_k) / d, checked positive semidefinite and to
/// reproduce every a_k within 1e-10. Requires sum a_k^2 <= 1.
DenseState state_from_expectations(const ObservableSet& obs, std::span<const double> targets);

/// Exact minimum (L-1)/L * S0 of the entropy average of L pairwise
/// anticommuting dichotomic observables.
double anticommuting_bound(int num_observables, const EntropySpec& spec);

/// Number of elements of g anticommuting with p: 2^{n-1} if p anticommutes
/// with some generator, 0 otherwise.
std::uint64_t anticommutation_count(const StabilizerGroup& g, const PauliOperator& p);

/// Elements of exactly one of the two groups, signs ignored for membership
/// but kept from the owning group. Entries [0, s_count) come from s.
struct SymmetricDifference {
  ObservableSet observables;
  std::size_t s_count = 0;

  std::size_t size() const { return observables.size(); }
};

/// Throws HypothesisError when s and t coincide up to signs.
SymmetricDifference symmetric_difference(const StabilizerGroup& s, const StabilizerGroup& t);

struct MatchingResult {
  /// (k, l) with k < s_count <= l, indices into the symmetric difference.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Perfect matching of the bipartite anticommutation graph between the s
/// and t halves, by repeated augmenting paths. Throws InternalError if none
/// exists.
MatchingResult perfect_matching(const SymmetricDifference& m);

struct GroupUROptions {
  int random_states = 1000;
  std::uint64_t seed = 42;
  int max_qubits = kOracleMaxQubits;
};

/// Uncertainty relation for the symmetric difference of two groups:
/// bound S0/2, checked on every basis state of both groups (group-theoretic
/// expectations) and on seeded random pure states (dense oracle).
URReport group_ur_verify(const StabilizerGroup& s, const StabilizerGroup& t,
                         const EntropySpec& spec, const GroupUROptions& options = {});

/// Min-entropy relation for several stabilizer bases:
/// -log2[(1 + r(L-1))/L] with r the largest overlap between states of
/// different bases.
double min_entropy_multibasis_bound(std::span<const StabilizerGroup> bases);

}  // namespace stabur
