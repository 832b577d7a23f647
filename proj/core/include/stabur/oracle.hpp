#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "stabur/entropy.hpp"
#include "stabur/graphstate.hpp"
#include "stabur/pauli.hpp"
#include "stabur/rng.hpp"
#include "stabur/stabgroup.hpp"

// Dense linear-algebra ground truth for the group-theoretic fast paths.
//
// Computational basis index k has bit i equal to the state of qubit i, so
// a Pauli string "P0 P1 ... P(n-1)" maps to the Kronecker product
// P(n-1) ⊗ ... ⊗ P1 ⊗ P0. Bit conventions therefore agree with the masks
// used everywhere else (graph amplitudes R(y) index y the same way).

namespace stabur {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Vector limit for oracle computations.
inline constexpr int kOracleMaxQubits = 10;
/// Density-matrix limit for oracle computations.
inline constexpr int kOracleMaxDensityQubits = 8;

/// Pure statevector or density matrix, validated on construction:
/// pure states have unit norm (1e-12); mixed states are Hermitian (1e-12),
/// have unit trace (1e-12) and minimum eigenvalue >= -1e-10.
class DenseState {
 public:
  enum class Kind { kPure, kMixed };

  static DenseState pure(ComplexVector amplitudes);
  static DenseState mixed(ComplexMatrix rho);

  Kind kind() const { return kind_; }
  bool is_pure() const { return kind_ == Kind::kPure; }
  int num_qubits() const { return n_; }
  Eigen::Index dimension() const { return Eigen::Index{1} << n_; }

  /// Amplitudes of a pure state. Throws ValidationError for mixed states.
  const ComplexVector& amplitudes() const;
  /// Density matrix (|psi><psi| for pure states).
  ComplexMatrix density() const;

  /// tr(op rho).
  std::complex<double> expectation(const ComplexMatrix& op) const;

 private:
  DenseState(Kind kind, int n, ComplexVector v, ComplexMatrix rho)
      : kind_(kind), n_(n), vector_(std::move(v)), rho_(std::move(rho)) {}

  Kind kind_;
  int n_;
  ComplexVector vector_;
  ComplexMatrix rho_;
};

/// Dense matrix of a Pauli operator as the Kronecker product of its 2x2
/// letter matrices times its rendered prefactor.
ComplexMatrix dense_pauli(const PauliOperator& p, int max_qubits = kOracleMaxQubits);

/// tr(p rho), real part, by direct action of p on the computational basis.
double pauli_expectation(const PauliOperator& p, const DenseState& state);

/// Stabilizer state of g: the projector (1/2^n) sum_k g_k is built densely,
/// checked to have rank one, and its top eigenvector returned (global phase
/// fixed so the largest-magnitude amplitude is real positive).
DenseState stabilizer_state_dense(const StabilizerGroup& g, int max_qubits = kOracleMaxQubits);

/// Every state of the stabilizer basis of g, ordered by BasisLabel.
std::vector<ComplexVector> stabilizer_basis_dense(const StabilizerGroup& g,
                                                  int max_qubits = kOracleMaxQubits);

/// |+>^{⊗n} followed by diag(1,1,1,-1) on every edge.
DenseState graph_state_dense(const Graph& g, int max_qubits = kOracleMaxQubits);

/// Throws ValidationError unless `basis` is an orthonormal basis (1e-10).
void check_orthonormal_basis(std::span<const ComplexVector> basis);

/// p_i = <a_i| rho |a_i>.
ProbabilityDistribution measure_distribution(std::span<const ComplexVector> basis,
                                             const DenseState& state);

/// Haar-distributed pure state: normalized complex Gaussian vector.
DenseState random_pure_state(int n, SplitMix64& rng);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& hermitian);

/// |<phi|psi>|, the phase-insensitive comparison of two pure states.
double fidelity_amplitude(const ComplexVector& phi, const ComplexVector& psi);

struct SearchOptions {
  int restarts = 20;
  std::uint64_t seed = 42;
  double initial_step = 0.1;
  double shrink = 0.5;
  int stagnation_limit = 50;
  double min_step = 1e-7;
  std::int64_t max_evaluations_per_restart = 200000;
  int jobs = 1;
};

struct SearchResult {
  double min_value = 0.0;
  DenseState argmin;
  /// False if any restart stopped on the evaluation cap instead of the step
  /// criterion.
  bool converged = true;
};

/// Seeded random restarts refined by coordinate-wise perturbation descent:
/// perturb one amplitude, renormalize, keep if the objective improved,
/// shrink the step after `stagnation_limit` rejected moves, stop below
/// `min_step`. Returns the best state found, an upper bound on the minimum.
SearchResult minimize_over_pure_states(int n, const std::function<double(const DenseState&)>& objective,
                                       const SearchOptions& options);

/// Minimizes (1/L) sum_k S(A_k | psi) over pure states.
SearchResult minimize_entropy_sum(std::span<const PauliOperator> observables,
                                  const EntropySpec& spec, const SearchOptions& options);

/// Minimizes (1/L) sum_k S(B_k | psi) over pure states for measurement bases B_k.
SearchResult minimize_entropy_sum(std::span<const std::vector<ComplexVector>> bases,
                                  const EntropySpec& spec, const SearchOptions& options);

}  // namespace stabur
