#include "stabur/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <sstream>
#include <thread>

#include <unsupported/Eigen/KroneckerProduct>

#include "stabur/errors.hpp"

namespace stabur {

namespace {

using cd = std::complex<double>;

constexpr double kNormTolerance = 1e-12;
constexpr double kPsdTolerance = 1e-10;
constexpr double kBasisTolerance = 1e-10;

void check_limit(int n, int max_qubits, const char* what) {
  if (n > max_qubits) {
    std::ostringstream os;
    os << what << " on " << n << " qubits exceeds the oracle limit of " << max_qubits;
    throw ResourceError(os.str());
  }
}

int qubits_for_dimension(Eigen::Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw ValidationError("state dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

Eigen::Matrix2cd letter_matrix(char letter) {
  Eigen::Matrix2cd m;
  switch (letter) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, cd(0, -1), cd(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw InternalError("bad Pauli letter");
  }
  return m;
}

cd prefactor(int rendered_phase) {
  static const cd kPowers[] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
  return kPowers[rendered_phase & 3];
}

void fix_global_phase(ComplexVector& v) {
  Eigen::Index best = 0;
  v.cwiseAbs().maxCoeff(&best);
  const double mag = std::abs(v(best));
  if (mag > 0) v *= std::conj(v(best)) / mag;
}

}  // namespace

DenseState DenseState::pure(ComplexVector amplitudes) {
  const int n = qubits_for_dimension(amplitudes.size());
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "pure state norm " << norm << " differs from 1";
    throw ValidationError(os.str());
  }
  return DenseState(Kind::kPure, n, std::move(amplitudes), ComplexMatrix());
}

DenseState DenseState::mixed(ComplexMatrix rho) {
  if (rho.rows() != rho.cols()) throw ValidationError("density matrix is not square");
  const int n = qubits_for_dimension(rho.rows());
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kNormTolerance) {
    throw ValidationError("density matrix is not Hermitian");
  }
  const cd trace = rho.trace();
  if (std::abs(trace - cd(1, 0)) > kNormTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix trace " << trace.real() << " differs from 1";
    throw ValidationError(os.str());
  }
  const double lowest = min_eigenvalue(rho);
  if (lowest < -kPsdTolerance) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << lowest;
    throw ValidationError(os.str());
  }
  return DenseState(Kind::kMixed, n, ComplexVector(), std::move(rho));
}

const ComplexVector& DenseState::amplitudes() const {
  if (kind_ != Kind::kPure) throw ValidationError("amplitudes requested from a mixed state");
  return vector_;
}

ComplexMatrix DenseState::density() const {
  if (kind_ == Kind::kPure) return vector_ * vector_.adjoint();
  return rho_;
}

std::complex<double> DenseState::expectation(const ComplexMatrix& op) const {
  if (op.rows() != dimension() || op.cols() != dimension()) {
    throw DimensionError("operator dimension does not match the state");
  }
  if (kind_ == Kind::kPure) return vector_.dot(op * vector_);
  return (op * rho_).trace();
}

ComplexMatrix dense_pauli(const PauliOperator& p, int max_qubits) {
  check_limit(p.num_qubits(), max_qubits, "dense_pauli");
  const std::string text = p.str();
  const std::size_t body = text.size() - static_cast<std::size_t>(p.num_qubits());
  ComplexMatrix m = ComplexMatrix::Identity(1, 1);
  // Qubit 0 is the least significant index bit, i.e. the rightmost factor.
  for (std::size_t q = 0; q < static_cast<std::size_t>(p.num_qubits()); ++q) {
    ComplexMatrix next = Eigen::kroneckerProduct(letter_matrix(text[body + q]), m).eval();
    m = std::move(next);
  }
  return prefactor(p.rendered_phase()) * m;
}

double pauli_expectation(const PauliOperator& p, const DenseState& state) {
  if (p.num_qubits() != state.num_qubits()) {
    throw DimensionError("observable and state qubit counts differ");
  }
  check_limit(p.num_qubits(), kOracleMaxQubits, "pauli_expectation");
  // P|d> = i^phase (-1)^{z.d} |d ^ x>
  const cd phase = prefactor(p.phase());
  const std::uint64_t dim = std::uint64_t{1} << p.num_qubits();
  cd total = 0;
  if (state.is_pure()) {
    const ComplexVector& v = state.amplitudes();
    for (std::uint64_t d = 0; d < dim; ++d) {
      const double s = (std::popcount(p.z() & d) & 1) ? -1.0 : 1.0;
      total += std::conj(v(static_cast<Eigen::Index>(d ^ p.x()))) * s * v(static_cast<Eigen::Index>(d));
    }
  } else {
    const ComplexMatrix rho = state.density();
    for (std::uint64_t d = 0; d < dim; ++d) {
      const double s = (std::popcount(p.z() & d) & 1) ? -1.0 : 1.0;
      total += s * rho(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d ^ p.x()));
    }
  }
  return (phase * total).real();
}

DenseState stabilizer_state_dense(const StabilizerGroup& g, int max_qubits) {
  const int n = g.num_qubits();
  check_limit(n, max_qubits, "stabilizer_state_dense");
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexMatrix projector = ComplexMatrix::Zero(dim, dim);
  for (const PauliOperator& e : enumerate_elements(g)) projector += dense_pauli(e, max_qubits);
  projector /= static_cast<double>(dim);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(projector);
  const auto& values = eig.eigenvalues();
  if (std::abs(values(dim - 1) - 1.0) > 1e-10 || (dim > 1 && values(dim - 2) > 1e-10)) {
    throw ValidationError("stabilizer projector does not have rank one");
  }
  ComplexVector psi = eig.eigenvectors().col(dim - 1);
  psi.normalize();
  fix_global_phase(psi);
  return DenseState::pure(std::move(psi));
}

std::vector<ComplexVector> stabilizer_basis_dense(const StabilizerGroup& g, int max_qubits) {
  std::vector<ComplexVector> basis;
  basis.reserve(g.size());
  for (std::uint64_t label = 0; label < g.size(); ++label) {
    basis.push_back(
        stabilizer_state_dense(basis_state_group(g, BasisLabel{label}), max_qubits).amplitudes());
  }
  return basis;
}

DenseState graph_state_dense(const Graph& g, int max_qubits) {
  const int n = g.num_vertices();
  check_limit(n, max_qubits, "graph_state_dense");
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexVector psi = ComplexVector::Constant(dim, cd(std::exp2(-0.5 * n), 0));
  for (const auto& [i, j] : g.edges()) {
    const std::uint64_t both = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
    for (Eigen::Index k = 0; k < dim; ++k) {
      if ((static_cast<std::uint64_t>(k) & both) == both) psi(k) = -psi(k);
    }
  }
  return DenseState::pure(std::move(psi));
}

void check_orthonormal_basis(std::span<const ComplexVector> basis) {
  if (basis.empty()) throw ValidationError("empty basis");
  const Eigen::Index dim = basis.front().size();
  if (static_cast<Eigen::Index>(basis.size()) != dim) {
    throw ValidationError("basis has " + std::to_string(basis.size()) + " vectors in dimension " +
                          std::to_string(dim));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != dim) throw DimensionError("basis vectors of different dimension");
    for (std::size_t j = i; j < basis.size(); ++j) {
      const cd overlap = basis[i].dot(basis[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(overlap - expected) > kBasisTolerance) {
        throw ValidationError("basis is not orthonormal at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
  }
}

ProbabilityDistribution measure_distribution(std::span<const ComplexVector> basis,
                                             const DenseState& state) {
  check_orthonormal_basis(basis);
  if (basis.front().size() != state.dimension()) {
    throw DimensionError("basis and state dimensions differ");
  }
  std::vector<double> probs;
  probs.reserve(basis.size());
  if (state.is_pure()) {
    for (const auto& a : basis) probs.push_back(std::norm(a.dot(state.amplitudes())));
  } else {
    const ComplexMatrix rho = state.density();
    for (const auto& a : basis) probs.push_back(a.dot(rho * a).real());
  }
  return ProbabilityDistribution(std::move(probs));
}

DenseState random_pure_state(int n, SplitMix64& rng) {
  check_limit(n, kOracleMaxQubits, "random_pure_state");
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexVector v(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    v(k) = cd(re, im);
  }
  v.normalize();
  return DenseState::pure(std::move(v));
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

double fidelity_amplitude(const ComplexVector& phi, const ComplexVector& psi) {
  return std::abs(phi.dot(psi));
}

namespace {

struct RestartOutcome {
  double value;
  ComplexVector state;
  bool converged;
};

RestartOutcome run_restart(int n, const std::function<double(const DenseState&)>& objective,
                           const SearchOptions& options, SplitMix64 rng) {
  ComplexVector psi = random_pure_state(n, rng).amplitudes();
  double best = objective(DenseState::pure(psi));
  double step = options.initial_step;
  int stagnant = 0;
  std::int64_t evaluations = 1;
  const auto dim = static_cast<std::uint64_t>(psi.size());
  while (step >= options.min_step) {
    if (evaluations >= options.max_evaluations_per_restart) return {best, psi, false};
    ComplexVector trial = psi;
    const auto k = static_cast<Eigen::Index>(rng.below(dim));
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    trial(k) += step * cd(re, im);
    trial.normalize();
    const double value = objective(DenseState::pure(trial));
    ++evaluations;
    if (value < best) {
      best = value;
      psi = std::move(trial);
      stagnant = 0;
    } else if (++stagnant >= options.stagnation_limit) {
      step *= options.shrink;
      stagnant = 0;
    }
  }
  return {best, psi, true};
}

}  // namespace

SearchResult minimize_over_pure_states(int n, const std::function<double(const DenseState&)>& objective,
                                       const SearchOptions& options) {
  if (options.restarts < 1) throw ValidationError("at least one restart required");
  check_limit(n, kOracleMaxQubits, "minimize_over_pure_states");
  const SplitMix64 root(options.seed);
  std::vector<std::optional<RestartOutcome>> outcomes(options.restarts);

  const int jobs = std::clamp(options.jobs, 1, options.restarts);
  if (jobs == 1) {
    for (int r = 0; r < options.restarts; ++r) {
      outcomes[r] = run_restart(n, objective, options, root.fork(r));
    }
  } else {
    // Restart r always uses stream fork(r): results do not depend on `jobs`.
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (int r = w; r < options.restarts; r += jobs) {
          outcomes[r] = run_restart(n, objective, options, root.fork(r));
        }
      });
    }
  }

  std::size_t best = 0;
  bool converged = true;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    converged = converged && outcomes[r]->converged;
    if (outcomes[r]->value < outcomes[best]->value) best = r;
  }
  return SearchResult{outcomes[best]->value, DenseState::pure(outcomes[best]->state), converged};
}

SearchResult minimize_entropy_sum(std::span<const PauliOperator> observables,
                                  const EntropySpec& spec, const SearchOptions& options) {
  if (observables.empty()) throw ValidationError("no observables given");
  const int n = observables.front().num_qubits();
  for (const auto& a : observables) {
    if (a.num_qubits() != n) throw DimensionError("observables act on different qubit counts");
    if (!a.is_hermitian()) throw ValidationError("observable " + a.str() + " is not Hermitian");
  }
  const std::vector<PauliOperator> obs(observables.begin(), observables.end());
  const auto objective = [&obs, spec](const DenseState& psi) {
    double total = 0.0;
    for (const auto& a : obs) {
      total += entropy(spec, ProbabilityDistribution::from_expectation(pauli_expectation(a, psi)));
    }
    return total / static_cast<double>(obs.size());
  };
  return minimize_over_pure_states(n, objective, options);
}

SearchResult minimize_entropy_sum(std::span<const std::vector<ComplexVector>> bases,
                                  const EntropySpec& spec, const SearchOptions& options) {
  if (bases.empty()) throw ValidationError("no bases given");
  for (const auto& b : bases) check_orthonormal_basis(b);
  const int n = qubits_for_dimension(bases.front().front().size());
  const auto objective = [bases, spec](const DenseState& psi) {
    double total = 0.0;
    for (const auto& b : bases) {
      std::vector<double> probs;
      probs.reserve(b.size());
      for (const auto& a : b) probs.push_back(std::norm(a.dot(psi.amplitudes())));
      total += entropy(spec, ProbabilityDistribution(std::move(probs)));
    }
    return total / static_cast<double>(bases.size());
  };
  return minimize_over_pure_states(n, objective, options);
}

}  // namespace stabur
