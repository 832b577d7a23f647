#include "stabur/urelations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "stabur/errors.hpp"

namespace stabur {

ObservableSet::ObservableSet(std::vector<PauliOperator> observables)
    : observables_(std::move(observables)) {
  if (observables_.empty()) throw ValidationError("empty observable set");
  n_ = observables_.front().num_qubits();
  for (std::size_t k = 0; k < observables_.size(); ++k) {
    const PauliOperator& a = observables_[k];
    if (a.num_qubits() != n_) throw DimensionError("observables act on different qubit counts");
    if (!a.is_hermitian()) {
      throw ValidationError("observable " + std::to_string(k) + " (" + a.str() +
                            ") is not Hermitian");
    }
    if (a.is_identity_up_to_phase()) {
      throw ValidationError("observable " + std::to_string(k) + " is not dichotomic (±identity)");
    }
  }
}

bool ObservableSet::pairwise_anticommuting() const {
  for (std::size_t k = 0; k < observables_.size(); ++k) {
    for (std::size_t l = k + 1; l < observables_.size(); ++l) {
      if (commutes(observables_[k], observables_[l])) return false;
    }
  }
  return true;
}

void ObservableSet::require_anticommuting(const std::string& context) const {
  for (std::size_t k = 0; k < observables_.size(); ++k) {
    for (std::size_t l = k + 1; l < observables_.size(); ++l) {
      if (commutes(observables_[k], observables_[l])) {
        throw HypothesisError(context + " requires pairwise anticommuting observables; " +
                              observables_[k].str() + " and " + observables_[l].str() +
                              " commute");
      }
    }
  }
}

double entropy_of_observable(const PauliOperator& a, const DenseState& state,
                             const EntropySpec& spec) {
  const ObservableSet checked({a});
  if (a.num_qubits() != state.num_qubits()) {
    throw DimensionError("observable and state qubit counts differ");
  }
  return entropy(spec, ProbabilityDistribution::from_expectation(pauli_expectation(a, state)));
}

double entropy_of_observable(const PauliOperator& a, const StabilizerGroup& g,
                             const EntropySpec& spec) {
  const ObservableSet checked({a});
  return entropy(spec, ProbabilityDistribution::from_expectation(stabilizer_expectation(g, a)));
}

double mu_bound_general(std::span<const ComplexVector> basis_a,
                        std::span<const ComplexVector> basis_b) {
  check_orthonormal_basis(basis_a);
  check_orthonormal_basis(basis_b);
  if (basis_a.front().size() != basis_b.front().size()) {
    throw DimensionError("bases of different dimension");
  }
  double largest = 0.0;
  for (const auto& a : basis_a) {
    for (const auto& b : basis_b) largest = std::max(largest, std::abs(a.dot(b)));
  }
  return -std::log2(std::min(largest, 1.0));
}

URReport check_tightness(const StabilizerGroup& s, const StabilizerGroup& t, int max_qubits) {
  if (s.num_qubits() != t.num_qubits()) throw DimensionError("groups on different qubit counts");
  if (s.num_qubits() > max_qubits) {
    throw ResourceError("tightness check on " + std::to_string(s.num_qubits()) +
                        " qubits exceeds the oracle limit of " + std::to_string(max_qubits));
  }
  const EntropySpec shannon = EntropySpec::shannon();
  URReport report;
  report.bound = mu_bound_stabilizer(s, t);

  const std::vector<ComplexVector> basis_s = stabilizer_basis_dense(s, max_qubits);
  const std::vector<ComplexVector> basis_t = stabilizer_basis_dense(t, max_qubits);
  const auto evaluate = [&](char which, const std::vector<ComplexVector>& basis) {
    for (std::size_t label = 0; label < basis.size(); ++label) {
      const DenseState psi = DenseState::pure(basis[label]);
      const double value = 0.5 * (entropy(shannon, measure_distribution(basis_s, psi)) +
                                  entropy(shannon, measure_distribution(basis_t, psi)));
      report.basis_values.push_back({which, BasisLabel{label}, value});
    }
  };
  evaluate('s', basis_s);
  evaluate('t', basis_t);

  const auto best = std::min_element(
      report.basis_values.begin(), report.basis_values.end(),
      [](const BasisStateValue& a, const BasisStateValue& b) { return a.value < b.value; });
  report.achieved = best->value;
  report.tight = std::abs(report.achieved - report.bound) <= kTightnessTolerance;
  report.all_basis_states_attain =
      std::all_of(report.basis_values.begin(), report.basis_values.end(), [&](const auto& v) {
        return std::abs(v.value - report.bound) <= kTightnessTolerance;
      });
  report.witness = std::string(1, best->basis) + "-basis label " + std::to_string(best->label.bits);
  return report;
}

MetaCheck meta_check(const ObservableSet& obs, const DenseState& state) {
  obs.require_anticommuting("meta_check");
  if (obs.num_qubits() != state.num_qubits()) {
    throw DimensionError("observables and state act on different qubit counts");
  }
  MetaCheck out;
  for (const PauliOperator& a : obs.observables()) {
    const double e = pauli_expectation(a, state);
    out.sum_squares += e * e;
  }
  out.holds = out.sum_squares <= 1.0 + 1e-9;
  out.variance_sum = static_cast<double>(obs.size()) - out.sum_squares;
  return out;
}

DenseState state_from_expectations(const ObservableSet& obs, std::span<const double> targets) {
  obs.require_anticommuting("state_from_expectations");
  if (targets.size() != obs.size()) {
    throw DimensionError("got " + std::to_string(targets.size()) + " targets for " +
                         std::to_string(obs.size()) + " observables");
  }
  const double norm_sq = std::inner_product(targets.begin(), targets.end(), targets.begin(), 0.0);
  if (norm_sq > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "infeasible targets: sum of squares " << norm_sq << " exceeds 1";
    throw HypothesisError(os.str());
  }
  const int n = obs.num_qubits();
  if (n > kOracleMaxDensityQubits) {
    throw ResourceError("state_from_expectations limited to " +
                        std::to_string(kOracleMaxDensityQubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexMatrix rho = ComplexMatrix::Identity(dim, dim);
  for (std::size_t k = 0; k < obs.size(); ++k) rho += targets[k] * dense_pauli(obs[k]);
  rho /= static_cast<double>(dim);
  // Remove rounding asymmetry before validation.
  rho = (0.5 * (rho + rho.adjoint())).eval();

  DenseState state = DenseState::mixed(std::move(rho));
  for (std::size_t k = 0; k < obs.size(); ++k) {
    if (std::abs(pauli_expectation(obs[k], state) - targets[k]) > 1e-10) {
      throw InternalError("constructed state misses target " + std::to_string(k));
    }
  }
  return state;
}

double anticommuting_bound(int num_observables, const EntropySpec& spec) {
  require_concave(spec, "anticommuting_bound");
  if (num_observables < 1) throw ValidationError("need at least one observable");
  return static_cast<double>(num_observables - 1) / num_observables * flat_entropy(spec);
}

std::uint64_t anticommutation_count(const StabilizerGroup& g, const PauliOperator& p) {
  if (p.num_qubits() != g.num_qubits()) {
    throw DimensionError("operator and group act on different qubit counts");
  }
  for (const PauliOperator& gen : g.generators()) {
    if (!commutes(gen, p)) return std::uint64_t{1} << (g.num_qubits() - 1);
  }
  return 0;
}

SymmetricDifference symmetric_difference(const StabilizerGroup& s, const StabilizerGroup& t) {
  if (s.num_qubits() != t.num_qubits()) throw DimensionError("groups on different qubit counts");
  if (intersection_basis(s, t).c == s.num_qubits()) {
    throw HypothesisError("symmetric difference of groups equal up to signs is empty");
  }
  const std::vector<PauliOperator> s_elems = enumerate_elements(s);
  const std::vector<PauliOperator> t_elems = enumerate_elements(t);
  std::unordered_set<SymplecticKey> s_keys;
  std::unordered_set<SymplecticKey> t_keys;
  for (const auto& e : s_elems) s_keys.insert(e.key());
  for (const auto& e : t_elems) t_keys.insert(e.key());

  std::vector<PauliOperator> members;
  for (const auto& e : s_elems) {
    if (!t_keys.contains(e.key())) members.push_back(e);
  }
  const std::size_t s_count = members.size();
  for (const auto& e : t_elems) {
    if (!s_keys.contains(e.key())) members.push_back(e);
  }
  return SymmetricDifference{ObservableSet(std::move(members)), s_count};
}

MatchingResult perfect_matching(const SymmetricDifference& m) {
  const std::size_t left = m.s_count;
  const std::size_t right = m.size() - m.s_count;
  if (left != right) throw InternalError("symmetric difference halves differ in size");

  std::vector<std::vector<std::size_t>> adjacency(left);
  for (std::size_t k = 0; k < left; ++k) {
    for (std::size_t l = 0; l < right; ++l) {
      if (anticommute_keys(m.observables[k].key(), m.observables[left + l].key())) {
        adjacency[k].push_back(l);
      }
    }
  }

  // Kuhn's algorithm: one augmenting-path search per left vertex.
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_of_right(right, kFree);
  std::vector<char> visited(right);
  std::function<bool(std::size_t)> augment = [&](std::size_t k) {
    for (std::size_t l : adjacency[k]) {
      if (visited[l]) continue;
      visited[l] = 1;
      if (match_of_right[l] == kFree || augment(match_of_right[l])) {
        match_of_right[l] = k;
        return true;
      }
    }
    return false;
  };
  for (std::size_t k = 0; k < left; ++k) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(k)) {
      throw InternalError("no perfect anticommuting matching: element " +
                          m.observables[k].str() + " left unmatched");
    }
  }

  std::vector<std::size_t> match_of_left(left, kFree);
  for (std::size_t l = 0; l < right; ++l) match_of_left[match_of_right[l]] = l;
  MatchingResult result;
  for (std::size_t k = 0; k < left; ++k) result.pairs.emplace_back(k, left + match_of_left[k]);
  return result;
}

URReport group_ur_verify(const StabilizerGroup& s, const StabilizerGroup& t,
                         const EntropySpec& spec, const GroupUROptions& options) {
  require_concave(spec, "group_ur_verify");
  const SymmetricDifference m = symmetric_difference(s, t);
  const auto& obs = m.observables.observables();
  const double count = static_cast<double>(obs.size());

  URReport report;
  report.bound = 0.5 * flat_entropy(spec);

  const auto evaluate = [&](char which, const StabilizerGroup& g) {
    for (std::uint64_t label = 0; label < g.size(); ++label) {
      const StabilizerGroup state = basis_state_group(g, BasisLabel{label});
      double total = 0.0;
      for (const auto& a : obs) total += entropy_of_observable(a, state, spec);
      report.basis_values.push_back({which, BasisLabel{label}, total / count});
    }
  };
  evaluate('s', s);
  evaluate('t', t);
  report.all_basis_states_attain =
      std::all_of(report.basis_values.begin(), report.basis_values.end(), [&](const auto& v) {
        return std::abs(v.value - report.bound) <= kTightnessTolerance;
      });
  const auto best = std::min_element(
      report.basis_values.begin(), report.basis_values.end(),
      [](const BasisStateValue& a, const BasisStateValue& b) { return a.value < b.value; });
  report.achieved = best->value;
  report.witness = std::string(1, best->basis) + "-basis label " + std::to_string(best->label.bits);

  if (options.random_states > 0) {
    if (s.num_qubits() > options.max_qubits) {
      throw ResourceError("random-state check on " + std::to_string(s.num_qubits()) +
                          " qubits exceeds the oracle limit");
    }
    SplitMix64 rng(options.seed);
    for (int k = 0; k < options.random_states; ++k) {
      const DenseState psi = random_pure_state(s.num_qubits(), rng);
      double total = 0.0;
      for (const auto& a : obs) total += entropy_of_observable(a, psi, spec);
      report.random_min = std::min(report.random_min, total / count);
    }
    report.random_samples = options.random_states;
  }
  report.tight = report.all_basis_states_attain &&
                 report.random_min >= report.bound - kTightnessTolerance;
  return report;
}

double min_entropy_multibasis_bound(std::span<const StabilizerGroup> bases) {
  if (bases.size() < 2) throw ValidationError("need at least two bases");
  double r = 0.0;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    for (std::size_t l = k + 1; l < bases.size(); ++l) {
      r = std::max(r, max_basis_overlap(bases[k], bases[l]));
    }
  }
  const double count = static_cast<double>(bases.size());
  return -std::log2((1.0 + r * (count - 1.0)) / count);
}

}  // namespace stabur
