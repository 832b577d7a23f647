#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "stabur/errors.hpp"
#include "stabur/graphstate.hpp"
#include "stabur/oracle.hpp"
#include "stabur/random.hpp"
#include "stabur/stabgroup.hpp"
#include "stabur/urelations.hpp"
#include "stabur_cli/cli.hpp"

namespace stabur::cli {

namespace {

class Log {
 public:
  void check(const std::string& name, double measured, const std::string& expected, bool pass) {
    entries_.push_back(Json{{"name", name},
                            {"measured", presented(measured)},
                            {"expected", expected},
                            {"pass", pass}});
    passed_ = passed_ && pass;
  }
  bool passed() const { return passed_; }
  Json entries() const { return entries_; }

 private:
  Json entries_ = Json::array();
  bool passed_ = true;
};

int count_or(const RunConfig& c, int fallback) { return c.samples >= 0 ? c.samples : fallback; }

void suite_pauli(const RunConfig& config, Log& log) {
  SplitMix64 rng(config.seed);
  int assoc_failures = 0;
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + static_cast<int>(rng.below(64));
    const auto a = random_pauli(n, rng);
    const auto b = random_pauli(n, rng);
    const auto c = random_pauli(n, rng);
    assoc_failures += !((a * b) * c == a * (b * c) && a * PauliOperator::identity(n) == a);
  }
  log.check("associativity_and_identity_1000_triples", assoc_failures, "0", assoc_failures == 0);

  int commutation_failures = 0;
  for (int n = 1; n <= 2; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    for (std::uint64_t i = 0; i < count; ++i) {
      for (std::uint64_t j = 0; j < count; ++j) {
        const PauliOperator p(n, i & low_mask(n), i >> n);
        const PauliOperator q(n, j & low_mask(n), j >> n);
        const ComplexMatrix dp = dense_pauli(p);
        const ComplexMatrix dq = dense_pauli(q);
        const bool dense = (dp * dq - dq * dp).cwiseAbs().maxCoeff() == 0.0;
        commutation_failures += dense != commutes(p, q);
      }
    }
  }
  log.check("commutation_exhaustive_n_le_2", commutation_failures, "0", commutation_failures == 0);

  int homomorphism_failures = 0;
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const auto p = random_pauli(n, rng);
    const auto q = random_pauli(n, rng);
    homomorphism_failures += dense_pauli(p * q) != dense_pauli(p) * dense_pauli(q);
  }
  log.check("dense_homomorphism_n_le_3", homomorphism_failures, "0", homomorphism_failures == 0);
}

void suite_overlap(const RunConfig& config, Log& log) {
  SplitMix64 rng(config.seed);
  const int pairs = count_or(config, 100);
  for (int n = 2; n <= 5; ++n) {
    double worst = 0;
    int mismatches = 0;
    for (int k = 0; k < pairs; ++k) {
      const auto [s, t] = random_group_pair(n, rng);
      const OverlapReport report = overlap_squared(s, t);
      const auto a = stabilizer_state_dense(s);
      const auto b = stabilizer_state_dense(t);
      const double dense = std::norm(a.amplitudes().dot(b.amplitudes()));
      worst = std::max(worst, std::abs(dense - report.overlap_squared.to_double()));
      const Intersection slow = intersect_by_enumeration(s, t);
      mismatches += !(slow.p == report.p && slow.q == report.q && report.p >= report.q - 1);
    }
    const std::string suffix = "_n" + std::to_string(n);
    log.check("overlap_vs_oracle_max_error" + suffix, worst, "<= 1e-12", worst <= 1e-12);
    log.check("intersection_vs_enumeration_mismatches" + suffix, mismatches, "0", mismatches == 0);
  }
}

void suite_tightness(const RunConfig& config, Log& log) {
  SplitMix64 rng(config.seed);
  const int pairs = count_or(config, 50);
  for (int n = 2; n <= 4; ++n) {
    int failures = 0;
    double worst = 0;
    for (int k = 0; k < pairs; ++k) {
      const auto [s, t] = random_group_pair(n, rng);
      const URReport report = check_tightness(s, t);
      failures += !(report.tight && report.all_basis_states_attain);
      for (const auto& v : report.basis_values) worst = std::max(worst, std::abs(v.value - report.bound));
    }
    const std::string suffix = "_n" + std::to_string(n);
    log.check("pairs_not_tight" + suffix, failures, "0", failures == 0);
    log.check("basis_state_gap_max" + suffix, worst, "<= 1e-9", worst <= 1e-9);
  }
}

void suite_anticommuting(const RunConfig& config, Log& log) {
  SplitMix64 rng(config.seed);
  double worst_target = 0;
  double worst_eigen = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100; ++k) {
    const int count = 1 + static_cast<int>(rng.below(5));
    const ObservableSet obs(random_anticommuting_set(3, count, rng));
    std::vector<double> targets(count);
    double norm = 0;
    for (auto& v : targets) {
      v = rng.gaussian();
      norm += v * v;
    }
    const double radius = std::pow(rng.uniform(), 1.0 / count) / std::sqrt(norm);
    for (auto& v : targets) v *= radius;
    const DenseState rho = state_from_expectations(obs, targets);
    for (int j = 0; j < count; ++j) {
      worst_target = std::max(worst_target, std::abs(pauli_expectation(obs[j], rho) - targets[j]));
    }
    worst_eigen = std::min(worst_eigen, min_eigenvalue(rho.density()));
  }
  log.check("round_trip_target_error", worst_target, "<= 1e-10", worst_target <= 1e-10);
  log.check("round_trip_min_eigenvalue", worst_eigen, ">= -1e-10", worst_eigen >= -1e-10);

  double largest = 0;
  const int states = 10 * count_or(config, 1000);
  for (int k = 0; k < states; ++k) {
    const int count = 1 + static_cast<int>(rng.below(7));
    const ObservableSet obs(random_anticommuting_set(3, count, rng));
    largest = std::max(largest, meta_check(obs, random_pure_state(3, rng)).sum_squares);
  }
  log.check("meta_uncertainty_max_sum_squares", largest, "<= 1 + 1e-9", largest <= 1 + 1e-9);

  SearchOptions options;
  options.restarts = config.restarts;
  options.seed = config.seed;
  options.jobs = config.jobs;
  const std::vector<PauliOperator> xyz{PauliOperator::parse("X"), PauliOperator::parse("Y"),
                                       PauliOperator::parse("Z")};
  const auto shannon = minimize_entropy_sum(xyz, EntropySpec::shannon(), options);
  const double bound3 = anticommuting_bound(3, EntropySpec::shannon());
  log.check("xyz_shannon_search_minimum", shannon.min_value, "2/3 within 1e-6",
            std::abs(shannon.min_value - bound3) <= 1e-6);
  const std::vector<PauliOperator> pair{PauliOperator::parse("X"), PauliOperator::parse("Z")};
  const auto tsallis = minimize_entropy_sum(pair, EntropySpec::tsallis(2), options);
  log.check("xz_tsallis2_search_minimum", tsallis.min_value, "1/4 within 1e-6",
            std::abs(tsallis.min_value - 0.25) <= 1e-6);

  int count_failures = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < 50; ++k) {
      const auto g = random_stabilizer_group(n, rng);
      PauliOperator p = random_hermitian_pauli(n, rng);
      std::uint64_t exhaustive = 0;
      for (std::uint64_t m = 0; m < g.size(); ++m) exhaustive += !commutes(g.element(m), p);
      const std::uint64_t expected = exhaustive == 0 ? 0 : std::uint64_t{1} << (n - 1);
      count_failures += exhaustive != expected || anticommutation_count(g, p) != exhaustive;
    }
  }
  log.check("half_anticommutation_failures", count_failures, "0", count_failures == 0);
}

void suite_matching(const RunConfig& config, Log& log) {
  SplitMix64 rng(config.seed);
  const int pairs = count_or(config, 20);
  int failures = 0;
  int trivial = 0;
  double random_gap = 1;
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < pairs; ++k) {
      const auto [s, t] = random_group_pair(n, rng);
      if (intersection_basis(s, t).c == n) {
        ++trivial;
        continue;
      }
      const SymmetricDifference m = symmetric_difference(s, t);
      const MatchingResult result = perfect_matching(m);
      for (const auto& [a, b] : result.pairs) failures += commutes(m.observables[a], m.observables[b]);
      failures += result.pairs.size() * 2 != m.size();
      for (const auto& spec : {EntropySpec::shannon(), EntropySpec::tsallis(2)}) {
        GroupUROptions options;
        options.seed = rng.next();
        options.random_states = 100;
        const URReport ur = group_ur_verify(s, t, spec, options);
        failures += !ur.all_basis_states_attain;
        random_gap = std::min(random_gap, ur.random_min - ur.bound);
      }
    }
  }
  log.check("matching_or_basis_state_failures", failures, "0", failures == 0);
  log.check("random_state_margin_min", random_gap, ">= -1e-9", random_gap >= -1e-9);
  log.check("skipped_identical_pairs", trivial, "any", true);
}

void suite_recurrence(const RunConfig& config, Log& log) {
  for (int n = 2; n <= 9; ++n) {
    const Dyadic expected = Dyadic::pow2(-(n / 2));
    const auto complete = amplitude_transform(Graph::complete(n));
    const auto path = amplitude_transform(Graph::path(n));
    log.check("complete_r_max_n" + std::to_string(n), complete.r_max.to_double(), expected.str(),
              complete.r_max == expected);
    log.check("path_r_max_n" + std::to_string(n), path.r_max.to_double(), expected.str(),
              path.r_max == expected);
  }
  SplitMix64 rng(config.seed);
  int exact_failures = 0;
  double worst = 0;
  const int graphs = count_or(config, 50);
  for (int k = 0; k < graphs; ++k) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const Graph g = random_graph(n, rng);
    const AmplitudeTable table = amplitude_transform(g);
    AmplitudeRecurrence recurrence(g);
    const DenseState psi = graph_state_dense(g);
    ComplexVector image = psi.amplitudes();
    // H on every qubit, applied directly as a dense butterfly
    for (int q = 0; q < n; ++q) {
      const Eigen::Index bit = Eigen::Index{1} << q;
      for (Eigen::Index i = 0; i < image.size(); ++i) {
        if (i & bit) continue;
        const auto a = image(i);
        const auto b = image(i | bit);
        image(i) = (a + b) / std::sqrt(2.0);
        image(i | bit) = (a - b) / std::sqrt(2.0);
      }
    }
    for (std::uint64_t y = 0; y < table.values.size(); ++y) {
      exact_failures += recurrence(y) != table.values[y];
      worst = std::max(worst, std::abs(image(static_cast<Eigen::Index>(y)) - table.values[y].to_double()));
    }
  }
  log.check("recurrence_vs_transform_mismatches", exact_failures, "0", exact_failures == 0);
  log.check("transform_vs_oracle_max_error", worst, "<= 1e-12", worst <= 1e-12);
}

const std::map<std::string, std::function<void(const RunConfig&, Log&)>>& suites() {
  static const std::map<std::string, std::function<void(const RunConfig&, Log&)>> table{
      {"pauli", suite_pauli},         {"overlap", suite_overlap},
      {"tightness", suite_tightness}, {"anticommuting", suite_anticommuting},
      {"matching", suite_matching},   {"recurrence", suite_recurrence},
  };
  return table;
}

}  // namespace

Json cmd_verify(const RunConfig& config) {
  if (std::find(kSuites.begin(), kSuites.end(), config.suite) == kSuites.end()) {
    throw UsageError("unknown suite '" + config.suite + "'");
  }
  std::vector<std::string> names;
  if (config.suite == "all") {
    names.assign(kSuites.begin(), kSuites.end() - 1);
  } else {
    names.push_back(config.suite);
  }
  Json report;
  report["command"] = "verify";
  report["suite"] = config.suite;
  report["seed"] = config.seed;
  Json results = Json::array();
  bool ok = true;
  for (const auto& name : names) {
    Log log;
    suites().at(name)(config, log);
    results.push_back(Json{{"suite", name}, {"pass", log.passed()}, {"checks", log.entries()}});
    ok = ok && log.passed();
  }
  report["results"] = std::move(results);
  report["ok"] = ok;
  return report;
}

}  // namespace stabur::cli
