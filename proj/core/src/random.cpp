#include "stabur/random.hpp"

#include <string>
#include <utility>
#include <vector>

#include "stabur/errors.hpp"
#include "stabur/gf2.hpp"

namespace stabur {

namespace {

std::uint64_t random_bits(int n, SplitMix64& rng) { return rng.next() & low_mask(n); }

// Extends a commuting, independent, Hermitian list to n generators.
std::vector<PauliOperator> complete_generators(std::vector<PauliOperator> gens, int n,
                                               SplitMix64& rng) {
  std::vector<SymplecticKey> keys;
  for (const auto& g : gens) keys.push_back(g.key());
  while (static_cast<int>(gens.size()) < n) {
    const PauliOperator candidate = random_hermitian_pauli(n, rng);
    bool ok = true;
    for (const auto& g : gens) {
      if (!commutes(g, candidate)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    keys.push_back(candidate.key());
    if (SymplecticSolver(keys).rank() != static_cast<int>(keys.size())) {
      keys.pop_back();
      continue;
    }
    gens.push_back(candidate);
  }
  return gens;
}

}  // namespace

PauliOperator random_pauli(int n, SplitMix64& rng) {
  const std::uint64_t x = random_bits(n, rng);
  const std::uint64_t z = random_bits(n, rng);
  return PauliOperator(n, x, z, static_cast<int>(rng.below(4)));
}

PauliOperator random_hermitian_pauli(int n, SplitMix64& rng) {
  if (n < 1) throw DimensionError("random Pauli needs at least one qubit");
  while (true) {
    const std::uint64_t x = random_bits(n, rng);
    const std::uint64_t z = random_bits(n, rng);
    if ((x | z) == 0) continue;
    return PauliOperator(n, x, z, 0).with_sign(rng.coin() ? -1 : 1);
  }
}

StabilizerGroup random_stabilizer_group(int n, SplitMix64& rng) {
  return validate_group(complete_generators({}, n, rng));
}

std::pair<StabilizerGroup, StabilizerGroup> random_group_pair(int n, SplitMix64& rng) {
  StabilizerGroup s = random_stabilizer_group(n, rng);
  const int shared = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
  std::vector<PauliOperator> gens;
  std::vector<SymplecticKey> keys;
  while (static_cast<int>(gens.size()) < shared) {
    const std::uint64_t mask = rng.below(s.size() - 1) + 1;
    PauliOperator e = s.element(mask);
    keys.push_back(e.key());
    if (SymplecticSolver(keys).rank() != static_cast<int>(keys.size())) {
      keys.pop_back();
      continue;
    }
    if (rng.coin()) e = e.negated();
    gens.push_back(e);
  }
  StabilizerGroup t = validate_group(complete_generators(std::move(gens), n, rng));
  return {std::move(s), std::move(t)};
}

std::vector<PauliOperator> random_anticommuting_set(int n, int count, SplitMix64& rng) {
  if (n < 1 || n > kMaxQubits) throw DimensionError("qubit count out of range");
  if (count < 1 || count > 2 * n + 1) {
    throw ValidationError("at most " + std::to_string(2 * n + 1) +
                          " pairwise anticommuting Paulis exist on " + std::to_string(n) + " qubits");
  }
  std::vector<PauliOperator> pool;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t string = low_mask(j);
    const std::uint64_t bit = std::uint64_t{1} << j;
    pool.push_back(PauliOperator(n, bit, string).with_sign(1));
    pool.push_back(PauliOperator(n, bit, string | bit).with_sign(1));
  }
  pool.push_back(PauliOperator(n, 0, low_mask(n)));
  // partial Fisher-Yates
  for (int k = 0; k < count; ++k) {
    const auto pick = k + rng.below(pool.size() - k);
    std::swap(pool[k], pool[pick]);
  }
  pool.resize(count);
  for (auto& p : pool) p = p.with_sign(rng.coin() ? -1 : 1);
  return pool;
}

Graph random_graph(int n, SplitMix64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.coin()) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace stabur
