#pragma once

#include <utility>
#include <vector>

#include "stabur/graphstate.hpp"
#include "stabur/pauli.hpp"
#include "stabur/rng.hpp"
#include "stabur/stabgroup.hpp"

namespace stabur {

/// Uniform Pauli operator with a uniform phase i^k.
PauliOperator random_pauli(int n, SplitMix64& rng);

/// Uniform Hermitian Pauli operator with a uniform sign, excluding ±I.
PauliOperator random_hermitian_pauli(int n, SplitMix64& rng);

/// Random stabilizer group: generators drawn by rejection as Hermitian
/// Paulis commuting with and independent of the previous ones, random signs.
StabilizerGroup random_stabilizer_group(int n, SplitMix64& rng);

/// Pair of groups with a random amount of shared structure: t keeps a
/// random number of s's generators (possibly sign-flipped) and completes
/// them randomly, so every intersection size 0..n occurs.
std::pair<StabilizerGroup, StabilizerGroup> random_group_pair(int n, SplitMix64& rng);

/// L pairwise anticommuting Hermitian Paulis on n qubits with random signs,
/// a random subset of the 2n+1 Jordan-Wigner operators Z..Z X I..I,
/// Z..Z Y I..I and Z..Z. Requires 1 <= L <= 2n+1.
std::vector<PauliOperator> random_anticommuting_set(int n, int count, SplitMix64& rng);

/// Erdos-Renyi graph with edge probability 1/2.
Graph random_graph(int n, SplitMix64& rng);

}  // namespace stabur
