#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stabur/dyadic.hpp"
#include "stabur/pauli.hpp"
#include "stabur/stabgroup.hpp"

namespace stabur {

/// Simple undirected graph on vertices 0..n-1. Row i of the adjacency
/// matrix is a bit mask; the matrix is symmetric with a zero diagonal.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int num_vertices);

  /// Builds a graph from 0-indexed edges. Throws ValidationError on self
  /// loops or out-of-range vertices; repeated edges are idempotent.
  static Graph from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges);
  /// Builds from adjacency rows; throws ValidationError unless symmetric
  /// with zero diagonal.
  static Graph from_adjacency(std::vector<std::uint64_t> rows);

  static Graph complete(int num_vertices);
  static Graph path(int num_vertices);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<std::uint64_t>& adjacency() const { return adjacency_; }
  std::uint64_t neighbors(int v) const { return adjacency_[v]; }
  bool has_edge(int i, int j) const { return ((adjacency_[i] >> j) & 1) != 0; }

  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> adjacency_;
};

/// Stabilizer generators K_i = X_i prod_{j in N(i)} Z_j, all with sign +.
std::vector<PauliOperator> graph_generators(const Graph& g);

/// The validated stabilizer group of the graph state.
StabilizerGroup graph_group(const Graph& g);

/// Entrywise XOR of the adjacency matrices.
Graph graph_sum(const Graph& a, const Graph& b);

/// R(y, A) = <y| H^{⊗n} |G_A>, with bit i of y belonging to qubit i.
///
/// Evaluated by peeling vertex 0, then 1, ...:
///   R(y, A) = 1/2 R(y', A') + (-1)^{y_0} 1/2 R(y' + a', A')
/// where a' is the peeled vertex's neighbourhood among the remaining
/// vertices and R over zero vertices is 1. Memoized on (depth, y').
class AmplitudeRecurrence {
 public:
  explicit AmplitudeRecurrence(const Graph& g);

  Dyadic operator()(std::uint64_t y);

 private:
  Dyadic eval(int depth, std::uint64_t y);

  Graph graph_;
  std::vector<std::vector<std::optional<Dyadic>>> memo_;
};

/// One-shot convenience wrapper around AmplitudeRecurrence.
Dyadic amplitude_recurrence(std::uint64_t y, const Graph& g);

/// All 2^n amplitudes R(y, A) and their maximum magnitude.
struct AmplitudeTable {
  int n = 0;
  std::vector<Dyadic> values;  ///< indexed by y
  Dyadic r_max;
  std::vector<std::uint64_t> argmax;  ///< every y with |R(y)| = r_max, ascending
};

/// Default vertex limit for amplitude_transform.
inline constexpr int kDefaultTransformLimit = 20;

/// Computes every R(y, A) by a fast Walsh-Hadamard transform of the
/// quadratic-form sign vector (-1)^{sum_{i<j} x_i A_ij x_j}. Throws
/// ResourceError when n exceeds `max_vertices`.
AmplitudeTable amplitude_transform(const Graph& g, int max_vertices = kDefaultTransformLimit);

/// Maassen-Uffink bound -log2 r_max for the bases of two graph states,
/// computed through the empty graph and graph_sum(a, b).
double mu_bound_graphs(const Graph& a, const Graph& b,
                       int max_vertices = kDefaultTransformLimit);

}  // namespace stabur
