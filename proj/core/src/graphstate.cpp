#include "stabur/graphstate.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "stabur/errors.hpp"

namespace stabur {

namespace {

void check_vertices(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw ValidationError("vertex count " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

Graph::Graph(int num_vertices) {
  check_vertices(num_vertices);
  adjacency_.assign(num_vertices, 0);
}

Graph Graph::from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  Graph g(num_vertices);
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= num_vertices || j >= num_vertices) {
      throw ValidationError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for " + std::to_string(num_vertices) + " vertices");
    }
    if (i == j) throw ValidationError("self loop at vertex " + std::to_string(i));
    g.adjacency_[i] |= std::uint64_t{1} << j;
    g.adjacency_[j] |= std::uint64_t{1} << i;
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_vertices(n);
  for (int i = 0; i < n; ++i) {
    if ((rows[i] & ~low_mask(n)) != 0) {
      throw ValidationError("adjacency row " + std::to_string(i) + " has out-of-range bits");
    }
    if ((rows[i] >> i) & 1) throw ValidationError("self loop at vertex " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      if (((rows[i] >> j) & 1) != ((rows[j] >> i) & 1)) {
        throw ValidationError("adjacency not symmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
  }
  Graph g;
  g.adjacency_ = std::move(rows);
  return g;
}

Graph Graph::complete(int num_vertices) {
  Graph g(num_vertices);
  for (int i = 0; i < num_vertices; ++i) {
    g.adjacency_[i] = low_mask(num_vertices) & ~(std::uint64_t{1} << i);
  }
  return g;
}

Graph Graph::path(int num_vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < num_vertices; ++i) edges.emplace_back(i, i + 1);
  return from_edges(num_vertices, edges);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < num_vertices(); ++i) {
    for (int j = i + 1; j < num_vertices(); ++j) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<PauliOperator> graph_generators(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<PauliOperator> gens;
  gens.reserve(n);
  for (int i = 0; i < n; ++i) {
    gens.emplace_back(n, std::uint64_t{1} << i, g.neighbors(i), 0);
  }
  return gens;
}

StabilizerGroup graph_group(const Graph& g) { return validate_group(graph_generators(g)); }

Graph graph_sum(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices()) {
    throw DimensionError("graphs on " + std::to_string(a.num_vertices()) + " and " +
                         std::to_string(b.num_vertices()) + " vertices");
  }
  std::vector<std::uint64_t> rows(a.adjacency());
  for (int i = 0; i < a.num_vertices(); ++i) rows[i] ^= b.neighbors(i);
  return Graph::from_adjacency(std::move(rows));
}

AmplitudeRecurrence::AmplitudeRecurrence(const Graph& g) : graph_(g) {
  if (g.num_vertices() > 30) {
    throw ResourceError("amplitude recurrence limited to 30 vertices");
  }
  memo_.resize(g.num_vertices() + 1);
}

Dyadic AmplitudeRecurrence::operator()(std::uint64_t y) {
  return eval(0, y & low_mask(graph_.num_vertices()));
}

Dyadic AmplitudeRecurrence::eval(int depth, std::uint64_t y) {
  const int n = graph_.num_vertices();
  if (depth == n) return Dyadic(1);
  // y only carries bits for vertices depth..n-1.
  const std::uint64_t local = y >> depth;
  auto& table = memo_[depth];
  if (table.empty()) table.resize(std::size_t{1} << (n - depth));
  if (table[local]) return *table[local];

  const std::uint64_t rest = y & ~(std::uint64_t{1} << depth);
  const std::uint64_t forward = graph_.neighbors(depth) & ~low_mask(depth + 1);
  const Dyadic first = eval(depth + 1, rest).half();
  Dyadic second = eval(depth + 1, rest ^ forward).half();
  if ((y >> depth) & 1) second = -second;
  const Dyadic value = first + second;
  table[local] = value;
  return value;
}

Dyadic amplitude_recurrence(std::uint64_t y, const Graph& g) { return AmplitudeRecurrence(g)(y); }

AmplitudeTable amplitude_transform(const Graph& g, int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices || n > 30) {
    throw ResourceError("amplitude transform on " + std::to_string(n) +
                        " vertices exceeds limit " + std::to_string(max_vertices));
  }
  const std::size_t size = std::size_t{1} << n;

  // Quadratic-form sign for every x, adding one highest vertex at a time.
  std::vector<std::int64_t> acc(size);
  std::vector<std::uint8_t> parity(size, 0);
  for (std::size_t x = 1; x < size; ++x) {
    const int top = 63 - std::countl_zero(static_cast<std::uint64_t>(x));
    const std::size_t lower = x ^ (std::size_t{1} << top);
    parity[x] = parity[lower] ^ (std::popcount(lower & g.neighbors(top)) & 1);
  }
  for (std::size_t x = 0; x < size; ++x) acc[x] = parity[x] ? -1 : 1;

  // In-place Walsh-Hadamard butterflies: acc[y] = sum_x (-1)^{y.x} sign(x).
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t k = block; k < block + half; ++k) {
        const std::int64_t a = acc[k];
        const std::int64_t b = acc[k + half];
        acc[k] = a + b;
        acc[k + half] = a - b;
      }
    }
  }

  AmplitudeTable table;
  table.n = n;
  table.values.reserve(size);
  for (std::size_t y = 0; y < size; ++y) {
    table.values.emplace_back(acc[y], n);
    const Dyadic mag = table.values.back().abs();
    if (mag > table.r_max) {
      table.r_max = mag;
      table.argmax.clear();
    }
    if (mag == table.r_max) table.argmax.push_back(y);
  }
  return table;
}

double mu_bound_graphs(const Graph& a, const Graph& b, int max_vertices) {
  const AmplitudeTable table = amplitude_transform(graph_sum(a, b), max_vertices);
  return -std::log2(table.r_max.to_double());
}

}  // namespace stabur
