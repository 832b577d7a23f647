#pragma once

// Reference computations written straight from the definitions, with no
// shared code paths with the library: strings are read letter by letter,
// states are built from explicit amplitude formulas, sums are brute force.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ref {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Edges = std::vector<std::pair<int, int>>;

inline Mat letter(char c) {
  Mat m(2, 2);
  const cd i(0, 1);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("letter");
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

// Character k acts on qubit k, which is bit k of the basis index.
inline Mat pauli_matrix(std::string_view s) {
  cd factor = 1;
  if (s.starts_with("+i")) { factor = cd(0, 1); s.remove_prefix(2); }
  else if (s.starts_with("-i")) { factor = cd(0, -1); s.remove_prefix(2); }
  else if (s.starts_with('+')) { s.remove_prefix(1); }
  else if (s.starts_with('-')) { factor = -1; s.remove_prefix(1); }
  Mat m = letter(s[0]);
  for (std::size_t k = 1; k < s.size(); ++k) m = kron(letter(s[k]), m);
  return factor * m;
}

inline bool bit(std::uint64_t v, int k) { return ((v >> k) & 1) != 0; }

inline int edge_parity(std::uint64_t x, const Edges& edges) {
  int s = 0;
  for (auto [i, j] : edges) s += bit(x, i) && bit(x, j);
  return s & 1;
}

// |G> = 2^{-n/2} sum_x (-1)^{#edges inside x} |x>
inline Vec graph_state(int n, const Edges& edges) {
  const std::uint64_t d = std::uint64_t{1} << n;
  Vec v(static_cast<Eigen::Index>(d));
  const double amp = std::pow(2.0, -n / 2.0);
  for (std::uint64_t x = 0; x < d; ++x) v(x) = edge_parity(x, edges) ? -amp : amp;
  return v;
}

// <y|H^n|G> by the double sum.
inline double hadamard_amplitude(std::uint64_t y, int n, const Edges& edges) {
  const std::uint64_t d = std::uint64_t{1} << n;
  double total = 0;
  for (std::uint64_t x = 0; x < d; ++x) {
    int s = edge_parity(x, edges);
    for (int k = 0; k < n; ++k) s += bit(x, k) && bit(y, k);
    total += (s & 1) ? -1.0 : 1.0;
  }
  return total / static_cast<double>(d);
}

// Projector onto the joint +1 eigenspace of Hermitian commuting generators.
inline Mat projector(const std::vector<std::string>& generators) {
  const auto d = pauli_matrix(generators.front()).rows();
  Mat p = Mat::Identity(d, d);
  for (const auto& g : generators) p = p * (Mat::Identity(d, d) + pauli_matrix(g)) * 0.5;
  return p;
}

inline Vec top_eigenvector(const Mat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian);
  return es.eigenvectors().col(hermitian.rows() - 1);
}

inline double shannon(const std::vector<double>& p) {
  double h = 0;
  for (double v : p)
    if (v > 0) h -= v * std::log2(v);
  return h;
}

inline double binary_shannon_from_expectation(double a) {
  return shannon({(1 + a) / 2, (1 - a) / 2});
}

inline double tsallis(const std::vector<double>& p, double q) {
  double s = 0;
  for (double v : p) s += std::pow(v, q);
  return (1 - s) / (q - 1);
}

inline bool commutes_dense(const Mat& a, const Mat& b) {
  return (a * b - b * a).cwiseAbs().maxCoeff() < 1e-12;
}

// All Pauli strings of length n over IXYZ, qubit 0 first.
inline std::vector<std::string> all_pauli_strings(int n) {
  std::vector<std::string> out{""};
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : std::string("IXYZ")) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

}  // namespace ref
