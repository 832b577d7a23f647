#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace stabur {

/// Largest supported qubit count. Bit vectors are single machine words.
inline constexpr int kMaxQubits = 64;

/// Mask with the low `n` bits set.
constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Sign-free part of a Pauli operator: X-bits and Z-bits, qubit i at bit i.
struct SymplecticKey {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  bool is_zero() const { return (x | z) == 0; }
  friend bool operator==(const SymplecticKey&, const SymplecticKey&) = default;
  friend auto operator<=>(const SymplecticKey&, const SymplecticKey&) = default;
};

/// Value of tr(P Q) for two Pauli operators: real + i*imag, each a signed
/// multiple of 2^n or zero.
struct TraceValue {
  std::int64_t real = 0;
  std::int64_t imag = 0;
  friend bool operator==(const TraceValue&, const TraceValue&) = default;
};

/// n-qubit Pauli operator in binary symplectic form
///
///   i^phase * prod_j X_j^{x_j} Z_j^{z_j}
///
/// with qubit 0 in bit 0. Y is stored as i*XZ, so the text "Y" has phase 1.
/// Multiplication is XOR on the bit vectors plus a dot-product phase update.
class PauliOperator {
 public:
  PauliOperator() = default;

  /// Identity on n qubits.
  explicit PauliOperator(int num_qubits);
  PauliOperator(int num_qubits, std::uint64_t x, std::uint64_t z, int phase = 0);

  static PauliOperator identity(int num_qubits) { return PauliOperator(num_qubits); }

  /// Parses an optional sign ("+", "-", "+i", "-i") followed by letters
  /// from {I, X, Y, Z}. Throws ParseError naming the offending offset.
  static PauliOperator parse(std::string_view text);

  /// Single-qubit operator `letter` on `qubit`, identity elsewhere.
  static PauliOperator single(int num_qubits, int qubit, char letter);

  int num_qubits() const { return n_; }
  std::uint64_t x() const { return x_; }
  std::uint64_t z() const { return z_; }
  int phase() const { return phase_; }
  SymplecticKey key() const { return {x_, z_}; }

  /// Number of qubits carrying a Y (x and z both set).
  int y_count() const;
  /// Number of non-identity tensor factors.
  int weight() const;
  bool is_identity_up_to_phase() const { return (x_ | z_) == 0; }

  /// True iff the operator is Hermitian, i.e. squares to +identity.
  bool is_hermitian() const;

  /// Sign of a Hermitian operator relative to its letter string: +1 or -1.
  /// Throws ValidationError for non-Hermitian operators.
  int sign() const;

  /// Exponent k of the rendered prefactor i^k (0: "+", 1: "+i", 2: "-", 3: "-i").
  int rendered_phase() const;

  PauliOperator negated() const;
  /// Same letters with the requested real sign (+1 or -1).
  PauliOperator with_sign(int sign) const;

  /// Canonical text form, e.g. "+XZIY", "-iZZ".
  std::string str() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

PauliOperator parse_pauli(std::string_view text);

/// Exact product p * q. Throws DimensionError on mismatched qubit counts.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

inline PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) {
  return multiply(p, q);
}

/// True iff p and q commute; Paulis that do not commute anticommute.
bool commutes(const PauliOperator& p, const PauliOperator& q);

/// Symplectic form <x_p,z_q> + <z_p,x_q> mod 2 on raw keys.
inline bool anticommute_keys(const SymplecticKey& a, const SymplecticKey& b) {
  return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) != 0;
}

/// tr(p q). Nonzero only when p and q share their symplectic key.
TraceValue trace_inner(const PauliOperator& p, const PauliOperator& q);

}  // namespace stabur

template <>
struct std::hash<stabur::SymplecticKey> {
  std::size_t operator()(const stabur::SymplecticKey& k) const noexcept {
    std::uint64_t h = k.x * 0x9E3779B97F4A7C15ULL;
    h ^= k.z + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};
