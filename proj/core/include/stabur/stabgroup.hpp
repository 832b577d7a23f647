#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabur/dyadic.hpp"
#include "stabur/gf2.hpp"
#include "stabur/pauli.hpp"

namespace stabur {

/// Selects one state of a stabilizer basis: bit i flips the sign of
/// generator i. Labels are ordered as integers.
struct BasisLabel {
  std::uint64_t bits = 0;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

/// n independent, pairwise commuting, Hermitian generators on n qubits whose
/// group does not contain -I. Construct through validate_group().
class StabilizerGroup {
 public:
  int num_qubits() const { return n_; }
  const std::vector<PauliOperator>& generators() const { return generators_; }

  /// Number of group elements, 2^n.
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  /// Product of the generators selected by `mask` (bit i = generator i),
  /// taken in increasing generator order.
  PauliOperator element(std::uint64_t mask) const;

  /// The signed group element with symplectic key `key`, if one exists.
  std::optional<PauliOperator> find(const SymplecticKey& key) const;

  bool contains_up_to_sign(const SymplecticKey& key) const { return find(key).has_value(); }

  const SymplecticSolver& solver() const { return solver_; }

  friend StabilizerGroup validate_group(std::vector<PauliOperator> generators);

 private:
  StabilizerGroup(int n, std::vector<PauliOperator> generators, SymplecticSolver solver)
      : n_(n), generators_(std::move(generators)), solver_(std::move(solver)) {}

  int n_;
  std::vector<PauliOperator> generators_;
  SymplecticSolver solver_;
};

/// Checks the stabilizer-group conditions and returns the group. Throws
/// ValidationError with one of "not Hermitian i", "not commuting (i,j)",
/// "dependent generator i" or "group contains -identity".
StabilizerGroup validate_group(std::vector<PauliOperator> generators);

/// All 2^n elements, element k being element(k).
std::vector<PauliOperator> enumerate_elements(const StabilizerGroup& g);

/// Group of the basis state selected by `label`.
StabilizerGroup basis_state_group(const StabilizerGroup& g, BasisLabel label);

/// Signed intersection of two groups.
///
/// `s_plus` holds the elements of s that lie in t with the same sign,
/// `s_minus` those whose negation lies in t. `c` is log2 |S ∩ ±T| with signs
/// ignored; |S+| = 2^p and |S+ ∪ S-| = 2^q = 2^c.
struct Intersection {
  std::vector<PauliOperator> s_plus;
  std::vector<PauliOperator> s_minus;
  int c = 0;
  int p = 0;
  int q = 0;
};

/// Generators of S ∩ ±T (as elements of s) with the relative sign of each
/// in t, found by GF(2) elimination on the stacked generator rows. No
/// enumeration, so usable at any n.
struct IntersectionBasis {
  std::vector<PauliOperator> generators;
  std::vector<int> relative_signs;
  int c = 0;
  int p = 0;
};

IntersectionBasis intersection_basis(const StabilizerGroup& s, const StabilizerGroup& t);

/// Full signed intersection, expanded from intersection_basis().
Intersection intersect(const StabilizerGroup& s, const StabilizerGroup& t);

/// Same result computed by enumerating s and looking every element up in t.
/// Cross-check path; cost 2^n.
Intersection intersect_by_enumeration(const StabilizerGroup& s, const StabilizerGroup& t);

struct OverlapReport {
  int p = 0;
  int q = 0;
  /// |<S|T>|^2 = (2^{p+1} - 2^q) / 2^n.
  Dyadic overlap_squared;
};

/// Squared overlap of the two stabilizer states, from the signed
/// intersection sizes.
OverlapReport overlap_squared(const StabilizerGroup& s, const StabilizerGroup& t);

/// tr(a rho_g) for the stabilizer state of g: +1/-1 if ±a is in the group,
/// 0 otherwise. Throws ValidationError if `a` is not Hermitian.
int stabilizer_expectation(const StabilizerGroup& g, const PauliOperator& a);

/// Largest |<s_i|t_j>| between the two stabilizer bases, 2^{-(n-c)/2}.
double max_basis_overlap(const StabilizerGroup& s, const StabilizerGroup& t);

/// Maassen-Uffink bound -log2 max|<s_i|t_j>| = (n - c)/2 bits.
double mu_bound_stabilizer(const StabilizerGroup& s, const StabilizerGroup& t);

}  // namespace stabur
