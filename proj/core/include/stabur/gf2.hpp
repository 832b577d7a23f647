#pragma once

#include <bitset>
#include <optional>
#include <span>
#include <vector>

#include "stabur/pauli.hpp"

namespace stabur {

/// Which input rows were XORed together. Up to 128 rows (2 * kMaxQubits).
using RowCombination = std::bitset<2 * kMaxQubits>;

/// Gaussian elimination over GF(2) on 2n-bit symplectic rows (x | z), with
/// the combination of input rows tracked for every reduced vector.
class SymplecticSolver {
 public:
  explicit SymplecticSolver(std::span<const SymplecticKey> rows);

  int rank() const { return static_cast<int>(basis_.size()); }
  std::size_t num_rows() const { return num_rows_; }

  /// Input rows (by index) that reduced to zero, i.e. were dependent on the
  /// rows before them.
  const std::vector<std::size_t>& dependent_rows() const { return dependent_rows_; }

  /// Basis of the left kernel: combinations of input rows that XOR to zero.
  /// Entry k belongs to dependent_rows()[k].
  const std::vector<RowCombination>& kernel() const { return kernel_; }

  /// Combination of input rows whose XOR equals `v`, if `v` lies in the span.
  std::optional<RowCombination> express(const SymplecticKey& v) const;

 private:
  struct Reduced {
    SymplecticKey key;
    RowCombination combo;
    int pivot;
  };

  void reduce(SymplecticKey& v, RowCombination& combo) const;

  std::vector<Reduced> basis_;
  std::vector<std::size_t> dependent_rows_;
  std::vector<RowCombination> kernel_;
  std::size_t num_rows_ = 0;
};

/// GF(2) rank of a set of symplectic rows.
int symplectic_rank(std::span<const SymplecticKey> rows);

}  // namespace stabur
