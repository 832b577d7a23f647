#include "stabur/gf2.hpp"

#include <bit>
#include <string>

#include "stabur/errors.hpp"

namespace stabur {

namespace {

// Bits 0..63 index the X word, 64..127 the Z word.
int lowest_bit(const SymplecticKey& v) {
  if (v.x != 0) return std::countr_zero(v.x);
  if (v.z != 0) return 64 + std::countr_zero(v.z);
  return -1;
}

bool has_bit(const SymplecticKey& v, int bit) {
  return bit < 64 ? ((v.x >> bit) & 1) != 0 : ((v.z >> (bit - 64)) & 1) != 0;
}

}  // namespace

SymplecticSolver::SymplecticSolver(std::span<const SymplecticKey> rows) : num_rows_(rows.size()) {
  if (rows.size() > RowCombination().size()) {
    throw ResourceError("at most " + std::to_string(RowCombination().size()) +
                        " symplectic rows supported");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SymplecticKey v = rows[i];
    RowCombination combo;
    combo.set(i);
    reduce(v, combo);
    const int pivot = lowest_bit(v);
    if (pivot < 0) {
      dependent_rows_.push_back(i);
      kernel_.push_back(combo);
    } else {
      basis_.push_back({v, combo, pivot});
    }
  }
}

void SymplecticSolver::reduce(SymplecticKey& v, RowCombination& combo) const {
  // Each basis row is already reduced against its predecessors, so a single
  // pass in insertion order clears every pivot.
  for (const Reduced& r : basis_) {
    if (has_bit(v, r.pivot)) {
      v.x ^= r.key.x;
      v.z ^= r.key.z;
      combo ^= r.combo;
    }
  }
}

std::optional<RowCombination> SymplecticSolver::express(const SymplecticKey& v) const {
  SymplecticKey w = v;
  RowCombination combo;
  reduce(w, combo);
  if (!w.is_zero()) return std::nullopt;
  return combo;
}

int symplectic_rank(std::span<const SymplecticKey> rows) { return SymplecticSolver(rows).rank(); }

}  // namespace stabur
