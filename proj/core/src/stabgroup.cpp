#include "stabur/stabgroup.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "stabur/errors.hpp"

namespace stabur {

namespace {

void check_same_size(const StabilizerGroup& s, const StabilizerGroup& t) {
  if (s.num_qubits() != t.num_qubits()) {
    throw DimensionError("stabilizer groups on " + std::to_string(s.num_qubits()) + " and " +
                         std::to_string(t.num_qubits()) + " qubits");
  }
}

std::vector<SymplecticKey> keys_of(const std::vector<PauliOperator>& ops) {
  std::vector<SymplecticKey> keys;
  keys.reserve(ops.size());
  for (const auto& op : ops) keys.push_back(op.key());
  return keys;
}

PauliOperator product_of(const std::vector<PauliOperator>& ops, const RowCombination& combo,
                         std::size_t offset, int n) {
  PauliOperator out(n);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (combo.test(offset + i)) out = multiply(out, ops[i]);
  }
  return out;
}

}  // namespace

PauliOperator StabilizerGroup::element(std::uint64_t mask) const {
  PauliOperator out(n_);
  for (int i = 0; i < n_; ++i) {
    if ((mask >> i) & 1) out = multiply(out, generators_[i]);
  }
  return out;
}

std::optional<PauliOperator> StabilizerGroup::find(const SymplecticKey& key) const {
  const auto combo = solver_.express(key);
  if (!combo) return std::nullopt;
  return product_of(generators_, *combo, 0, n_);
}

StabilizerGroup validate_group(std::vector<PauliOperator> generators) {
  if (generators.empty()) throw ValidationError("empty generator list");
  const int n = generators.front().num_qubits();
  if (generators.size() > 2 * static_cast<std::size_t>(kMaxQubits)) {
    throw ValidationError("too many generators: " + std::to_string(generators.size()));
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].num_qubits() != n) {
      throw DimensionError("generator " + std::to_string(i) + " acts on " +
                           std::to_string(generators[i].num_qubits()) + " qubits, expected " +
                           std::to_string(n));
    }
    if (!generators[i].is_hermitian()) {
      throw ValidationError("not Hermitian " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!commutes(generators[i], generators[j])) {
        throw ValidationError("not commuting (" + std::to_string(i) + "," + std::to_string(j) +
                              ")");
      }
    }
  }
  SymplecticSolver solver(keys_of(generators));
  if (!solver.dependent_rows().empty()) {
    // A dependent generator either reproduces +I (redundant) or -I.
    const std::size_t i = solver.dependent_rows().front();
    const PauliOperator closure = product_of(generators, solver.kernel().front(), 0, n);
    if (closure.phase() == 2) throw ValidationError("group contains -identity");
    throw ValidationError("dependent generator " + std::to_string(i));
  }
  if (static_cast<int>(generators.size()) != n) {
    throw ValidationError("expected " + std::to_string(n) + " generators on " +
                          std::to_string(n) + " qubits, got " +
                          std::to_string(generators.size()));
  }
  return StabilizerGroup(n, std::move(generators), std::move(solver));
}

std::vector<PauliOperator> enumerate_elements(const StabilizerGroup& g) {
  const int n = g.num_qubits();
  if (n > 30) throw ResourceError("refusing to enumerate 2^" + std::to_string(n) + " elements");
  std::vector<PauliOperator> out(g.size(), PauliOperator(n));
  // out[k] = out[k without its top bit] * generator[top bit]
  for (std::uint64_t k = 1; k < g.size(); ++k) {
    const int top = 63 - std::countl_zero(k);
    out[k] = multiply(out[k ^ (std::uint64_t{1} << top)], g.generators()[top]);
  }
  return out;
}

StabilizerGroup basis_state_group(const StabilizerGroup& g, BasisLabel label) {
  std::vector<PauliOperator> gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if ((label.bits >> i) & 1) gens[i] = gens[i].negated();
  }
  return validate_group(std::move(gens));
}

IntersectionBasis intersection_basis(const StabilizerGroup& s, const StabilizerGroup& t) {
  check_same_size(s, t);
  const int n = s.num_qubits();
  std::vector<SymplecticKey> rows = keys_of(s.generators());
  const auto t_keys = keys_of(t.generators());
  rows.insert(rows.end(), t_keys.begin(), t_keys.end());
  const SymplecticSolver solver(rows);

  // Every left-kernel vector (a | b) gives a*S = b*T over the symplectic
  // rows; s's rows are independent, so the kernel maps injectively onto
  // S ∩ ±T.
  IntersectionBasis out;
  out.c = static_cast<int>(solver.kernel().size());
  bool any_negative = false;
  for (const RowCombination& combo : solver.kernel()) {
    const PauliOperator in_s = product_of(s.generators(), combo, 0, n);
    const PauliOperator in_t = product_of(t.generators(), combo, static_cast<std::size_t>(n), n);
    if (in_s.key() != in_t.key()) throw InternalError("intersection kernel vector mismatch");
    const int rel = in_s.sign() * in_t.sign();
    any_negative = any_negative || rel < 0;
    out.generators.push_back(in_s);
    out.relative_signs.push_back(rel);
  }
  // The relative sign is a homomorphism onto {±1}: trivial (p = c) or with
  // a kernel of index 2 (p = c - 1).
  out.p = any_negative ? out.c - 1 : out.c;
  return out;
}

Intersection intersect(const StabilizerGroup& s, const StabilizerGroup& t) {
  const IntersectionBasis basis = intersection_basis(s, t);
  const int n = s.num_qubits();
  if (basis.c > 30) throw ResourceError("intersection too large to expand");
  Intersection out;
  out.c = basis.c;
  out.p = basis.p;
  out.q = basis.c;
  const std::uint64_t count = std::uint64_t{1} << basis.c;
  for (std::uint64_t k = 0; k < count; ++k) {
    PauliOperator elem(n);
    int rel = 1;
    for (int i = 0; i < basis.c; ++i) {
      if ((k >> i) & 1) {
        elem = multiply(elem, basis.generators[i]);
        rel *= basis.relative_signs[i];
      }
    }
    (rel > 0 ? out.s_plus : out.s_minus).push_back(elem);
  }
  return out;
}

Intersection intersect_by_enumeration(const StabilizerGroup& s, const StabilizerGroup& t) {
  check_same_size(s, t);
  std::unordered_map<SymplecticKey, int> t_signs;
  for (const PauliOperator& e : enumerate_elements(t)) t_signs.emplace(e.key(), e.sign());
  Intersection out;
  for (const PauliOperator& e : enumerate_elements(s)) {
    const auto it = t_signs.find(e.key());
    if (it == t_signs.end()) continue;
    (it->second == e.sign() ? out.s_plus : out.s_minus).push_back(e);
  }
  const auto log2_exact = [](std::size_t v) {
    if (v == 0 || (v & (v - 1)) != 0) throw InternalError("subgroup size not a power of two");
    return std::countr_zero(v);
  };
  out.p = log2_exact(out.s_plus.size());
  out.q = log2_exact(out.s_plus.size() + out.s_minus.size());
  out.c = out.q;
  return out;
}

OverlapReport overlap_squared(const StabilizerGroup& s, const StabilizerGroup& t) {
  const IntersectionBasis basis = intersection_basis(s, t);
  const int n = s.num_qubits();
  if (n > 62) throw ResourceError("overlap of groups above 62 qubits overflows");
  OverlapReport report;
  report.p = basis.p;
  report.q = basis.c;
  if (report.p < report.q - 1) {
    throw InternalError("signed intersection with p < q - 1");
  }
  const std::int64_t numerator = (std::int64_t{1} << (report.p + 1)) - (std::int64_t{1} << report.q);
  report.overlap_squared = Dyadic(numerator, n);
  return report;
}

int stabilizer_expectation(const StabilizerGroup& g, const PauliOperator& a) {
  if (a.num_qubits() != g.num_qubits()) {
    throw DimensionError("observable acts on " + std::to_string(a.num_qubits()) +
                         " qubits, group on " + std::to_string(g.num_qubits()));
  }
  if (!a.is_hermitian()) throw ValidationError("observable " + a.str() + " is not Hermitian");
  const auto elem = g.find(a.key());
  if (!elem) return 0;
  return elem->sign() * a.sign();
}

double max_basis_overlap(const StabilizerGroup& s, const StabilizerGroup& t) {
  const int c = intersection_basis(s, t).c;
  return std::exp2(-0.5 * (s.num_qubits() - c));
}

double mu_bound_stabilizer(const StabilizerGroup& s, const StabilizerGroup& t) {
  const int c = intersection_basis(s, t).c;
  return 0.5 * (s.num_qubits() - c);
}

}  // namespace stabur
