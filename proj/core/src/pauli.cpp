#include "stabur/pauli.hpp"

#include <bit>
#include <string>

#include "stabur/errors.hpp"

namespace stabur {

namespace {

void check_qubits(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxQubits) + "]");
  }
}

void check_same_size(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("Pauli operators act on " + std::to_string(p.num_qubits()) +
                         " and " + std::to_string(q.num_qubits()) + " qubits");
  }
}

}  // namespace

PauliOperator::PauliOperator(int num_qubits) : n_(num_qubits) { check_qubits(num_qubits); }

PauliOperator::PauliOperator(int num_qubits, std::uint64_t x, std::uint64_t z, int phase)
    : n_(num_qubits), x_(x), z_(z), phase_(((phase % 4) + 4) % 4) {
  check_qubits(num_qubits);
  if (((x | z) & ~low_mask(num_qubits)) != 0) {
    throw DimensionError("bit vector has bits beyond qubit " + std::to_string(num_qubits - 1));
  }
}

PauliOperator PauliOperator::parse(std::string_view text) {
  std::size_t pos = 0;
  int phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      phase += 1;
      ++pos;
    }
  }
  const std::size_t body = pos;
  const std::size_t n = text.size() - body;
  if (n == 0) {
    throw ParseError("empty Pauli string body at position " + std::to_string(body), body);
  }
  if (n > static_cast<std::size_t>(kMaxQubits)) {
    throw ParseError("Pauli string longer than " + std::to_string(kMaxQubits) + " qubits",
                     body + kMaxQubits);
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[body + q]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        phase += 1;
        break;
      default:
        throw ParseError("invalid Pauli character '" + std::string(1, text[body + q]) +
                             "' at position " + std::to_string(body + q),
                         body + q);
    }
  }
  return PauliOperator(static_cast<int>(n), x, z, phase);
}

PauliOperator PauliOperator::single(int num_qubits, int qubit, char letter) {
  if (qubit < 0 || qubit >= num_qubits) {
    throw DimensionError("qubit index " + std::to_string(qubit) + " out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (letter) {
    case 'I':
      return PauliOperator(num_qubits);
    case 'X':
      return PauliOperator(num_qubits, bit, 0);
    case 'Z':
      return PauliOperator(num_qubits, 0, bit);
    case 'Y':
      return PauliOperator(num_qubits, bit, bit, 1);
    default:
      throw ParseError(std::string("invalid Pauli letter '") + letter + "'", 0);
  }
}

int PauliOperator::y_count() const { return std::popcount(x_ & z_); }

int PauliOperator::weight() const { return std::popcount(x_ | z_); }

int PauliOperator::rendered_phase() const { return ((phase_ - y_count()) % 4 + 4) % 4; }

bool PauliOperator::is_hermitian() const { return rendered_phase() % 2 == 0; }

int PauliOperator::sign() const {
  if (!is_hermitian()) {
    throw ValidationError("operator " + str() + " is not Hermitian");
  }
  return rendered_phase() == 0 ? 1 : -1;
}

PauliOperator PauliOperator::negated() const { return PauliOperator(n_, x_, z_, phase_ + 2); }

PauliOperator PauliOperator::with_sign(int s) const {
  return PauliOperator(n_, x_, z_, y_count() + (s < 0 ? 2 : 0));
}

std::string PauliOperator::str() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[rendered_phase()];
  out.reserve(out.size() + n_);
  for (int q = 0; q < n_; ++q) {
    const bool xb = (x_ >> q) & 1;
    const bool zb = (z_ >> q) & 1;
    out.push_back(xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I'));
  }
  return out;
}

PauliOperator parse_pauli(std::string_view text) { return PauliOperator::parse(text); }

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  check_same_size(p, q);
  // Z^a X^b = (-1)^{a.b} X^b Z^a moves q's X-part left past p's Z-part.
  const int swap_sign = std::popcount(p.z() & q.x()) & 1;
  return PauliOperator(p.num_qubits(), p.x() ^ q.x(), p.z() ^ q.z(),
                       p.phase() + q.phase() + 2 * swap_sign);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  check_same_size(p, q);
  return !anticommute_keys(p.key(), q.key());
}

TraceValue trace_inner(const PauliOperator& p, const PauliOperator& q) {
  check_same_size(p, q);
  const PauliOperator r = multiply(p, q);
  if (!r.is_identity_up_to_phase()) return {};
  if (p.num_qubits() > 62) {
    throw ResourceError("trace of a " + std::to_string(p.num_qubits()) +
                        "-qubit operator overflows 64-bit integers");
  }
  const std::int64_t d = std::int64_t{1} << p.num_qubits();
  switch (r.phase()) {
    case 0:
      return {d, 0};
    case 1:
      return {0, d};
    case 2:
      return {-d, 0};
    default:
      return {0, -d};
  }
}

}  // namespace stabur
