#include "kspec/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace kspec {

namespace {
int popcount(unsigned v) { return std::popcount(v); }
}  // namespace

bool PauliObservable::is_hermitian() const {
  return (phase_exp % 2 + 2) % 2 == popcount(x_mask & z_mask) % 2;
}

std::string PauliObservable::name() const {
  // factor out the phase of i^e * X^x * Z^z relative to the Hermitian letters
  std::string s;
  int e = ((phase_exp % 4) + 4) % 4;
  for (int q = 0; q < n_qubits; ++q) {
    const unsigned bit = 1u << (n_qubits - 1 - q);
    const bool x = x_mask & bit, z = z_mask & bit;
    if (x && z) {
      s += 'Y';
      e = (e + 3) % 4;  // Y = i*X*Z, so one i was spent forming the letter
    } else {
      s += x ? 'X' : (z ? 'Z' : 'I');
    }
  }
  static const char* prefix[4] = {"", "i", "-", "-i"};
  return prefix[e] + s;
}

PauliObservable observable_from_letters(std::string_view letters) {
  PauliObservable p;
  p.n_qubits = static_cast<int>(letters.size());
  if (p.n_qubits == 0) throw std::invalid_argument("observable_from_letters: empty string");
  for (int q = 0; q < p.n_qubits; ++q) {
    const unsigned bit = 1u << (p.n_qubits - 1 - q);
    switch (letters[q]) {
      case 'I': break;
      case 'X': p.x_mask |= bit; break;
      case 'Z': p.z_mask |= bit; break;
      case 'Y':
        p.x_mask |= bit;
        p.z_mask |= bit;
        p.phase_exp = (p.phase_exp + 1) % 4;
        break;
      default:
        throw std::invalid_argument("observable_from_letters: bad letter '" +
                                    std::string(1, letters[q]) + "'");
    }
  }
  return p;
}

PauliObservable multiply(const PauliObservable& a, const PauliObservable& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("multiply: mismatched qubit counts");
  PauliObservable r;
  r.n_qubits = a.n_qubits;
  r.x_mask = a.x_mask ^ b.x_mask;
  r.z_mask = a.z_mask ^ b.z_mask;
  // reorder Z^za X^xb: each crossing pair contributes a factor -1 = i^2
  r.phase_exp = (a.phase_exp + b.phase_exp + 2 * popcount(a.z_mask & b.x_mask)) % 4;
  return r;
}

bool commutes(const PauliObservable& a, const PauliObservable& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("commutes: mismatched qubit counts");
  return (popcount(a.x_mask & b.z_mask) + popcount(a.z_mask & b.x_mask)) % 2 == 0;
}

ExactMatrix to_matrix(const PauliObservable& a) {
  if (!a.is_real())
    throw std::invalid_argument("to_matrix: " + a.name() +
                                " has no real realization (unpaired sigma_y)");
  const int dim = 1 << a.n_qubits;
  const std::int64_t sign = (((a.phase_exp % 4) + 4) % 4 == 2) ? -1 : 1;
  ExactMatrix m(dim, 1);
  for (int col = 0; col < dim; ++col) {
    const std::int64_t s = popcount(a.z_mask & static_cast<unsigned>(col)) % 2 ? -1 : 1;
    m.at(static_cast<int>(col ^ a.x_mask), col) = sign * s;
  }
  return m;
}

}  // namespace kspec
