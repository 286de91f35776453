#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kspec/matrix.hpp"

namespace kspec {

/// n-qubit Pauli tensor product in symplectic form: i^phase_exp * X^x * Z^z,
/// where X^x applies sigma_x on every qubit whose bit is set in x_mask and
/// likewise for Z. A Y factor contributes both bits plus one unit of phase
/// (sigma_y = i * X * Z).
///
/// Mask bits live in computational-index space: qubit 1 (the leftmost letter)
/// owns the highest of the low n_qubits bits, so a basis state index is
/// 4*b1 + 2*b2 + b3 for three qubits.
struct PauliObservable {
  int n_qubits = 0;
  unsigned x_mask = 0;
  unsigned z_mask = 0;
  int phase_exp = 0;  // exponent of i, mod 4

  bool operator==(const PauliObservable&) const = default;

  bool is_identity() const { return x_mask == 0 && z_mask == 0 && phase_exp == 0; }
  /// Hermitian iff the phase compensates the Y count: (-1)^phase == (-1)^|x&z|.
  bool is_hermitian() const;
  /// True when the matrix realization is real: i^phase is +-1. An unpaired Y
  /// factor leaves an odd phase and hence a complex matrix.
  bool is_real() const { return phase_exp % 2 == 0; }

  /// Letter string like "XIZ"; phase prefix ("-", "i", "-i") when nontrivial.
  std::string name() const;
};

/// Parse a per-qubit letter string over {I,X,Y,Z}, e.g. "XII" for sigma_x^1.
PauliObservable observable_from_letters(std::string_view letters);

/// Symplectic product with exact phase tracking; matrix(multiply(a,b)) equals
/// matrix(a)*matrix(b).
PauliObservable multiply(const PauliObservable& a, const PauliObservable& b);

/// True iff the symplectic form <a,b> = |a.x & b.z| + |a.z & b.x| is even.
bool commutes(const PauliObservable& a, const PauliObservable& b);

/// Exact 2^n x 2^n integer matrix realization. Only the real pathway is
/// implemented; an observable with odd phase (complex realization) is
/// rejected.
ExactMatrix to_matrix(const PauliObservable& a);

}  // namespace kspec
