#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "kspec/pauli.hpp"

namespace kspec {

/// The ten three-qubit observables and five four-element contexts of the
/// Mermin pentagram. Contexts are ordered as the five product constraints
/// are usually written, with the all-Z "horizontal" line last; its operator
/// product is -I while every other context multiplies to +I.
struct Pentagram {
  std::array<PauliObservable, 10> observables;
  std::array<std::array<int, 4>, 5> contexts;  // observable ids, 0-based
  int horizontal_context = 4;
};

Pentagram build_pentagram();

struct PentagramReport {
  struct ContextCheck {
    bool mutually_commute = false;
    bool product_is_sign = false;  // product reduces to +I or -I
    int product_sign = 0;          // +1 / -1 when product_is_sign
  };
  std::array<ContextCheck, 5> context_checks;
  std::array<int, 10> membership{};  // contexts containing each observable id
  bool observables_ok = false;       // pairwise distinct, Hermitian, non-identity
  bool membership_ok = false;        // observables_ok and every count == 2
  bool commutation_ok = false;
  bool products_ok = false;          // signs (+,+,+,+) with -1 exactly at horizontal
  bool all_ok() const { return membership_ok && commutation_ok && products_ok; }
};

/// Structural report; never throws on a malformed pentagram, it flags instead.
PentagramReport verify_pentagram(const Pentagram& p);

/// Product constraints v(o_1)...v(o_k) = target over +-1-valued variables.
struct SignSystem {
  int n_vars = 0;
  std::vector<std::vector<int>> contexts;  // variable ids per constraint
  std::vector<int> targets;                // +1 / -1 per constraint
};

/// Exhaustive count of satisfying +-1 assignments (2^n_vars scan).
std::uint64_t count_sign_assignments(const SignSystem& sys);

/// The pentagram's product-constraint system: one constraint per context,
/// target = the exact operator product sign. Throws if some context product
/// is not +-I.
SignSystem sign_system_of(const Pentagram& p);

/// Count for the pentagram itself; 0 for build_pentagram().
std::uint64_t count_sign_assignments(const Pentagram& p);

/// Parity shortcut: if every variable occurs an even number of times and the
/// product of targets is -1, no assignment can exist. Sufficient, not
/// necessary; the brute-force count is the primary path.
bool parity_shortcut_refutes(const SignSystem& sys);

}  // namespace kspec
