#include "kspec/pentagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace kspec {

Pentagram build_pentagram() {
  Pentagram p;
  const char* names[10] = {"XII", "IXI", "IIX", "ZII", "IZI",
                           "IIZ", "XXZ", "XZX", "ZXX", "ZZZ"};
  for (int i = 0; i < 10; ++i) p.observables[i] = observable_from_letters(names[i]);
  // line order of the five product constraints, horizontal (all-Z) last
  p.contexts = {{
      {0, 1, 5, 6},  // X1 X2 Z3 XXZ
      {0, 4, 2, 7},  // X1 Z2 X3 XZX
      {3, 1, 2, 8},  // Z1 X2 X3 ZXX
      {3, 4, 5, 9},  // Z1 Z2 Z3 ZZZ
      {9, 8, 7, 6},  // ZZZ ZXX XZX XXZ
  }};
  p.horizontal_context = 4;
  return p;
}

namespace {

// product over a context in order; returns {is_sign, sign}
std::pair<bool, int> context_product_sign(const Pentagram& p, const std::array<int, 4>& ctx) {
  PauliObservable prod{p.observables[0].n_qubits, 0, 0, 0};  // identity
  for (int id : ctx) prod = multiply(prod, p.observables[id]);
  if (prod.x_mask != 0 || prod.z_mask != 0) return {false, 0};
  const int e = ((prod.phase_exp % 4) + 4) % 4;
  if (e == 0) return {true, 1};
  if (e == 2) return {true, -1};
  return {false, 0};
}

}  // namespace

PentagramReport verify_pentagram(const Pentagram& p) {
  PentagramReport r;

  r.observables_ok = true;
  for (int i = 0; i < 10; ++i) {
    const auto& o = p.observables[i];
    if (o.is_identity() || !o.is_hermitian()) r.observables_ok = false;
    for (int j = i + 1; j < 10; ++j)
      if (o == p.observables[j]) r.observables_ok = false;
  }

  r.membership.fill(0);
  for (const auto& ctx : p.contexts)
    for (int id : ctx) ++r.membership[id];
  r.membership_ok =
      r.observables_ok &&
      std::all_of(r.membership.begin(), r.membership.end(), [](int c) { return c == 2; });

  r.commutation_ok = true;
  for (int k = 0; k < 5; ++k) {
    auto& cc = r.context_checks[k];
    cc.mutually_commute = true;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (!commutes(p.observables[p.contexts[k][a]], p.observables[p.contexts[k][b]]))
          cc.mutually_commute = false;
    if (!cc.mutually_commute) r.commutation_ok = false;

    auto [is_sign, sign] = context_product_sign(p, p.contexts[k]);
    cc.product_is_sign = is_sign;
    cc.product_sign = sign;
  }

  r.products_ok = true;
  for (int k = 0; k < 5; ++k) {
    const auto& cc = r.context_checks[k];
    const int expected = (k == p.horizontal_context) ? -1 : 1;
    if (!cc.product_is_sign || cc.product_sign != expected) r.products_ok = false;
  }
  return r;
}

SignSystem sign_system_of(const Pentagram& p) {
  SignSystem s;
  s.n_vars = 10;
  for (int k = 0; k < 5; ++k) {
    auto [is_sign, sign] = context_product_sign(p, p.contexts[k]);
    if (!is_sign)
      throw std::invalid_argument("sign_system_of: context product is not +-I");
    s.contexts.push_back({p.contexts[k].begin(), p.contexts[k].end()});
    s.targets.push_back(sign);
  }
  return s;
}

std::uint64_t count_sign_assignments(const SignSystem& sys) {
  if (sys.n_vars < 0 || sys.n_vars > 30)
    throw std::invalid_argument("count_sign_assignments: variable count out of range");
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << sys.n_vars;
  for (std::uint64_t m = 0; m < total; ++m) {
    bool ok = true;
    for (std::size_t c = 0; c < sys.contexts.size() && ok; ++c) {
      int prod = 1;
      for (int v : sys.contexts[c])
        if ((m >> v) & 1) prod = -prod;
      ok = prod == sys.targets[c];
    }
    count += ok;
  }
  return count;
}

std::uint64_t count_sign_assignments(const Pentagram& p) {
  return count_sign_assignments(sign_system_of(p));
}

bool parity_shortcut_refutes(const SignSystem& sys) {
  std::vector<int> mult(sys.n_vars, 0);
  for (const auto& ctx : sys.contexts)
    for (int v : ctx) ++mult[v];
  if (!std::all_of(mult.begin(), mult.end(), [](int m) { return m % 2 == 0; })) return false;
  int t = 1;
  for (int s : sys.targets) t *= s;
  return t == -1;
}

}  // namespace kspec
