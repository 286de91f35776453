#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kspec {

/// Square integer matrix scaled by a single positive denominator.
///
/// Every value this project manipulates (observables, rank-1 and rank-2
/// projectors, partial products of eigenspace filters) is representable as
/// num / den with small integer entries, so all arithmetic is exact.
/// Matrices are kept in normalized form: gcd(entries, den) == 1, den > 0.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int dim, std::int64_t den);

  static ExactMatrix identity(int dim);
  static ExactMatrix zero(int dim);

  /// r * r^T / (r . r), the rank-1 projector onto an integer vector.
  static ExactMatrix projector(std::span<const int> ray);

  int dim() const { return dim_; }
  std::int64_t den() const { return den_; }
  std::int64_t& at(int r, int c) { return num_[static_cast<std::size_t>(r) * dim_ + c]; }
  std::int64_t at(int r, int c) const { return num_[static_cast<std::size_t>(r) * dim_ + c]; }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_symmetric() const;
  /// M * M == M in exact arithmetic (num*num == den*num after scaling).
  bool is_idempotent() const;
  /// Trace as an exact integer; throws if trace is not divisible by den.
  std::int64_t trace_int() const;

  /// Divide num and den by their common gcd; fix den's sign. Applied by all
  /// arithmetic, public for matrices built via at().
  void normalize();

  std::string to_string() const;

 private:
  int dim_ = 0;
  std::int64_t den_ = 1;
  std::vector<std::int64_t> num_;
};

}  // namespace kspec
