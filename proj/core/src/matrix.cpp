#include "kspec/matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kspec {

ExactMatrix::ExactMatrix(int dim, std::int64_t den)
    : dim_(dim), den_(den), num_(static_cast<std::size_t>(dim) * dim, 0) {
  if (dim <= 0) throw std::invalid_argument("ExactMatrix: dimension must be positive");
  if (den <= 0) throw std::invalid_argument("ExactMatrix: denominator must be positive");
}

ExactMatrix ExactMatrix::identity(int dim) {
  ExactMatrix m(dim, 1);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::zero(int dim) { return ExactMatrix(dim, 1); }

ExactMatrix ExactMatrix::projector(std::span<const int> ray) {
  const int n = static_cast<int>(ray.size());
  std::int64_t nrm = 0;
  for (int c : ray) nrm += static_cast<std::int64_t>(c) * c;
  if (nrm == 0) throw std::invalid_argument("projector: zero vector");
  ExactMatrix m(n, nrm);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<std::int64_t>(ray[i]) * ray[j];
  m.normalize();
  return m;
}

void ExactMatrix::normalize() {
  std::int64_t g = den_ < 0 ? -den_ : den_;
  for (std::int64_t v : num_) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1) {
    den_ /= g;
    for (auto& v : num_) v /= g;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("ExactMatrix: dimension mismatch");
  const std::int64_t d = std::lcm(den_, o.den_);
  const std::int64_t fa = d / den_, fb = d / o.den_;
  ExactMatrix r(dim_, d);
  for (std::size_t k = 0; k < num_.size(); ++k) r.num_[k] = fa * num_[k] + fb * o.num_[k];
  r.normalize();
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("ExactMatrix: dimension mismatch");
  const std::int64_t d = std::lcm(den_, o.den_);
  const std::int64_t fa = d / den_, fb = d / o.den_;
  ExactMatrix r(dim_, d);
  for (std::size_t k = 0; k < num_.size(); ++k) r.num_[k] = fa * num_[k] - fb * o.num_[k];
  r.normalize();
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("ExactMatrix: dimension mismatch");
  ExactMatrix r(dim_, den_ * o.den_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const std::int64_t a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < dim_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  r.normalize();
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (dim_ != o.dim_) return false;
  // both sides normalized, so direct comparison is exact
  return den_ == o.den_ && num_ == o.num_;
}

bool ExactMatrix::is_zero() const {
  for (std::int64_t v : num_)
    if (v != 0) return false;
  return true;
}

bool ExactMatrix::is_symmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool ExactMatrix::is_idempotent() const { return (*this) * (*this) == *this; }

std::int64_t ExactMatrix::trace_int() const {
  std::int64_t t = 0;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  if (t % den_ != 0) throw std::domain_error("trace_int: trace is not an integer");
  return t / den_;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) os << at(i, j) << (j + 1 == dim_ ? "" : " ");
    os << '\n';
  }
  if (den_ != 1) os << "/ " << den_ << '\n';
  return os.str();
}

}  // namespace kspec
