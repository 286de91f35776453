#include <array>
#include <stdexcept>

#include <doctest.h>

#include "kspec/matrix.hpp"

using kspec::ExactMatrix;

TEST_SUITE("matrix") {

TEST_CASE("identity and zero") {
  const auto id = ExactMatrix::identity(8);
  CHECK(id.dim() == 8);
  CHECK(id.den() == 1);
  CHECK(id.trace_int() == 8);
  CHECK(id.is_symmetric());
  CHECK(id.is_idempotent());
  CHECK_FALSE(id.is_zero());
  CHECK(ExactMatrix::zero(3).is_zero());
  CHECK_THROWS_AS(ExactMatrix(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ExactMatrix(2, 0), std::invalid_argument);
}

TEST_CASE("rank-1 projector") {
  const std::array<int, 8> e1 = {1, 0, 0, 0, 0, 0, 0, 0};
  const auto p = ExactMatrix::projector(e1);
  CHECK(p.den() == 1);
  CHECK(p.at(0, 0) == 1);
  CHECK(p.trace_int() == 1);
  CHECK(p.is_idempotent());

  const std::array<int, 8> diag = {1, 1, 1, 1, 0, 0, 0, 0};
  const auto q = ExactMatrix::projector(diag);
  CHECK(q.den() == 4);
  CHECK(q.is_symmetric());
  CHECK(q.is_idempotent());
  CHECK(q.trace_int() == 1);

  // scaling the ray does not change the projector
  const std::array<int, 8> scaled = {3, 3, 3, 3, 0, 0, 0, 0};
  CHECK(ExactMatrix::projector(scaled) == q);

  const std::array<int, 3> zero = {0, 0, 0};
  CHECK_THROWS_AS(ExactMatrix::projector(zero), std::invalid_argument);
}

TEST_CASE("arithmetic stays normalized") {
  const auto id = ExactMatrix::identity(2);
  const auto two = id + id;
  CHECK(two.den() == 1);
  CHECK(two.at(0, 0) == 2);
  CHECK(two - id == id);
  CHECK((id - id).is_zero());

  ExactMatrix half(2, 2);
  half.at(0, 0) = 1;
  half.at(1, 1) = 1;
  CHECK(half + half == id);      // 2/2 reduces to 1/1
  CHECK(half * two == id);       // denominators multiply then cancel
  CHECK(half * half * two * two == id);
}

TEST_CASE("multiplication associates, addition commutes") {
  ExactMatrix a(2, 1), b(2, 3), c(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(1, 0) = -1;
  b.at(0, 1) = 4; b.at(1, 0) = 5; b.at(1, 1) = -2;
  c.at(0, 0) = 3; c.at(1, 1) = 7; c.at(0, 1) = 1;
  a.normalize(); b.normalize(); c.normalize();
  CHECK((a * b) * c == a * (b * c));
  CHECK(a + b == b + a);
  CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("trace must be integral") {
  ExactMatrix h(2, 2);
  h.at(0, 0) = 1;  // trace 1/2
  CHECK_THROWS_AS(h.trace_int(), std::domain_error);
}

TEST_CASE("dimension mismatch is rejected") {
  const auto a = ExactMatrix::identity(2);
  const auto b = ExactMatrix::identity(3);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a - b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK(a != b);
}

}  // TEST_SUITE
