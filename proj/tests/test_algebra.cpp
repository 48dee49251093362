#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "splitoct/octonion.hpp"

using namespace splitoct;

namespace {

Octonion u(int i) { return Octonion::unit(i); }

Octonion random_oct(std::mt19937_64& rng, double range = 1e3) {
  std::uniform_real_distribution<double> d(-range, range);
  std::array<double, 8> c;
  for (auto& v : c) v = d(rng);
  return Octonion(c);
}

}  // namespace

TEST_CASE("structure table: identity row and column") {
  for (int b = 0; b < 8; ++b) {
    CHECK(basis_mul(0, b).sign == 1);
    CHECK(basis_mul(0, b).index == b);
    CHECK(basis_mul(b, 0).sign == 1);
    CHECK(basis_mul(b, 0).index == b);
  }
}

TEST_CASE("structure table: squares of the units") {
  for (int a = 1; a < 8; ++a) {
    const SignedUnit p = basis_mul(a, a);
    CHECK(p.index == 0);
    CHECK(p.sign == square_sign(a));
  }
  CHECK(square_sign(kJ1) == 1);
  CHECK(square_sign(kj2) == -1);
  CHECK(square_sign(kI) == 1);
}

TEST_CASE("structure table: antisymmetry for distinct hypercomplex units") {
  for (int a = 1; a < 8; ++a)
    for (int b = 1; b < 8; ++b) {
      if (a == b) continue;
      const SignedUnit ab = basis_mul(a, b), ba = basis_mul(b, a);
      CHECK(ab.index == ba.index);
      CHECK(ab.sign == -ba.sign);
    }
}

TEST_CASE("structure table: norm composition on every basis pair") {
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const SignedUnit p = basis_mul(a, b);
      CHECK(quadratic_sign(p.index) == quadratic_sign(a) * quadratic_sign(b));
    }
}

TEST_CASE("basis products from the defining relations") {
  // J1 J2 = +j3
  CHECK(basis_mul(kJ1, kJ2).sign == 1);
  CHECK(basis_mul(kJ1, kJ2).index == kj3);
  // 1 * I = I
  CHECK(basis_mul(0, kI).sign == 1);
  CHECK(basis_mul(0, kI).index == kI);
  // j3 J3 = -I (conjugate of J3 j3 = I)
  CHECK(basis_mul(kj3, kJ3).sign == -1);
  CHECK(basis_mul(kj3, kJ3).index == kI);
  // I I = +1
  CHECK(basis_mul(kI, kI).sign == 1);
  CHECK(basis_mul(kI, kI).index == 0);
  // the three representations of I: J_n j_n = I
  for (int n = 1; n <= 3; ++n) {
    CHECK(basis_mul(n, n + 3).sign == 1);
    CHECK(basis_mul(n, n + 3).index == kI);
  }
  // j_n = (1/2) eps_nmk J_m J_k, spot check j1 = J2 J3
  CHECK(basis_mul(kJ2, kJ3).sign == 1);
  CHECK(basis_mul(kJ2, kJ3).index == kj1);
}

TEST_CASE("multiplication: bilinearity and zero divisors") {
  const Octonion a = Octonion::scalar(1) + u(kJ1);
  const Octonion b = Octonion::scalar(1) - u(kJ1);
  CHECK(max_abs(a * b) == 0.0);  // (1+J1)(1-J1) = 0

  const Octonion s(0.5, -1, 2, 3, -4, 5, 0.25, -7);
  CHECK(max_abs(Octonion::scalar(1) * s - s) == 0.0);

  // (2 j1)(3 j2) = 6 j3
  CHECK(max_abs((2.0 * u(kj1)) * (3.0 * u(kj2)) - 6.0 * u(kj3)) == 0.0);
}

TEST_CASE("conjugation") {
  CHECK(max_abs(u(kJ1).conj() + u(kJ1)) == 0.0);
  CHECK(max_abs(Octonion::scalar(1).conj() - Octonion::scalar(1)) == 0.0);
  const Octonion s = Octonion::scalar(2) + 3.0 * u(kj2) - u(kI);
  const Octonion want = Octonion::scalar(2) - 3.0 * u(kj2) + u(kI);
  CHECK(max_abs(s.conj() - want) == 0.0);
  CHECK(max_abs(s.conj().conj() - s) == 0.0);
}

TEST_CASE("norm: (4,4) quadratic form") {
  CHECK(Octonion::scalar(1).norm() == 1.0);
  CHECK((Octonion::scalar(1) + u(kJ1)).norm() == 0.0);  // null element
  CHECK(Octonion(3, 2, 0, 0, 1, 0, 0, 2).norm() == 2.0);  // 9 - 4 + 1 - 4
  int pos = 0, neg = 0;
  for (int i = 0; i < 8; ++i) (quadratic_sign(i) > 0 ? pos : neg)++;
  CHECK(pos == 4);
  CHECK(neg == 4);
}

TEST_CASE("associator examples") {
  // (J1, J2, J3) -> -2I
  CHECK(max_abs(associator(u(kJ1), u(kJ2), u(kJ3)) + 2.0 * u(kI)) == 0.0);
  // quaternionic line (j1, j2, j3) associates
  CHECK(max_abs(associator(u(kj1), u(kj2), u(kj3))) == 0.0);
}

TEST_CASE("constructors reject non-finite coefficients") {
  CHECK_THROWS_AS(Octonion(0, 0, 0, std::nan(""), 0, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Octonion(std::numeric_limits<double>::infinity(), 0, 0, 0, 0, 0, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("random properties: composition algebra laws") {
  std::mt19937_64 rng(42);
  const double tol = 1e-9;
  for (int t = 0; t < 2000; ++t) {
    const Octonion a = random_oct(rng), b = random_oct(rng);

    const double want = a.norm() * b.norm();
    CHECK(std::abs((a * b).norm() - want) <= tol * (1 + std::abs(want)));

    const Octonion anti = (a * b).conj() - b.conj() * a.conj();
    CHECK(max_abs(anti) <= tol * (1 + max_abs(b.conj() * a.conj())));

    // a a+ is scalar and equals norm(a)
    const Octonion aa = a * a.conj();
    CHECK(std::abs(aa.scalar_part() - a.norm()) <= tol * (1 + std::abs(a.norm())));
    for (int i = 1; i < 8; ++i)
      CHECK(std::abs(aa[i]) <= tol * (1 + std::abs(a.norm())));

    // alternativity and flexibility
    CHECK(max_abs(a * (a * b) - (a * a) * b) <= tol * (1 + max_abs((a * a) * b)));
    CHECK(max_abs((a * b) * b - a * (b * b)) <= tol * (1 + max_abs(a * (b * b))));
    CHECK(max_abs(a * (b * a) - (a * b) * a) <= tol * (1 + max_abs((a * b) * a)));

    // associator vanishes on repeated arguments
    CHECK(max_abs(associator(a, a, b)) <= tol * (1 + max_abs(a) * max_abs(a) * max_abs(b)));
  }
}
