#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "charzero/cyclotomic.hpp"

using namespace charzero;

namespace {

Cyclotomic zeta(long long e, long long j) { return Cyclotomic::zeta_power(e, j); }

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST_CASE("small cyclotomic polynomials are the textbook ones") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(15) ==
        std::vector<long long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
}

TEST_CASE("product of cyclotomic polynomials over divisors gives x^e - 1") {
  for (long long e = 1; e <= 60; ++e) {
    CAPTURE(e);
    std::vector<long long> prod{1};
    for (long long d = 1; d <= e; ++d)
      if (e % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    std::vector<long long> want(e + 1, 0);
    want[0] = -1;
    want[e] = 1;
    CHECK(prod == want);
  }
}

TEST_CASE("vanishing sums of roots of unity") {
  const Cyclotomic zero = Cyclotomic::integer(0, 3);
  CHECK(Cyclotomic::integer(1, 3) + zeta(3, 1) + zeta(3, 2) == zero);
  CHECK((zeta(4, 1) + zeta(4, 3)).is_zero());
  CHECK(!(Cyclotomic::integer(1, 5) + zeta(5, 1)).is_zero());
  // full sum over any conductor vanishes
  for (long long e : {5, 8, 12, 30}) {
    Cyclotomic s = Cyclotomic::integer(0, e);
    for (long long j = 0; j < e; ++j) s = s + zeta(e, j);
    CHECK(s.is_zero());
  }
}

TEST_CASE("zeta powers wrap and multiply") {
  CHECK(zeta(5, 7) == zeta(5, 2));
  CHECK(zeta(6, 3) == Cyclotomic::integer(-1, 6));
  CHECK(zeta(4, 1) * zeta(4, 1) == Cyclotomic::integer(-1, 4));
  CHECK(zeta(12, 5) * zeta(12, 7) == Cyclotomic::integer(1, 12));
  for (long long j = 0; j < 15; ++j)
    CHECK(zeta(15, j) * zeta(15, 15 - j % 15) == Cyclotomic::integer(1, 15));
}

TEST_CASE("ring axioms on a sample of elements") {
  const long long e = 12;
  const std::vector<Cyclotomic> sample{
      Cyclotomic::integer(0, e),  Cyclotomic::integer(3, e),   zeta(e, 1),
      zeta(e, 5) * -2 + zeta(e, 2), Cyclotomic::from_coeffs(e, {1, -1, 2, 0}),
      Cyclotomic::from_coeffs(e, {0, 0, 1, 1})};
  for (const auto& a : sample)
    for (const auto& b : sample) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - b == -(b - a));
      for (const auto& c : sample) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
}

TEST_CASE("integers embed across conductors") {
  CHECK(Cyclotomic::integer(7) == Cyclotomic::integer(7, 30));
  CHECK(Cyclotomic::integer(2) + zeta(5, 1) == zeta(5, 1) + Cyclotomic::integer(2, 5));
  CHECK((Cyclotomic::integer(3) * zeta(8, 1)).conductor() == 8);
  // non-integers with different conductors refuse to mix
  CHECK_THROWS_AS(zeta(3, 1) + zeta(4, 1), std::invalid_argument);
  CHECK(zeta(3, 1) != zeta(4, 1));
}

TEST_CASE("canonical reduction recognizes rewritings") {
  // zeta_6 = 1 + zeta_3 rewritten into conductor 6: zeta_6^2 = zeta_6 - 1
  CHECK(zeta(6, 1) * zeta(6, 1) == zeta(6, 1) - Cyclotomic::integer(1, 6));
  // zeta_15^5 is a primitive cube root: 1 + z^5 + z^10 = 0
  CHECK((Cyclotomic::integer(1, 15) + zeta(15, 5) + zeta(15, 10)).is_zero());
  CHECK(Cyclotomic::from_coeffs(15, std::vector<long long>(15, 1)).is_zero());
}

TEST_CASE("conjugation is an involutive ring automorphism") {
  const std::vector<Cyclotomic> sample{zeta(12, 1), zeta(12, 5) + Cyclotomic::integer(2, 12),
                                       Cyclotomic::from_coeffs(12, {3, 1, 0, -2})};
  for (const auto& a : sample) {
    CHECK(a.conjugated().conjugated() == a);
    for (const auto& b : sample) {
      CHECK((a + b).conjugated() == a.conjugated() + b.conjugated());
      CHECK((a * b).conjugated() == a.conjugated() * b.conjugated());
    }
  }
  CHECK(zeta(5, 1).conjugated() == zeta(5, 4));
  CHECK(Cyclotomic::integer(9, 7).conjugated() == Cyclotomic::integer(9, 7));
  // norm of a root of unity is 1
  CHECK(zeta(8, 3) * zeta(8, 3).conjugated() == Cyclotomic::integer(1, 8));
}

TEST_CASE("integer detection sees through the basis") {
  CHECK(Cyclotomic::integer(5, 12).is_integer());
  CHECK(Cyclotomic::integer(5, 12).integer_value() == 5);
  // 1 + zeta_3 + zeta_3^2 + 4 collapses to 4... written with raw exponents
  const Cyclotomic v = Cyclotomic::from_coeffs(3, {5, 1, 1});
  CHECK(v.is_integer());
  CHECK(v.integer_value() == 4);
  CHECK(!zeta(5, 2).is_integer());
  CHECK(zeta(2, 1).is_integer());  // conductor 2 means -1 is an integer
  CHECK(zeta(2, 1).integer_value() == -1);
}

TEST_CASE("numeric approximations match the exact values") {
  const double pi = 3.14159265358979323846;
  for (long long e : {3, 5, 8, 12}) {
    for (long long j = 0; j < e; ++j) {
      const Cyclotomic z = zeta(e, j);
      CHECK(std::abs(z.approx_real() - std::cos(2 * pi * j / e)) < 1e-9);
      CHECK(std::abs(z.approx_imag() - std::sin(2 * pi * j / e)) < 1e-9);
    }
  }
  // golden ratio from the 5th roots: 1 + zeta_5 + zeta_5^4 = (1+sqrt 5)/2
  const Cyclotomic phi = Cyclotomic::integer(1, 5) + zeta(5, 1) + zeta(5, 4);
  CHECK(std::abs(phi.approx_real() - (1 + std::sqrt(5.0)) / 2) < 1e-9);
  CHECK(std::abs(phi.approx_imag()) < 1e-9);
}

TEST_CASE("rendering is stable and parseable by eye") {
  CHECK(Cyclotomic::integer(0, 6).str() == "0");
  CHECK(Cyclotomic::integer(-3, 6).str() == "-3");
  CHECK(zeta(6, 1).str() == "z6^1");
  CHECK((zeta(6, 1) * -2 + Cyclotomic::integer(1, 6)).str() == "1-2*z6^1");
}

TEST_CASE("ordering is a strict total order on distinct values") {
  const Cyclotomic a = Cyclotomic::integer(1, 5);
  const Cyclotomic b = zeta(5, 1);
  CHECK((a < b) != (b < a));
  CHECK(!(a < a));
}
