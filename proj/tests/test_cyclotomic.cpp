// Copyright 2026 The cliffatlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "cliffatlas/cyclotomic.hpp"
#include "cliffatlas/rational.hpp"
#include "oracles.hpp"

using cliffatlas::Cyclotomic;
using cliffatlas::Rational;
using Complex = std::complex<double>;

namespace {

Cyclotomic zeta(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

using cliffatlas::oracle::approx_equal;
using cliffatlas::oracle::random_cyclotomic;

}  // namespace

TEST_CASE("rationals are stored in lowest terms") {
  Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  Rational zero(0, 7);
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(zero == Rational(0));
  CHECK(Rational::parse("-3/2") == a);
  CHECK(a.to_string() == "-3/2");
  CHECK(Rational(4).to_string() == "4/1");
  CHECK(Rational(4).pretty() == "4");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("roots of unity reduce to their minimal conductor") {
  CHECK(zeta(1, 0).is_one());
  CHECK(zeta(8, 2) == zeta(4, 1));
  CHECK(zeta(8, 2).conductor() == 4);
  CHECK(zeta(7, 7).is_one());
  CHECK(zeta(6, 3) == Cyclotomic(-1));
  CHECK(zeta(12, 4).conductor() == 3);
}

TEST_CASE("field operations on small examples") {
  CHECK((zeta(8) * zeta(8, 7)).is_one());
  const Cyclotomic s = zeta(8) + zeta(8, -1);
  CHECK(s * s == Cyclotomic(2));
  CHECK(zeta(7, 3).conj() == zeta(7, 4));
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), std::domain_error);
  CHECK((zeta(5) + Cyclotomic(2)).inverse() * (zeta(5) + Cyclotomic(2)) == Cyclotomic(1));
}

TEST_CASE("named square roots") {
  const Cyclotomic r2 = Cyclotomic::sqrt_named(2);
  CHECK(r2 * r2 == Cyclotomic(2));
  CHECK(r2 == zeta(8) + zeta(8, -1));

  const Cyclotomic r3 = Cyclotomic::sqrt_named(3);
  CHECK(r3 * r3 == Cyclotomic(3));
  CHECK(r3.to_complex().real() > 0);

  const Cyclotomic rm3 = Cyclotomic::sqrt_named(-3);
  CHECK(rm3 * rm3 == Cyclotomic(-3));
  CHECK(rm3 == zeta(3) - zeta(3, 2));

  // Gauss sum for 7, expanded by hand in Z[x]/(x^7 - 1): the 36 products
  // chi(j) chi(k) x^(j+k) give coefficient a0 = -6 at x^0 and a_m = 1 elsewhere,
  // and 1 + x + ... + x^6 = 0 turns a0 - a1 into the value -7.
  int coeff[7] = {0, 0, 0, 0, 0, 0, 0};
  auto chi = [](int k) { return (k == 1 || k == 2 || k == 4) ? 1 : -1; };
  for (int j = 1; j <= 6; ++j) {
    for (int k = 1; k <= 6; ++k) coeff[(j + k) % 7] += chi(j) * chi(k);
  }
  for (int m = 2; m < 7; ++m) REQUIRE(coeff[m] == coeff[1]);
  const int gauss_square = coeff[0] - coeff[1];
  CHECK(gauss_square == -7);
  const Cyclotomic rm7 = Cyclotomic::sqrt_named(-7);
  CHECK(rm7 * rm7 == Cyclotomic(gauss_square));
  CHECK(rm7.to_complex().imag() > 0);

  const Cyclotomic r5 = Cyclotomic::sqrt_named(5);
  CHECK(r5.to_complex().real() > 0);
  const Cyclotomic phi = (Cyclotomic(1) + r5) * Cyclotomic(Rational(1, 2));
  CHECK(phi * phi == phi + Cyclotomic(1));

  CHECK_THROWS_AS(Cyclotomic::sqrt_named(11), std::domain_error);
}

TEST_CASE("canonical text round-trips") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Cyclotomic a = random_cyclotomic(rng).exact;
    const std::string text = a.to_string();
    CHECK(Cyclotomic::parse(text) == a);
    CHECK(Cyclotomic::parse(text).to_string() == text);
  }
  CHECK(zeta(8).to_string().rfind("c8:", 0) == 0);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20260101);
  for (int k = 0; k < 1000; ++k) {
    const auto a = random_cyclotomic(rng);
    const auto b = random_cyclotomic(rng);
    const auto c = random_cyclotomic(rng);
    REQUIRE(approx_equal(a.exact, a.approx));
    REQUIRE((a.exact + b.exact) + c.exact == a.exact + (b.exact + c.exact));
    REQUIRE((a.exact * b.exact) * c.exact == a.exact * (b.exact * c.exact));
    REQUIRE(a.exact + b.exact == b.exact + a.exact);
    REQUIRE(a.exact * b.exact == b.exact * a.exact);
    REQUIRE(a.exact * (b.exact + c.exact) == a.exact * b.exact + a.exact * c.exact);
    REQUIRE(approx_equal(a.exact * b.exact + c.exact, a.approx * b.approx + c.approx));
    REQUIRE(a.exact - a.exact == Cyclotomic(0));
    REQUIRE(a.exact.conj().conj() == a.exact);
    REQUIRE((a.exact * b.exact).conj() == a.exact.conj() * b.exact.conj());
    REQUIRE(approx_equal(a.exact.conj(), std::conj(a.approx)));
    const Cyclotomic norm = a.exact * a.exact.conj();
    REQUIRE(norm.conj() == norm);
    REQUIRE(norm.is_rational() == (norm.conj() == norm && norm.to_rational().has_value()));
    REQUIRE(Cyclotomic::parse(a.exact.to_string()) == a.exact);
    REQUIRE(std::hash<Cyclotomic>{}(a.exact) == std::hash<Cyclotomic>{}(Cyclotomic::parse(a.exact.to_string())));
  }
}

TEST_CASE("inverses of random nonzero values") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 1000; ++k) {
    const auto a = random_cyclotomic(rng, true);
    const Cyclotomic inv = a.exact.inverse();
    REQUIRE((a.exact * inv).is_one());
    REQUIRE(approx_equal(inv, Complex(1) / a.approx));
  }
}
