/*
   Copyright 2026 The dgf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dgf/errors.hpp"
#include "dgf/xpoly.hpp"

using namespace dgf;

namespace {

const PrimePoly P = PrimePoly::p();

} // namespace

TEST_CASE("prime poly arithmetic")
{
    PrimePoly a = P * P + P + 1;
    CHECK(a.to_string() == "p^2 + p + 1");
    CHECK(a.degree() == 2);
    CHECK(a.low_degree() == 0);
    CHECK((a - a).is_zero());
    CHECK((a * (P - 1)) == P.pow(3) - 1);
    CHECK(a.coeff(1) == 1);
    CHECK(a.coeff(7) == 0);
    CHECK(a.term_count() == 3);
    CHECK(PrimePoly(0).is_zero());
    CHECK(PrimePoly(5).is_constant());
    CHECK(P.pow(0) == PrimePoly(1));
}

TEST_CASE("zero coefficients are never stored")
{
    PrimePoly a = P.pow(3) + P;
    PrimePoly b = a - P.pow(3);
    CHECK(b == P);
    CHECK(b.degree() == 1);
    CHECK(b.low_degree() == 1);
    CHECK(b.term_count() == 1);
}

TEST_CASE("laurent shifts")
{
    PrimePoly a = P + 1;
    PrimePoly b = a.shifted(-3);
    CHECK(b.low_degree() == -3);
    CHECK(b.degree() == -2);
    CHECK(b.shifted(3) == a);
    CHECK(b.to_string() == "p^(-2) + p^(-3)");
    CHECK(b.evaluate_rational(2) == BigRational(3, 8));
    CHECK_THROWS_AS(b.evaluate(2), DomainError);
}

TEST_CASE("exact evaluation at primes")
{
    PrimePoly a = P.pow(40) - 1;
    BigInt expected = 1;
    expected <<= 40;
    CHECK(a.evaluate(2) == expected - 1);
    CHECK(a.evaluate(3) == BigInt("12157665459056928800"));
}

TEST_CASE("scaled evaluation does not overflow")
{
    PrimePoly a = P.pow(500);
    double v = a.evaluate_scaled(std::log(2.0), -500.0);
    CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("exact division")
{
    PrimePoly num = P.pow(4) - 1;
    auto q = num.exact_div(P - 1);
    REQUIRE(q);
    CHECK(*q == P.pow(3) + P * P + P + 1);
    CHECK_FALSE(num.exact_div(P - 2));
    CHECK_FALSE(PrimePoly(3).exact_div(2));
    auto r = P.exact_div(P.pow(2));
    REQUIRE(r);
    CHECK(*r == PrimePoly::monomial(1, -1));
}

TEST_CASE("content and primitive part")
{
    PrimePoly a = (P * 6 + 4).shifted(2);
    CHECK(a.content() == 2);
    CHECK(a.primitive_part() == P * 3 + 2);
    CHECK((-a).primitive_part() == P * 3 + 2);
}

TEST_CASE("polynomial gcd")
{
    PrimePoly a = (P - 1) * (P + 2);
    PrimePoly b = (P - 1) * (P * P + 1);
    CHECK(gcd(a, b) == P - 1);
    CHECK(gcd(a * 4, b * 6) == (P - 1) * 2);
    CHECK(gcd(PrimePoly(0), PrimePoly(0)).is_zero());
    CHECK(gcd(a, PrimePoly(0)) == a.primitive_part());
}

TEST_CASE("rational functions in p reduce")
{
    RatP r(P * P - 1, P - 1);
    CHECK(r.is_laurent());
    CHECK(r.as_laurent() == P + 1);
    RatP h(1, P + 1);
    RatP sum = h + h;
    CHECK(sum == RatP(2, P + 1));
    CHECK((h * RatP(P + 1)).as_laurent() == PrimePoly(1));
    CHECK((h / h).as_laurent() == PrimePoly(1));
    CHECK((h - h).is_zero());
    CHECK(RatP(1, P).is_laurent());
    CHECK(RatP(1, P).as_laurent() == PrimePoly::monomial(1, -1));
}

TEST_CASE("polynomials in x")
{
    XPoly b = XPoly::binomial(1, 1, 2); // 1 - p x^2
    CHECK(b.degree() == 2);
    CHECK(b.coeff(2) == -P);
    CHECK(b.to_string() == "1 - p*x^2");
    XPoly c = XPoly::binomial(-1, 0, 1); // 1 + x
    auto prod = b * c;
    auto q = prod.exact_div(c);
    REQUIRE(q);
    CHECK(*q == b);
    CHECK_FALSE(b.exact_div(c));
    CHECK(b.scaled(1) == XPoly::binomial(1, 3, 2));
    CHECK(c.pow(2) == XPoly(std::vector<PrimePoly>{1, 2, 1}));
    CHECK(b.at_prime(3) == XPoly(std::vector<PrimePoly>{1, 0, -3}));
    CHECK(c.is_integral_constant());
    CHECK_FALSE(b.is_integral_constant());
}

TEST_CASE("series arithmetic")
{
    Series geometric(6, PrimePoly(1));
    Series one_minus_x{1, -1};
    auto prod = series_mul(geometric, one_minus_x, 5);
    REQUIRE(prod.size() == 6);
    CHECK(prod[0] == PrimePoly(1));
    for (int i = 1; i < 6; ++i) CHECK(prod[i].is_zero());
    auto inv = series_inverse(one_minus_x, 5);
    CHECK(inv == geometric);
    auto quot = series_div(Series{1}, Series{1, -P}, 3);
    CHECK(quot == Series{1, P, P * P, P.pow(3)});
}

TEST_CASE("binomial power series")
{
    // (1 - x)^(-2) = sum (n+1) x^n
    auto s = binomial_power_series(1, 0, 1, 2, 4);
    CHECK(s == Series{1, 2, 3, 4, 5});
    // (1 + p x^2)^3
    auto t = binomial_power_series(-1, 1, 2, -3, 6);
    CHECK(t == Series{1, 0, P * 3, 0, P * P * 3, 0, P.pow(3)});
}
