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
#include <numbers>

#include "dgf/catalog.hpp"
#include "dgf/errors.hpp"
#include "dgf/numeric.hpp"
#include "test_support.hpp"

using namespace dgf;

namespace {

constexpr double kPi = std::numbers::pi;

bool nonnegative(const MultiplicativeFunction& f)
{
    for (const auto& v : terms(f, 2000).values)
        if (v < 0) return false;
    return true;
}

} // namespace

TEST_CASE("riemann zeta")
{
    CHECK(std::abs(riemann_zeta(2) - kPi * kPi / 6) < 1e-12);
    CHECK(std::abs(riemann_zeta(4) - std::pow(kPi, 4) / 90) < 1e-12);
    CHECK(std::abs(riemann_zeta(3) - 1.2020569031595942) < 1e-12);
    CHECK(std::abs(riemann_zeta(1.5) - 2.6123753486854883) < 1e-12);
    CHECK(std::abs(riemann_zeta(1.01) - 100.57794333849686) < 1e-10);
    CHECK(riemann_zeta(80) == 1.0);
    CHECK_THROWS_AS(riemann_zeta(1.0), DomainError);
    CHECK_THROWS_AS(riemann_zeta(0.5), DomainError);
}

TEST_CASE("wynn epsilon accelerates an alternating series")
{
    std::vector<double> partial;
    double s = 0;
    for (int k = 1; k <= 15; ++k) {
        s += (k % 2 ? 1.0 : -1.0) / k;
        partial.push_back(s);
    }
    auto w = wynn_epsilon(partial);
    CHECK_FALSE(w.breakdown);
    CHECK(std::abs(w.value - std::log(2.0)) < 1e-9);
    CHECK(std::abs(partial.back() - std::log(2.0)) > 1e-2);
    CHECK(w.error >= 0);
}

TEST_CASE("wynn epsilon on a constant sequence")
{
    auto w = wynn_epsilon(std::vector<double>(6, 1.5));
    CHECK(w.value == 1.5);
}

TEST_CASE("zeta form evaluation")
{
    auto r = eval_zeta_form(*finite_zeta_form(make("sigma", {1})), 3);
    CHECK(std::abs(r.value - riemann_zeta(3) * riemann_zeta(2)) < 1e-10);
    CHECK(std::abs(r.value - 1.9773043502972961) < 1e-10);
    CHECK(r.error_estimate >= 0);
    CHECK(r.method == "zeta-form");
    CHECK(eval_zeta_form(ZetaForm{}, 2).value == 1.0);
    CHECK_THROWS_AS(eval_zeta_form(*finite_zeta_form(make("phi")), 2), DomainError);
    CHECK_THROWS_AS(eval_zeta_form(*finite_zeta_form(make("phi")), 2 + 1e-9), DomainError);
    CHECK_NOTHROW(eval_zeta_form(*finite_zeta_form(make("phi")), 2 + 1e-9, 0.0));

    auto g = eval_zeta_form(*finite_zeta_form(make("gcdc", {4})), 2);
    CHECK(std::abs(g.value - riemann_zeta(2) * (1 + 0.25 + 2.0 / 16)) < 1e-12);
}

TEST_CASE("euler product of zeta increases towards zeta")
{
    auto one = make("one");
    double prev = 0;
    for (std::uint32_t P : {10u, 100u, 1000u, 10000u}) {
        auto r = eval_euler_product(one, 2, P);
        CHECK(r.value > prev);
        CHECK(r.value < kPi * kPi / 6);
        CHECK(std::abs(r.value - kPi * kPi / 6) <= r.error_estimate);
        prev = r.value;
    }
}

TEST_CASE("accelerated euler product")
{
    const double truth = riemann_zeta(3) * riemann_zeta(2);
    auto r = eval_euler_product(make("sigma", {1}), 3, 1000000, Acceleration::Wynn);
    CHECK(std::abs(r.value - truth) <= 1e-6);
    CHECK(std::abs(r.value - truth) <= r.error_estimate);
    CHECK(r.method.rfind("euler-product", 0) == 0);
    CHECK_THROWS_AS(eval_euler_product(make("phi"), 1.5, 1000), DomainError);
    CHECK_THROWS_AS(eval_euler_product(make("one"), 2, 1), InvalidArgument);
}

TEST_CASE("acceleration never worsens the benchmark")
{
    auto f = make("sigma", {1});
    const double s = 2.5;
    const double truth = eval_zeta_form(*finite_zeta_form(f), s).value;
    for (std::uint32_t P : {1000u, 10000u, 100000u}) {
        auto plain = eval_euler_product(f, s, P);
        auto fast = eval_euler_product(f, s, P, Acceleration::Wynn);
        CAPTURE(P);
        CHECK(std::abs(fast.value - truth) <= std::abs(plain.value - truth));
    }
}

TEST_CASE("two numerical paths for the unitary moebius function")
{
    auto f = make("mu_star");
    auto prod = eval_euler_product(f, 2, 100000);
    auto sum = eval_partial_sum(f, 2, 2000000);
    CHECK(std::abs(prod.value - sum.value) <= prod.error_estimate + sum.error_estimate);
}

TEST_CASE("partial sums")
{
    auto one = eval_partial_sum(make("one"), 2, 10000);
    CHECK(std::abs(one.value - 1.64483) < 1e-5);
    CHECK(std::abs(one.value - kPi * kPi / 6) <= one.error_estimate);
    CHECK(one.method == "partial-sum");

    auto s1 = eval_partial_sum(make("sigma", {1}), 3, 100000);
    CHECK(std::abs(s1.value - riemann_zeta(3) * riemann_zeta(2)) < 1e-4);

    auto phi = eval_partial_sum(make("phi"), 3, 100000);
    CHECK(std::abs(phi.value - riemann_zeta(2) / riemann_zeta(3)) <= phi.error_estimate);
    CHECK_THROWS_AS(eval_partial_sum(make("phi"), 2, 1000), DomainError);
}

TEST_CASE("monotone partial sums stay below the full value")
{
    for (auto [name, params] : std::vector<std::pair<std::string, std::vector<long>>>{
             {"sigma", {1}}, {"phi", {}}, {"core", {2}}, {"gcd_pairs", {1}}, {"tau", {3}}}) {
        auto f = make(name, params);
        REQUIRE(nonnegative(f));
        const double s = static_cast<double>(abscissa(*finite_zeta_form(f)).abscissa.get_d()) + 1.0;
        const double full = eval_zeta_form(*finite_zeta_form(f), s).value;
        double prev = 0;
        for (std::uint32_t N : {10u, 100u, 1000u, 10000u}) {
            auto r = eval_partial_sum(f, s, N);
            CAPTURE(name);
            CHECK(r.value > prev);
            CHECK(r.value < full);
            prev = r.value;
        }
    }
}

TEST_CASE("evaluators agree across the finite-form catalog")
{
    int compared = 0;
    for (const auto& entry : catalog()) {
        const auto params = testing::sample_params(entry).back();
        auto f = make(entry.name, params);
        auto z = finite_zeta_form(f);
        if (!z) continue;
        const double a = abscissa(*z).abscissa.get_d();
        for (double ds : {0.5, 1.0, 2.0}) {
            const double s = a + ds;
            CAPTURE(call_name(entry.name, params));
            CAPTURE(s);
            auto zr = eval_zeta_form(*z, s);
            auto er = eval_euler_product(f, s, 100000, Acceleration::Wynn);
            auto pr = eval_partial_sum(f, s, 100000);
            CHECK(std::abs(zr.value - er.value) <= zr.error_estimate + er.error_estimate);
            CHECK(std::abs(zr.value - pr.value) <= zr.error_estimate + pr.error_estimate);
            CHECK(std::abs(er.value - pr.value) <= er.error_estimate + pr.error_estimate);
            ++compared;
        }
    }
    CHECK(compared > 60);
}
