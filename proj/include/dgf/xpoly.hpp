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

#ifndef DGF_XPOLY_HPP
#define DGF_XPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "dgf/prime_poly.hpp"

namespace dgf {

/// Truncated power series in x; entry i is the coefficient of x^i.
using Series = std::vector<PrimePoly>;

/// Polynomial in x = p^(-s) whose coefficients are Laurent polynomials in p.
class XPoly {
public:
    XPoly() = default;
    XPoly(const PrimePoly& c); // NOLINT
    XPoly(long c) : XPoly(PrimePoly(c)) {} // NOLINT
    explicit XPoly(std::vector<PrimePoly> coeffs);

    /// 1 - S * p^l * x^u
    static XPoly binomial(int S, int l, unsigned u);

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<PrimePoly>& coeffs() const noexcept { return c_; }
    PrimePoly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : PrimePoly{}; }

    XPoly& operator+=(const XPoly& rhs);
    XPoly& operator-=(const XPoly& rhs);
    XPoly operator-() const;
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }

    XPoly pow(unsigned n) const;
    /// Substitute x -> p^k x.
    XPoly scaled(int k) const;
    /// Quotient in x when it exists with Laurent coefficients.
    /// The divisor must have a unit constant term (a signed power of p).
    std::optional<XPoly> exact_div(const XPoly& divisor) const;
    /// Coefficients as a series of the given order (zero padded or cut).
    Series to_series(unsigned order) const;
    /// True when every coefficient is an integer constant.
    bool is_integral_constant() const;
    /// Substitute a concrete value for p; throws DomainError if a
    /// coefficient becomes non-integral.
    XPoly at_prime(const BigInt& q) const;

    std::string to_string(const std::string& x = "x", const std::string& p = "p") const;

private:
    void trim();
    std::vector<PrimePoly> c_;
};

/// True when the Laurent polynomial is +-p^k.
bool is_unit(const PrimePoly& c);
/// Inverse of a unit +-p^k.
PrimePoly unit_inverse(const PrimePoly& c);

Series series_mul(const Series& a, const Series& b, unsigned order);
/// Reciprocal of a series whose constant term is a unit.
Series series_inverse(const Series& a, unsigned order);
Series series_div(const Series& num, const Series& den, unsigned order);
/// (1 - S p^l x^u)^(-gamma) to the given order, gamma of either sign.
Series binomial_power_series(int S, int l, unsigned u, const BigInt& neg_gamma, unsigned order);

} // namespace dgf

#endif
