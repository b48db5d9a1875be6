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

#ifndef DGF_PRIME_POLY_HPP
#define DGF_PRIME_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dgf {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Laurent polynomial in the symbol p with arbitrary-precision integer
/// coefficients.
///
/// Bell coefficients of every catalog function are ordinary polynomials in p;
/// negative exponents only show up after shifting by a negative power of n.
/// Storage is dense from the lowest nonzero exponent; the zero polynomial has
/// no coefficients at all.
class PrimePoly {
public:
    PrimePoly() = default;
    PrimePoly(long c); // NOLINT: integers convert implicitly
    PrimePoly(const BigInt& c); // NOLINT
    /// c * p^exponent
    static PrimePoly monomial(const BigInt& c, int exponent);
    /// Build from (exponent, coefficient) pairs; duplicates are summed.
    static PrimePoly from_terms(const std::map<int, BigInt>& terms);
    /// The symbol p itself.
    static PrimePoly p() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept;
    /// Highest exponent; undefined for the zero polynomial.
    int degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    /// Lowest exponent; undefined for the zero polynomial.
    int low_degree() const noexcept { return low_; }
    /// Coefficient of p^exponent (zero outside the stored range).
    BigInt coeff(int exponent) const;
    const BigInt& leading() const { return coeffs_.back(); }
    /// Nonzero (exponent, coefficient) pairs, ascending in exponent.
    std::map<int, BigInt> terms() const;
    std::size_t term_count() const;

    PrimePoly& operator+=(const PrimePoly& rhs);
    PrimePoly& operator-=(const PrimePoly& rhs);
    PrimePoly& operator*=(const PrimePoly& rhs);
    PrimePoly operator-() const;

    friend PrimePoly operator+(PrimePoly a, const PrimePoly& b) { return a += b; }
    friend PrimePoly operator-(PrimePoly a, const PrimePoly& b) { return a -= b; }
    friend PrimePoly operator*(const PrimePoly& a, const PrimePoly& b);
    friend bool operator==(const PrimePoly& a, const PrimePoly& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    /// Multiply by p^k.
    PrimePoly shifted(int k) const;
    PrimePoly pow(unsigned n) const;

    /// Exact quotient in Z[p, 1/p], or nullopt when the division leaves a
    /// remainder or needs fractional coefficients.
    std::optional<PrimePoly> exact_div(const PrimePoly& divisor) const;

    /// gcd of the integer coefficients (nonnegative).
    BigInt content() const;
    /// Divide out the content and the lowest power of p; leading coefficient
    /// made positive. Zero stays zero.
    PrimePoly primitive_part() const;

    /// Value at a concrete integer point, exact.
    BigRational evaluate_rational(const BigInt& at) const;
    /// Value at a concrete integer point; throws DomainError when negative
    /// powers of p make the value non-integral.
    BigInt evaluate(const BigInt& at) const;
    /// Sum of c_l * p^l * x with x given as log p and a real exponent shift:
    /// returns sum_l c_l * exp((l + shift) * log_p). Used by the numerical
    /// evaluators so that large powers never overflow.
    double evaluate_scaled(double log_p, double shift) const;

    /// Human-readable form, highest power first, e.g. "p^2 + p + 1".
    std::string to_string(const std::string& symbol = "p") const;

private:
    void normalize();

    int low_ = 0;
    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PrimePoly& poly);

/// Greatest common divisor in Z[p, 1/p], normalized to a primitive
/// polynomial in p with positive leading coefficient, times the gcd of the
/// contents. gcd(0, 0) = 0.
PrimePoly gcd(const PrimePoly& a, const PrimePoly& b);

/// Element of the fraction field Q(p): a reduced quotient of Laurent
/// polynomials. The denominator is kept as a polynomial in p with nonzero
/// constant term and positive leading coefficient.
class RatP {
public:
    RatP() : num_(0), den_(1) {}
    RatP(const PrimePoly& n) : num_(n), den_(1) { normalize_laurent(); } // NOLINT
    RatP(const PrimePoly& n, const PrimePoly& d);

    const PrimePoly& num() const noexcept { return num_; }
    const PrimePoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    /// True when the value lies in Z[p, 1/p].
    bool is_laurent() const;
    /// The value as a Laurent polynomial; requires is_laurent().
    PrimePoly as_laurent() const;

    friend RatP operator+(const RatP& a, const RatP& b);
    friend RatP operator-(const RatP& a, const RatP& b);
    friend RatP operator*(const RatP& a, const RatP& b);
    friend RatP operator/(const RatP& a, const RatP& b);
    RatP operator-() const { return RatP(-num_, den_, true); }
    friend bool operator==(const RatP& a, const RatP& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    RatP(PrimePoly n, PrimePoly d, bool /*already reduced*/) : num_(std::move(n)), den_(std::move(d)) {}
    void reduce();
    void normalize_laurent();

    PrimePoly num_;
    PrimePoly den_;
};

} // namespace dgf

#endif
