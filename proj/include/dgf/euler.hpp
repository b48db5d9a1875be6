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

#ifndef DGF_EULER_HPP
#define DGF_EULER_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgf/bell.hpp"
#include "dgf/sequence.hpp"

namespace dgf {

/// (1 - S p^(l - u s))^gamma
struct EulerFactor {
    int S = 1;
    int l = 0;
    unsigned u = 1;
    BigInt gamma;

    friend bool operator==(const EulerFactor& a, const EulerFactor& b) {
        return a.S == b.S && a.l == b.l && a.u == b.u && a.gamma == b.gamma;
    }
};

struct EulerFactorList {
    std::vector<EulerFactor> factors;
    /// Order U of the expansion; absent when the product is exact.
    std::optional<unsigned> truncated_at;
    /// The residual is 1 + O(x^(U+1)).
    bool residual_ok = true;

    std::string to_string() const;
};

/// zeta(u s - l)^gamma
struct ZetaFactor {
    unsigned u = 1;
    int l = 0;
    long gamma = 0;

    friend bool operator==(const ZetaFactor& a, const ZetaFactor& b) {
        return a.u == b.u && a.l == b.l && a.gamma == b.gamma;
    }
};

/// Extra factor num/den in x = q^(-s) at one prime q.
struct LocalFactor {
    unsigned long prime = 0;
    XPoly num{1};
    XPoly den{1};

    friend bool operator==(const LocalFactor& a, const LocalFactor& b) {
        return a.prime == b.prime && a.num == b.num && a.den == b.den;
    }
};

struct ZetaForm {
    std::vector<ZetaFactor> zeta;
    std::vector<LocalFactor> local;

    /// Merge equal (u, l), drop zero exponents and sort.
    void normalize();
    std::string to_string() const;
    friend bool operator==(const ZetaForm& a, const ZetaForm& b) { return a.zeta == b.zeta && a.local == b.local; }
};

struct ConvergenceInfo {
    BigRational abscissa = 0;
    /// Set when the representation had no factors and 0 was used.
    bool empty = false;
};

/// Sort as u ascending then l descending, merge equal (S, l, u), drop
/// zero exponents.
std::vector<EulerFactor> canonical_factors(std::vector<EulerFactor> factors);

/// Monomial peeling of a series with constant term 1 through order U.
EulerFactorList euler_expand(const Series& b, unsigned U);
EulerFactorList euler_expand(const BellRational& b, unsigned U);

/// Peeling with S = +1 factors only and signed exponents, so that every
/// factor is a power of zeta(u s - l). Through order U.
std::vector<EulerFactor> zeta_basis_expand(const Series& b, unsigned U);

/// Binomial factors of the denominator (negative exponents) followed by
/// the peeled remainder, merged into canonical order.
EulerFactorList factorize(const BellRational& b, unsigned U);

/// Power series of the product through the given order.
Series expand_factors(const std::vector<EulerFactor>& factors, unsigned order);

/// Finite product of zeta(u s - l) powers equal to b, if one exists.
std::optional<std::vector<ZetaFactor>> finite_zeta_factors(const BellRational& b);
/// Full zeta form including local factors at exception primes.
std::optional<ZetaForm> finite_zeta_form(const MultiplicativeFunction& f);

SequenceWindow zeta_form_to_coeffs(const ZetaForm& z, std::uint32_t N);

ConvergenceInfo abscissa(const EulerFactorList& e);
ConvergenceInfo abscissa(const ZetaForm& z);
/// Abscissa of a function from its generic Bell series (order-8 expansion).
ConvergenceInfo abscissa(const MultiplicativeFunction& f);

std::string rational_string(const BigRational& r);

nlohmann::json to_json(const EulerFactorList& e);
nlohmann::json to_json(const ZetaForm& z);

} // namespace dgf

#endif
