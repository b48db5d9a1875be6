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

#ifndef DGF_BELL_HPP
#define DGF_BELL_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgf/xpoly.hpp"

namespace dgf {

/// Reduced rational function num/den in x; den has constant term 1.
struct BellRational {
    XPoly num{1};
    XPoly den{1};

    Series expand(unsigned order) const;
    /// Larger of the two degrees in x.
    unsigned degree() const;
    /// Substitute x -> p^k x.
    BellRational scaled(int k) const;
    std::string to_string() const;

    friend bool operator==(const BellRational& a, const BellRational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

/// Values a(p^e) on prime powers.
class MasterEquation {
public:
    /// Returns a(p^0), ..., a(p^max_e) for a symbolic prime p.
    using GenericRule = std::function<std::vector<PrimePoly>(unsigned max_e)>;
    /// Returns a(q^0), ..., a(q^max_e) at one specific prime q.
    using LocalRule = std::function<std::vector<BigRational>(unsigned max_e)>;

    MasterEquation() = default;
    explicit MasterEquation(GenericRule generic, std::map<unsigned long, LocalRule> exceptions = {});

    std::vector<PrimePoly> generic(unsigned max_e) const;
    bool is_exception(unsigned long q) const { return exceptions_.count(q) != 0; }
    const std::map<unsigned long, LocalRule>& exceptions() const noexcept { return exceptions_; }
    /// Exact values at a concrete prime, exceptions honored.
    std::vector<BigRational> local_values(unsigned long q, unsigned max_e) const;
    /// As local_values, requiring integers (DomainError otherwise).
    std::vector<BigInt> integer_values(unsigned long q, unsigned max_e) const;

private:
    GenericRule generic_;
    std::map<unsigned long, LocalRule> exceptions_;
};

/// A multiplicative function: its master equation plus Bell series data.
struct MultiplicativeFunction {
    std::string name;
    MasterEquation master;
    /// Generic Bell series; absent when no rational form was found.
    std::optional<BellRational> bell;
    /// Bell series at exception primes (integer coefficients, p eliminated);
    /// absent entries are non-rational or non-integral.
    std::map<unsigned long, std::optional<BellRational>> local_bell;

    /// Bell series at a concrete prime with p substituted.
    std::optional<BellRational> bell_at(unsigned long q) const;
};

/// Default ceiling of the degree escalation used for fitted Bell series.
inline constexpr unsigned kRationalizeCap = 16;

/// Coefficients a(p^0..p^K) of the generic Bell series.
Series bell_from_master(const MasterEquation& m, unsigned K);

/// Rational function of degree <= d fitting the series; needs 2d+4
/// coefficients (2d+2 for the fit and two for verification).
/// Throws DegreeBoundExceeded when no such function exists.
BellRational rationalize(const Series& series, unsigned max_degree);

/// Escalating fit from start to cap. The generator returns the series through
/// the requested order; every candidate must match all 2 cap + 4 coefficients.
/// Returns nullopt when no fit is found.
std::optional<BellRational> rationalize_escalating(const std::function<Series(unsigned)>& coefficients,
                                                   unsigned start, unsigned cap = kRationalizeCap);

/// Cancel common factors of num/den and normalize den(0) = 1.
BellRational reduce_bell(const XPoly& num, const XPoly& den);

/// Bell series at a concrete prime from its integer values.
std::optional<BellRational> local_bell_from_master(const MasterEquation& m, unsigned long q, unsigned start);

/// Build a function from a master equation; the generic Bell series is fitted.
MultiplicativeFunction make_function(std::string name, MasterEquation m, std::optional<BellRational> bell = std::nullopt,
                                     unsigned fit_start = 1);

MultiplicativeFunction dirichlet_convolve(const MultiplicativeFunction& f, const MultiplicativeFunction& g);
MultiplicativeFunction dirichlet_inverse(const MultiplicativeFunction& f);
MultiplicativeFunction pointwise_product(const MultiplicativeFunction& f, const MultiplicativeFunction& g);
MultiplicativeFunction pointwise_power(const MultiplicativeFunction& f, unsigned j);
MultiplicativeFunction shift_by_power(const MultiplicativeFunction& f, int k);
MultiplicativeFunction unitary_convolve(const MultiplicativeFunction& f, const MultiplicativeFunction& g);

} // namespace dgf

#endif
