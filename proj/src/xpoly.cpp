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

#include "dgf/xpoly.hpp"

#include <sstream>

#include "dgf/errors.hpp"

namespace dgf {

XPoly::XPoly(const PrimePoly& c)
{
    if (!c.is_zero()) c_.push_back(c);
}

XPoly::XPoly(std::vector<PrimePoly> coeffs) : c_(std::move(coeffs))
{
    trim();
}

XPoly XPoly::binomial(int S, int l, unsigned u)
{
    std::vector<PrimePoly> c(u + 1);
    c[0] = PrimePoly(1);
    c[u] += PrimePoly::monomial(-S, l);
    return XPoly(std::move(c));
}

void XPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly& XPoly::operator+=(const XPoly& rhs)
{
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs)
{
    return *this += -rhs;
}

XPoly XPoly::operator-() const
{
    XPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

XPoly operator*(const XPoly& a, const XPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<PrimePoly> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
    }
    return XPoly(std::move(out));
}

XPoly XPoly::pow(unsigned n) const
{
    XPoly result(1);
    XPoly base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

XPoly XPoly::scaled(int k) const
{
    XPoly r = *this;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i].shifted(k * static_cast<int>(i));
    return r;
}

std::optional<XPoly> XPoly::exact_div(const XPoly& divisor) const
{
    if (divisor.is_zero()) throw DomainError("division by the zero polynomial in x");
    if (is_zero()) return XPoly{};
    if (degree() < divisor.degree()) return std::nullopt;
    const auto order = static_cast<unsigned>(degree() - divisor.degree());
    XPoly q(series_div(c_, divisor.c_, order));
    if (!(q * divisor == *this)) return std::nullopt;
    return q;
}

Series XPoly::to_series(unsigned order) const
{
    Series s(order + 1);
    for (std::size_t i = 0; i < c_.size() && i <= order; ++i) s[i] = c_[i];
    return s;
}

bool XPoly::is_integral_constant() const
{
    for (const auto& c : c_)
        if (!c.is_constant()) return false;
    return true;
}

XPoly XPoly::at_prime(const BigInt& q) const
{
    std::vector<PrimePoly> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.emplace_back(c.evaluate(q));
    return XPoly(std::move(out));
}

std::string XPoly::to_string(const std::string& x, const std::string& p) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const PrimePoly& c = c_[i];
        if (c.is_zero()) continue;
        std::string body = c.to_string(p);
        bool negative = false;
        if (c.term_count() == 1 && body.front() == '-') {
            negative = true;
            body.erase(0, 1);
        }
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        if (i == 0) {
            os << (c.term_count() > 1 ? "(" + body + ")" : body);
            continue;
        }
        if (c.term_count() > 1) os << "(" << body << ")*";
        else if (body != "1") os << body << "*";
        os << x;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

bool is_unit(const PrimePoly& c)
{
    return c.term_count() == 1 && (c.leading() == 1 || c.leading() == -1);
}

PrimePoly unit_inverse(const PrimePoly& c)
{
    if (!is_unit(c)) throw DomainError("constant term is not a unit in Z[p, 1/p]");
    return PrimePoly::monomial(c.leading(), -c.low_degree());
}

Series series_mul(const Series& a, const Series& b, unsigned order)
{
    Series out(order + 1);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

Series series_inverse(const Series& a, unsigned order)
{
    if (a.empty()) throw DomainError("inverse of the zero series");
    const PrimePoly inv0 = unit_inverse(a[0]);
    Series b(order + 1);
    b[0] = inv0;
    for (unsigned n = 1; n <= order; ++n) {
        PrimePoly acc;
        for (unsigned i = 1; i <= n && i < a.size(); ++i)
            if (!a[i].is_zero() && !b[n - i].is_zero()) acc += a[i] * b[n - i];
        b[n] = -(acc * inv0);
    }
    return b;
}

Series series_div(const Series& num, const Series& den, unsigned order)
{
    return series_mul(num, series_inverse(den, order), order);
}

Series binomial_power_series(int S, int l, unsigned u, const BigInt& neg_gamma, unsigned order)
{
    // (1 - y)^(-g) = sum_j binom(g + j - 1, j) y^j, y = S p^l x^u
    Series out(order + 1);
    out[0] = PrimePoly(1);
    BigInt coef = 1;
    for (unsigned j = 1; j * u <= order; ++j) {
        coef = coef * (neg_gamma + j - 1) / j;
        if (coef == 0) break;
        BigInt signed_coef = (S < 0 && (j & 1u)) ? BigInt(-coef) : coef;
        out[j * u] = PrimePoly::monomial(signed_coef, l * static_cast<int>(j));
    }
    return out;
}

} // namespace dgf
