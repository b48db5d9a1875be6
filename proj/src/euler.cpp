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

#include "dgf/euler.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "dgf/errors.hpp"

namespace dgf {

namespace {

// Exponent of p in p^(l - u s), e.g. "1-2s".
std::string exponent_text(int l, unsigned u)
{
    std::string us = (u == 1 ? "" : std::to_string(u)) + "s";
    if (l == 0) return "-" + us;
    return std::to_string(l) + "-" + us;
}

std::string argument_text(unsigned u, int l)
{
    std::string out = (u == 1 ? "" : std::to_string(u)) + "s";
    if (l > 0) out += "-" + std::to_string(l);
    else if (l < 0) out += "+" + std::to_string(-l);
    return out;
}

// Divide the series by (1 - S p^l x^u)^gamma in place.
void divide_by_factor(Series& r, const EulerFactor& f, unsigned order)
{
    r = series_mul(r, binomial_power_series(f.S, f.l, f.u, f.gamma, order), order);
}

std::vector<EulerFactor> peel(Series r, unsigned U, bool& residual_ok)
{
    std::vector<EulerFactor> out;
    for (unsigned u = 1; u <= U; ++u) {
        std::vector<EulerFactor> level;
        for (const auto& [l, c] : r[u].terms()) {
            if (c > 0) level.push_back({-1, l, u, c});
            else level.push_back({1, l, u, BigInt(-c)});
        }
        for (const auto& f : level) divide_by_factor(r, f, U);
        out.insert(out.end(), level.begin(), level.end());
    }
    residual_ok = r[0] == PrimePoly(1);
    for (unsigned i = 1; i <= U; ++i) residual_ok = residual_ok && r[i].is_zero();
    return out;
}

XPoly binomial_power(int S, int l, unsigned u, unsigned long e)
{
    return XPoly::binomial(S, l, u).pow(static_cast<unsigned>(e));
}

// Exact check that the factors multiply to num/den.
bool exact_product(const std::vector<EulerFactor>& factors, const XPoly& num, const XPoly& den)
{
    BigInt weight = 0;
    for (const auto& f : factors) weight += abs(f.gamma) * f.u;
    if (weight > 600) return false;
    XPoly top(1);
    XPoly bottom(1);
    for (const auto& f : factors) {
        if (f.gamma > 0) top = top * binomial_power(f.S, f.l, f.u, f.gamma.get_ui());
        else bottom = bottom * binomial_power(f.S, f.l, f.u, BigInt(-f.gamma).get_ui());
    }
    return num * bottom == den * top;
}

} // namespace

std::vector<EulerFactor> canonical_factors(std::vector<EulerFactor> factors)
{
    std::map<std::tuple<unsigned, int, int>, BigInt> merged;
    for (const auto& f : factors) merged[{f.u, -f.l, f.S}] += f.gamma;
    std::vector<EulerFactor> out;
    for (const auto& [key, g] : merged) {
        if (g == 0) continue;
        const auto [u, neg_l, S] = key;
        out.push_back({S, -neg_l, u, g});
    }
    return out;
}

EulerFactorList euler_expand(const Series& b, unsigned U)
{
    if (U < 1) throw InvalidArgument("expansion order must be at least 1");
    if (b.empty() || !(b[0] == PrimePoly(1))) throw InvalidArgument("series must have constant term 1");
    Series r(U + 1);
    for (unsigned i = 0; i <= U && i < b.size(); ++i) r[i] = b[i];
    EulerFactorList out;
    out.factors = canonical_factors(peel(std::move(r), U, out.residual_ok));
    out.truncated_at = U;
    return out;
}

EulerFactorList euler_expand(const BellRational& b, unsigned U)
{
    EulerFactorList out = euler_expand(b.expand(U), U);
    if (exact_product(out.factors, b.num, b.den)) out.truncated_at.reset();
    return out;
}

EulerFactorList factorize(const BellRational& b, unsigned U)
{
    if (U < 1) throw InvalidArgument("expansion order must be at least 1");
    std::vector<EulerFactor> factors;
    XPoly rest = b.den;
    bool progress = true;
    while (progress && !(rest == XPoly(1))) {
        progress = false;
        int u = 1;
        while (u <= rest.degree() && rest.coeff(static_cast<std::size_t>(u)).is_zero()) ++u;
        if (u > rest.degree()) break;
        for (const auto& [l, c] : rest.coeff(static_cast<std::size_t>(u)).terms()) {
            const int S = c > 0 ? -1 : 1;
            if (auto q = rest.exact_div(XPoly::binomial(S, l, static_cast<unsigned>(u)))) {
                factors.push_back({S, l, static_cast<unsigned>(u), BigInt(-1)});
                rest = *q;
                progress = true;
                break;
            }
        }
    }
    const Series r = series_div(b.num.to_series(U), rest.to_series(U), U);
    EulerFactorList out;
    auto peeled = peel(r, U, out.residual_ok);
    factors.insert(factors.end(), peeled.begin(), peeled.end());
    out.factors = canonical_factors(std::move(factors));
    out.truncated_at = U;
    if (exact_product(out.factors, b.num, b.den)) out.truncated_at.reset();
    return out;
}

Series expand_factors(const std::vector<EulerFactor>& factors, unsigned order)
{
    Series r(order + 1);
    r[0] = PrimePoly(1);
    for (const auto& f : factors) r = series_mul(r, binomial_power_series(f.S, f.l, f.u, BigInt(-f.gamma), order), order);
    return r;
}

std::string EulerFactorList::to_string() const
{
    std::ostringstream os;
    if (factors.empty()) os << "1";
    for (const auto& f : factors) {
        os << "(1 " << (f.S > 0 ? "-" : "+") << " p^(" << exponent_text(f.l, f.u) << "))";
        if (f.gamma != 1) os << "^" << f.gamma;
    }
    if (truncated_at) os << " * (1 + O(p^(-" << (*truncated_at + 1) << "s)))";
    return os.str();
}

std::vector<EulerFactor> zeta_basis_expand(const Series& b, unsigned U)
{
    if (b.empty() || !(b[0] == PrimePoly(1))) throw InvalidArgument("series must have constant term 1");
    Series r(U + 1);
    for (unsigned i = 0; i <= U && i < b.size(); ++i) r[i] = b[i];
    std::vector<EulerFactor> out;
    for (unsigned u = 1; u <= U; ++u) {
        std::vector<EulerFactor> level;
        for (const auto& [l, c] : r[u].terms()) level.push_back({1, l, u, BigInt(-c)});
        for (const auto& f : level) divide_by_factor(r, f, U);
        out.insert(out.end(), level.begin(), level.end());
    }
    return canonical_factors(std::move(out));
}

std::optional<std::vector<ZetaFactor>> finite_zeta_factors(const BellRational& b)
{
    const unsigned d = b.degree();
    if (d == 0) return std::vector<ZetaFactor>{};
    const unsigned U = std::max(2 * d * d + 2, 12u);
    const BigInt bound = 4 * (d + 1);
    const BigInt weight_bound = BigInt(U) * bound;

    Series r = b.expand(U);
    std::vector<EulerFactor> factors;
    BigInt weight = 0;
    for (unsigned u = 1; u <= U; ++u) {
        std::vector<EulerFactor> level;
        for (const auto& [l, c] : r[u].terms()) {
            // (1 - p^l x^u)^gamma contributes -gamma p^l x^u.
            const BigInt gamma = -c;
            if (abs(gamma) > bound) return std::nullopt;
            weight += abs(gamma) * u;
            if (weight > weight_bound) return std::nullopt;
            level.push_back({1, l, u, gamma});
        }
        for (const auto& f : level) divide_by_factor(r, f, U);
        factors.insert(factors.end(), level.begin(), level.end());
    }
    if (!exact_product(factors, b.num, b.den)) return std::nullopt;
    std::vector<ZetaFactor> out;
    for (const auto& f : factors) out.push_back({f.u, f.l, -f.gamma.get_si()});
    return out;
}

void ZetaForm::normalize()
{
    std::map<std::pair<unsigned, int>, long> merged;
    for (const auto& z : zeta) merged[{z.u, z.l}] += z.gamma;
    zeta.clear();
    for (const auto& [key, g] : merged)
        if (g != 0) zeta.push_back({key.first, key.second, g});
    std::sort(local.begin(), local.end(), [](const LocalFactor& a, const LocalFactor& b) { return a.prime < b.prime; });
}

std::optional<ZetaForm> finite_zeta_form(const MultiplicativeFunction& f)
{
    if (!f.bell) return std::nullopt;
    auto zeta = finite_zeta_factors(*f.bell);
    if (!zeta) return std::nullopt;
    ZetaForm out;
    out.zeta = std::move(*zeta);
    for (const auto& [q, rule] : f.master.exceptions()) {
        const auto it = f.local_bell.find(q);
        if (it == f.local_bell.end() || !it->second) return std::nullopt;
        const BellRational& loc = *it->second;
        XPoly gn;
        XPoly gd;
        try {
            gn = f.bell->num.at_prime(BigInt(q));
            gd = f.bell->den.at_prime(BigInt(q));
        } catch (const DomainError&) {
            return std::nullopt;
        }
        const BellRational ratio = reduce_bell(loc.num * gd, loc.den * gn);
        if (ratio == BellRational{}) continue;
        out.local.push_back({q, ratio.num, ratio.den});
    }
    out.normalize();
    return out;
}

std::string ZetaForm::to_string() const
{
    std::ostringstream top;
    std::ostringstream bottom;
    for (const auto& z : zeta) {
        std::ostringstream& os = z.gamma > 0 ? top : bottom;
        os << "zeta(" << argument_text(z.u, z.l) << ")";
        if (std::abs(z.gamma) != 1) os << "^" << std::abs(z.gamma);
    }
    std::string out = top.str().empty() ? "1" : top.str();
    if (!bottom.str().empty()) {
        const bool several = std::count_if(zeta.begin(), zeta.end(), [](const ZetaFactor& z) { return z.gamma < 0; }) > 1;
        out += several ? "/(" + bottom.str() + ")" : "/" + bottom.str();
    }
    for (const auto& lf : local) {
        auto poly = [&](const XPoly& x) {
            std::ostringstream os;
            bool first = true;
            for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
                const PrimePoly& c = x.coeffs()[j];
                if (c.is_zero()) continue;
                BigInt v = c.coeff(0);
                if (!first) os << (v < 0 ? " - " : " + ");
                else if (v < 0) os << "-";
                first = false;
                v = abs(v);
                if (j == 0) {
                    os << v;
                    continue;
                }
                if (v != 1) os << v << "*";
                BigInt base;
                mpz_ui_pow_ui(base.get_mpz_t(), lf.prime, j);
                os << base << "^(-s)";
            }
            return os.str();
        };
        out += "*(" + poly(lf.num) + ")";
        if (!(lf.den == XPoly(1))) out += "/(" + poly(lf.den) + ")";
    }
    return out;
}

SequenceWindow zeta_form_to_coeffs(const ZetaForm& z, std::uint32_t N)
{
    if (N < 1) throw InvalidArgument("N must be at least 1");
    SequenceWindow acc;
    acc.values.assign(N, 0);
    acc.values[0] = 1;
    for (const auto& f : z.zeta) {
        if (f.l < 0) throw DomainError("zeta factor with non-integral coefficients");
        SequenceWindow stream;
        stream.values.assign(N, 0);
        for (std::uint64_t m = 1;; ++m) {
            BigInt n;
            mpz_ui_pow_ui(n.get_mpz_t(), m, f.u);
            if (n > N) break;
            BigInt v;
            mpz_ui_pow_ui(v.get_mpz_t(), m, static_cast<unsigned long>(f.l));
            stream.values[n.get_ui() - 1] = v;
        }
        if (f.gamma < 0) stream = brute_inverse(stream);
        for (long i = 0; i < std::abs(f.gamma); ++i) acc = brute_convolve(acc, stream);
    }
    for (const auto& lf : z.local) {
        unsigned order = 0;
        for (std::uint64_t q = lf.prime; q <= N; q *= lf.prime) ++order;
        const Series s = series_div(lf.num.to_series(order), lf.den.to_series(order), order);
        SequenceWindow stream;
        stream.values.assign(N, 0);
        std::uint64_t q = 1;
        for (unsigned j = 0; j <= order; ++j, q *= lf.prime) stream.values[q - 1] = s[j].coeff(0);
        acc = brute_convolve(acc, stream);
    }
    acc.source = SequenceSource::ZetaExpansion;
    return acc;
}

ConvergenceInfo abscissa(const EulerFactorList& e)
{
    ConvergenceInfo info;
    if (e.factors.empty()) {
        info.empty = true;
        return info;
    }
    bool first = true;
    for (const auto& f : e.factors) {
        BigRational v(f.l + 1, f.u);
        v.canonicalize();
        if (first || v > info.abscissa) info.abscissa = v;
        first = false;
    }
    return info;
}

ConvergenceInfo abscissa(const ZetaForm& z)
{
    ConvergenceInfo info;
    bool first = true;
    for (const auto& f : z.zeta) {
        if (f.gamma == 0) continue;
        BigRational v(f.l + 1, f.u);
        v.canonicalize();
        if (first || v > info.abscissa) info.abscissa = v;
        first = false;
    }
    info.empty = first;
    return info;
}

ConvergenceInfo abscissa(const MultiplicativeFunction& f)
{
    constexpr unsigned kOrder = 8;
    if (f.bell) return abscissa(factorize(*f.bell, kOrder));
    return abscissa(euler_expand(bell_from_master(f.master, kOrder), kOrder));
}

std::string rational_string(const BigRational& r)
{
    return r.get_str();
}

namespace {

nlohmann::json big_json(const BigInt& v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

} // namespace

nlohmann::json to_json(const EulerFactorList& e)
{
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : e.factors)
        factors.push_back({{"S", f.S}, {"l", f.l}, {"u", f.u}, {"gamma", big_json(f.gamma)}});
    nlohmann::json out;
    out["factors"] = factors;
    out["truncated_at"] = e.truncated_at ? nlohmann::json(*e.truncated_at) : nlohmann::json(nullptr);
    out["abscissa"] = rational_string(abscissa(e).abscissa);
    return out;
}

nlohmann::json to_json(const ZetaForm& z)
{
    nlohmann::json zeta = nlohmann::json::array();
    for (const auto& f : z.zeta) zeta.push_back({{"u", f.u}, {"l", f.l}, {"gamma", f.gamma}});
    nlohmann::json local = nlohmann::json::array();
    for (const auto& lf : z.local) {
        auto terms = [](const XPoly& x) {
            nlohmann::json arr = nlohmann::json::array();
            for (std::size_t j = 0; j < x.coeffs().size(); ++j)
                if (!x.coeffs()[j].is_zero()) arr.push_back({big_json(x.coeffs()[j].coeff(0)), j});
            return arr;
        };
        nlohmann::json entry{{"prime", lf.prime}, {"poly", terms(lf.num)}};
        if (!(lf.den == XPoly(1))) entry["den"] = terms(lf.den);
        local.push_back(entry);
    }
    return {{"zeta", zeta}, {"local", local}};
}

} // namespace dgf
