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

#include "dgf/bell.hpp"

#include <algorithm>
#include <set>

#include "dgf/errors.hpp"

namespace dgf {

Series BellRational::expand(unsigned order) const
{
    return series_div(num.to_series(order), den.to_series(order), order);
}

unsigned BellRational::degree() const
{
    return static_cast<unsigned>(std::max({num.degree(), den.degree(), 0}));
}

BellRational BellRational::scaled(int k) const
{
    return {num.scaled(k), den.scaled(k)};
}

std::string BellRational::to_string() const
{
    if (den == XPoly(1)) return num.to_string();
    const std::string n = num.degree() > 0 ? "(" + num.to_string() + ")" : num.to_string();
    return n + "/(" + den.to_string() + ")";
}

MasterEquation::MasterEquation(GenericRule generic, std::map<unsigned long, LocalRule> exceptions)
    : generic_(std::move(generic)), exceptions_(std::move(exceptions))
{
}

std::vector<PrimePoly> MasterEquation::generic(unsigned max_e) const
{
    auto v = generic_(max_e);
    if (v.size() < max_e + 1u) throw Error("master equation returned too few values");
    v.resize(max_e + 1u);
    return v;
}

std::vector<BigRational> MasterEquation::local_values(unsigned long q, unsigned max_e) const
{
    if (auto it = exceptions_.find(q); it != exceptions_.end()) {
        auto v = it->second(max_e);
        if (v.size() < max_e + 1u) throw Error("local rule returned too few values");
        v.resize(max_e + 1u);
        return v;
    }
    const BigInt qq(q);
    std::vector<BigRational> out;
    out.reserve(max_e + 1u);
    for (const auto& c : generic(max_e)) out.push_back(c.evaluate_rational(qq));
    return out;
}

std::vector<BigInt> MasterEquation::integer_values(unsigned long q, unsigned max_e) const
{
    std::vector<BigInt> out;
    out.reserve(max_e + 1u);
    for (const auto& v : local_values(q, max_e)) {
        if (v.get_den() != 1) throw DomainError("non-integral value " + v.get_str() + " at a power of " + std::to_string(q));
        out.push_back(v.get_num());
    }
    return out;
}

std::optional<BellRational> MultiplicativeFunction::bell_at(unsigned long q) const
{
    if (master.is_exception(q)) {
        auto it = local_bell.find(q);
        if (it == local_bell.end()) return std::nullopt;
        return it->second;
    }
    if (!bell) return std::nullopt;
    try {
        const BigInt qq(q);
        return reduce_bell(bell->num.at_prime(qq), bell->den.at_prime(qq));
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

Series bell_from_master(const MasterEquation& m, unsigned K)
{
    Series s = m.generic(K);
    if (!(s[0] == PrimePoly(1))) throw InvalidArgument("master equation must give a(p^0) = 1");
    return s;
}

namespace {

using RatSeries = std::vector<RatP>;

// Berlekamp-Massey over Q(p). Returns the connection polynomial C with
// C[0] = 1 and the linear complexity L.
std::pair<RatSeries, unsigned> berlekamp_massey(const RatSeries& s)
{
    RatSeries C{RatP(PrimePoly(1))};
    RatSeries B{RatP(PrimePoly(1))};
    unsigned L = 0;
    unsigned m = 1;
    RatP b(PrimePoly(1));
    for (unsigned n = 0; n < s.size(); ++n) {
        RatP d = s[n];
        for (unsigned i = 1; i <= L && i < C.size(); ++i)
            if (!C[i].is_zero() && !s[n - i].is_zero()) d = d + C[i] * s[n - i];
        if (d.is_zero()) {
            ++m;
            continue;
        }
        const RatP coef = d / b;
        RatSeries T = C;
        if (C.size() < B.size() + m) C.resize(B.size() + m);
        for (std::size_t i = 0; i < B.size(); ++i)
            if (!B[i].is_zero()) C[i + m] = C[i + m] - coef * B[i];
        if (2 * L <= n) {
            L = n + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            ++m;
        }
    }
    while (C.size() > 1 && C.back().is_zero()) C.pop_back();
    return {C, L};
}

int rat_degree(const RatSeries& r)
{
    for (std::size_t i = r.size(); i-- > 0;)
        if (!r[i].is_zero()) return static_cast<int>(i);
    return -1;
}

std::optional<XPoly> to_laurent(const RatSeries& r)
{
    std::vector<PrimePoly> out;
    out.reserve(r.size());
    for (const auto& c : r) {
        if (!c.is_laurent()) return std::nullopt;
        out.push_back(c.as_laurent());
    }
    return XPoly(std::move(out));
}

} // namespace

BellRational rationalize(const Series& series, unsigned max_degree)
{
    const std::size_t fit = 2 * static_cast<std::size_t>(max_degree) + 2;
    if (series.size() < fit + 2)
        throw InvalidArgument("rationalize needs " + std::to_string(fit + 2) + " coefficients");
    if (series.empty() || !is_unit(series[0])) throw InvalidArgument("series must start with a unit");

    RatSeries s;
    s.reserve(fit);
    for (std::size_t i = 0; i < fit; ++i) s.emplace_back(series[i]);
    auto [C, L] = berlekamp_massey(s);
    if (L > max_degree + 1 || rat_degree(C) > static_cast<int>(max_degree)) throw DegreeBoundExceeded();

    RatSeries N(L);
    for (unsigned i = 0; i < L; ++i)
        for (unsigned j = 0; j <= i && j < C.size(); ++j)
            if (!C[j].is_zero() && !s[i - j].is_zero()) N[i] = N[i] + C[j] * s[i - j];
    if (rat_degree(N) > static_cast<int>(max_degree)) throw DegreeBoundExceeded();

    auto num = to_laurent(N);
    auto den = to_laurent(C);
    if (!num || !den) throw DegreeBoundExceeded();

    BellRational r{*num, *den};
    const auto order = static_cast<unsigned>(series.size() - 1);
    const Series check = r.expand(order);
    for (std::size_t i = 0; i < series.size(); ++i)
        if (!(check[i] == series[i])) throw DegreeBoundExceeded();
    return r;
}

std::optional<BellRational> rationalize_escalating(const std::function<Series(unsigned)>& coefficients,
                                                   unsigned start, unsigned cap)
{
    start = std::max(1u, start);
    cap = std::max(start, cap);
    // Every candidate is checked against 2 cap + 4 coefficients, so two fits of
    // degree <= cap can never both match.
    const Series series = coefficients(2 * cap + 3);
    for (unsigned d = start; d <= cap; ++d) {
        try {
            return rationalize(series, d);
        } catch (const DegreeBoundExceeded&) {
        }
    }
    return std::nullopt;
}

BellRational reduce_bell(const XPoly& num, const XPoly& den)
{
    if (den.is_zero()) throw DomainError("zero denominator in Bell series");
    const PrimePoly inv0 = unit_inverse(den.coeff(0));
    XPoly n = num * XPoly(inv0);
    XPoly d = den * XPoly(inv0);
    if (d == XPoly(1)) return {n, d};
    if (n.is_zero()) return {XPoly{}, XPoly(1)};
    const unsigned deg = static_cast<unsigned>(std::max(n.degree(), d.degree()));
    BellRational input{n, d};
    Series s = input.expand(2 * deg + 3);
    if (!is_unit(s[0])) return input;
    try {
        return rationalize(s, deg);
    } catch (const DegreeBoundExceeded&) {
        return input;
    }
}

std::optional<BellRational> local_bell_from_master(const MasterEquation& m, unsigned long q, unsigned start)
{
    try {
        return rationalize_escalating(
            [&](unsigned order) {
                Series s;
                for (const auto& v : m.integer_values(q, order)) s.emplace_back(v);
                return s;
            },
            start);
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

MultiplicativeFunction make_function(std::string name, MasterEquation m, std::optional<BellRational> bell,
                                     unsigned fit_start)
{
    MultiplicativeFunction f;
    f.name = std::move(name);
    f.master = std::move(m);
    if (bell) {
        f.bell = std::move(bell);
    } else {
        try {
            f.bell = rationalize_escalating([&](unsigned order) { return bell_from_master(f.master, order); },
                                            fit_start);
        } catch (const BellUnavailable&) {
            f.bell.reset();
        }
    }
    for (const auto& [q, rule] : f.master.exceptions()) f.local_bell[q] = local_bell_from_master(f.master, q, 1);
    return f;
}

namespace {

template <typename T>
std::vector<T> cauchy(const std::vector<T>& a, const std::vector<T>& b)
{
    std::vector<T> out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n)
        for (std::size_t i = 0; i <= n; ++i) out[n] += a[i] * b[n - i];
    return out;
}

template <typename T>
std::vector<T> cauchy_inverse(const std::vector<T>& a)
{
    std::vector<T> out(a.size());
    out[0] = T(1);
    for (std::size_t n = 1; n < a.size(); ++n) {
        T acc = T(0);
        for (std::size_t i = 1; i <= n; ++i) acc += a[i] * out[n - i];
        out[n] = -acc;
    }
    return out;
}

std::set<unsigned long> exception_union(const MultiplicativeFunction& f, const MultiplicativeFunction& g)
{
    std::set<unsigned long> out;
    for (const auto& [q, r] : f.master.exceptions()) out.insert(q);
    for (const auto& [q, r] : g.master.exceptions()) out.insert(q);
    return out;
}

MultiplicativeFunction assemble(std::string name, MasterEquation m, std::optional<BellRational> bell, unsigned fit_start)
{
    return make_function(std::move(name), std::move(m), std::move(bell), fit_start);
}

} // namespace

MultiplicativeFunction dirichlet_convolve(const MultiplicativeFunction& f, const MultiplicativeFunction& g)
{
    const MasterEquation fm = f.master;
    const MasterEquation gm = g.master;
    std::map<unsigned long, MasterEquation::LocalRule> ex;
    for (unsigned long q : exception_union(f, g))
        ex[q] = [fm, gm, q](unsigned K) { return cauchy(fm.local_values(q, K), gm.local_values(q, K)); };
    MasterEquation m([fm, gm](unsigned K) { return cauchy(fm.generic(K), gm.generic(K)); }, std::move(ex));

    std::optional<BellRational> bell;
    unsigned start = 1;
    if (f.bell && g.bell) bell = reduce_bell(f.bell->num * g.bell->num, f.bell->den * g.bell->den);
    else start = (f.bell ? f.bell->degree() : 1) + (g.bell ? g.bell->degree() : 1);
    return assemble("(" + f.name + " <*> " + g.name + ")", std::move(m), std::move(bell), start);
}

MultiplicativeFunction dirichlet_inverse(const MultiplicativeFunction& f)
{
    const MasterEquation fm = f.master;
    std::map<unsigned long, MasterEquation::LocalRule> ex;
    for (const auto& [q, r] : fm.exceptions())
        ex[q] = [fm, q](unsigned K) { return cauchy_inverse(fm.local_values(q, K)); };
    MasterEquation m([fm](unsigned K) { return cauchy_inverse(fm.generic(K)); }, std::move(ex));
    std::optional<BellRational> bell;
    if (f.bell) bell = reduce_bell(f.bell->den, f.bell->num);
    return assemble("inv(" + f.name + ")", std::move(m), std::move(bell), f.bell ? f.bell->degree() : 1);
}

MultiplicativeFunction pointwise_product(const MultiplicativeFunction& f, const MultiplicativeFunction& g)
{
    const MasterEquation fm = f.master;
    const MasterEquation gm = g.master;
    std::map<unsigned long, MasterEquation::LocalRule> ex;
    for (unsigned long q : exception_union(f, g)) {
        ex[q] = [fm, gm, q](unsigned K) {
            auto a = fm.local_values(q, K);
            const auto b = gm.local_values(q, K);
            for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
            return a;
        };
    }
    MasterEquation m(
        [fm, gm](unsigned K) {
            auto a = fm.generic(K);
            const auto b = gm.generic(K);
            for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
            return a;
        },
        std::move(ex));
    const unsigned df = f.bell ? f.bell->degree() : 1;
    const unsigned dg = g.bell ? g.bell->degree() : 1;
    return assemble("(" + f.name + " * " + g.name + ")", std::move(m), std::nullopt, df + dg);
}

MultiplicativeFunction pointwise_power(const MultiplicativeFunction& f, unsigned j)
{
    if (j < 1) throw InvalidArgument("pointwise power exponent must be at least 1");
    if (j == 1) return f;
    const MasterEquation fm = f.master;
    std::map<unsigned long, MasterEquation::LocalRule> ex;
    for (const auto& [q, r] : fm.exceptions()) {
        ex[q] = [fm, q, j](unsigned K) {
            auto a = fm.local_values(q, K);
            for (auto& v : a) {
                BigRational base = v;
                for (unsigned i = 1; i < j; ++i) v *= base;
            }
            return a;
        };
    }
    MasterEquation m(
        [fm, j](unsigned K) {
            auto a = fm.generic(K);
            for (auto& v : a) v = v.pow(j);
            return a;
        },
        std::move(ex));
    const unsigned df = f.bell ? f.bell->degree() : 1;
    return assemble(f.name + "^" + std::to_string(j), std::move(m), std::nullopt, df * j);
}

MultiplicativeFunction shift_by_power(const MultiplicativeFunction& f, int k)
{
    if (k == 0) return f;
    const MasterEquation fm = f.master;
    std::map<unsigned long, MasterEquation::LocalRule> ex;
    for (const auto& [q, r] : fm.exceptions()) {
        ex[q] = [fm, q, k](unsigned K) {
            auto a = fm.local_values(q, K);
            BigRational step = 1;
            BigInt qk;
            mpz_pow_ui(qk.get_mpz_t(), BigInt(q).get_mpz_t(), static_cast<unsigned long>(std::abs(k)));
            const BigRational factor = k > 0 ? BigRational(qk) : BigRational(1, qk);
            for (auto& v : a) {
                v *= step;
                step *= factor;
            }
            for (auto& v : a) v.canonicalize();
            return a;
        };
    }
    MasterEquation m(
        [fm, k](unsigned K) {
            auto a = fm.generic(K);
            for (std::size_t e = 0; e < a.size(); ++e) a[e] = a[e].shifted(k * static_cast<int>(e));
            return a;
        },
        std::move(ex));
    std::optional<BellRational> bell;
    if (f.bell) bell = f.bell->scaled(k);
    return assemble("shift(" + f.name + ", " + std::to_string(k) + ")", std::move(m), std::move(bell), 1);
}

MultiplicativeFunction unitary_convolve(const MultiplicativeFunction& f, const MultiplicativeFunction& g)
{
    const MasterEquation fm = f.master;
    const MasterEquation gm = g.master;
    std::map<unsigned long, MasterEquation::LocalRule> ex;
    for (unsigned long q : exception_union(f, g)) {
        ex[q] = [fm, gm, q](unsigned K) {
            auto a = fm.local_values(q, K);
            const auto b = gm.local_values(q, K);
            for (std::size_t i = 1; i < a.size(); ++i) a[i] += b[i];
            return a;
        };
    }
    MasterEquation m(
        [fm, gm](unsigned K) {
            auto a = fm.generic(K);
            const auto b = gm.generic(K);
            for (std::size_t i = 1; i < a.size(); ++i) a[i] += b[i];
            return a;
        },
        std::move(ex));
    std::optional<BellRational> bell;
    unsigned start = 1;
    if (f.bell && g.bell) {
        const XPoly& nf = f.bell->num;
        const XPoly& df = f.bell->den;
        const XPoly& ng = g.bell->num;
        const XPoly& dg = g.bell->den;
        bell = reduce_bell(nf * dg + ng * df - df * dg, df * dg);
    } else {
        start = (f.bell ? f.bell->degree() : 1) + (g.bell ? g.bell->degree() : 1);
    }
    return assemble("(" + f.name + " <+> " + g.name + ")", std::move(m), std::move(bell), start);
}

} // namespace dgf
