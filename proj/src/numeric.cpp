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

#include "dgf/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "dgf/errors.hpp"
#include "dgf/sequence.hpp"

namespace dgf {

namespace {

// B_2, B_4, ..., B_30
constexpr std::array<double, 15> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

constexpr double kWynnTiny = 1e-30;
constexpr std::size_t kWynnMaxColumns = 40;
constexpr unsigned kCheckpoints = 12;
constexpr double kWynnRoundingFloor = 1e-10;

std::string real_string(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require_convergent(double s, double abscissa, double margin)
{
    if (!(s > abscissa + margin))
        throw DomainError("s=" + real_string(s) + " is not inside the convergence region s > " +
                          real_string(abscissa));
}

double to_double(const BigRational& r) { return r.get_d(); }

// log B_p(p^-s) for one prime, evaluated as log1p((num - den) / den) so
// that factors close to 1 keep full relative accuracy.
class LocalLog {
public:
    explicit LocalLog(const MultiplicativeFunction& f) : f_(f)
    {
        if (f.bell) {
            diff_ = f.bell->num - f.bell->den;
            den_ = f.bell->den;
            rational_ = true;
        } else {
            series_ = bell_from_master(f.master, kSeriesOrder);
        }
    }

    double operator()(std::uint32_t p, double s) const
    {
        if (f_.master.is_exception(p)) return exceptional(p, s);
        const double lp = std::log(static_cast<double>(p));
        if (rational_) return std::log1p(eval(diff_.coeffs(), lp, s) / eval(den_.coeffs(), lp, s));
        return std::log1p(eval(series_, lp, s) - 1.0);
    }

private:
    static constexpr unsigned kSeriesOrder = 60;

    // sum_i c_i(p) p^(-i s)
    static double eval(const std::vector<PrimePoly>& c, double lp, double s)
    {
        double v = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i].is_zero()) continue;
            v += c[i].evaluate_scaled(lp, -static_cast<double>(i) * s);
        }
        return v;
    }

    double exceptional(std::uint32_t p, double s) const
    {
        const double x = std::pow(static_cast<double>(p), -s);
        if (const auto b = f_.bell_at(p)) {
            double num = 0.0;
            double den = 0.0;
            for (int i = b->num.degree(); i >= 0; --i) num = num * x + to_double(b->num.coeff(i).coeff(0));
            for (int i = b->den.degree(); i >= 0; --i) den = den * x + to_double(b->den.coeff(i).coeff(0));
            return std::log(num / den);
        }
        const auto vals = f_.master.local_values(p, kSeriesOrder);
        double v = 0.0;
        for (std::size_t i = vals.size(); i-- > 0;) v = v * x + to_double(vals[i]);
        return std::log(v);
    }

    const MultiplicativeFunction& f_;
    bool rational_ = false;
    XPoly diff_;
    XPoly den_;
    Series series_;
};

} // namespace

double riemann_zeta(double s)
{
    if (!(s > 1.0)) throw DomainError("riemann_zeta needs s > 1, got " + real_string(s));
    if (s > 60.0) return 1.0 + std::pow(2.0, -s) + std::pow(3.0, -s);
    const int N = std::max(20, static_cast<int>(std::ceil(s)) + 10);
    long double sum = 0.0L;
    for (int n = N - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    const long double Nl = N;
    const long double Ns = std::pow(Nl, -static_cast<long double>(s));
    sum += Nl * Ns / (s - 1.0L) + Ns / 2.0L;
    // B_2k / (2k)! * s (s+1) ... (s+2k-2) * N^(-s-2k+1)
    long double rising = s;
    long double fact = 2.0L;
    long double npow = Ns / Nl;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
        const long double term = kBernoulli[k - 1] / fact * rising * npow;
        sum += term;
        if (std::fabs(static_cast<double>(term)) < 1e-16) break;
        const long double a = s + 2.0L * k - 1.0L;
        rising *= a * (a + 1.0L);
        fact *= (2.0L * k + 1.0L) * (2.0L * k + 2.0L);
        npow /= Nl * Nl;
    }
    return static_cast<double>(sum);
}

WynnResult wynn_epsilon(const std::vector<double>& seq)
{
    WynnResult r;
    if (seq.empty()) return r;
    r.value = seq.back();
    if (seq.size() < 3) {
        if (seq.size() == 2) r.error = std::fabs(seq[1] - seq[0]);
        return r;
    }
    // prev holds column k-1 and cur column k; even columns estimate the limit.
    std::vector<double> prev(seq.size() + 1, 0.0);
    std::vector<double> cur = seq;
    double best = seq.back();
    double best_error = std::fabs(seq.back() - seq[seq.size() - 2]);
    for (std::size_t k = 1; k < kWynnMaxColumns && cur.size() > 1; ++k) {
        std::vector<double> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double d = cur[i + 1] - cur[i];
            if (std::fabs(d) < kWynnTiny) {
                r.breakdown = true;
                r.value = best;
                r.error = best_error;
                return r;
            }
            next[i] = prev[i + 1] + 1.0 / d;
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (k % 2 == 0) {
            best_error = std::fabs(cur.back() - best);
            best = cur.back();
        }
    }
    r.value = best;
    r.error = best_error;
    return r;
}

EvalResult eval_zeta_form(const ZetaForm& z, double s, double margin)
{
    const ConvergenceInfo info = abscissa(z);
    if (!info.empty) require_convergent(s, info.abscissa.get_d(), margin);
    double value = 1.0;
    double weight = 0.0;
    for (const auto& f : z.zeta) {
        value *= std::pow(riemann_zeta(f.u * s - f.l), static_cast<double>(f.gamma));
        weight += std::fabs(static_cast<double>(f.gamma));
    }
    for (const auto& loc : z.local) {
        const double x = std::pow(static_cast<double>(loc.prime), -s);
        auto eval = [x](const XPoly& poly) {
            double v = 0.0;
            for (int i = poly.degree(); i >= 0; --i) v = v * x + to_double(poly.coeff(i).coeff(0));
            return v;
        };
        value *= eval(loc.num) / eval(loc.den);
    }
    return {value, std::fabs(value) * (weight + 1.0) * 4e-14, "zeta-form"};
}

EvalResult eval_euler_product(const MultiplicativeFunction& f, double s, std::uint32_t P,
                              Acceleration acceleration, double margin)
{
    if (P < 2) throw InvalidArgument("prime limit must be at least 2");
    const EulerFactorList factors =
        f.bell ? factorize(*f.bell, 8) : euler_expand(bell_from_master(f.master, 8), 8);
    const ConvergenceInfo info = abscissa(factors);
    require_convergent(s, info.abscissa.get_d(), margin);

    const FactorSieve sieve(P);
    const auto primes = sieve.primes();
    const LocalLog local(f);

    // Checkpoints P / 2^j, ascending.
    std::vector<std::uint32_t> checkpoints;
    for (unsigned j = kCheckpoints; j-- > 0;) {
        const std::uint32_t c = P >> j;
        if (c >= 2 && (checkpoints.empty() || c > checkpoints.back())) checkpoints.push_back(c);
    }
    std::vector<double> partial;
    long double log_sum = 0.0L;
    std::size_t next = 0;
    for (const std::uint32_t p : primes) {
        while (next < checkpoints.size() && p > checkpoints[next]) {
            partial.push_back(std::exp(static_cast<double>(log_sum)));
            ++next;
        }
        log_sum += local(p, s);
    }
    while (next < checkpoints.size()) {
        partial.push_back(std::exp(static_cast<double>(log_sum)));
        ++next;
    }
    // Exception primes beyond P are known exactly; fold them in everywhere.
    long double beyond = 0.0L;
    for (const auto& [q, rule] : f.master.exceptions())
        if (q > P) beyond += local(static_cast<std::uint32_t>(q), s);
    for (double& v : partial) v *= std::exp(static_cast<double>(beyond));
    const double raw = partial.back();

    // Tail of the log: sum over p > P of |gamma| p^(l - u s).
    const double lP = std::log(static_cast<double>(P));
    double tail = 0.0;
    for (const auto& fac : factors.factors) {
        const double a = fac.u * s - fac.l - 1.0;
        tail += std::fabs(fac.gamma.get_d()) * std::exp(-a * lP) / (a * lP);
    }
    const double raw_error = std::fabs(raw) * tail;

    if (acceleration == Acceleration::None) return {raw, raw_error, "euler-product"};
    const WynnResult w = wynn_epsilon(partial);
    if (w.breakdown) return {raw, raw_error, "euler-product (wynn breakdown)"};
    if (!std::isfinite(w.value) || 2.0 * w.error > raw_error) return {raw, raw_error, "euler-product (wynn rejected)"};
    // Extrapolation amplifies rounding in the partial products.
    const double error = 2.0 * w.error + std::fabs(w.value) * kWynnRoundingFloor;
    return {w.value, std::min(error, raw_error), "euler-product+wynn"};
}

EvalResult eval_partial_sum(const MultiplicativeFunction& f, double s, std::uint32_t N, double margin)
{
    const ConvergenceInfo info = abscissa(f);
    const double sigma0 = info.abscissa.get_d();
    require_convergent(s, sigma0, margin);
    const std::vector<double> a = terms_double(f, N);
    long double sum = 0.0L;
    double C = 0.0;
    for (std::uint32_t n = N; n >= 1; --n) {
        const double v = a[n - 1];
        if (v == 0.0) continue;
        const double dn = n;
        sum += static_cast<long double>(v) * std::pow(static_cast<long double>(dn), -static_cast<long double>(s));
        C = std::max(C, std::fabs(v) * std::pow(dn, 1.0 - sigma0));
    }
    const double tail = C * std::pow(static_cast<double>(N), sigma0 - s) / (s - sigma0);
    return {static_cast<double>(sum), tail, "partial-sum"};
}

} // namespace dgf
