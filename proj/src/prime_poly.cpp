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

#include "dgf/prime_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dgf/errors.hpp"

namespace dgf {

PrimePoly::PrimePoly(long c)
{
    if (c != 0) coeffs_.emplace_back(c);
}

PrimePoly::PrimePoly(const BigInt& c)
{
    if (c != 0) coeffs_.push_back(c);
}

PrimePoly PrimePoly::monomial(const BigInt& c, int exponent)
{
    PrimePoly r(c);
    if (!r.is_zero()) r.low_ = exponent;
    return r;
}

PrimePoly PrimePoly::from_terms(const std::map<int, BigInt>& terms)
{
    PrimePoly r;
    for (const auto& [e, c] : terms) r += monomial(c, e);
    return r;
}

bool PrimePoly::is_constant() const noexcept
{
    return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0);
}

BigInt PrimePoly::coeff(int exponent) const
{
    if (coeffs_.empty() || exponent < low_ || exponent > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, BigInt> PrimePoly::terms() const
{
    std::map<int, BigInt> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

std::size_t PrimePoly::term_count() const
{
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                  [](const BigInt& c) { return c != 0; }));
}

void PrimePoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead_zeros = 0;
    while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros] == 0) ++lead_zeros;
    if (lead_zeros > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
        low_ += static_cast<int>(lead_zeros);
    }
    if (coeffs_.empty()) low_ = 0;
}

PrimePoly& PrimePoly::operator+=(const PrimePoly& rhs)
{
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    const int lo = std::min(low_, rhs.low_);
    const int hi = std::max(degree(), rhs.degree());
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(rhs.low_ - lo) + i] += rhs.coeffs_[i];
    coeffs_ = std::move(out);
    low_ = lo;
    normalize();
    return *this;
}

PrimePoly& PrimePoly::operator-=(const PrimePoly& rhs)
{
    return *this += -rhs;
}

PrimePoly PrimePoly::operator-() const
{
    PrimePoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PrimePoly operator*(const PrimePoly& a, const PrimePoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    PrimePoly r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

PrimePoly& PrimePoly::operator*=(const PrimePoly& rhs)
{
    return *this = *this * rhs;
}

PrimePoly PrimePoly::shifted(int k) const
{
    PrimePoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

PrimePoly PrimePoly::pow(unsigned n) const
{
    PrimePoly result(1);
    PrimePoly base = *this;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return result;
}

namespace {

// Plain polynomial long division of a by b (both with low_ == 0 semantics
// handled by the caller). Returns nullopt if not exact over Z.
std::optional<std::vector<BigInt>> divide_dense(std::vector<BigInt> a, const std::vector<BigInt>& b)
{
    if (a.size() < b.size()) {
        if (std::all_of(a.begin(), a.end(), [](const BigInt& c) { return c == 0; }))
            return std::vector<BigInt>{};
        return std::nullopt;
    }
    std::vector<BigInt> q(a.size() - b.size() + 1);
    const BigInt& lb = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt& top = a[k + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        BigInt factor = top / lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= factor * b[j];
        q[k] = std::move(factor);
    }
    for (std::size_t i = 0; i + 1 < b.size() && i < a.size(); ++i)
        if (a[i] != 0) return std::nullopt;
    return q;
}

} // namespace

std::optional<PrimePoly> PrimePoly::exact_div(const PrimePoly& divisor) const
{
    if (divisor.is_zero()) throw DomainError("division of a polynomial in p by zero");
    if (is_zero()) return PrimePoly{};
    auto q = divide_dense(coeffs_, divisor.coeffs_);
    if (!q) return std::nullopt;
    PrimePoly r;
    r.coeffs_ = std::move(*q);
    r.low_ = low_ - divisor.low_;
    r.normalize();
    return r;
}

BigInt PrimePoly::content() const
{
    BigInt g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

PrimePoly PrimePoly::primitive_part() const
{
    if (is_zero()) return {};
    PrimePoly r = *this;
    const BigInt g = content();
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (r.coeffs_.back() < 0)
        for (auto& c : r.coeffs_) c = -c;
    r.low_ = 0;
    return r;
}

BigRational PrimePoly::evaluate_rational(const BigInt& at) const
{
    if (is_zero()) return 0;
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
    BigRational value(acc);
    if (low_ >= 0) {
        BigInt scale;
        mpz_pow_ui(scale.get_mpz_t(), at.get_mpz_t(), static_cast<unsigned long>(low_));
        value *= scale;
    } else {
        BigInt scale;
        mpz_pow_ui(scale.get_mpz_t(), at.get_mpz_t(), static_cast<unsigned long>(-low_));
        value /= scale;
        value.canonicalize();
    }
    return value;
}

BigInt PrimePoly::evaluate(const BigInt& at) const
{
    const BigRational v = evaluate_rational(at);
    if (v.get_den() != 1) throw DomainError("non-integral value " + v.get_str() + " at p=" + at.get_str());
    return v.get_num();
}

double PrimePoly::evaluate_scaled(double log_p, double shift) const
{
    double sum = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const double e = static_cast<double>(low_ + static_cast<int>(i)) + shift;
        sum += coeffs_[i].get_d() * std::exp(e * log_p);
    }
    return sum;
}

std::string PrimePoly::to_string(const std::string& symbol) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const int e = low_ + static_cast<int>(i);
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << symbol;
        if (e < 0) os << "^(" << e << ")";
        else if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PrimePoly& poly)
{
    return os << poly.to_string();
}

namespace {

// Pseudo-remainder of a by b for polynomials with low exponent 0.
PrimePoly pseudo_remainder(PrimePoly a, const PrimePoly& b)
{
    const int db = b.degree();
    const BigInt lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        const BigInt la = a.leading();
        a = a * PrimePoly(lb) - PrimePoly::monomial(la, shift) * b;
    }
    return a;
}

} // namespace

PrimePoly gcd(const PrimePoly& a, const PrimePoly& b)
{
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.primitive_part() * PrimePoly(b.content());
    if (b.is_zero()) return a.primitive_part() * PrimePoly(a.content());
    BigInt cg;
    const BigInt ca = a.content();
    const BigInt cb = b.content();
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

    PrimePoly u = a.primitive_part();
    PrimePoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        if (v.degree() == 0) {
            u = PrimePoly(1);
            break;
        }
        PrimePoly r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return u.primitive_part() * PrimePoly(cg);
}

RatP::RatP(const PrimePoly& n, const PrimePoly& d) : num_(n), den_(d)
{
    if (den_.is_zero()) throw DomainError("zero denominator in Q(p)");
    reduce();
}

void RatP::normalize_laurent()
{
    // den_ is 1 here; nothing to do beyond keeping the invariant.
}

void RatP::reduce()
{
    if (num_.is_zero()) {
        den_ = PrimePoly(1);
        return;
    }
    const PrimePoly g = gcd(num_, den_);
    if (!(g == PrimePoly(1))) {
        num_ = *num_.exact_div(g);
        den_ = *den_.exact_div(g);
    }
    // Powers of p are units: move them from the denominator to the numerator.
    const int shift = den_.low_degree();
    if (shift != 0) {
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
    }
    if (den_.leading() < 0) {
        den_ = -den_;
        num_ = -num_;
    }
}

bool RatP::is_laurent() const
{
    return den_ == PrimePoly(1);
}

PrimePoly RatP::as_laurent() const
{
    if (!is_laurent()) throw DomainError("value is not a Laurent polynomial in p");
    return num_;
}

RatP operator+(const RatP& a, const RatP& b)
{
    if (a.den_ == b.den_) return RatP(a.num_ + b.num_, a.den_);
    return RatP(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatP operator-(const RatP& a, const RatP& b)
{
    return a + (-b);
}

RatP operator*(const RatP& a, const RatP& b)
{
    if (a.is_zero() || b.is_zero()) return RatP();
    if (a.is_laurent() && b.is_laurent()) return RatP(a.num_ * b.num_, PrimePoly(1), true);
    return RatP(a.num_ * b.num_, a.den_ * b.den_);
}

RatP operator/(const RatP& a, const RatP& b)
{
    if (b.is_zero()) throw DomainError("division by zero in Q(p)");
    return RatP(a.num_ * b.den_, a.den_ * b.num_);
}

} // namespace dgf
