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

#include "dgf/sequence.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dgf/errors.hpp"

namespace dgf {

std::string to_string(SequenceSource s)
{
    switch (s) {
    case SequenceSource::MasterSieve: return "master-sieve";
    case SequenceSource::ZetaExpansion: return "zeta-expansion";
    case SequenceSource::Oracle: return "oracle";
    case SequenceSource::BFile: return "bfile";
    }
    return "unknown";
}

FactorSieve::FactorSieve(std::uint32_t limit) : limit_(limit)
{
    if (limit > kMaxLimit) throw InvalidArgument("sieve limit above " + std::to_string(kMaxLimit));
    spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = i;
    }
}

std::vector<std::pair<std::uint32_t, unsigned>> FactorSieve::factor(std::uint32_t n) const
{
    std::vector<std::pair<std::uint32_t, unsigned>> out;
    while (n > 1) {
        const std::uint32_t p = spf_.at(n);
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

std::vector<std::uint32_t> FactorSieve::primes() const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit_; ++i)
        if (spf_[i] == i) out.push_back(i);
    return out;
}

namespace {

unsigned max_exponent(std::uint32_t p, std::uint32_t N)
{
    unsigned e = 0;
    for (std::uint64_t q = p; q <= N; q *= p) ++e;
    return e;
}

// a(n) = a(n / p^e) * a(p^e) with p the smallest prime factor.
template <typename T, typename Values>
std::vector<T> sieve_terms(std::uint32_t N, Values&& prime_power_values)
{
    const FactorSieve sieve(N);
    std::vector<T> out(N + 1);
    if (N >= 1) out[1] = T(1);
    std::unordered_map<std::uint32_t, std::vector<T>> cache;
    for (std::uint32_t n = 2; n <= N; ++n) {
        const std::uint32_t p = sieve.spf(n);
        std::uint32_t m = n;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        auto& vals = cache[p];
        if (vals.empty()) vals = prime_power_values(p, max_exponent(p, N));
        out[n] = out[m] * vals[e];
    }
    out.erase(out.begin());
    return out;
}

} // namespace

SequenceWindow terms(const MultiplicativeFunction& f, std::uint32_t N)
{
    if (N < 1) throw InvalidArgument("N must be at least 1");
    unsigned e_max = max_exponent(2, N);
    const auto generic = f.master.generic(e_max);
    auto values = [&](std::uint32_t p, unsigned K) {
        if (f.master.is_exception(p)) return f.master.integer_values(p, K);
        std::vector<BigInt> v;
        v.reserve(K + 1);
        const BigInt q(p);
        for (unsigned e = 0; e <= K; ++e) v.push_back(generic[e].evaluate(q));
        return v;
    };
    SequenceWindow w;
    w.values = sieve_terms<BigInt>(N, values);
    w.source = SequenceSource::MasterSieve;
    return w;
}

std::vector<double> terms_double(const MultiplicativeFunction& f, std::uint32_t N)
{
    if (N < 1) throw InvalidArgument("N must be at least 1");
    const auto generic = f.master.generic(max_exponent(2, N));
    auto values = [&](std::uint32_t p, unsigned K) {
        std::vector<double> v;
        v.reserve(K + 1);
        if (f.master.is_exception(p)) {
            for (const auto& r : f.master.local_values(p, K)) v.push_back(r.get_d());
            return v;
        }
        const double lp = std::log(static_cast<double>(p));
        for (unsigned e = 0; e <= K; ++e) v.push_back(generic[e].evaluate_scaled(lp, 0.0));
        return v;
    };
    return sieve_terms<double>(N, values);
}

namespace {

void require_equal_length(const SequenceWindow& a, const SequenceWindow& b)
{
    if (a.size() != b.size())
        throw InvalidArgument("length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

} // namespace

SequenceWindow brute_convolve(const SequenceWindow& a, const SequenceWindow& b)
{
    require_equal_length(a, b);
    const std::size_t N = a.size();
    SequenceWindow out;
    out.values.assign(N, 0);
    out.source = SequenceSource::Oracle;
    for (std::size_t d = 1; d <= N; ++d) {
        if (a.values[d - 1] == 0) continue;
        for (std::size_t m = 1; d * m <= N; ++m) out.values[d * m - 1] += a.values[d - 1] * b.values[m - 1];
    }
    return out;
}

SequenceWindow brute_unitary_convolve(const SequenceWindow& a, const SequenceWindow& b)
{
    require_equal_length(a, b);
    const std::size_t N = a.size();
    SequenceWindow out;
    out.values.assign(N, 0);
    out.source = SequenceSource::Oracle;
    for (std::size_t d = 1; d <= N; ++d) {
        if (a.values[d - 1] == 0) continue;
        for (std::size_t m = 1; d * m <= N; ++m)
            if (std::gcd(d, m) == 1) out.values[d * m - 1] += a.values[d - 1] * b.values[m - 1];
    }
    return out;
}

SequenceWindow brute_inverse(const SequenceWindow& a)
{
    const std::size_t N = a.size();
    if (N == 0) return a;
    if (a.values[0] != 1 && a.values[0] != -1) throw DomainError("a(1) must be a unit");
    SequenceWindow out;
    out.values.assign(N, 0);
    out.source = SequenceSource::Oracle;
    const BigInt a1 = a.values[0];
    out.values[0] = a1;
    // acc[n] collects sum_{d|n, d<n} inv(d) a(n/d) as inv(d) becomes known.
    std::vector<BigInt> acc(N + 1, 0);
    for (std::size_t d = 1; d <= N; ++d) {
        if (d > 1) out.values[d - 1] = -acc[d] * a1;
        const BigInt& v = out.values[d - 1];
        if (v == 0) continue;
        for (std::size_t m = 2; d * m <= N; ++m) acc[d * m] += v * a.values[m - 1];
    }
    return out;
}

std::string BFileReport::to_string() const
{
    if (match) return "match through n=" + std::to_string(compared);
    return "mismatch at n=" + std::to_string(first_mismatch) + ": expected " + expected.get_str() + ", got " +
           actual.get_str();
}

std::pair<std::size_t, std::vector<BigInt>> read_bfile(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw BFileError("cannot open " + path, 0);
    std::string line;
    std::size_t line_no = 0;
    std::size_t first = 0;
    std::vector<BigInt> values;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        std::string index_text;
        std::string value_text;
        std::string extra;
        if (!(fields >> index_text >> value_text) || (fields >> extra)) throw BFileError("malformed line", line_no);
        BigInt index;
        BigInt value;
        if (index.set_str(index_text, 10) != 0 || value.set_str(value_text, 10) != 0)
            throw BFileError("malformed number", line_no);
        if (!index.fits_ulong_p()) throw BFileError("index out of range", line_no);
        const std::size_t n = index.get_ui();
        if (values.empty()) first = n;
        else if (n != first + values.size()) throw BFileError("non-consecutive index " + index_text, line_no);
        values.push_back(value);
    }
    if (values.empty()) throw BFileError("no data lines in " + path, line_no);
    return {first, values};
}

BFileReport compare_bfile(const SequenceWindow& w, const std::string& path)
{
    const auto [first, values] = read_bfile(path);
    if (first != 1) throw BFileError("offset mismatch: b-file starts at n=" + std::to_string(first), 0);
    BFileReport r;
    const std::size_t n = std::min(w.size(), values.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (w.values[i] != values[i]) {
            r.first_mismatch = i + 1;
            r.compared = i + 1;
            r.expected = values[i];
            r.actual = w.values[i];
            return r;
        }
    }
    r.match = true;
    r.compared = n;
    return r;
}

} // namespace dgf
