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

#ifndef DGF_SEQUENCE_HPP
#define DGF_SEQUENCE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dgf/bell.hpp"

namespace dgf {

enum class SequenceSource { MasterSieve, ZetaExpansion, Oracle, BFile };

std::string to_string(SequenceSource s);

/// Terms a(1..N); values[0] is a(1).
struct SequenceWindow {
    std::vector<BigInt> values;
    SequenceSource source = SequenceSource::MasterSieve;

    std::size_t size() const noexcept { return values.size(); }
    const BigInt& operator[](std::size_t n) const { return values.at(n - 1); }
};

/// Smallest-prime-factor table for 2..N.
class FactorSieve {
public:
    static constexpr std::uint32_t kMaxLimit = 10'000'000;

    explicit FactorSieve(std::uint32_t limit);

    std::uint32_t limit() const noexcept { return limit_; }
    std::uint32_t spf(std::uint32_t n) const { return spf_.at(n); }
    bool is_prime(std::uint32_t n) const { return n >= 2 && spf_.at(n) == n; }
    /// (prime, exponent) pairs in increasing prime order.
    std::vector<std::pair<std::uint32_t, unsigned>> factor(std::uint32_t n) const;
    std::vector<std::uint32_t> primes() const;

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

/// Terms from the master equation.
SequenceWindow terms(const MultiplicativeFunction& f, std::uint32_t N);
/// Terms as doubles, for numerical partial sums.
std::vector<double> terms_double(const MultiplicativeFunction& f, std::uint32_t N);

SequenceWindow brute_convolve(const SequenceWindow& a, const SequenceWindow& b);
SequenceWindow brute_unitary_convolve(const SequenceWindow& a, const SequenceWindow& b);
/// Dirichlet inverse by the divisor recurrence; a(1) must be +-1.
SequenceWindow brute_inverse(const SequenceWindow& a);

struct BFileReport {
    bool match = false;
    /// First index where the values differ, or 0.
    std::size_t first_mismatch = 0;
    /// Number of indices compared.
    std::size_t compared = 0;
    BigInt expected;
    BigInt actual;

    std::string to_string() const;
};

/// Parse a b-file into index -> value pairs starting at its first index.
std::pair<std::size_t, std::vector<BigInt>> read_bfile(const std::string& path);
BFileReport compare_bfile(const SequenceWindow& w, const std::string& path);

/// Direct-definition oracle for a catalog entry; never uses Bell series.
SequenceWindow oracle(const std::string& name, const std::vector<long>& params, std::uint32_t N);
/// Largest N accepted by the named oracle.
std::uint32_t oracle_limit(const std::string& name);

} // namespace dgf

#endif
