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

// Direct-definition oracles. Nothing here touches Bell series or master
// equations; values come from divisor scans, gcd loops and modular loops.

#include <functional>
#include <map>
#include <numeric>

#include "dgf/catalog.hpp"
#include "dgf/errors.hpp"
#include "dgf/sequence.hpp"

namespace dgf {

namespace {

using Params = std::vector<long>;
using Values = std::vector<BigInt>;

constexpr std::uint32_t kDivisorScanLimit = 100'000;
constexpr std::uint32_t kQuadraticLimit = 5'000;
constexpr std::uint32_t kModularLoopLimit = 2'000;

BigInt power(unsigned long base, unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

BigInt power(const BigInt& base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::vector<unsigned long> divisors(unsigned long n)
{
    std::vector<unsigned long> small;
    std::vector<unsigned long> large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<unsigned long> unitary_divisors(unsigned long n)
{
    std::vector<unsigned long> out;
    for (unsigned long d : divisors(n))
        if (std::gcd(d, n / d) == 1) out.push_back(d);
    return out;
}

unsigned big_omega(unsigned long n)
{
    unsigned s = 0;
    for (const auto& [p, e] : trial_factor(n)) s += e;
    return s;
}

unsigned small_omega(unsigned long n) { return static_cast<unsigned>(trial_factor(n).size()); }

bool divisible_by_power(unsigned long n, unsigned long d, unsigned long t)
{
    unsigned long q = 1;
    for (unsigned long i = 0; i < t; ++i) {
        if (q > n / d) return false;
        q *= d;
    }
    return n % q == 0;
}

bool is_tfree(unsigned long n, unsigned long t)
{
    for (unsigned long d = 2; d <= n; ++d) {
        unsigned long q = 1;
        bool over = false;
        for (unsigned long i = 0; i < t && !over; ++i) {
            if (q > n / d) over = true;
            else q *= d;
        }
        if (over) break;
        if (n % q == 0) return false;
    }
    return true;
}

// Largest r with r^t dividing n.
unsigned long largest_tpow_root(unsigned long n, unsigned long t)
{
    unsigned long best = 1;
    for (unsigned long r = 2; ; ++r) {
        unsigned long q = 1;
        bool over = false;
        for (unsigned long i = 0; i < t && !over; ++i) {
            if (q > n / r) over = true;
            else q *= r;
        }
        if (over) break;
        if (n % q == 0) best = r;
    }
    return best;
}

bool is_tth_power(unsigned long n, unsigned long t)
{
    if (n == 1) return true;
    for (unsigned long r = 2; ; ++r) {
        BigInt q = power(r, t);
        if (q == n) return true;
        if (q > n) return false;
    }
}

bool is_tfull(unsigned long n, unsigned long t)
{
    for (const auto& [p, e] : trial_factor(n))
        if (e < t) return false;
    return true;
}

Values tabulate(std::uint32_t N, const std::function<BigInt(unsigned long)>& f)
{
    Values v;
    v.reserve(N);
    for (unsigned long n = 1; n <= N; ++n) v.push_back(f(n));
    return v;
}

SequenceWindow window(Values v)
{
    SequenceWindow w;
    w.values = std::move(v);
    w.source = SequenceSource::Oracle;
    return w;
}

Values ones(std::uint32_t N) { return Values(N, 1); }

Values mobius(std::uint32_t N) { return brute_inverse(window(ones(N))).values; }

Values coprime_count(std::uint32_t N)
{
    return tabulate(N, [](unsigned long n) {
        unsigned long c = 0;
        for (unsigned long x = 1; x <= n; ++x)
            if (std::gcd(x, n) == 1) ++c;
        return BigInt(c);
    });
}

// sum_{d|n} mu(n/d) d^k
Values jordan_values(std::uint32_t N, unsigned long k)
{
    const Values mu = mobius(N);
    return tabulate(N, [&](unsigned long n) {
        BigInt s = 0;
        for (unsigned long d : divisors(n)) s += mu[n / d - 1] * power(d, k);
        return s;
    });
}

Values exact_quotient(const Values& a, const Values& b)
{
    Values out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] == 0 || a[i] % b[i] != 0) throw Error("oracle quotient is not exact at n=" + std::to_string(i + 1));
        out[i] = a[i] / b[i];
    }
    return out;
}

Values divisor_power_sum(std::uint32_t N, unsigned long k, const std::function<bool(unsigned long)>& keep)
{
    return tabulate(N, [&](unsigned long n) {
        BigInt s = 0;
        for (unsigned long d : divisors(n))
            if (keep(d)) s += power(d, k);
        return s;
    });
}

Values unitary_power_sum(std::uint32_t N, unsigned long k, bool odd_only)
{
    return tabulate(N, [&](unsigned long n) {
        BigInt s = 0;
        for (unsigned long d : unitary_divisors(n))
            if (!odd_only || d % 2) s += power(d, k);
        return s;
    });
}

// sum_{d||n} mu*(d) (n/d)^k
Values unitary_jordan(std::uint32_t N, unsigned long k)
{
    return tabulate(N, [&](unsigned long n) {
        BigInt s = 0;
        for (unsigned long d : unitary_divisors(n)) {
            const BigInt term = power(n / d, k);
            if (small_omega(d) % 2) s -= term;
            else s += term;
        }
        return s;
    });
}

// Divisors of n^t from the factorization of n.
std::vector<BigInt> divisors_of_power(unsigned long n, unsigned long t)
{
    std::vector<BigInt> ds{1};
    for (const auto& [p, e] : trial_factor(n)) {
        std::vector<BigInt> next;
        for (const auto& d : ds) {
            BigInt q = d;
            for (unsigned long i = 0; i <= e * t; ++i) {
                next.push_back(q);
                q *= p;
            }
        }
        ds = std::move(next);
    }
    return ds;
}

struct OracleDef {
    std::uint32_t limit;
    std::function<Values(const Params&, std::uint32_t)> run;
};

const std::map<std::string, OracleDef>& registry()
{
    static const std::map<std::string, OracleDef> reg = [] {
        std::map<std::string, OracleDef> r;
        const auto L = kDivisorScanLimit;
        r["one"] = {L, [](const Params&, std::uint32_t N) { return ones(N); }};
        r["id"] = {L, [](const Params&, std::uint32_t N) { return tabulate(N, [](unsigned long n) { return BigInt(n); }); }};
        r["power"] = {L, [](const Params& ps, std::uint32_t N) {
                          return tabulate(N, [&](unsigned long n) { return power(n, ps[0]); });
                      }};
        r["mu"] = {L, [](const Params&, std::uint32_t N) { return mobius(N); }};
        r["liouville"] = {L, [](const Params&, std::uint32_t N) {
                              return tabulate(N, [](unsigned long n) { return BigInt(big_omega(n) % 2 ? -1 : 1); });
                          }};
        r["const_c"] = {L, [](const Params& ps, std::uint32_t N) {
                            return tabulate(N, [&](unsigned long n) { return power(ps[0], big_omega(n)); });
                        }};
        r["eps"] = {L, [](const Params& ps, std::uint32_t N) {
                        return tabulate(N, [&](unsigned long n) { return BigInt(is_tth_power(n, ps[0]) ? 1 : 0); });
                    }};
        r["xi"] = {L, [](const Params& ps, std::uint32_t N) {
                       return tabulate(N, [&](unsigned long n) { return BigInt(is_tfree(n, ps[0]) ? 1 : 0); });
                   }};
        r["core"] = {L, [](const Params& ps, std::uint32_t N) {
                         return tabulate(N, [&](unsigned long n) {
                             unsigned long m = n;
                             for (unsigned long d = 2; d <= m; ++d)
                                 while (divisible_by_power(m, d, ps[0])) {
                                     for (long i = 0; i < ps[0]; ++i) m /= d;
                                 }
                             return BigInt(m);
                         });
                     }};
        r["rad"] = {L, [](const Params& ps, std::uint32_t N) {
                        return tabulate(N, [&](unsigned long n) {
                            unsigned long best = 1;
                            for (unsigned long d : divisors(n))
                                if (is_tfree(d, ps[0])) best = std::max(best, d);
                            return BigInt(best);
                        });
                    }};
        r["depleted"] = {L, [](const Params& ps, std::uint32_t N) {
                             const BigInt qk = power(ps[0], ps[1]);
                             return tabulate(N, [&](unsigned long n) { return BigInt(BigInt(n) % qk != 0 ? 1 : 0); });
                         }};
        r["periodic2"] = {L, [](const Params& ps, std::uint32_t N) {
                              return tabulate(N, [&](unsigned long n) { return BigInt(n % 2 ? 1 : ps[0]); });
                          }};
        r["periodic4"] = {L, [](const Params& ps, std::uint32_t N) {
                              return tabulate(N, [&](unsigned long n) {
                                  return BigInt(n % 4 == 0 ? ps[0] : (n % 2 == 0 ? ps[1] : 1));
                              });
                          }};
        r["gcdc"] = {L, [](const Params& ps, std::uint32_t N) {
                         return tabulate(N, [&](unsigned long n) {
                             return BigInt(std::gcd(n, static_cast<unsigned long>(ps[0])));
                         });
                     }};
        r["lcmc"] = {L, [](const Params& ps, std::uint32_t N) {
                         const auto c = static_cast<unsigned long>(ps[0]);
                         return tabulate(N, [&](unsigned long n) { return BigInt(std::lcm(n, c) / c); });
                     }};
        r["sigma"] = {L, [](const Params& ps, std::uint32_t N) {
                          return divisor_power_sum(N, ps[0], [](unsigned long) { return true; });
                      }};
        r["sigma_odd"] = {L, [](const Params& ps, std::uint32_t N) {
                              return divisor_power_sum(N, ps[0], [](unsigned long d) { return d % 2 == 1; });
                          }};
        r["tpow_divisor_sum"] = {L, [](const Params& ps, std::uint32_t N) {
                                     const unsigned long t = ps[0];
                                     return divisor_power_sum(N, 1, [t](unsigned long d) { return is_tth_power(d, t); });
                                 }};
        r["max_tpow"] = {L, [](const Params& ps, std::uint32_t N) {
                             return tabulate(N, [&](unsigned long n) { return power(largest_tpow_root(n, ps[0]), ps[0]); });
                         }};
        r["root_tpow"] = {L, [](const Params& ps, std::uint32_t N) {
                              return tabulate(N, [&](unsigned long n) { return BigInt(largest_tpow_root(n, ps[0])); });
                          }};
        r["sigma_tfree"] = {L, [](const Params& ps, std::uint32_t N) {
                                const unsigned long t = ps[1];
                                return divisor_power_sum(N, ps[0], [t](unsigned long d) { return is_tfree(d, t); });
                            }};
        r["tfull_count"] = {L, [](const Params& ps, std::uint32_t N) {
                                const unsigned long t = ps[0];
                                return divisor_power_sum(N, 0, [t](unsigned long d) { return is_tfull(d, t); });
                            }};
        r["sigma_pow"] = {L, [](const Params& ps, std::uint32_t N) {
                              return tabulate(N, [&](unsigned long n) {
                                  BigInt s = 0;
                                  for (const auto& d : divisors_of_power(n, ps[1])) s += power(d, ps[0]);
                                  return s;
                              });
                          }};
        r["gcd_pairs"] = {L, [](const Params& ps, std::uint32_t N) {
                              return tabulate(N, [&](unsigned long n) {
                                  BigInt s = 0;
                                  for (unsigned long d : divisors(n)) s += power(std::gcd(d, n / d), ps[0]);
                                  return s;
                              });
                          }};
        r["lcm_pairs"] = {L, [](const Params& ps, std::uint32_t N) {
                              return tabulate(N, [&](unsigned long n) {
                                  BigInt s = 0;
                                  for (unsigned long d : divisors(n)) s += power(std::lcm(d, n / d), ps[0]);
                                  return s;
                              });
                          }};
        r["tau"] = {L, [](const Params& ps, std::uint32_t N) {
                        SequenceWindow acc = window(ones(N));
                        for (long i = 1; i < ps[0]; ++i) acc = brute_convolve(acc, window(ones(N)));
                        return acc.values;
                    }};
        r["phi"] = {kQuadraticLimit, [](const Params&, std::uint32_t N) { return coprime_count(N); }};
        r["phi_kl"] = {L, [](const Params& ps, std::uint32_t N) {
                           const Values mu = mobius(N);
                           Values a(N);
                           for (unsigned long n = 1; n <= N; ++n) a[n - 1] = mu[n - 1] * power(n, ps[0]);
                           const Values b = tabulate(N, [&](unsigned long n) { return power(n, ps[1]); });
                           return brute_convolve(window(a), window(b)).values;
                       }};
        r["phi_prime"] = {kQuadraticLimit, [](const Params&, std::uint32_t N) {
                              const Values mu = mobius(N);
                              Values phi = coprime_count(N);
                              for (std::size_t i = 0; i < N; ++i) phi[i] *= mu[i] * mu[i];
                              return phi;
                          }};
        r["jordan"] = {L, [](const Params& ps, std::uint32_t N) { return jordan_values(N, ps[0]); }};
        r["dedekind"] = {L, [](const Params&, std::uint32_t N) {
                             return exact_quotient(jordan_values(N, 2), jordan_values(N, 1));
                         }};
        r["jordan_ratio"] = {L, [](const Params& ps, std::uint32_t N) {
                                 return exact_quotient(jordan_values(N, ps[0]), jordan_values(N, 1));
                             }};
        r["psi_k"] = {L, [](const Params& ps, std::uint32_t N) {
                          return exact_quotient(jordan_values(N, 2 * ps[0]), jordan_values(N, ps[0]));
                      }};
        r["ramanujan"] = {L, [](const Params& ps, std::uint32_t N) {
                              const Values mu = mobius(N);
                              const auto k = static_cast<unsigned long>(ps[0]);
                              return tabulate(N, [&](unsigned long n) {
                                  BigInt s = 0;
                                  for (unsigned long d : divisors(std::gcd(n, k))) s += mu[n / d - 1] * BigInt(d);
                                  return s;
                              });
                          }};
        r["mu_star"] = {L, [](const Params&, std::uint32_t N) {
                            return tabulate(N, [](unsigned long n) { return BigInt(small_omega(n) % 2 ? -1 : 1); });
                        }};
        r["sigma_star"] = {L, [](const Params& ps, std::uint32_t N) { return unitary_power_sum(N, ps[0], false); }};
        r["sigma_star_odd"] = {L, [](const Params& ps, std::uint32_t N) { return unitary_power_sum(N, ps[0], true); }};
        r["sigma_prime"] = {L, [](const Params&, std::uint32_t N) {
                                const Values mu = mobius(N);
                                Values a(N);
                                for (unsigned long n = 1; n <= N; ++n) a[n - 1] = BigInt(n) * mu[n - 1] * mu[n - 1];
                                return brute_unitary_convolve(window(a), window(ones(N))).values;
                            }};
        r["phi_star"] = {L, [](const Params&, std::uint32_t N) { return unitary_jordan(N, 1); }};
        r["jordan_star"] = {L, [](const Params& ps, std::uint32_t N) { return unitary_jordan(N, ps[0]); }};
        r["tau_star"] = {L, [](const Params& ps, std::uint32_t N) {
                             SequenceWindow acc = window(ones(N));
                             for (long i = 1; i < ps[0]; ++i) acc = brute_unitary_convolve(acc, window(ones(N)));
                             return acc.values;
                         }};
        r["mu_apostol"] = {L, [](const Params& ps, std::uint32_t N) {
                               const auto k = static_cast<unsigned>(ps[0]);
                               return tabulate(N, [&](unsigned long n) {
                                   int sign = 1;
                                   for (const auto& [p, e] : trial_factor(n)) {
                                       if (e > k) return BigInt(0);
                                       if (e == k) sign = -sign;
                                   }
                                   return BigInt(sign);
                               });
                           }};
        r["congruence_count"] = {kModularLoopLimit, [](const Params& ps, std::uint32_t N) {
                                     return tabulate(N, [&](unsigned long n) {
                                         unsigned long c = 0;
                                         for (unsigned long x = 1; x <= n; ++x)
                                             if (power(x, ps[0]) % n == 0) ++c;
                                         return BigInt(c);
                                     });
                                 }};
        r["congruence_min"] = {kModularLoopLimit, [](const Params& ps, std::uint32_t N) {
                                   return tabulate(N, [&](unsigned long n) {
                                       for (unsigned long x = 1; x <= n; ++x)
                                           if (power(x, ps[0]) % n == 0) return BigInt(x);
                                       return BigInt(n);
                                   });
                               }};
        return r;
    }();
    return reg;
}

const OracleDef& lookup(const std::string& name)
{
    const auto& reg = registry();
    const auto it = reg.find(name);
    if (it == reg.end()) throw InvalidArgument("unknown oracle '" + name + "'");
    return it->second;
}

} // namespace

std::uint32_t oracle_limit(const std::string& name) { return lookup(name).limit; }

SequenceWindow oracle(const std::string& name, const std::vector<long>& params, std::uint32_t N)
{
    const OracleDef& def = lookup(name);
    if (N < 1) throw InvalidArgument("N must be at least 1");
    if (N > def.limit)
        throw InvalidArgument("oracle '" + name + "' accepts N <= " + std::to_string(def.limit));
    const CatalogEntry& entry = find_entry(name);
    if (params.size() != entry.params.size())
        throw InvalidArgument(name + " expects " + std::to_string(entry.params.size()) + " parameter(s)");
    return window(def.run(params, N));
}

} // namespace dgf
