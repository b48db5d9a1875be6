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

#include "dgf/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "dgf/errors.hpp"

namespace dgf {

bool is_prime(unsigned long n)
{
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<unsigned long, unsigned>> trial_factor(unsigned long n)
{
    std::vector<std::pair<unsigned long, unsigned>> out;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::string CatalogEntry::signature() const
{
    if (params.empty()) return name;
    std::string out = name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ", ";
        out += params[i].name;
    }
    return out + ")";
}

std::string call_name(const std::string& name, const std::vector<long>& params)
{
    if (params.empty()) return name;
    std::string out = name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(params[i]);
    }
    return out + ")";
}

namespace {

using Params = std::vector<long>;
using ValueFn = std::function<PrimePoly(unsigned)>;
using LocalFn = std::function<BigInt(unsigned)>;

PrimePoly mono(long c, long e)
{
    return PrimePoly::monomial(c, static_cast<int>(e));
}

// 1 + p^k + ... + p^(kn)
PrimePoly geometric(long k, long n)
{
    PrimePoly out;
    for (long j = 0; j <= n; ++j) out += mono(1, k * j);
    return out;
}

BigInt ipow(unsigned long base, unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

MasterEquation::GenericRule rule(ValueFn f)
{
    return [f = std::move(f)](unsigned K) {
        std::vector<PrimePoly> v(K + 1);
        v[0] = PrimePoly(1);
        for (unsigned e = 1; e <= K; ++e) v[e] = f(e);
        return v;
    };
}

MasterEquation::LocalRule local(LocalFn f)
{
    return [f = std::move(f)](unsigned K) {
        std::vector<BigRational> v(K + 1);
        v[0] = 1;
        for (unsigned e = 1; e <= K; ++e) v[e] = BigRational(f(e));
        return v;
    };
}

MultiplicativeFunction fn(const std::string& name, const Params& ps, ValueFn f, unsigned hint = 1,
                          std::map<unsigned long, MasterEquation::LocalRule> ex = {})
{
    return make_function(call_name(name, ps), MasterEquation(rule(std::move(f)), std::move(ex)), std::nullopt, hint);
}

XPoly int_poly(const std::vector<BigInt>& c)
{
    std::vector<PrimePoly> v;
    v.reserve(c.size());
    for (const auto& x : c) v.emplace_back(x);
    return XPoly(std::move(v));
}

ZetaForm zf(std::vector<ZetaFactor> z, std::vector<LocalFactor> loc = {})
{
    for (auto& f : loc) {
        auto r = reduce_bell(f.num, f.den);
        f.num = r.num;
        f.den = r.den;
    }
    ZetaForm out{std::move(z), std::move(loc)};
    out.normalize();
    return out;
}

using Expected = std::function<std::optional<ZetaForm>(const Params&)>;

Expected fixed(std::function<std::vector<ZetaFactor>(const Params&)> z)
{
    return [z = std::move(z)](const Params& ps) -> std::optional<ZetaForm> { return zf(z(ps)); };
}

const ParamSpec K{"k", 0, 30};
const ParamSpec K1{"k", 1, 30};
const ParamSpec T{"t", 2, 8};
const ParamSpec C{"c", 1, 1000000};

std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> cat;
    auto add = [&](std::string name, std::vector<ParamSpec> params, std::string description, std::string anchor,
                   std::function<MultiplicativeFunction(const Params&)> builder, Expected expected = nullptr) {
        cat.push_back({std::move(name), std::move(params), std::move(description), std::move(anchor), std::move(builder),
                       std::move(expected)});
    };

    add("one", {}, "constant function 1", "A000012",
        [](const Params& ps) { return fn("one", ps, [](unsigned) { return PrimePoly(1); }); },
        fixed([](const Params&) { return std::vector<ZetaFactor>{{1, 0, 1}}; }));
    add("id", {}, "identity n", "A000027",
        [](const Params& ps) { return fn("id", ps, [](unsigned e) { return mono(1, e); }); },
        fixed([](const Params&) { return std::vector<ZetaFactor>{{1, 1, 1}}; }));
    add("power", {K}, "n^k", "A000290",
        [](const Params& ps) {
            const long k = ps[0];
            return fn("power", ps, [k](unsigned e) { return mono(1, k * e); });
        },
        fixed([](const Params& ps) { return std::vector<ZetaFactor>{{1, static_cast<int>(ps[0]), 1}}; }));
    add("mu", {}, "Moebius function", "A008683",
        [](const Params& ps) { return fn("mu", ps, [](unsigned e) { return PrimePoly(e == 1 ? -1L : 0L); }); },
        fixed([](const Params&) { return std::vector<ZetaFactor>{{1, 0, -1}}; }));
    add("liouville", {}, "Liouville lambda, (-1)^Omega(n)", "A008836",
        [](const Params& ps) { return fn("liouville", ps, [](unsigned e) { return PrimePoly(e % 2 ? -1L : 1L); }); },
        fixed([](const Params&) { return std::vector<ZetaFactor>{{2, 0, 1}, {1, 0, -1}}; }));
    add("const_c", {C}, "completely multiplicative with a(p) = c, c^Omega(n)", "A061142",
        [](const Params& ps) {
            const long c = ps[0];
            return fn("const_c", ps, [c](unsigned e) { return PrimePoly(ipow(static_cast<unsigned long>(c), e)); });
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            if (ps[0] == 1) return zf({{1, 0, 1}});
            return std::nullopt;
        });
    add("eps", {T}, "characteristic function of t-th powers", "A010052",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("eps", ps, [t](unsigned e) { return PrimePoly(e % t == 0 ? 1L : 0L); }, static_cast<unsigned>(t));
        },
        fixed([](const Params& ps) { return std::vector<ZetaFactor>{{static_cast<unsigned>(ps[0]), 0, 1}}; }));
    add("xi", {T}, "characteristic function of t-free numbers", "A008966",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("xi", ps, [t](unsigned e) { return PrimePoly(static_cast<long>(e) < t ? 1L : 0L); },
                      static_cast<unsigned>(t));
        },
        fixed([](const Params& ps) {
            return std::vector<ZetaFactor>{{1, 0, 1}, {static_cast<unsigned>(ps[0]), 0, -1}};
        }));
    add("core", {T}, "t-free core of n", "A007913",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("core", ps, [t](unsigned e) { return mono(1, e % t); }, static_cast<unsigned>(t));
        },
        fixed([](const Params& ps) {
            const auto t = static_cast<unsigned>(ps[0]);
            return std::vector<ZetaFactor>{{t, 0, 1}, {1, 1, 1}, {t, static_cast<int>(t), -1}};
        }));
    add("rad", {T}, "largest t-free divisor of n", "A007947",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("rad", ps, [t](unsigned e) { return mono(1, std::min<long>(e, t - 1)); });
        });
    add("depleted", {{"q", 2, 999983, true}, K1}, "indicator of numbers not divisible by q^k", "A000035",
        [](const Params& ps) {
            const auto q = static_cast<unsigned long>(ps[0]);
            const long k = ps[1];
            std::map<unsigned long, MasterEquation::LocalRule> ex;
            ex[q] = local([k](unsigned e) { return BigInt(static_cast<long>(e) < k ? 1 : 0); });
            return fn("depleted", ps, [](unsigned) { return PrimePoly(1); }, 1, std::move(ex));
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            std::vector<BigInt> c(static_cast<std::size_t>(ps[1]) + 1, 0);
            c[0] = 1;
            c.back() = -1;
            return zf({{1, 0, 1}}, {{static_cast<unsigned long>(ps[0]), int_poly(c), XPoly(1)}});
        });
    add("periodic2", {C}, "1 on odd n, c on even n", "A010121",
        [](const Params& ps) {
            const long c = ps[0];
            std::map<unsigned long, MasterEquation::LocalRule> ex;
            ex[2] = local([c](unsigned) { return BigInt(c); });
            return fn("periodic2", ps, [](unsigned) { return PrimePoly(1); }, 1, std::move(ex));
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            if (ps[0] == 1) return zf({{1, 0, 1}});
            return zf({{1, 0, 1}}, {{2, int_poly({1, BigInt(ps[0] - 1)}), XPoly(1)}});
        });
    add("periodic4", {{"c1", 1, 1000000}, {"c2", 1, 1000000}}, "1 on odd n, c1 on multiples of 4, c2 otherwise",
        "A109008",
        [](const Params& ps) {
            const long c1 = ps[0];
            const long c2 = ps[1];
            std::map<unsigned long, MasterEquation::LocalRule> ex;
            ex[2] = local([c1, c2](unsigned e) { return BigInt(e == 1 ? c2 : c1); });
            return fn("periodic4", ps, [](unsigned) { return PrimePoly(1); }, 1, std::move(ex));
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            const XPoly loc = int_poly({1, BigInt(ps[1] - 1), BigInt(ps[0] - ps[1])});
            if (loc == XPoly(1)) return zf({{1, 0, 1}});
            return zf({{1, 0, 1}}, {{2, loc, XPoly(1)}});
        });
    add("gcdc", {C}, "gcd(n, c)", "A109007",
        [](const Params& ps) {
            std::map<unsigned long, MasterEquation::LocalRule> ex;
            for (const auto& [q, ec] : trial_factor(static_cast<unsigned long>(ps[0]))) {
                ex[q] = local([q = q, ec = ec](unsigned e) { return ipow(q, std::min(e, ec)); });
            }
            return fn("gcdc", ps, [](unsigned) { return PrimePoly(1); }, 1, std::move(ex));
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            std::vector<LocalFactor> loc;
            for (const auto& [q, ec] : trial_factor(static_cast<unsigned long>(ps[0]))) {
                std::vector<BigInt> c(ec + 1);
                c[0] = 1;
                for (unsigned l = 0; l < ec; ++l) c[l + 1] = BigInt(q - 1) * ipow(q, l);
                loc.push_back({q, int_poly(c), XPoly(1)});
            }
            return zf({{1, 0, 1}}, std::move(loc));
        });
    add("lcmc", {C}, "lcm(n, c)/c", "A026741",
        [](const Params& ps) {
            std::map<unsigned long, MasterEquation::LocalRule> ex;
            for (const auto& [q, ec] : trial_factor(static_cast<unsigned long>(ps[0]))) {
                ex[q] = local([q = q, ec = ec](unsigned e) { return ipow(q, e > ec ? e - ec : 0); });
            }
            return fn("lcmc", ps, [](unsigned e) { return mono(1, e); }, 1, std::move(ex));
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            std::vector<LocalFactor> loc;
            for (const auto& [q, ec] : trial_factor(static_cast<unsigned long>(ps[0]))) {
                std::vector<BigInt> c(ec + 1, BigInt(1) - BigInt(q));
                c[0] = 1;
                loc.push_back({q, int_poly(c), XPoly(1)});
            }
            return zf({{1, 1, 1}}, std::move(loc));
        });
    add("sigma", {K}, "sum of k-th powers of divisors", "A000203",
        [](const Params& ps) {
            const long k = ps[0];
            return fn("sigma", ps, [k](unsigned e) { return geometric(k, e); }, 2);
        },
        fixed([](const Params& ps) { return std::vector<ZetaFactor>{{1, 0, 1}, {1, static_cast<int>(ps[0]), 1}}; }));
    add("sigma_odd", {K}, "sum of k-th powers of odd divisors", "A000593",
        [](const Params& ps) {
            const long k = ps[0];
            std::map<unsigned long, MasterEquation::LocalRule> ex;
            ex[2] = local([](unsigned) { return BigInt(1); });
            return fn("sigma_odd", ps, [k](unsigned e) { return geometric(k, e); }, 2, std::move(ex));
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            const int k = static_cast<int>(ps[0]);
            return zf({{1, 0, 1}, {1, k, 1}}, {{2, int_poly({1, -ipow(2, static_cast<unsigned long>(k))}), XPoly(1)}});
        });
    add("tpow_divisor_sum", {T}, "sum of divisors that are t-th powers", "A035316",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("tpow_divisor_sum", ps, [t](unsigned e) { return geometric(t, e / t); },
                      static_cast<unsigned>(t) + 1);
        },
        fixed([](const Params& ps) {
            const auto t = static_cast<unsigned>(ps[0]);
            return std::vector<ZetaFactor>{{1, 0, 1}, {t, static_cast<int>(t), 1}};
        }));
    add("max_tpow", {T}, "largest t-th power dividing n", "A008833",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("max_tpow", ps, [t](unsigned e) { return mono(1, t * (e / t)); }, static_cast<unsigned>(t) + 1);
        },
        fixed([](const Params& ps) {
            const auto t = static_cast<unsigned>(ps[0]);
            return std::vector<ZetaFactor>{{1, 0, 1}, {t, static_cast<int>(t), 1}, {t, 0, -1}};
        }));
    add("root_tpow", {T}, "t-th root of the largest t-th power dividing n", "A000188",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("root_tpow", ps, [t](unsigned e) { return mono(1, e / t); }, static_cast<unsigned>(t) + 1);
        },
        fixed([](const Params& ps) {
            const auto t = static_cast<unsigned>(ps[0]);
            return std::vector<ZetaFactor>{{t, 1, 1}, {1, 0, 1}, {t, 0, -1}};
        }));
    add("sigma_tfree", {K, T}, "sum of k-th powers of t-free divisors", "A048250",
        [](const Params& ps) {
            const long k = ps[0];
            const long t = ps[1];
            return fn("sigma_tfree", ps, [k, t](unsigned e) { return geometric(k, std::min<long>(e, t - 1)); },
                      static_cast<unsigned>(t) + 1);
        },
        fixed([](const Params& ps) {
            const int k = static_cast<int>(ps[0]);
            const auto t = static_cast<unsigned>(ps[1]);
            return std::vector<ZetaFactor>{{1, 0, 1}, {1, k, 1}, {t, static_cast<int>(t) * k, -1}};
        }));
    add("tfull_count", {T}, "number of t-full divisors", "A005361",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("tfull_count", ps, [t](unsigned e) { return PrimePoly(std::max<long>(1, e - t + 2)); },
                      static_cast<unsigned>(t));
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            if (ps[0] == 2) return zf({{1, 0, 1}, {2, 0, 1}, {3, 0, 1}, {6, 0, -1}});
            return std::nullopt;
        });
    add("sigma_pow", {K, {"t", 1, 8}}, "sigma_k(n^t)", "A048691",
        [](const Params& ps) {
            const long k = ps[0];
            const long t = ps[1];
            return fn("sigma_pow", ps, [k, t](unsigned e) { return geometric(k, t * e); }, 2);
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            const int k = static_cast<int>(ps[0]);
            if (ps[1] == 1) return zf({{1, 0, 1}, {1, k, 1}});
            if (ps[1] == 2) return zf({{1, 0, 1}, {1, k, 1}, {1, 2 * k, 1}, {2, 2 * k, -1}});
            return std::nullopt;
        });
    add("gcd_pairs", {{"t", 0, 8}}, "sum over d|n of gcd(d, n/d)^t", "A055155",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("gcd_pairs", ps,
                      [t](unsigned e) {
                          PrimePoly s;
                          for (unsigned m = 0; m <= e; ++m) s += mono(1, t * std::min(m, e - m));
                          return s;
                      },
                      3);
        },
        fixed([](const Params& ps) {
            const int t = static_cast<int>(ps[0]);
            return std::vector<ZetaFactor>{{1, 0, 2}, {2, t, 1}, {2, 0, -1}};
        }));
    add("lcm_pairs", {{"t", 0, 8}}, "sum over d|n of lcm(d, n/d)^t", "A057670",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("lcm_pairs", ps,
                      [t](unsigned e) {
                          PrimePoly s;
                          for (unsigned m = 0; m <= e; ++m) s += mono(1, t * std::max(m, e - m));
                          return s;
                      },
                      3);
        },
        fixed([](const Params& ps) {
            const int t = static_cast<int>(ps[0]);
            return std::vector<ZetaFactor>{{1, t, 2}, {2, t, 1}, {2, 2 * t, -1}};
        }));
    add("tau", {K1}, "number of ordered factorizations into k factors", "A007425",
        [](const Params& ps) {
            const long k = ps[0];
            return fn("tau", ps, [k](unsigned e) { return PrimePoly(binomial(e + k - 1, k - 1)); },
                      static_cast<unsigned>(k));
        },
        fixed([](const Params& ps) { return std::vector<ZetaFactor>{{1, 0, ps[0]}}; }));
    add("phi", {}, "Euler totient", "A000010",
        [](const Params& ps) { return fn("phi", ps, [](unsigned e) { return mono(1, e) - mono(1, e - 1); }); },
        fixed([](const Params&) { return std::vector<ZetaFactor>{{1, 1, 1}, {1, 0, -1}}; }));
    add("phi_kl", {K, {"l", 0, 30}}, "mu(n) n^k convolved with n^l", "A002618",
        [](const Params& ps) {
            const long k = ps[0];
            const long l = ps[1];
            return fn("phi_kl", ps, [k, l](unsigned e) { return mono(1, l * e) - mono(1, k + l * (e - 1)); });
        },
        fixed([](const Params& ps) {
            return std::vector<ZetaFactor>{{1, static_cast<int>(ps[1]), 1}, {1, static_cast<int>(ps[0]), -1}};
        }));
    add("phi_prime", {}, "mu(n)^2 phi(n)", "A097945",
        [](const Params& ps) {
            return fn("phi_prime", ps, [](unsigned e) { return e == 1 ? mono(1, 1) - PrimePoly(1) : PrimePoly(); });
        });
    add("jordan", {K1}, "Jordan totient J_k", "A007434",
        [](const Params& ps) {
            const long k = ps[0];
            return fn("jordan", ps, [k](unsigned e) { return mono(1, k * e) - mono(1, k * (e - 1)); });
        },
        fixed([](const Params& ps) {
            return std::vector<ZetaFactor>{{1, static_cast<int>(ps[0]), 1}, {1, 0, -1}};
        }));
    add("dedekind", {}, "Dedekind psi", "A001615",
        [](const Params& ps) {
            return fn("dedekind", ps, [](unsigned e) { return mono(1, e) + mono(1, e - 1); }, 2);
        },
        fixed([](const Params&) { return std::vector<ZetaFactor>{{1, 0, 1}, {1, 1, 1}, {2, 0, -1}}; }));
    add("jordan_ratio", {K1}, "J_k(n)/J_1(n)", "A160889",
        [](const Params& ps) {
            const long k = ps[0];
            return fn("jordan_ratio", ps,
                      [k](unsigned e) { return geometric(1, k - 1).shifted(static_cast<int>((k - 1) * (e - 1))); }, 1);
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            if (ps[0] == 1) return zf({{1, 0, 1}});
            if (ps[0] == 2) return zf({{1, 0, 1}, {1, 1, 1}, {2, 0, -1}});
            return std::nullopt;
        });
    add("psi_k", {K1}, "J_2k(n)/J_k(n)", "A065958",
        [](const Params& ps) {
            const long k = ps[0];
            return fn("psi_k", ps, [k](unsigned e) { return mono(1, k * e) + mono(1, k * (e - 1)); }, 2);
        },
        fixed([](const Params& ps) {
            return std::vector<ZetaFactor>{{1, 0, 1}, {1, static_cast<int>(ps[0]), 1}, {2, 0, -1}};
        }));
    add("ramanujan", {{"k", 1, 1000000}}, "Ramanujan sum c_n(k) as a function of n", "A086831",
        [](const Params& ps) {
            std::map<unsigned long, MasterEquation::LocalRule> ex;
            for (const auto& [q, v] : trial_factor(static_cast<unsigned long>(ps[0]))) {
                ex[q] = local([q = q, v = v](unsigned e) -> BigInt {
                    if (e <= v) return ipow(q, e) - ipow(q, e - 1);
                    if (e == v + 1) return -ipow(q, v);
                    return 0;
                });
            }
            return fn("ramanujan", ps, [](unsigned e) { return PrimePoly(e == 1 ? -1L : 0L); }, 1, std::move(ex));
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            std::vector<LocalFactor> loc;
            for (const auto& [q, v] : trial_factor(static_cast<unsigned long>(ps[0]))) {
                std::vector<BigInt> c;
                for (unsigned j = 0; j <= v; ++j) c.push_back(ipow(q, j));
                loc.push_back({q, int_poly(c), XPoly(1)});
            }
            return zf({{1, 0, -1}}, std::move(loc));
        });
    add("mu_star", {}, "unitary Moebius, (-1)^omega(n)", "A076479",
        [](const Params& ps) { return fn("mu_star", ps, [](unsigned) { return PrimePoly(-1); }); });
    add("sigma_star", {K}, "sum of k-th powers of unitary divisors", "A034448",
        [](const Params& ps) {
            const long k = ps[0];
            return fn("sigma_star", ps, [k](unsigned e) { return PrimePoly(1) + mono(1, k * e); }, 2);
        },
        fixed([](const Params& ps) {
            const int k = static_cast<int>(ps[0]);
            return std::vector<ZetaFactor>{{1, 0, 1}, {1, k, 1}, {2, k, -1}};
        }));
    add("sigma_star_odd", {K}, "sum of k-th powers of odd unitary divisors", "A192066",
        [](const Params& ps) {
            const long k = ps[0];
            std::map<unsigned long, MasterEquation::LocalRule> ex;
            ex[2] = local([](unsigned) { return BigInt(1); });
            return fn("sigma_star_odd", ps, [k](unsigned e) { return PrimePoly(1) + mono(1, k * e); }, 2,
                      std::move(ex));
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            const int k = static_cast<int>(ps[0]);
            const BigInt two_k = ipow(2, static_cast<unsigned long>(k));
            return zf({{1, 0, 1}, {1, k, 1}, {2, k, -1}}, {{2, int_poly({1, -two_k}), int_poly({1, 0, -two_k})}});
        });
    add("sigma_prime", {}, "n mu(n)^2 unitary-convolved with 1", "A092261",
        [](const Params& ps) {
            return fn("sigma_prime", ps, [](unsigned e) { return e == 1 ? PrimePoly(1) + mono(1, 1) : PrimePoly(1); }, 2);
        });
    add("phi_star", {}, "unitary totient", "A047994",
        [](const Params& ps) { return fn("phi_star", ps, [](unsigned e) { return mono(1, e) - PrimePoly(1); }, 2); });
    add("jordan_star", {K1}, "unitary Jordan function", "A191414",
        [](const Params& ps) {
            const long k = ps[0];
            return fn("jordan_star", ps, [k](unsigned e) { return mono(1, k * e) - PrimePoly(1); }, 2);
        });
    add("tau_star", {K1}, "k-fold unitary convolution of 1", "A074816",
        [](const Params& ps) {
            const long k = ps[0];
            return fn("tau_star", ps, [k](unsigned) { return PrimePoly(k); });
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            if (ps[0] == 1) return zf({{1, 0, 1}});
            if (ps[0] == 2) return zf({{1, 0, 2}, {2, 0, -1}});
            return std::nullopt;
        });
    add("mu_apostol", {{"k", 1, 15}}, "higher order Moebius mu_k", "A189021",
        [](const Params& ps) {
            const long k = ps[0];
            return fn("mu_apostol", ps,
                      [k](unsigned e) {
                          const long ee = e;
                          return PrimePoly(ee < k ? 1L : (ee == k ? -1L : 0L));
                      },
                      static_cast<unsigned>(k) + 1);
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            if (ps[0] == 1) return zf({{1, 0, -1}});
            return std::nullopt;
        });
    add("congruence_count", {T}, "number of x in [1, n] with x^t = 0 mod n", "A000188",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("congruence_count", ps, [t](unsigned e) { return mono(1, e - (e + t - 1) / t); },
                      static_cast<unsigned>(t));
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            if (ps[0] == 2) return zf({{2, 1, 1}, {1, 0, 1}, {2, 0, -1}});
            return std::nullopt;
        });
    add("congruence_min", {T}, "least x > 0 with x^t = 0 mod n", "A019554",
        [](const Params& ps) {
            const long t = ps[0];
            return fn("congruence_min", ps, [t](unsigned e) { return mono(1, (e + t - 1) / t); },
                      static_cast<unsigned>(t));
        },
        [](const Params& ps) -> std::optional<ZetaForm> {
            if (ps[0] == 2) return zf({{2, 1, 1}, {1, 1, 1}, {2, 2, -1}});
            return std::nullopt;
        });
    return cat;
}

void check_params(const CatalogEntry& e, const Params& ps)
{
    if (ps.size() != e.params.size())
        throw InvalidArgument(e.name + " expects " + std::to_string(e.params.size()) + " parameter(s), got " +
                              std::to_string(ps.size()));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const ParamSpec& spec = e.params[i];
        if (ps[i] < spec.min || ps[i] > spec.max)
            throw InvalidArgument(e.name + ": parameter " + spec.name + "=" + std::to_string(ps[i]) + " outside [" +
                                  std::to_string(spec.min) + ", " + std::to_string(spec.max) + "]");
        if (spec.prime && !is_prime(static_cast<unsigned long>(ps[i])))
            throw InvalidArgument(e.name + ": parameter " + spec.name + "=" + std::to_string(ps[i]) + " is not prime");
    }
}

} // namespace

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry& find_entry(const std::string& name)
{
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw InvalidArgument("unknown function '" + name + "'");
}

MultiplicativeFunction make(const std::string& name, const std::vector<long>& params)
{
    const CatalogEntry& e = find_entry(name);
    check_params(e, params);
    return e.builder(params);
}

std::optional<ZetaForm> expected_zeta_form(const std::string& name, const std::vector<long>& params)
{
    const CatalogEntry& e = find_entry(name);
    check_params(e, params);
    if (!e.expected) return std::nullopt;
    return e.expected(params);
}

} // namespace dgf
