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

#include "dgf/cli.hpp"

#include <algorithm>
#include <locale>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgf/catalog.hpp"
#include "dgf/errors.hpp"
#include "dgf/euler.hpp"
#include "dgf/numeric.hpp"
#include "dgf/sequence.hpp"

namespace dgf {

namespace {

using nlohmann::json;

constexpr unsigned kDefaultOrder = 8;
constexpr std::uint32_t kVerifyAtomTerms = 2000;
constexpr std::uint32_t kVerifyCompositeTerms = 1000;
constexpr unsigned kBellCheckOrder = 12;

std::string decimal(double v)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << v;
    return os.str();
}

std::string join_terms(const SequenceWindow& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += w.values[i].get_str();
    }
    return out;
}

std::string series_string(const Series& s)
{
    return XPoly(s).to_string() + " + O(x^" + std::to_string(s.size()) + ")";
}

EulerFactorList expansion(const MultiplicativeFunction& f, unsigned order)
{
    if (f.bell) return factorize(*f.bell, order);
    return euler_expand(bell_from_master(f.master, order), order);
}

VerifyCheck pass(std::string name, std::string detail) { return {std::move(name), true, false, std::move(detail)}; }
VerifyCheck fail(std::string name, std::string detail) { return {std::move(name), false, false, std::move(detail)}; }
VerifyCheck skip(std::string name, std::string detail) { return {std::move(name), true, true, std::move(detail)}; }

std::optional<std::size_t> first_difference(const SequenceWindow& a, const SequenceWindow& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.values[i] != b.values[i]) return i + 1;
    if (a.size() != b.size()) return n + 1;
    return std::nullopt;
}

VerifyCheck check_bell(const MultiplicativeFunction& f)
{
    const Series master = bell_from_master(f.master, kBellCheckOrder);
    if (f.bell && f.bell->expand(kBellCheckOrder) != master)
        return fail("bell", "rational form does not expand to the master equation");
    for (const auto& [q, lb] : f.local_bell) {
        if (!lb) continue;
        const auto vals = f.master.local_values(q, kBellCheckOrder);
        const Series ex = lb->expand(kBellCheckOrder);
        for (unsigned e = 0; e <= kBellCheckOrder; ++e)
            if (BigRational(ex[e].coeff(0)) != vals[e] || !ex[e].is_constant())
                return fail("bell", "local Bell series at " + std::to_string(q) + " differs at e=" + std::to_string(e));
    }
    if (!f.bell) return skip("bell", "no rational Bell series");
    return pass("bell", f.bell->to_string() + " matches a(p^e) through e=" + std::to_string(kBellCheckOrder));
}

} // namespace

std::vector<VerifyCheck> verify(const Expr& e)
{
    std::vector<VerifyCheck> out;
    const MultiplicativeFunction f = build(e);
    const bool atom = e.kind == Expr::Kind::Atom;
    const std::uint32_t N = std::min(oracle_terms_limit(e), atom ? kVerifyAtomTerms : kVerifyCompositeTerms);
    const SequenceWindow t = terms(f, N);

    std::optional<SequenceWindow> o;
    try {
        o = oracle_terms(e, N);
    } catch (const DomainError& ex) {
        out.push_back(skip("oracle", ex.what()));
    }
    if (o) {
        if (const auto d = first_difference(t, *o))
            out.push_back(fail("oracle", "terms differ at n=" + std::to_string(*d) + ": " + t[*d].get_str() +
                                             " vs oracle " + (*o)[*d].get_str()));
        else
            out.push_back(pass("oracle", "terms match the oracle through n=" + std::to_string(N)));

        std::size_t pairs = 0;
        std::optional<std::string> bad;
        for (std::size_t n = 2; n * 2 <= N && !bad; ++n)
            for (std::size_t m = n + 1; n * m <= N; ++m) {
                if (std::gcd(n, m) != 1) continue;
                ++pairs;
                if ((*o)[n * m] != (*o)[n] * (*o)[m]) {
                    bad = std::to_string(n) + "*" + std::to_string(m);
                    break;
                }
            }
        if (bad) out.push_back(fail("multiplicative", "oracle not multiplicative at " + *bad));
        else out.push_back(pass("multiplicative", std::to_string(pairs) + " coprime pairs"));
    }

    out.push_back(check_bell(f));

    const EulerFactorList list = expansion(f, kDefaultOrder);
    if (expand_factors(list.factors, kDefaultOrder) == bell_from_master(f.master, kDefaultOrder))
        out.push_back(pass("euler", std::to_string(list.factors.size()) + " factors reproduce the Bell series"));
    else
        out.push_back(fail("euler", "factor list does not reproduce the Bell series"));

    const auto z = finite_zeta_form(f);
    if (z) {
        const SequenceWindow zc = zeta_form_to_coeffs(*z, N);
        if (const auto d = first_difference(zc, t))
            out.push_back(fail("zetaform", z->to_string() + " differs at n=" + std::to_string(*d)));
        else
            out.push_back(pass("zetaform", z->to_string() + " reproduces the terms"));
    } else {
        out.push_back(skip("zetaform", "infinite"));
    }
    if (atom) {
        const auto expected = expected_zeta_form(e.name, e.params);
        if (expected && !(z && *z == *expected))
            out.push_back(fail("catalog", "expected " + expected->to_string() + ", got " +
                                              (z ? z->to_string() : std::string("infinite"))));
        else if (expected)
            out.push_back(pass("catalog", "matches the catalog closed form"));
    }
    return out;
}

namespace {

json catalog_json()
{
    json entries = json::array();
    for (const auto& e : catalog()) {
        json params = json::array();
        for (const auto& p : e.params) {
            json j = {{"name", p.name}, {"min", p.min}, {"max", p.max}};
            if (p.prime) j["prime"] = true;
            params.push_back(j);
        }
        entries.push_back({{"name", e.name},
                           {"signature", e.signature()},
                           {"params", params},
                           {"description", e.description},
                           {"anchor", e.anchor}});
    }
    return entries;
}

struct Options {
    std::string expr;
    unsigned order = kDefaultOrder;
    bool json = false;
    std::uint32_t n = 20;
    std::string bfile;
    double s = 0.0;
    std::uint32_t primes = 0;
    std::uint32_t sum = 0;
    std::string accelerate = "none";
    double margin = kDefaultMargin;
};

int cmd_bell(const Options& o, std::ostream& out)
{
    const MultiplicativeFunction f = build(parse(o.expr));
    const Series s = bell_from_master(f.master, o.order);
    if (o.json) {
        json coeffs = json::array();
        for (const auto& c : s) coeffs.push_back(c.to_string());
        json j = {{"name", f.name}, {"series", coeffs}};
        if (f.bell) j["rational"] = {{"num", f.bell->num.to_string()}, {"den", f.bell->den.to_string()}};
        else j["rational"] = nullptr;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "series: " << series_string(s) << "\n";
    if (f.bell) out << "rational: " << f.bell->to_string() << "\n";
    else out << "rational: none up to degree " << kRationalizeCap << "\n";
    for (const auto& [q, lb] : f.local_bell)
        out << "local " << q << ": " << (lb ? lb->to_string() : std::string("none")) << "\n";
    return kExitOk;
}

int cmd_factorize(const Options& o, std::ostream& out)
{
    if (o.order < 1) throw InvalidArgument("--order must be at least 1");
    const MultiplicativeFunction f = build(parse(o.expr));
    const EulerFactorList list = expansion(f, o.order);
    if (o.json) {
        out << to_json(list).dump(2) << "\n";
        return kExitOk;
    }
    out << list.to_string() << "\n";
    out << "abscissa: " << rational_string(abscissa(list).abscissa) << "\n";
    return kExitOk;
}

int cmd_zetaform(const Options& o, std::ostream& out)
{
    const MultiplicativeFunction f = build(parse(o.expr));
    const auto z = finite_zeta_form(f);
    if (o.json) {
        out << (z ? to_json(*z) : json{{"infinite", true}}).dump(2) << "\n";
        return kExitOk;
    }
    out << (z ? z->to_string() : std::string("infinite")) << "\n";
    return kExitOk;
}

int cmd_terms(const Options& o, std::ostream& out)
{
    if (o.n < 1) throw InvalidArgument("-n must be at least 1");
    const SequenceWindow w = terms(build(parse(o.expr)), o.n);
    out << join_terms(w) << "\n";
    if (o.bfile.empty()) return kExitOk;
    const BFileReport r = compare_bfile(w, o.bfile);
    out << r.to_string() << "\n";
    return r.match ? kExitOk : kExitVerify;
}

int cmd_eval(const Options& o, std::ostream& out)
{
    if (o.primes && o.sum) throw InvalidArgument("--primes and --sum are exclusive");
    Acceleration acc;
    if (o.accelerate == "none") acc = Acceleration::None;
    else if (o.accelerate == "wynn") acc = Acceleration::Wynn;
    else throw InvalidArgument("--accelerate must be none or wynn");
    const MultiplicativeFunction f = build(parse(o.expr));
    EvalResult r;
    if (o.sum) {
        r = eval_partial_sum(f, o.s, o.sum, o.margin);
    } else if (o.primes) {
        r = eval_euler_product(f, o.s, o.primes, acc, o.margin);
    } else if (const auto z = finite_zeta_form(f)) {
        r = eval_zeta_form(*z, o.s, o.margin);
    } else {
        r = eval_euler_product(f, o.s, 100000, acc, o.margin);
    }
    if (o.json) {
        out << json{{"value", decimal(r.value)}, {"error_estimate", decimal(r.error_estimate)}, {"method", r.method}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << "value: " << decimal(r.value) << "\n";
    out << "error_estimate: " << decimal(r.error_estimate) << "\n";
    out << "method: " << r.method << "\n";
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto checks = verify(parse(o.expr));
    bool ok = true;
    for (const auto& c : checks) {
        ok = ok && c.passed;
        out << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
    return ok ? kExitOk : kExitVerify;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dirichlet generating functions of multiplicative functions", "dgf"};
    app.require_subcommand(1);
    Options o;

    app.add_subcommand("catalog", "list catalog entries as JSON");
    auto* bell = app.add_subcommand("bell", "truncated Bell series and rational form");
    bell->add_option("expr", o.expr)->required();
    bell->add_option("--order", o.order, "series order")->capture_default_str();
    bell->add_flag("--json", o.json);
    auto* fact = app.add_subcommand("factorize", "Euler factor list and abscissa");
    fact->add_option("expr", o.expr)->required();
    fact->add_option("--order", o.order, "expansion order U")->capture_default_str();
    fact->add_flag("--json", o.json);
    auto* zeta = app.add_subcommand("zetaform", "finite zeta form or \"infinite\"");
    zeta->add_option("expr", o.expr)->required();
    zeta->add_flag("--json", o.json);
    auto* tcmd = app.add_subcommand("terms", "sequence terms a(1..N)");
    tcmd->add_option("expr", o.expr)->required();
    tcmd->add_option("-n", o.n, "number of terms")->required();
    tcmd->add_option("--bfile", o.bfile, "compare against a b-file");
    auto* ecmd = app.add_subcommand("eval", "numerical value of the Dirichlet series");
    ecmd->add_option("expr", o.expr)->required();
    ecmd->add_option("--s", o.s, "real argument")->required();
    ecmd->add_option("--primes", o.primes, "Euler product over primes <= P");
    ecmd->add_option("--sum", o.sum, "partial sum over n <= N");
    ecmd->add_option("--accelerate", o.accelerate, "none or wynn")->capture_default_str();
    ecmd->add_option("--margin", o.margin, "distance required from the abscissa")->capture_default_str();
    ecmd->add_flag("--json", o.json);
    auto* vcmd = app.add_subcommand("verify", "oracle and round-trip checks");
    vcmd->add_option("expr", o.expr)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        if (name == "catalog") {
            out << catalog_json().dump(2) << "\n";
            return kExitOk;
        }
        if (name == "bell") return cmd_bell(o, out);
        if (name == "factorize") return cmd_factorize(o, out);
        if (name == "zetaform") return cmd_zetaform(o, out);
        if (name == "terms") return cmd_terms(o, out);
        if (name == "eval") return cmd_eval(o, out);
        if (name == "verify") return cmd_verify(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BFileError& e) {
        err << "b-file error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

} // namespace dgf
