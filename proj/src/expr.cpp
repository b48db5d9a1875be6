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

#include "dgf/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "dgf/catalog.hpp"
#include "dgf/errors.hpp"

namespace dgf {

namespace {

enum class Tok { Name, Int, LParen, RParen, Comma, Dirichlet, Unitary, Star, Caret, Minus, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& text)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const std::size_t col = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Tok::Name, text.substr(i, j - i), col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Int, text.substr(i, j - i), col});
            i = j;
        } else if (text.compare(i, 3, "<*>") == 0) {
            out.push_back({Tok::Dirichlet, "<*>", col});
            i += 3;
        } else if (text.compare(i, 3, "<+>") == 0) {
            out.push_back({Tok::Unitary, "<+>", col});
            i += 3;
        } else {
            Tok kind;
            switch (c) {
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case ',': kind = Tok::Comma; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '-': kind = Tok::Minus; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", col);
            }
            out.push_back({kind, std::string(1, c), col});
            ++i;
        }
    }
    out.push_back({Tok::End, "", text.size() + 1});
    return out;
}

std::string describe(const Token& t)
{
    return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    Expr run()
    {
        Expr e = expr();
        if (peek().kind != Tok::End) throw ParseError("unexpected " + describe(peek()), peek().column);
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    const Token& expect(Tok kind, const char* what)
    {
        if (peek().kind != kind)
            throw ParseError(std::string("expected ") + what + ", found " + describe(peek()), peek().column);
        return take();
    }

    long integer(bool allow_negative)
    {
        const std::size_t col = peek().column;
        bool negative = false;
        if (allow_negative && peek().kind == Tok::Minus) {
            take();
            negative = true;
        }
        const Token& t = expect(Tok::Int, "integer");
        long v = 0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) throw ParseError("integer out of range", col);
        return negative ? -v : v;
    }

    Expr expr()
    {
        Expr lhs = term();
        while (peek().kind == Tok::Dirichlet || peek().kind == Tok::Unitary) {
            const Expr::Kind kind = take().kind == Tok::Dirichlet ? Expr::Kind::Dirichlet : Expr::Kind::Unitary;
            Expr node;
            node.kind = kind;
            node.children.push_back(std::move(lhs));
            node.children.push_back(term());
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr term()
    {
        Expr lhs = factor();
        while (peek().kind == Tok::Star) {
            take();
            Expr node;
            node.kind = Expr::Kind::Pointwise;
            node.children.push_back(std::move(lhs));
            node.children.push_back(factor());
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr factor()
    {
        Expr base = atom();
        if (peek().kind != Tok::Caret) return base;
        take();
        const std::size_t col = peek().column;
        const long j = integer(false);
        if (j < 1) throw ParseError("pointwise power exponent must be at least 1", col);
        Expr node;
        node.kind = Expr::Kind::Power;
        node.arg = j;
        node.children.push_back(std::move(base));
        return node;
    }

    Expr atom()
    {
        if (peek().kind == Tok::LParen) {
            take();
            Expr e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        const Token& name = expect(Tok::Name, "function name");
        if (name.text == "inv") {
            expect(Tok::LParen, "'('");
            Expr node;
            node.kind = Expr::Kind::Inverse;
            node.children.push_back(expr());
            expect(Tok::RParen, "')'");
            return node;
        }
        if (name.text == "shift") {
            expect(Tok::LParen, "'('");
            Expr node;
            node.kind = Expr::Kind::Shift;
            node.children.push_back(expr());
            expect(Tok::Comma, "','");
            node.arg = integer(true);
            expect(Tok::RParen, "')'");
            return node;
        }
        Expr node;
        node.name = name.text;
        std::vector<std::size_t> columns;
        if (peek().kind == Tok::LParen) {
            take();
            columns.push_back(peek().column);
            node.params.push_back(integer(true));
            while (peek().kind == Tok::Comma) {
                take();
                columns.push_back(peek().column);
                node.params.push_back(integer(true));
            }
            expect(Tok::RParen, "')' or ','");
        }
        check_atom(node, name.column, columns);
        return node;
    }

    static void check_atom(const Expr& node, std::size_t column, const std::vector<std::size_t>& param_columns)
    {
        const CatalogEntry* entry = nullptr;
        for (const auto& e : catalog())
            if (e.name == node.name) entry = &e;
        if (!entry) throw ParseError("unknown function '" + node.name + "'", column);
        if (node.params.size() != entry->params.size())
            throw ParseError(node.name + " expects " + std::to_string(entry->params.size()) + " parameter(s), got " +
                                 std::to_string(node.params.size()),
                             column);
        for (std::size_t i = 0; i < node.params.size(); ++i) {
            const ParamSpec& spec = entry->params[i];
            const long v = node.params[i];
            if (v < spec.min || v > spec.max)
                throw ParseError("parameter " + spec.name + " of " + node.name + " must lie in [" +
                                     std::to_string(spec.min) + ", " + std::to_string(spec.max) + "]",
                                 param_columns[i]);
            if (spec.prime && !is_prime(static_cast<unsigned long>(v)))
                throw ParseError("parameter " + spec.name + " of " + node.name + " must be prime", param_columns[i]);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// Binding strength: '<*>' and '<+>' 1, '*' 2, '^' 3, atoms 4.
int precedence(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Dirichlet:
    case Expr::Kind::Unitary: return 1;
    case Expr::Kind::Pointwise: return 2;
    case Expr::Kind::Power: return 3;
    default: return 4;
    }
}

std::string wrap(const Expr& e, int min_prec)
{
    const std::string s = print(e);
    return precedence(e) >= min_prec ? s : "(" + s + ")";
}

} // namespace

Expr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Atom: return call_name(e.name, e.params);
    case Expr::Kind::Dirichlet: return wrap(e.children[0], 1) + " <*> " + wrap(e.children[1], 2);
    case Expr::Kind::Unitary: return wrap(e.children[0], 1) + " <+> " + wrap(e.children[1], 2);
    case Expr::Kind::Pointwise: return wrap(e.children[0], 2) + " * " + wrap(e.children[1], 3);
    case Expr::Kind::Power: return wrap(e.children[0], 4) + "^" + std::to_string(e.arg);
    case Expr::Kind::Inverse: return "inv(" + print(e.children[0]) + ")";
    case Expr::Kind::Shift: return "shift(" + print(e.children[0]) + ", " + std::to_string(e.arg) + ")";
    }
    return {};
}

MultiplicativeFunction build(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Atom: return make(e.name, e.params);
    case Expr::Kind::Dirichlet: return dirichlet_convolve(build(e.children[0]), build(e.children[1]));
    case Expr::Kind::Unitary: return unitary_convolve(build(e.children[0]), build(e.children[1]));
    case Expr::Kind::Pointwise: return pointwise_product(build(e.children[0]), build(e.children[1]));
    case Expr::Kind::Power: return pointwise_power(build(e.children[0]), static_cast<unsigned>(e.arg));
    case Expr::Kind::Inverse: return dirichlet_inverse(build(e.children[0]));
    case Expr::Kind::Shift:
        if (e.arg < std::numeric_limits<int>::min() || e.arg > std::numeric_limits<int>::max())
            throw InvalidArgument("shift amount out of range");
        return shift_by_power(build(e.children[0]), static_cast<int>(e.arg));
    }
    throw InvalidArgument("malformed expression");
}

SequenceWindow oracle_terms(const Expr& e, std::uint32_t N)
{
    switch (e.kind) {
    case Expr::Kind::Atom: return oracle(e.name, e.params, N);
    case Expr::Kind::Dirichlet: return brute_convolve(oracle_terms(e.children[0], N), oracle_terms(e.children[1], N));
    case Expr::Kind::Unitary:
        return brute_unitary_convolve(oracle_terms(e.children[0], N), oracle_terms(e.children[1], N));
    case Expr::Kind::Pointwise: {
        SequenceWindow a = oracle_terms(e.children[0], N);
        const SequenceWindow b = oracle_terms(e.children[1], N);
        for (std::size_t i = 0; i < a.size(); ++i) a.values[i] *= b.values[i];
        return a;
    }
    case Expr::Kind::Power: {
        SequenceWindow a = oracle_terms(e.children[0], N);
        for (auto& v : a.values) mpz_pow_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(e.arg));
        return a;
    }
    case Expr::Kind::Inverse: return brute_inverse(oracle_terms(e.children[0], N));
    case Expr::Kind::Shift: {
        if (e.arg < 0) throw DomainError("negative shifts give non-integer terms");
        SequenceWindow a = oracle_terms(e.children[0], N);
        for (std::size_t n = 1; n <= a.size(); ++n) {
            BigInt f;
            mpz_ui_pow_ui(f.get_mpz_t(), n, static_cast<unsigned long>(e.arg));
            a.values[n - 1] *= f;
        }
        return a;
    }
    }
    throw InvalidArgument("malformed expression");
}

std::uint32_t oracle_terms_limit(const Expr& e)
{
    if (e.kind == Expr::Kind::Atom) return oracle_limit(e.name);
    std::uint32_t limit = std::numeric_limits<std::uint32_t>::max();
    for (const auto& c : e.children) limit = std::min(limit, oracle_terms_limit(c));
    return limit;
}

} // namespace dgf
