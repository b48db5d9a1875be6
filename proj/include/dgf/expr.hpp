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

#ifndef DGF_EXPR_HPP
#define DGF_EXPR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dgf/bell.hpp"
#include "dgf/sequence.hpp"

namespace dgf {

/// Expression grammar:
///
///   expr   := term (('<*>' | '<+>') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := NAME ['(' int {',' int} ')'] | 'inv' '(' expr ')'
///           | 'shift' '(' expr ',' int ')' | '(' expr ')'
///
/// '<*>' is Dirichlet convolution, '<+>' unitary convolution, '*' the
/// pointwise product and '^' the pointwise power.
struct Expr {
    enum class Kind { Atom, Dirichlet, Unitary, Pointwise, Power, Inverse, Shift };

    Kind kind = Kind::Atom;
    /// Catalog name for atoms.
    std::string name;
    /// Catalog parameters for atoms.
    std::vector<long> params;
    /// Exponent for Power, shift amount for Shift.
    long arg = 0;
    std::vector<Expr> children;

    friend bool operator==(const Expr& a, const Expr& b) = default;
};

/// Throws ParseError with a 1-based column.
Expr parse(const std::string& text);
/// Canonical text; parse(print(e)) == e.
std::string print(const Expr& e);
MultiplicativeFunction build(const Expr& e);

/// Terms computed without Bell series: catalog oracles for atoms combined
/// by brute-force convolution, products and inversion.
SequenceWindow oracle_terms(const Expr& e, std::uint32_t N);
/// Largest N accepted by oracle_terms (smallest oracle limit of the atoms).
std::uint32_t oracle_terms_limit(const Expr& e);

} // namespace dgf

#endif
