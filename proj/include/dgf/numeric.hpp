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

#ifndef DGF_NUMERIC_HPP
#define DGF_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dgf/bell.hpp"
#include "dgf/euler.hpp"

namespace dgf {

/// Error estimates are heuristic, not rigorous bounds.
struct EvalResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::string method;
};

enum class Acceleration { None, Wynn };

inline constexpr double kDefaultMargin = 1e-6;

/// Riemann zeta for real s > 1 by Euler-Maclaurin summation.
double riemann_zeta(double s);

struct WynnResult {
    double value = 0.0;
    /// Size of the last correction in the epsilon table.
    double error = 0.0;
    bool breakdown = false;
};

/// Wynn epsilon extrapolation of a convergent sequence.
WynnResult wynn_epsilon(const std::vector<double>& seq);

EvalResult eval_zeta_form(const ZetaForm& z, double s, double margin = kDefaultMargin);

/// Product of local Bell values over primes p <= P.
EvalResult eval_euler_product(const MultiplicativeFunction& f, double s, std::uint32_t P,
                              Acceleration acceleration = Acceleration::None, double margin = kDefaultMargin);

/// sum_{n <= N} a(n) / n^s with a crude tail estimate.
EvalResult eval_partial_sum(const MultiplicativeFunction& f, double s, std::uint32_t N,
                            double margin = kDefaultMargin);

} // namespace dgf

#endif
