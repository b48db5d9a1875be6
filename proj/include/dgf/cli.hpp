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

#ifndef DGF_CLI_HPP
#define DGF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "dgf/expr.hpp"

namespace dgf {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitDomain = 3,
    kExitVerify = 4,
};

struct VerifyCheck {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

/// Oracle comparison, Bell and Euler round trips, zeta-form coefficient
/// round trip and multiplicativity of the oracle window.
std::vector<VerifyCheck> verify(const Expr& e);

/// Entry point of the dgf command line tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dgf

#endif
