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

#ifndef DGF_CATALOG_HPP
#define DGF_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dgf/bell.hpp"
#include "dgf/euler.hpp"

namespace dgf {

struct ParamSpec {
    std::string name;
    long min = 0;
    long max = 0;
    bool prime = false;
};

struct CatalogEntry {
    std::string name;
    std::vector<ParamSpec> params;
    std::string description;
    /// OEIS reference for the family.
    std::string anchor;
    std::function<MultiplicativeFunction(const std::vector<long>&)> builder;
    /// Known closed form; returns nullopt for parameters without one.
    std::function<std::optional<ZetaForm>(const std::vector<long>&)> expected;

    std::string signature() const;
};

const std::vector<CatalogEntry>& catalog();
/// Throws InvalidArgument for unknown names.
const CatalogEntry& find_entry(const std::string& name);
/// Validate parameters against the entry and build the function.
MultiplicativeFunction make(const std::string& name, const std::vector<long>& params = {});
std::optional<ZetaForm> expected_zeta_form(const std::string& name, const std::vector<long>& params = {});

/// Display name such as "sigma(1)".
std::string call_name(const std::string& name, const std::vector<long>& params);

bool is_prime(unsigned long n);
/// (prime, exponent) pairs by trial division.
std::vector<std::pair<unsigned long, unsigned>> trial_factor(unsigned long n);

} // namespace dgf

#endif
