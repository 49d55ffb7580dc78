/*
   Copyright 2026 The fibsum Authors

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

#ifndef FIBSUM_RENDER_HPP
#define FIBSUM_RENDER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "fibsum/expansions.hpp"
#include "fibsum/shifted_sums.hpp"

namespace fibsum {

enum class RenderFormat { text, latex, json };

std::optional<RenderFormat> parse_render_format(std::string_view s);

/// Deterministic renderings. JSON output is a single compact document
/// without a trailing newline.
///
///   text:  1*F(1*(n+1)) + 1*F(1*n) - 1
///   latex: F_{n+1}+F_{n}-1
///   json:  {"atoms":[{"tag":"F_n1","modulus":1,"coeff":"1","sign_exp":0},...]}
std::string render_closed_form(const ClosedForm& cf, RenderFormat fmt);

std::string render_expansion(const PowerExpansion& e, RenderFormat fmt);

}  // namespace fibsum

#endif  // FIBSUM_RENDER_HPP
