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

#ifndef FIBSUM_EXPANSIONS_HPP
#define FIBSUM_EXPANSIONS_HPP

#include <string_view>
#include <vector>

#include "fibsum/kernel.hpp"

namespace fibsum {

enum class Sequence { F, L };

/// literal keeps the tabulated (n+1)-offset atoms; canonical uses only t*n.
enum class Form { literal, canonical };

enum class TermKind { F, L, Const };

std::string_view to_string(Sequence s);
std::string_view to_string(Form f);

/// One summand coeff * (-1)^{sigma*n} * atom, where atom is F_{stride*n},
/// L_{stride*n}, F_{stride*(n+1)}, L_{stride*(n+1)} or 1.
struct ExpansionTerm {
    TermKind kind = TermKind::Const;
    Index stride = 0;  // 0 for Const
    bool offset_one = false;
    Rational coeff;
    int sigma = 0;

    bool operator==(const ExpansionTerm&) const = default;
};

/// X_n^j written as a rational combination of ExpansionTerm values.
struct PowerExpansion {
    Sequence sequence = Sequence::F;
    int exponent = 1;
    Form form = Form::canonical;
    std::vector<ExpansionTerm> terms;

    bool operator==(const PowerExpansion&) const = default;
};

PowerExpansion expand_power(Sequence sequence, int j, Form form);

/// Rewrites (n+1)-offset atoms with
///   F_{a(n+1)} = (L_a F_{an} + F_a L_{an}) / 2
///   L_{a(n+1)} = (L_a L_{an} + 5 F_a F_{an}) / 2
/// and merges like terms.
PowerExpansion canonicalize(const PowerExpansion& e);

/// Exact value at n >= 0. Throws InternalError if the total is not integral.
Integer evaluate_expansion(const PowerExpansion& e, Index n);

/// Sorts by (kind, stride descending, offset first, sigma), merges like terms
/// and drops zero coefficients.
void normalize_terms(std::vector<ExpansionTerm>& terms);

/// X_target = sum of coeff * base^power, with base = F_m or L_m.
struct GirardWaringTerm {
    int power = 0;
    Integer coeff;

    bool operator==(const GirardWaringTerm&) const = default;
};

struct GirardWaringForm {
    Sequence base = Sequence::L;    // base^power is F_m^power or L_m^power
    Sequence target = Sequence::L;  // left side is F_{mn} or L_{mn}
    Index m = 1;
    int n = 1;
    std::vector<GirardWaringTerm> terms;
};

/// Forward Girard-Waring direction: L_{mn} in powers of L_m, or (m odd) F_{mn}
/// (n odd) resp. L_{mn} (n even) in powers of F_m. Coefficients already carry
/// the powers of 5 coming from (sqrt5 F_m)^{n-2k}.
GirardWaringForm girard_waring_power_form(Sequence sequence, Index m, int n);

/// Right-hand side of a GirardWaringForm evaluated with the kernel.
Integer evaluate_girard_waring(const GirardWaringForm& g);

}  // namespace fibsum

#endif  // FIBSUM_EXPANSIONS_HPP
