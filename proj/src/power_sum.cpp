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

#include "fibsum/power_sum.hpp"

#include <string>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

void check_query(const SumQuery& q) {
    if (q.m < 1) {
        throw UsageError("spacing m must be >= 1, got " + std::to_string(q.m));
    }
    if (q.j < 1) {
        throw UsageError("exponent j must be >= 1, got " + std::to_string(q.j));
    }
}

}  // namespace

ClosedForm power_sum_closed_form(const SumQuery& q) {
    check_query(q);
    const PowerExpansion e = expand_power(q.sequence, q.j, Form::canonical);
    const int alt = q.alternating ? 1 : 0;

    ClosedForm out;
    for (const auto& t : e.terms) {
        const int parity = static_cast<int>((t.sigma * q.m + alt) % 2);
        if (t.kind == TermKind::Const) {
            out += constant_sum_closed_form(t.coeff, parity, false);
            continue;
        }
        const Sequence s = (t.kind == TermKind::F) ? Sequence::F : Sequence::L;
        out += shifted_sum_closed_form(s, t.stride * q.m, parity == 1).scaled(t.coeff);
    }
    return out;
}

Integer power_sum_value(const SumQuery& q) {
    check_query(q);
    if (!q.n) {
        throw UsageError("power_sum_value needs a bound n");
    }
    if (*q.n < 0) {
        throw UsageError("bound n must be >= 0");
    }
    return eval_closed_form_integer(power_sum_closed_form(q), *q.n);
}

}  // namespace fibsum
