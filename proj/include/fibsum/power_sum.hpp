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

#ifndef FIBSUM_POWER_SUM_HPP
#define FIBSUM_POWER_SUM_HPP

#include <optional>

#include "fibsum/expansions.hpp"
#include "fibsum/kernel.hpp"
#include "fibsum/shifted_sums.hpp"

namespace fibsum {

/// sum_{k=0}^n (+-1)^k X_{mk}^j. The bound n is only needed for value queries.
struct SumQuery {
    Sequence sequence = Sequence::F;
    Index m = 1;
    int j = 1;
    bool alternating = false;
    std::optional<Index> n;
};

/// Composes the canonical expansion of X^j with the shifted and constant
/// sums. A term coeff (-1)^{sigma n} A_{tn} becomes, after n -> mk and the
/// optional outer (-1)^k, a shifted sum over A_{tmk} with parity
/// (sigma*m + alternating) mod 2.
ClosedForm power_sum_closed_form(const SumQuery& q);

/// Exact value of the sum; requires q.n.
Integer power_sum_value(const SumQuery& q);

}  // namespace fibsum

#endif  // FIBSUM_POWER_SUM_HPP
