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

#ifndef FIBSUM_ORACLE_HPP
#define FIBSUM_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "fibsum/expansions.hpp"
#include "fibsum/kernel.hpp"
#include "fibsum/power_sum.hpp"

namespace fibsum::oracle {

/// sum_{k=0}^n (+-1)^k X_{mk}^j computed literally, one kernel call per term.
Integer direct_power_sum(Sequence sequence, Index m, int j, bool alternating, Index n);

/// First `count` coefficients of sum_k X_{mk} z^k, stepped with
/// x_k = L_m x_{k-1} - (-1)^m x_{k-2} from (0, F_m) or (2, L_m).
/// Never touches fast doubling beyond the seeds F_m, L_m.
std::vector<Integer> gf_coefficients(Sequence sequence, Index m, std::size_t count);

/// Direct summation over the stepped sequence, powering each term.
Integer stepped_power_sum(Sequence sequence, Index m, int j, bool alternating, Index n);

/// Monic characteristic polynomial z^d + c_1 z^{d-1} + ... + c_d (d = j + 1)
/// of k -> X_{mk}^j, returned as {c_1, ..., c_d}. Its roots are
/// a^i b^{j-i} with a + b = L_m, ab = (-1)^m, so it factors into
///   prod_{i<j/2} (z^2 - (-1)^{mi} L_{m(j-2i)} z + (-1)^{mj}) * [j even] (z - (-1)^{mj/2}).
std::vector<Integer> power_recurrence(Index m, int j);

/// Direct summation where the terms X_{mk}^j are produced by the order-(j+1)
/// recurrence above instead of by exponentiation. O(n) big additions and
/// small multiplications; used to benchmark at large n.
Integer streamed_power_sum(Sequence sequence, Index m, int j, bool alternating, Index n);

struct OracleReport {
    SumQuery query;
    Integer expected;  // direct summation
    Integer actual;    // closed form
    bool match = false;
};

struct IndexRange {
    Index first = 0;
    Index last = 0;
};

/// One report per grid point, ordered lexicographically by
/// (sequence, m, j, alternating, n).
std::vector<OracleReport> check_grid(IndexRange m_range, IndexRange j_range, IndexRange n_range,
                                     const std::vector<Sequence>& sequences,
                                     const std::vector<bool>& parities);

}  // namespace fibsum::oracle

#endif  // FIBSUM_ORACLE_HPP
