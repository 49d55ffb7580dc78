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

#include "fibsum/oracle.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "fibsum/errors.hpp"

namespace fibsum::oracle {

namespace {

void check_args(Index m, int j, Index n) {
    if (m < 1 || j < 1 || n < 0) {
        throw UsageError("oracle: need m >= 1, j >= 1, n >= 0");
    }
}

Integer power(const Integer& x, int j) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(j));
    return r;
}

// Multiply two polynomials given by coefficient lists, highest degree first.
std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            r[i + k] += a[i] * b[k];
        }
    }
    return r;
}

void accumulate(Integer& sum, const Integer& term, bool negative) {
    if (negative) {
        sum -= term;
    } else {
        sum += term;
    }
}

}  // namespace

Integer direct_power_sum(Sequence sequence, Index m, int j, bool alternating, Index n) {
    check_args(m, j, n);
    Integer sum = 0;
    for (Index k = 0; k <= n; ++k) {
        const Integer x = (sequence == Sequence::F) ? fib(m * k) : lucas(m * k);
        accumulate(sum, power(x, j), alternating && k % 2 == 1);
    }
    return sum;
}

std::vector<Integer> gf_coefficients(Sequence sequence, Index m, std::size_t count) {
    if (m < 1) {
        throw UsageError("gf_coefficients: m must be >= 1");
    }
    const Integer lm = lucas(m);
    const int q = parity_sign(m);
    std::vector<Integer> out;
    out.reserve(count);
    Integer prev = (sequence == Sequence::F) ? Integer(0) : Integer(2);
    Integer cur = (sequence == Sequence::F) ? fib(m) : lm;
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(prev);
        Integer next = lm * cur - q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

Integer stepped_power_sum(Sequence sequence, Index m, int j, bool alternating, Index n) {
    check_args(m, j, n);
    const Integer lm = lucas(m);
    const int q = parity_sign(m);
    Integer prev = (sequence == Sequence::F) ? Integer(0) : Integer(2);
    Integer cur = (sequence == Sequence::F) ? fib(m) : lm;
    Integer next;
    Integer sum = 0;
    Integer p;
    for (Index k = 0; k <= n; ++k) {
        mpz_pow_ui(p.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(j));
        accumulate(sum, p, alternating && k % 2 == 1);
        next = lm * cur;
        next -= q * prev;
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return sum;
}

std::vector<Integer> power_recurrence(Index m, int j) {
    if (m < 1 || j < 1) {
        throw UsageError("power_recurrence: need m >= 1, j >= 1");
    }
    std::vector<Integer> poly{1};
    const Integer qj = parity_sign(m * j);
    for (int i = 0; 2 * i < j; ++i) {
        Integer mid = -lucas(m * (j - 2 * i)) * parity_sign(m * i);
        poly = poly_mul(poly, {1, mid, qj});
    }
    if (j % 2 == 0) {
        poly = poly_mul(poly, {1, Integer(-parity_sign(m * j / 2))});
    }
    return {poly.begin() + 1, poly.end()};
}

Integer streamed_power_sum(Sequence sequence, Index m, int j, bool alternating, Index n) {
    check_args(m, j, n);
    const std::vector<Integer> c = power_recurrence(m, j);
    const std::size_t d = c.size();

    // y_k = -(c_1 y_{k-1} + ... + c_d y_{k-d}), kept in a ring buffer.
    std::vector<Integer> ring(d);
    Integer sum = 0;
    const Index seeds = std::min<Index>(n + 1, static_cast<Index>(d));
    for (Index k = 0; k < seeds; ++k) {
        const Integer x = (sequence == Sequence::F) ? fib(m * k) : lucas(m * k);
        ring[static_cast<std::size_t>(k)] = power(x, j);
        accumulate(sum, ring[static_cast<std::size_t>(k)], alternating && k % 2 == 1);
    }

    // Negated coefficients, as machine words where they fit.
    std::vector<Integer> neg(d);
    std::vector<long> small(d, 0);
    std::vector<bool> fits(d, false);
    for (std::size_t i = 0; i < d; ++i) {
        neg[i] = -c[i];
        if (neg[i].fits_slong_p() && neg[i] != LONG_MIN) {
            small[i] = neg[i].get_si();
            fits[i] = true;
        }
    }

    Integer next;
    for (Index k = static_cast<Index>(d); k <= n; ++k) {
        next = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const Integer& y = ring[static_cast<std::size_t>((k - 1 - static_cast<Index>(i)) % static_cast<Index>(d))];
            if (!fits[i]) {
                mpz_addmul(next.get_mpz_t(), y.get_mpz_t(), neg[i].get_mpz_t());
            } else if (small[i] > 0) {
                mpz_addmul_ui(next.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(small[i]));
            } else if (small[i] < 0) {
                mpz_submul_ui(next.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(-small[i]));
            }
        }
        Integer& slot = ring[static_cast<std::size_t>(k % static_cast<Index>(d))];
        std::swap(slot, next);
        accumulate(sum, slot, alternating && k % 2 == 1);
    }
    return sum;
}

std::vector<OracleReport> check_grid(IndexRange m_range, IndexRange j_range, IndexRange n_range,
                                     const std::vector<Sequence>& sequences,
                                     const std::vector<bool>& parities) {
    if (m_range.first > m_range.last || j_range.first > j_range.last ||
        n_range.first > n_range.last || sequences.empty() || parities.empty()) {
        throw UsageError("check_grid: empty range");
    }
    std::vector<Sequence> seqs = sequences;
    std::sort(seqs.begin(), seqs.end());
    seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
    std::vector<bool> alts = parities;
    std::sort(alts.begin(), alts.end());
    alts.erase(std::unique(alts.begin(), alts.end()), alts.end());

    std::vector<OracleReport> reports;
    for (Sequence s : seqs) {
        for (Index m = m_range.first; m <= m_range.last; ++m) {
            for (Index j = j_range.first; j <= j_range.last; ++j) {
                for (bool alt : alts) {
                    for (Index n = n_range.first; n <= n_range.last; ++n) {
                        SumQuery q{s, m, static_cast<int>(j), alt, n};
                        Integer expected = direct_power_sum(s, m, q.j, alt, n);
                        Integer actual = power_sum_value(q);
                        const bool match = expected == actual;
                        reports.push_back(
                            OracleReport{q, std::move(expected), std::move(actual), match});
                    }
                }
            }
        }
    }
    return reports;
}

}  // namespace fibsum::oracle
