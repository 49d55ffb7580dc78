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

// Acceptance suite: one PASS/FAIL line per criterion. Arguments select
// criteria by number (default: all).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fibsum/expansions.hpp"
#include "fibsum/oracle.hpp"
#include "fibsum/power_sum.hpp"
#include "fibsum/shifted_sums.hpp"
#include "test_support.hpp"

using namespace fibsum;
using fibsum::testing::ipow;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. closed form == direct summation on the full grid, exactly.
Outcome oracle_grid() {
    const auto t0 = Clock::now();
    const auto reports = oracle::check_grid({1, 8}, {1, 8}, {0, 50}, {Sequence::F, Sequence::L},
                                            {false, true});
    const double dt = seconds_since(t0);
    std::size_t ok = 0;
    for (const auto& r : reports) ok += r.match ? 1 : 0;
    std::ostringstream d;
    d << ok << "/" << reports.size() << " cases match in " << std::fixed << std::setprecision(2)
      << dt << "s (limit 30s)";
    return {reports.size() == 13056 && ok == reports.size() && dt < 30.0, d.str()};
}

// 2. tabulated expansions, coefficient by coefficient.
ExpansionTerm F(Index t, long p, long q, int sigma = 0, bool offset = false) {
    return {TermKind::F, t, offset, ratio(p, q), sigma};
}
ExpansionTerm Fn1(Index t, long p, long q, int sigma = 0) { return F(t, p, q, sigma, true); }
ExpansionTerm L(Index t, long c, int sigma = 0) { return {TermKind::L, t, false, c, sigma}; }
ExpansionTerm K(long p, long q, int sigma = 0) {
    return {TermKind::Const, 0, false, ratio(p, q), sigma};
}

Outcome table_reproduction() {
    const std::vector<std::vector<ExpansionTerm>> fib_table = {
        {Fn1(2, 2, 5), F(2, -3, 5), K(-2, 5, 1)},
        {F(3, 1, 5), F(1, -3, 5, 1)},
        {Fn1(4, 2, 75), F(4, -7, 75), Fn1(2, -8, 25, 1), F(2, 12, 25, 1), K(6, 25)},
        {F(5, 1, 25), F(3, -1, 5, 1), F(1, 2, 5)},
        {Fn1(6, 1, 500), F(6, -9, 500), Fn1(4, -4, 125, 1), F(4, 14, 125, 1), Fn1(2, 6, 25),
         F(2, -9, 25), K(-4, 25, 1)},
        {F(7, 1, 125), F(5, -7, 125, 1), F(3, 21, 125), F(1, -7, 25, 1)},
    };
    const std::vector<std::vector<ExpansionTerm>> lucas_table = {
        {L(2, 1), K(2, 1, 1)},
        {L(3, 1), L(1, 3, 1)},
        {L(4, 1), L(2, 4, 1), K(6, 1)},
        {L(5, 1), L(3, 5, 1), L(1, 10)},
        {L(6, 1), L(4, 6, 1), L(2, 15), K(20, 1, 1)},
        {L(7, 1), L(5, 7, 1), L(3, 21), L(1, 35, 1)},
        {L(8, 1), L(6, 8, 1), L(4, 28), L(2, 56, 1), K(70, 1)},
    };

    const auto fibs = fibsum::testing::naive_fibs(31);
    const auto lucs = fibsum::testing::naive_lucas(31);
    int rows = 0;
    int good = 0;
    std::string first_bad;
    auto check = [&](Sequence s, int j, const std::vector<ExpansionTerm>& expected) {
        ++rows;
        const auto e = expand_power(s, j, Form::literal);
        bool ok = e.terms == expected;
        for (Index n = 0; n <= 30 && ok; ++n) {
            const auto& base = (s == Sequence::F) ? fibs[n] : lucs[n];
            ok = evaluate_expansion(e, n) == ipow(base, static_cast<unsigned long>(j));
        }
        if (ok) {
            ++good;
        } else if (first_bad.empty()) {
            first_bad = std::string(to_string(s)) + "^" + std::to_string(j);
        }
    };
    for (int j = 2; j <= 7; ++j) check(Sequence::F, j, fib_table[j - 2]);
    for (int j = 2; j <= 8; ++j) check(Sequence::L, j, lucas_table[j - 2]);

    std::ostringstream d;
    d << good << "/" << rows << " table rows match term-for-term and evaluate exactly for n=0..30";
    if (!first_bad.empty()) d << " (first mismatch " << first_bad << ")";
    return {good == rows, d.str()};
}

// 3. generating-function coefficients.
Outcome generating_functions() {
    int checked = 0;
    int good = 0;
    for (Index m = 1; m <= 8; ++m) {
        const auto f = oracle::gf_coefficients(Sequence::F, m, 40);
        const auto l = oracle::gf_coefficients(Sequence::L, m, 40);
        for (Index k = 0; k < 40; ++k) {
            checked += 2;
            good += (f[k] == fib(m * k)) ? 1 : 0;
            good += (l[k] == lucas(m * k)) ? 1 : 0;
        }
    }
    return {good == checked, std::to_string(good) + "/" + std::to_string(checked) +
                                 " coefficients equal fib(mk) / lucas(mk), m=1..8, k<40"};
}

// 4. cubes with odd spacing, written out by hand with F_{3m} in the first
// numerator and the alternating denominator in the second.
Rational cube_sum_by_hand(Index m, Index n, bool misprinted_numerator) {
    const int sm = parity_sign(m);
    const int sn = parity_sign(n);
    const Integer first_num = (misprinted_numerator ? fib(2 * m) : fib(3 * m)) -
                              fib((n + 1) * 3 * m) + sm * fib(3 * n * m);
    const Integer first_den = 1 - fib(3 * m - 1) - fib(3 * m + 1) + sm;
    const Integer second_num = -fib(m) + sn * fib((n + 1) * m) + sn * sm * fib(n * m);
    const Integer second_den = 1 + fib(m - 1) + fib(m + 1) + sm;
    return ratio(1, 5) * ratio(first_num, first_den) - ratio(3, 5) * ratio(second_num, second_den);
}

Outcome cube_sums() {
    int odd_ok = 0;
    int odd_total = 0;
    bool misprint_detected = false;
    for (Index m : {1, 3, 5, 7}) {
        for (Index n = 0; n <= 30; ++n) {
            ++odd_total;
            const Integer engine = power_sum_value(SumQuery{Sequence::F, m, 3, false, n});
            odd_ok += (cube_sum_by_hand(m, n, false) == engine) ? 1 : 0;
            misprint_detected |= cube_sum_by_hand(m, n, true) != engine;
        }
    }
    int even_ok = 0;
    int even_total = 0;
    for (Index m : {2, 4, 6, 8}) {
        for (bool alt : {false, true}) {
            for (Index n = 0; n <= 30; ++n) {
                ++even_total;
                even_ok += power_sum_value(SumQuery{Sequence::F, m, 3, alt, n}) ==
                                   oracle::direct_power_sum(Sequence::F, m, 3, alt, n)
                               ? 1
                               : 0;
            }
        }
    }
    std::ostringstream d;
    d << "odd m: " << odd_ok << "/" << odd_total << " hand-written values match; even m: "
      << even_ok << "/" << even_total << " match direct sums; F_{2m} numerator "
      << (misprint_detected ? "disagrees" : "agrees");
    return {odd_ok == odd_total && even_ok == even_total && misprint_detected, d.str()};
}

// 5. plain Lucas sums: printed vs corrected partial fractions at m=1, n=2.
Outcome lucas_erratum() {
    const Index m = 1;
    const Index n = 2;
    const Integer d = plain_denominator(m);
    const Integer fm = fib(m);
    const int q = parity_sign(m);
    const ClosedForm printed({
        {AtomTag::Const, 0, ratio(1 - lucas(m), d), 0},
        {AtomTag::FibNext, m, ratio(Integer(q), d * fm), 0},
        {AtomTag::Fib, m, ratio(q * (1 - lucas(m)), d * fm), 0},
    });
    const Rational printed_value = eval_closed_form(printed, n);
    const Integer corrected = eval_closed_form_integer(
        shifted_sum_closed_form(Sequence::L, m, false), n);
    const Integer truth = oracle::direct_power_sum(Sequence::L, m, 1, false, n);
    std::ostringstream out;
    out << "printed coefficients give " << printed_value.get_str() << ", corrected give "
        << corrected.get_str() << ", direct sum " << truth.get_str();
    return {printed_value == 2 && corrected == 6 && truth == 6, out.str()};
}

// 6. Girard-Waring at n = 2.
Outcome girard_waring_erratum() {
    int ok = 0;
    int off_by_four = 0;
    for (Index m = 1; m <= 6; ++m) {
        const auto g = girard_waring_power_form(Sequence::L, m, 2);
        const Integer lm = lucas(m);
        const Integer expected = lm * lm - 2 * parity_sign(m);
        ok += (evaluate_girard_waring(g) == lucas(2 * m) && expected == lucas(2 * m)) ? 1 : 0;

        // displayed form: sum_k n/(n-k) C(n-k,k) L_{(n-2k)m} at n = 2
        Integer displayed = 0;
        for (int k = 0; 2 * k <= 2; ++k) {
            Integer c = binomial(2 - k, k) * 2;
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(2 - k));
            displayed += c * lucas((2 - 2 * k) * m);
        }
        off_by_four += (displayed - lucas(2 * m) == 4) ? 1 : 0;
    }
    return {ok == 6 && off_by_four == 6,
            "corrected form gives L_{2m} = L_m^2 - 2(-1)^m for " + std::to_string(ok) +
                "/6 m; displayed form exceeds by exactly 4 for " + std::to_string(off_by_four) +
                "/6 m"};
}

// 7. m = j = 1.
Outcome classical() {
    int ok = 0;
    for (Index n = 0; n <= 40; ++n) {
        ok += power_sum_value(SumQuery{Sequence::F, 1, 1, false, n}) == fib(n + 2) - 1 ? 1 : 0;
        ok += power_sum_value(SumQuery{Sequence::L, 1, 1, false, n}) == lucas(n + 2) - 1 ? 1 : 0;
    }
    return {ok == 82, std::to_string(ok) + "/82 values match F_{n+2}-1 and L_{n+2}-1, n=0..40"};
}

// 8. timing at n = 10^6, m = 3, j = 5.
Outcome benchmark() {
    const Index n = 1000000;
    const auto t0 = Clock::now();
    const Integer closed = power_sum_value(SumQuery{Sequence::F, 3, 5, false, n});
    const double closed_s = seconds_since(t0);
    const auto t1 = Clock::now();
    const Integer direct = oracle::streamed_power_sum(Sequence::F, 3, 5, false, n);
    const double direct_s = seconds_since(t1);
    const double speedup = direct_s / closed_s;
    std::ostringstream d;
    d << std::fixed << std::setprecision(3) << "closed form " << closed_s << "s, direct "
      << direct_s << "s, speedup " << std::setprecision(1) << speedup << "x (need >= 100), values "
      << (closed == direct ? "equal" : "DIFFER") << " (" << mpz_sizeinbase(closed.get_mpz_t(), 2)
      << " bits)";
    return {closed == direct && speedup >= 100.0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"oracle grid equivalence", oracle_grid},
        {"expansion table reproduction", table_reproduction},
        {"generating-function validation", generating_functions},
        {"cube sums with odd and even spacing", cube_sums},
        {"plain Lucas sum erratum", lucas_erratum},
        {"Girard-Waring erratum", girard_waring_erratum},
        {"classical specializations", classical},
        {"benchmark closed form vs direct summation", benchmark},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!selected.empty() && !selected.contains(id)) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << criteria[i].first << ": "
                  << o.detail << std::endl;
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
