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

#include "fibsum/kernel.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "fibsum/errors.hpp"

namespace fibsum {

Rational ratio(const Integer& p, const Integer& q) {
    if (q == 0) {
        throw InternalError("zero denominator");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::pair<Integer, Integer> fib_pair(Index n) {
    if (n < 0) {
        throw UsageError("fib_pair: negative index " + std::to_string(n));
    }
    Integer a = 0;  // F_k
    Integer b = 1;  // F_{k+1}
    Integer c;
    Integer d;
    const auto bits = static_cast<std::uint64_t>(n);
    for (int i = std::bit_width(bits) - 1; i >= 0; --i) {
        // c = F_{2k}, d = F_{2k+1}
        c = 2 * b - a;
        c *= a;
        d = a * a + b * b;
        if ((bits >> i) & 1U) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {std::move(a), std::move(b)};
}

Integer fib(Index n) {
    if (n < 0) {
        Integer f = fib_pair(-n).first;
        return (n % 2 == 0) ? Integer(-f) : f;
    }
    return fib_pair(n).first;
}

Integer lucas(Index n) {
    if (n < 0) {
        Integer l = lucas(-n);
        return (n % 2 == 0) ? l : Integer(-l);
    }
    auto [f, g] = fib_pair(n);
    // L_n = F_{n-1} + F_{n+1} = 2 F_{n+1} - F_n
    return 2 * g - f;
}

Integer binomial(Index n, Index k) {
    if (n < 0 || k < 0) {
        throw UsageError("binomial: negative argument");
    }
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Integer r = 1;
    for (Index i = 1; i <= k; ++i) {
        r *= static_cast<unsigned long>(n - k + i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

}  // namespace fibsum
