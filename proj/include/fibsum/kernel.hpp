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

#ifndef FIBSUM_KERNEL_HPP
#define FIBSUM_KERNEL_HPP

#include <cstdint>
#include <utility>

#include <gmpxx.h>

namespace fibsum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Index type for Fibonacci/Lucas subscripts.
using Index = std::int64_t;

/// p/q in lowest terms with a positive denominator. q must be nonzero.
Rational ratio(const Integer& p, const Integer& q);

inline Rational ratio(long p, long q) { return ratio(Integer(p), Integer(q)); }

/// (-1)^e as a small integer.
constexpr int parity_sign(Index e) { return (e % 2 == 0) ? 1 : -1; }

/// (F_n, F_{n+1}) by fast doubling.
///
///   F_{2k}   = F_k (2 F_{k+1} - F_k)
///   F_{2k+1} = F_k^2 + F_{k+1}^2
///
/// Requires n >= 0.
std::pair<Integer, Integer> fib_pair(Index n);

/// F_n for any integer n, with F_{-n} = (-1)^{n+1} F_n.
Integer fib(Index n);

/// L_n for any integer n, with L_{-n} = (-1)^n L_n.
Integer lucas(Index n);

/// C(n, k) by the multiplicative formula; 0 when k > n. Requires n, k >= 0.
Integer binomial(Index n, Index k);

}  // namespace fibsum

#endif  // FIBSUM_KERNEL_HPP
