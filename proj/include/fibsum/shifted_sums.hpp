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

#ifndef FIBSUM_SHIFTED_SUMS_HPP
#define FIBSUM_SHIFTED_SUMS_HPP

#include <vector>

#include "fibsum/expansions.hpp"
#include "fibsum/kernel.hpp"

namespace fibsum {

enum class AtomTag {
    FibNext,  // F_{M(n+1)}
    Fib,      // F_{Mn}
    Linear,   // n + 1
    Const,    // 1
};

/// coeff * (-1)^{sigma*n} * value(tag). Linear atoms always have sigma 0;
/// Linear and Const atoms have modulus 0.
struct ClosedFormAtom {
    AtomTag tag = AtomTag::Const;
    Index modulus = 0;
    Rational coeff;
    int sigma = 0;

    bool operator==(const ClosedFormAtom&) const = default;
};

/// A closed form for a sum over k = 0..n, kept normalized: atoms sorted by
/// (modulus descending, tag, sigma), like atoms merged, zeros dropped.
class ClosedForm {
public:
    ClosedForm() = default;
    explicit ClosedForm(std::vector<ClosedFormAtom> atoms);

    const std::vector<ClosedFormAtom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }

    ClosedForm& operator+=(const ClosedForm& other);
    ClosedForm scaled(const Rational& factor) const;

    bool operator==(const ClosedForm&) const = default;

private:
    void normalize();

    std::vector<ClosedFormAtom> atoms_;
};

ClosedForm operator+(ClosedForm a, const ClosedForm& b);

/// 1 - L_M + (-1)^M, the plain-sum denominator (<= -1 for M >= 1).
Integer plain_denominator(Index modulus);

/// 1 + L_M + (-1)^M, the alternating-sum denominator (>= 1 for M >= 1).
Integer alternating_denominator(Index modulus);

/// Closed form of sum_{k=0}^n (+-1)^k X_{Mk} for X in {F, L}, M >= 1.
ClosedForm shifted_sum_closed_form(Sequence sequence, Index modulus, bool alternating);

/// Closed form of sum_{k=0}^n coeff (-1)^{(sigma + alternating) k}.
ClosedForm constant_sum_closed_form(const Rational& coeff, int sigma, bool alternating);

/// Exact value at n >= 0; may be non-integral for forms that are not sums of
/// integer sequences.
Rational eval_closed_form(const ClosedForm& cf, Index n);

/// As eval_closed_form, but throws InternalError unless the value is integral.
Integer eval_closed_form_integer(const ClosedForm& cf, Index n);

}  // namespace fibsum

#endif  // FIBSUM_SHIFTED_SUMS_HPP
