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

#include "fibsum/shifted_sums.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

auto sort_key(const ClosedFormAtom& a) {
    return std::make_tuple(-a.modulus, static_cast<int>(a.tag), a.sigma);
}

ClosedFormAtom atom(AtomTag tag, Index modulus, Rational coeff, int sigma = 0) {
    return ClosedFormAtom{tag, modulus, std::move(coeff), sigma};
}

}  // namespace

ClosedForm::ClosedForm(std::vector<ClosedFormAtom> atoms) : atoms_(std::move(atoms)) {
    normalize();
}

void ClosedForm::normalize() {
    for (const auto& a : atoms_) {
        const bool indexed = a.tag == AtomTag::Fib || a.tag == AtomTag::FibNext;
        if (indexed ? a.modulus < 1 : a.modulus != 0) {
            throw InternalError("closed-form atom with invalid modulus");
        }
        if (a.tag == AtomTag::Linear && a.sigma != 0) {
            throw InternalError("linear atom cannot carry a sign factor");
        }
    }
    std::stable_sort(atoms_.begin(), atoms_.end(),
                     [](const ClosedFormAtom& a, const ClosedFormAtom& b) {
                         return sort_key(a) < sort_key(b);
                     });
    std::vector<ClosedFormAtom> merged;
    for (auto& a : atoms_) {
        if (!merged.empty() && sort_key(merged.back()) == sort_key(a)) {
            merged.back().coeff += a.coeff;
        } else {
            merged.push_back(std::move(a));
        }
    }
    std::erase_if(merged, [](const ClosedFormAtom& a) { return a.coeff == 0; });
    atoms_ = std::move(merged);
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& other) {
    atoms_.insert(atoms_.end(), other.atoms_.begin(), other.atoms_.end());
    normalize();
    return *this;
}

ClosedForm ClosedForm::scaled(const Rational& factor) const {
    std::vector<ClosedFormAtom> out = atoms_;
    for (auto& a : out) {
        a.coeff *= factor;
    }
    return ClosedForm(std::move(out));
}

ClosedForm operator+(ClosedForm a, const ClosedForm& b) {
    a += b;
    return a;
}

Integer plain_denominator(Index modulus) {
    return 1 - lucas(modulus) + parity_sign(modulus);
}

Integer alternating_denominator(Index modulus) {
    return 1 + lucas(modulus) + parity_sign(modulus);
}

ClosedForm shifted_sum_closed_form(Sequence sequence, Index modulus, bool alternating) {
    if (modulus < 1) {
        throw UsageError("spacing must be >= 1, got " + std::to_string(modulus));
    }
    const Index m = modulus;
    const int q = parity_sign(m);
    const Integer fm = fib(m);
    const Integer lm = lucas(m);
    const Integer den = alternating ? alternating_denominator(m) : plain_denominator(m);
    if (alternating ? den < 1 : den > -1) {
        throw InternalError("shifted-sum denominator out of range at M=" + std::to_string(m));
    }

    std::vector<ClosedFormAtom> atoms;
    if (sequence == Sequence::F) {
        if (!alternating) {
            // (F_M - F_{M(n+1)} + q F_{Mn}) / D-
            atoms.push_back(atom(AtomTag::Const, 0, ratio(fm, den)));
            atoms.push_back(atom(AtomTag::FibNext, m, ratio(Integer(-1), den)));
            atoms.push_back(atom(AtomTag::Fib, m, ratio(Integer(q), den)));
        } else {
            // (-F_M + (-1)^n F_{M(n+1)} + q (-1)^n F_{Mn}) / D+
            atoms.push_back(atom(AtomTag::Const, 0, ratio(-fm, den)));
            atoms.push_back(atom(AtomTag::FibNext, m, ratio(Integer(1), den), 1));
            atoms.push_back(atom(AtomTag::Fib, m, ratio(Integer(q), den), 1));
        }
    } else if (!alternating) {
        // 2 - zL = A(1 - zL + qz^2) + (B + Cz)(1 - z)
        const Rational a = ratio(2 - lm, den);
        atoms.push_back(atom(AtomTag::Const, 0, a));
        atoms.push_back(atom(AtomTag::FibNext, m, (2 - a) / fm));
        atoms.push_back(atom(AtomTag::Fib, m, a * q / fm));
    } else {
        const Integer scale = den * fm;
        atoms.push_back(atom(AtomTag::Const, 0, ratio(2 + lm, den)));
        atoms.push_back(atom(AtomTag::FibNext, m, ratio(lm + 2 * q, scale), 1));
        atoms.push_back(atom(AtomTag::Fib, m, ratio(-q * (2 + lm), scale), 1));
    }
    return ClosedForm(std::move(atoms));
}

ClosedForm constant_sum_closed_form(const Rational& coeff, int sigma, bool alternating) {
    const int parity = (sigma + (alternating ? 1 : 0)) % 2;
    if (parity == 0) {
        return ClosedForm({atom(AtomTag::Linear, 0, coeff)});
    }
    // sum_{k=0}^n (-1)^k = (1 + (-1)^n) / 2
    const Rational half = coeff / 2;
    return ClosedForm({atom(AtomTag::Const, 0, half, 0), atom(AtomTag::Const, 0, half, 1)});
}

Rational eval_closed_form(const ClosedForm& cf, Index n) {
    if (n < 0) {
        throw UsageError("eval_closed_form: negative n");
    }
    // Sum over a common denominator so the big numerators are never reduced
    // term by term.
    Integer den = 1;
    for (const auto& a : cf.atoms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.coeff.get_den_mpz_t());
    }

    // F_{Mn}, F_{M(n+1)} per modulus
    std::map<Index, std::pair<Integer, Integer>> values;
    for (const auto& a : cf.atoms()) {
        if (a.modulus == 0 || values.contains(a.modulus)) {
            continue;
        }
        const Index m = a.modulus;
        auto [f, g] = fib_pair(m * n);
        // F_{Mn+M} = F_{Mn+1} F_M + F_{Mn} F_{M-1}
        Integer next = g * fib(m) + f * fib(m - 1);
        values.emplace(m, std::make_pair(std::move(f), std::move(next)));
    }

    Integer total = 0;
    Integer scale;
    for (const auto& a : cf.atoms()) {
        scale = den / a.coeff.get_den();
        scale *= a.coeff.get_num();
        if (a.sigma == 1 && n % 2 == 1) {
            scale = -scale;
        }
        switch (a.tag) {
            case AtomTag::FibNext:
                total += scale * values.at(a.modulus).second;
                break;
            case AtomTag::Fib:
                total += scale * values.at(a.modulus).first;
                break;
            case AtomTag::Linear:
                total += scale * Integer(n + 1);
                break;
            case AtomTag::Const:
                total += scale;
                break;
        }
    }
    return ratio(total, den);
}

Integer eval_closed_form_integer(const ClosedForm& cf, Index n) {
    Rational v = eval_closed_form(cf, n);
    if (v.get_den() != 1) {
        throw InternalError("closed form is not integral at n=" + std::to_string(n) + ": " +
                            v.get_str());
    }
    return v.get_num();
}

}  // namespace fibsum
