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

#include "fibsum/expansions.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "fibsum/errors.hpp"

namespace fibsum {

std::string_view to_string(Sequence s) { return s == Sequence::F ? "F" : "L"; }

std::string_view to_string(Form f) { return f == Form::literal ? "paper" : "canonical"; }

namespace {

Integer pow5(int e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 5, static_cast<unsigned long>(e));
    return r;
}

ExpansionTerm term(TermKind kind, Index stride, bool offset, Rational coeff, int sigma) {
    return ExpansionTerm{kind, stride, offset, std::move(coeff), sigma};
}

auto sort_key(const ExpansionTerm& t) {
    return std::make_tuple(static_cast<int>(t.kind), -t.stride, !t.offset_one, t.sigma);
}

// F_n^j, j odd:
//   5^{-(j-1)/2} sum_{0<=s<j/2} (-1)^s C(j,s) (-1)^{sn} F_{(j-2s)n}
std::vector<ExpansionTerm> fib_odd(int j) {
    std::vector<ExpansionTerm> out;
    const Integer scale = pow5((j - 1) / 2);
    for (int s = 0; 2 * s < j; ++s) {
        Integer c = binomial(j, s) * parity_sign(s);
        out.push_back(term(TermKind::F, j - 2 * s, false, ratio(c, scale), s % 2));
    }
    return out;
}

// F_n^j, j even, tabulated shape with F_{2s(n+1)} and F_{2sn} atoms.
std::vector<ExpansionTerm> fib_even_literal(int j) {
    std::vector<ExpansionTerm> out;
    const int h = j / 2;
    const Integer scale = pow5(h);
    for (int s = 1; s <= h; ++s) {
        // (-1)^{(n+1)(h+s)} = (-1)^{h+s} (-1)^{(h+s)n}
        const int sigma = (h + s) % 2;
        const Integer c = binomial(j, h + s) * parity_sign(sigma);
        const Integer f2s = fib(2 * s);
        const Integer l2s = lucas(2 * s);
        out.push_back(term(TermKind::F, 2 * s, true, ratio(2 * c, f2s * scale), sigma));
        out.push_back(term(TermKind::F, 2 * s, false, ratio(-l2s * c, f2s * scale), sigma));
    }
    // C(j,h)/(2*5^h) * (1 - (-1)^n + (-1)^h + (-1)^{n+h})
    const Rational k = ratio(binomial(j, h), 2 * scale);
    const int sh = parity_sign(h);
    out.push_back(term(TermKind::Const, 0, false, k * (1 + sh), 0));
    out.push_back(term(TermKind::Const, 0, false, k * (sh - 1), 1));
    return out;
}

// F_n^j, j even:
//   5^{-h} [ sum_{1<=s<=h} C(j,h+s) (-1)^{h+s} (-1)^{(h+s)n} L_{2sn} + C(j,h) (-1)^{(n+1)h} ]
std::vector<ExpansionTerm> fib_even_canonical(int j) {
    std::vector<ExpansionTerm> out;
    const int h = j / 2;
    const Integer scale = pow5(h);
    for (int s = 1; s <= h; ++s) {
        const int sigma = (h + s) % 2;
        out.push_back(term(TermKind::L, 2 * s, false,
                           ratio(binomial(j, h + s) * parity_sign(sigma), scale), sigma));
    }
    out.push_back(term(TermKind::Const, 0, false, ratio(binomial(j, h) * parity_sign(h), scale),
                       h % 2));
    return out;
}

// L_n^j = sum_{0<=s<j/2} C(j,s) (-1)^{sn} L_{(j-2s)n} + [j even] C(j,j/2) (-1)^{n j/2}
std::vector<ExpansionTerm> lucas_power(int j) {
    std::vector<ExpansionTerm> out;
    for (int s = 0; 2 * s < j; ++s) {
        out.push_back(term(TermKind::L, j - 2 * s, false, Rational(binomial(j, s)), s % 2));
    }
    if (j % 2 == 0) {
        out.push_back(term(TermKind::Const, 0, false, Rational(binomial(j, j / 2)), (j / 2) % 2));
    }
    return out;
}

Integer atom_value(const ExpansionTerm& t, Index n) {
    const Index idx = t.offset_one ? t.stride * (n + 1) : t.stride * n;
    switch (t.kind) {
        case TermKind::F:
            return fib(idx);
        case TermKind::L:
            return lucas(idx);
        case TermKind::Const:
            break;
    }
    return 1;
}

}  // namespace

void normalize_terms(std::vector<ExpansionTerm>& terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const ExpansionTerm& a, const ExpansionTerm& b) {
                         return sort_key(a) < sort_key(b);
                     });
    std::vector<ExpansionTerm> merged;
    for (auto& t : terms) {
        if (!merged.empty() && sort_key(merged.back()) == sort_key(t)) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const ExpansionTerm& t) { return t.coeff == 0; });
    terms = std::move(merged);
}

PowerExpansion expand_power(Sequence sequence, int j, Form form) {
    if (j < 1) {
        throw UsageError("exponent must be >= 1, got " + std::to_string(j));
    }
    PowerExpansion e{sequence, j, form, {}};
    if (sequence == Sequence::L) {
        e.terms = lucas_power(j);
    } else if (j % 2 == 1) {
        e.terms = fib_odd(j);
    } else if (form == Form::literal) {
        e.terms = fib_even_literal(j);
    } else {
        e.terms = fib_even_canonical(j);
    }
    normalize_terms(e.terms);
    return e;
}

PowerExpansion canonicalize(const PowerExpansion& e) {
    PowerExpansion out{e.sequence, e.exponent, Form::canonical, {}};
    for (const auto& t : e.terms) {
        if (!t.offset_one) {
            out.terms.push_back(t);
            continue;
        }
        const Index a = t.stride;
        const Rational half = t.coeff / 2;
        if (t.kind == TermKind::F) {
            out.terms.push_back(term(TermKind::F, a, false, half * lucas(a), t.sigma));
            out.terms.push_back(term(TermKind::L, a, false, half * fib(a), t.sigma));
        } else {
            out.terms.push_back(term(TermKind::L, a, false, half * lucas(a), t.sigma));
            out.terms.push_back(term(TermKind::F, a, false, half * 5 * fib(a), t.sigma));
        }
    }
    normalize_terms(out.terms);
    return out;
}

Integer evaluate_expansion(const PowerExpansion& e, Index n) {
    if (n < 0) {
        throw UsageError("evaluate_expansion: negative n");
    }
    Rational total = 0;
    for (const auto& t : e.terms) {
        Rational v = t.coeff * atom_value(t, n);
        if (t.sigma == 1 && n % 2 == 1) {
            v = -v;
        }
        total += v;
    }
    if (total.get_den() != 1) {
        throw InternalError("expansion of " + std::string(to_string(e.sequence)) + "^" +
                            std::to_string(e.exponent) + " is not integral at n=" +
                            std::to_string(n));
    }
    return total.get_num();
}

// x^n + y^n = sum_{0<=k<=n/2} (-1)^k n/(n-k) C(n-k,k) (x+y)^{n-2k} (xy)^k
GirardWaringForm girard_waring_power_form(Sequence sequence, Index m, int n) {
    if (m < 1) {
        throw UsageError("spacing m must be >= 1");
    }
    if (n < 1) {
        throw UsageError("exponent n must be >= 1");
    }
    if (sequence == Sequence::F && m % 2 == 0) {
        throw UsageError("Fibonacci power form requires odd m");
    }
    GirardWaringForm g;
    g.base = sequence;
    g.m = m;
    g.n = n;
    g.target = (sequence == Sequence::F && n % 2 == 1) ? Sequence::F : Sequence::L;
    for (int k = 0; 2 * k <= n; ++k) {
        // n/(n-k) C(n-k,k) = C(n-k,k) + C(n-k-1,k-1) is integral
        Integer c = binomial(n - k, k) * n;
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - k));
        if (k % 2 == 1) {
            c = -c;
        }
        const int power = n - 2 * k;
        if (sequence == Sequence::L) {
            // x = alpha^m, y = beta^m: x + y = L_m, xy = (-1)^m
            if ((m % 2 == 1) && (k % 2 == 1)) {
                c = -c;
            }
        } else {
            // x = alpha^m, y = (-beta)^m: x + y = sqrt5 F_m, xy = 1
            const int e5 = (n % 2 == 1) ? (power - 1) / 2 : power / 2;
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), 5, static_cast<unsigned long>(e5));
            c *= p;
        }
        g.terms.push_back(GirardWaringTerm{power, std::move(c)});
    }
    return g;
}

Integer evaluate_girard_waring(const GirardWaringForm& g) {
    const Integer base = (g.base == Sequence::F) ? fib(g.m) : lucas(g.m);
    Integer total = 0;
    for (const auto& t : g.terms) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(t.power));
        total += t.coeff * p;
    }
    return total;
}

}  // namespace fibsum
