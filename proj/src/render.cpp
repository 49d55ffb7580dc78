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

#include "fibsum/render.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace fibsum {

namespace {

using nlohmann::ordered_json;

// One rendered summand: its sign, |coeff|, and the factor after it ("" for a
// bare constant).
struct Piece {
    bool negative = false;
    Rational magnitude;
    std::string sign_factor;  // "(-1)^n" or ""
    std::string atom;         // "F(3*n)" etc., or "" for a constant
};

std::string text_coeff(const Rational& c) { return c.get_str(); }

std::string latex_coeff(const Rational& c) {
    if (c.get_den() == 1) {
        return c.get_num().get_str();
    }
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string join_text(const std::vector<Piece>& pieces) {
    if (pieces.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Piece& p = pieces[i];
        if (i == 0) {
            out += p.negative ? "-" : "";
        } else {
            out += p.negative ? " - " : " + ";
        }
        out += text_coeff(p.magnitude);
        if (!p.sign_factor.empty()) {
            out += "*" + p.sign_factor;
        }
        if (!p.atom.empty()) {
            out += "*" + p.atom;
        }
    }
    return out;
}

std::string join_latex(const std::vector<Piece>& pieces) {
    if (pieces.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Piece& p = pieces[i];
        if (p.negative) {
            out += "-";
        } else if (i > 0) {
            out += "+";
        }
        const bool bare = p.sign_factor.empty() && p.atom.empty();
        if (bare || p.magnitude != 1) {
            out += latex_coeff(p.magnitude);
        }
        out += p.sign_factor;
        out += p.atom;
    }
    return out;
}

std::string indexed_text(char letter, Index stride, bool next) {
    const std::string m = std::to_string(stride);
    return std::string(1, letter) + (next ? "(" + m + "*(n+1))" : "(" + m + "*n)");
}

std::string indexed_latex(char letter, Index stride, bool next) {
    std::string idx;
    if (next) {
        idx = stride == 1 ? "n+1" : std::to_string(stride) + "(n+1)";
    } else {
        idx = stride == 1 ? "n" : std::to_string(stride) + "n";
    }
    return std::string(1, letter) + "_{" + idx + "}";
}

Piece closed_form_piece(const ClosedFormAtom& a, bool latex) {
    Piece p;
    p.negative = a.coeff < 0;
    p.magnitude = abs(a.coeff);
    if (a.sigma == 1) {
        p.sign_factor = latex ? "(-1)^{n}" : "(-1)^n";
    }
    switch (a.tag) {
        case AtomTag::FibNext:
            p.atom = latex ? indexed_latex('F', a.modulus, true) : indexed_text('F', a.modulus, true);
            break;
        case AtomTag::Fib:
            p.atom =
                latex ? indexed_latex('F', a.modulus, false) : indexed_text('F', a.modulus, false);
            break;
        case AtomTag::Linear:
            p.atom = "(n+1)";
            break;
        case AtomTag::Const:
            break;
    }
    return p;
}

Piece expansion_piece(const ExpansionTerm& t, bool latex) {
    Piece p;
    p.negative = t.coeff < 0;
    p.magnitude = abs(t.coeff);
    if (t.sigma == 1) {
        p.sign_factor = latex ? "(-1)^{n}" : "(-1)^n";
    }
    if (t.kind != TermKind::Const) {
        const char letter = t.kind == TermKind::F ? 'F' : 'L';
        p.atom = latex ? indexed_latex(letter, t.stride, t.offset_one)
                       : indexed_text(letter, t.stride, t.offset_one);
    }
    return p;
}

std::string_view json_tag(AtomTag tag) {
    switch (tag) {
        case AtomTag::FibNext:
            return "F_n1";
        case AtomTag::Fib:
            return "F_n";
        case AtomTag::Linear:
            return "linear";
        case AtomTag::Const:
            break;
    }
    return "const";
}

std::string_view json_kind(TermKind kind) {
    switch (kind) {
        case TermKind::F:
            return "F";
        case TermKind::L:
            return "L";
        case TermKind::Const:
            break;
    }
    return "const";
}

}  // namespace

std::optional<RenderFormat> parse_render_format(std::string_view s) {
    if (s == "text") return RenderFormat::text;
    if (s == "latex") return RenderFormat::latex;
    if (s == "json") return RenderFormat::json;
    return std::nullopt;
}

std::string render_closed_form(const ClosedForm& cf, RenderFormat fmt) {
    if (fmt == RenderFormat::json) {
        ordered_json atoms = ordered_json::array();
        for (const auto& a : cf.atoms()) {
            atoms.push_back(ordered_json{{"tag", json_tag(a.tag)},
                                         {"modulus", a.modulus},
                                         {"coeff", a.coeff.get_str()},
                                         {"sign_exp", a.sigma}});
        }
        return ordered_json{{"atoms", std::move(atoms)}}.dump();
    }
    const bool latex = fmt == RenderFormat::latex;
    std::vector<Piece> pieces;
    for (const auto& a : cf.atoms()) {
        pieces.push_back(closed_form_piece(a, latex));
    }
    return latex ? join_latex(pieces) : join_text(pieces);
}

std::string render_expansion(const PowerExpansion& e, RenderFormat fmt) {
    if (fmt == RenderFormat::json) {
        ordered_json terms = ordered_json::array();
        for (const auto& t : e.terms) {
            terms.push_back(ordered_json{{"kind", json_kind(t.kind)},
                                         {"stride", t.stride},
                                         {"offset_one", t.offset_one},
                                         {"coeff", t.coeff.get_str()},
                                         {"sign_exp", t.sigma}});
        }
        return ordered_json{{"sequence", to_string(e.sequence)},
                            {"exponent", e.exponent},
                            {"form", to_string(e.form)},
                            {"terms", std::move(terms)}}
            .dump();
    }
    const bool latex = fmt == RenderFormat::latex;
    std::vector<Piece> pieces;
    for (const auto& t : e.terms) {
        pieces.push_back(expansion_piece(t, latex));
    }
    return latex ? join_latex(pieces) : join_text(pieces);
}

}  // namespace fibsum
