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

#include <catch2/catch_amalgamated.hpp>

#include "fibsum/power_sum.hpp"
#include "fibsum/render.hpp"
#include "json.hpp"

using namespace fibsum;

namespace {

// Test-only reader for the closed-form JSON schema.
ClosedForm read_closed_form(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    std::vector<ClosedFormAtom> atoms;
    for (const auto& a : doc.at("atoms")) {
        const auto tag = a.at("tag").get<std::string>();
        ClosedFormAtom atom;
        if (tag == "F_n1") {
            atom.tag = AtomTag::FibNext;
        } else if (tag == "F_n") {
            atom.tag = AtomTag::Fib;
        } else if (tag == "linear") {
            atom.tag = AtomTag::Linear;
        } else {
            REQUIRE(tag == "const");
            atom.tag = AtomTag::Const;
        }
        atom.modulus = a.at("modulus").get<Index>();
        atom.coeff = Rational(a.at("coeff").get<std::string>());
        atom.coeff.canonicalize();
        atom.sigma = a.at("sign_exp").get<int>();
        atoms.push_back(std::move(atom));
    }
    return ClosedForm(std::move(atoms));
}

ClosedForm form(Sequence s, Index m, int j, bool alt) {
    return power_sum_closed_form(SumQuery{s, m, j, alt, std::nullopt});
}

}  // namespace

TEST_CASE("text rendering", "[render]") {
    CHECK(render_closed_form(form(Sequence::F, 1, 1, false), RenderFormat::text) ==
          "1*F(1*(n+1)) + 1*F(1*n) - 1");
    CHECK(render_closed_form(ClosedForm(), RenderFormat::text) == "0");
    CHECK(render_closed_form(ClosedForm(), RenderFormat::latex) == "0");
    CHECK(render_closed_form(form(Sequence::L, 1, 2, false), RenderFormat::text) ==
          "1*F(2*(n+1)) + 1*F(2*n) + 2 + 1*(-1)^n");
    // F_{2k}^2 = (L_{4k} - 2) / 5; at n = 1: (21 + 3)/15 - 4/5 + 1/5 = 1
    CHECK(render_closed_form(form(Sequence::F, 2, 2, false), RenderFormat::text) ==
          "1/15*F(4*(n+1)) + 1/15*F(4*n) - 2/5*(n+1) + 1/5");
    CHECK(render_expansion(expand_power(Sequence::F, 3, Form::canonical), RenderFormat::text) ==
          "1/5*F(3*n) - 3/5*(-1)^n*F(1*n)");
}

TEST_CASE("latex rendering follows the usual notation", "[render]") {
    CHECK(render_expansion(expand_power(Sequence::F, 3, Form::canonical), RenderFormat::latex) ==
          "\\frac{1}{5}F_{3n}-\\frac{3}{5}(-1)^{n}F_{n}");
    CHECK(render_expansion(expand_power(Sequence::L, 4, Form::canonical), RenderFormat::latex) ==
          "L_{4n}+4(-1)^{n}L_{2n}+6");
    CHECK(render_expansion(expand_power(Sequence::L, 6, Form::canonical), RenderFormat::latex) ==
          "L_{6n}+6(-1)^{n}L_{4n}+15L_{2n}+20(-1)^{n}");
    CHECK(render_expansion(expand_power(Sequence::F, 2, Form::literal), RenderFormat::latex) ==
          "\\frac{2}{5}F_{2(n+1)}-\\frac{3}{5}F_{2n}-\\frac{2}{5}(-1)^{n}");
    CHECK(render_closed_form(form(Sequence::F, 1, 1, false), RenderFormat::latex) ==
          "F_{n+1}+F_{n}-1");
}

TEST_CASE("json rendering", "[render]") {
    CHECK(render_closed_form(form(Sequence::F, 1, 1, false), RenderFormat::json) ==
          R"({"atoms":[{"tag":"F_n1","modulus":1,"coeff":"1","sign_exp":0},)"
          R"({"tag":"F_n","modulus":1,"coeff":"1","sign_exp":0},)"
          R"({"tag":"const","modulus":0,"coeff":"-1","sign_exp":0}]})");
    CHECK(render_expansion(expand_power(Sequence::F, 2, Form::literal), RenderFormat::json) ==
          R"({"sequence":"F","exponent":2,"form":"paper","terms":[)"
          R"({"kind":"F","stride":2,"offset_one":true,"coeff":"2/5","sign_exp":0},)"
          R"({"kind":"F","stride":2,"offset_one":false,"coeff":"-3/5","sign_exp":0},)"
          R"({"kind":"const","stride":0,"offset_one":false,"coeff":"-2/5","sign_exp":1}]})");
}

TEST_CASE("json closed forms read back to the same atoms", "[render][property]") {
    for (Sequence s : {Sequence::F, Sequence::L}) {
        for (Index m = 1; m <= 4; ++m) {
            for (int j = 1; j <= 6; ++j) {
                for (bool alt : {false, true}) {
                    const auto cf = form(s, m, j, alt);
                    const auto text = render_closed_form(cf, RenderFormat::json);
                    REQUIRE(read_closed_form(text) == cf);
                    REQUIRE(render_closed_form(form(s, m, j, alt), RenderFormat::json) == text);
                }
            }
        }
    }
}

TEST_CASE("parse_render_format", "[render]") {
    CHECK(parse_render_format("text") == RenderFormat::text);
    CHECK(parse_render_format("latex") == RenderFormat::latex);
    CHECK(parse_render_format("json") == RenderFormat::json);
    CHECK_FALSE(parse_render_format("yaml"));
}
