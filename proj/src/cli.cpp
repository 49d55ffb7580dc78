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

#include "fibsum/cli.hpp"

#include <charconv>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fibsum/errors.hpp"
#include "fibsum/power_sum.hpp"
#include "fibsum/render.hpp"

namespace fibsum::cli {

namespace {

struct Options {
    std::string seq = "F";
    std::string m = "1";
    std::string j = "1";
    std::string n;
    std::string alt;
    std::string form = "canonical";
    std::string format = "text";
    std::string direct = "stream";
    bool show_value = false;
    CLI::Option* alt_opt = nullptr;
};

std::optional<Index> parse_int(std::string_view s) {
    Index v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) {
        return std::nullopt;
    }
    return v;
}

oracle::IndexRange range_arg(const std::string& flag, const std::string& value) {
    auto r = parse_range(value);
    if (!r) {
        throw UsageError("bad value for " + flag + ": '" + value + "'");
    }
    return *r;
}

Index single_arg(const std::string& flag, const std::string& value) {
    auto r = range_arg(flag, value);
    if (r.first != r.last) {
        throw UsageError(flag + " takes a single value here, got '" + value + "'");
    }
    return r.first;
}

std::vector<Sequence> sequences_arg(const std::string& value, bool allow_both) {
    if (value == "F") return {Sequence::F};
    if (value == "L") return {Sequence::L};
    if (allow_both && value == "both") return {Sequence::F, Sequence::L};
    throw UsageError("bad value for --seq: '" + value + "'");
}

// --alt alone means alternating; --alt yes|no|both are also accepted.
std::vector<bool> parities_arg(const Options& o, bool allow_both) {
    if (o.alt_opt == nullptr || o.alt_opt->count() == 0) return {false};
    if (o.alt.empty() || o.alt == "yes") return {true};
    if (o.alt == "no") return {false};
    if (allow_both && o.alt == "both") return {false, true};
    throw UsageError("bad value for --alt: '" + o.alt + "'");
}

SumQuery single_query(const Options& o, bool need_n) {
    SumQuery q;
    q.sequence = sequences_arg(o.seq, false).front();
    q.m = single_arg("--m", o.m);
    const Index j = single_arg("--j", o.j);
    if (q.m < 1) throw UsageError("--m must be >= 1");
    if (j < 1 || j > 100000) throw UsageError("--j must be in 1..100000");
    q.j = static_cast<int>(j);
    q.alternating = parities_arg(o, false).front();
    if (need_n) {
        if (o.n.empty()) throw UsageError("--n is required");
        q.n = single_arg("--n", o.n);
        if (*q.n < 0) throw UsageError("--n must be >= 0");
    }
    return q;
}

RenderFormat format_arg(const std::string& value) {
    auto f = parse_render_format(value);
    if (!f) throw UsageError("bad value for --format: '" + value + "'");
    return *f;
}

int cmd_eval(const Options& o, std::ostream& out) {
    out << power_sum_value(single_query(o, true)).get_str() << '\n';
    return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const SumQuery q = single_query(o, true);
    out << oracle::direct_power_sum(q.sequence, q.m, q.j, q.alternating, *q.n).get_str() << '\n';
    return kExitOk;
}

int cmd_formula(const Options& o, std::ostream& out) {
    const SumQuery q = single_query(o, false);
    out << render_closed_form(power_sum_closed_form(q), format_arg(o.format)) << '\n';
    return kExitOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
    const Sequence s = sequences_arg(o.seq, false).front();
    const Index j = single_arg("--j", o.j);
    if (j < 1 || j > 100000) throw UsageError("--j must be in 1..100000");
    Form form;
    if (o.form == "canonical") {
        form = Form::canonical;
    } else if (o.form == "paper") {
        form = Form::literal;
    } else {
        throw UsageError("bad value for --form: '" + o.form + "'");
    }
    out << render_expansion(expand_power(s, static_cast<int>(j), form), format_arg(o.format))
        << '\n';
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto m = range_arg("--m", o.m);
    const auto j = range_arg("--j", o.j);
    if (o.n.empty()) throw UsageError("--n is required");
    const auto n = range_arg("--n", o.n);
    if (m.first < 1) throw UsageError("--m must be >= 1");
    if (j.first < 1 || j.last > 100000) throw UsageError("--j must be in 1..100000");
    if (n.first < 0) throw UsageError("--n must be >= 0");

    const auto reports =
        oracle::check_grid(m, j, n, sequences_arg(o.seq, true), parities_arg(o, true));
    std::size_t bad = 0;
    for (const auto& r : reports) {
        if (r.match) continue;
        ++bad;
        out << "mismatch " << to_string(r.query.sequence) << " m=" << r.query.m
            << " j=" << r.query.j << (r.query.alternating ? " alt" : " plain")
            << " n=" << *r.query.n << " expected=" << r.expected.get_str()
            << " actual=" << r.actual.get_str() << '\n';
    }
    if (bad == 0) {
        out << "all " << reports.size() << " cases match\n";
        return kExitOk;
    }
    out << bad << " of " << reports.size() << " cases mismatch\n";
    return kExitMismatch;
}

int cmd_bench(const Options& o, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    const SumQuery q = single_query(o, true);
    if (o.direct != "stream" && o.direct != "naive") {
        throw UsageError("bad value for --direct: '" + o.direct + "'");
    }

    const auto t0 = clock::now();
    const Integer closed = power_sum_value(q);
    const auto t1 = clock::now();
    const Integer direct =
        o.direct == "stream"
            ? oracle::streamed_power_sum(q.sequence, q.m, q.j, q.alternating, *q.n)
            : oracle::stepped_power_sum(q.sequence, q.m, q.j, q.alternating, *q.n);
    const auto t2 = clock::now();

    const double closed_s = std::chrono::duration<double>(t1 - t0).count();
    const double direct_s = std::chrono::duration<double>(t2 - t1).count();
    const bool equal = closed == direct;
    const std::string digits = closed.get_str();

    out << "query: " << to_string(q.sequence) << " m=" << q.m << " j=" << q.j
        << (q.alternating ? " alternating" : " plain") << " n=" << *q.n << '\n';
    out << std::fixed << std::setprecision(6);
    out << "closed_form_seconds: " << closed_s << '\n';
    out << "direct_seconds: " << direct_s << " (" << o.direct << ")\n";
    out << std::setprecision(1) << "speedup: " << direct_s / std::max(closed_s, 1e-9) << '\n';
    out << "values_equal: " << (equal ? "yes" : "no") << '\n';
    out << "value_digits: " << digits.size() - (closed < 0 ? 1 : 0) << '\n';
    if (o.show_value) {
        out << "closed_form_value: " << digits << '\n';
        out << "direct_value: " << direct.get_str() << '\n';
    }
    return equal ? kExitOk : kExitMismatch;
}

void add_query_flags(CLI::App* sub, Options& o, bool with_n) {
    sub->add_option("--seq", o.seq, "F or L");
    sub->add_option("--m", o.m, "spacing m >= 1");
    sub->add_option("--j", o.j, "exponent j >= 1");
    if (with_n) {
        sub->add_option("--n", o.n, "upper summation bound n >= 0")->required();
    }
}

CLI::Option* add_alt(CLI::App* sub, Options& o, const std::string& help) {
    return sub->add_option("--alt", o.alt, help)->expected(0, 1);
}

}  // namespace

std::optional<oracle::IndexRange> parse_range(std::string_view s) {
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        auto v = parse_int(s);
        if (!v) return std::nullopt;
        return oracle::IndexRange{*v, *v};
    }
    auto a = parse_int(s.substr(0, dots));
    auto b = parse_int(s.substr(dots + 2));
    if (!a || !b || *a > *b) return std::nullopt;
    return oracle::IndexRange{*a, *b};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed forms for sums of powers of equally spaced Fibonacci and Lucas numbers"};
    app.name("fibsum");
    app.require_subcommand(1);

    Options o;
    std::vector<std::pair<CLI::App*, CLI::Option*>> alts;

    auto* eval = app.add_subcommand("eval", "evaluate the sum through its closed form");
    add_query_flags(eval, o, true);
    alts.emplace_back(eval, add_alt(eval, o, "alternating sum"));

    auto* orc = app.add_subcommand("oracle", "evaluate the sum by direct summation");
    add_query_flags(orc, o, true);
    alts.emplace_back(orc, add_alt(orc, o, "alternating sum"));

    auto* formula = app.add_subcommand("formula", "print the closed form");
    add_query_flags(formula, o, false);
    alts.emplace_back(formula, add_alt(formula, o, "alternating sum"));
    formula->add_option("--format", o.format, "text, latex or json");

    auto* expand = app.add_subcommand("expand", "print the expansion of X_n^j");
    expand->add_option("--seq", o.seq, "F or L");
    expand->add_option("--j", o.j, "exponent j >= 1");
    expand->add_option("--form", o.form, "canonical or paper");
    expand->add_option("--format", o.format, "text, latex or json");

    auto* verify = app.add_subcommand("verify", "compare closed forms with direct sums on a grid");
    verify->add_option("--seq", o.seq, "F, L or both");
    verify->add_option("--m", o.m, "INT or A..B");
    verify->add_option("--j", o.j, "INT or A..B");
    verify->add_option("--n", o.n, "INT or A..B")->required();
    alts.emplace_back(verify, add_alt(verify, o, "alternating sums; 'both' for both parities"));

    auto* bench = app.add_subcommand("bench", "time closed form against direct summation");
    add_query_flags(bench, o, true);
    alts.emplace_back(bench, add_alt(bench, o, "alternating sum"));
    bench->add_option("--direct", o.direct, "stream (term recurrence) or naive (powering)");
    bench->add_flag("--show-value", o.show_value, "print both values in full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        for (auto& [sub, opt] : alts) {
            if (sub->parsed()) o.alt_opt = opt;
        }
        if (eval->parsed()) return cmd_eval(o, out);
        if (orc->parsed()) return cmd_oracle(o, out);
        if (formula->parsed()) return cmd_formula(o, out);
        if (expand->parsed()) return cmd_expand(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (bench->parsed()) return cmd_bench(o, out);
    } catch (const UsageError& e) {
        err << "fibsum: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InternalError& e) {
        err << "fibsum: internal error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}

}  // namespace fibsum::cli
