/*
   Copyright 2026 the qfsplit authors

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

// Command-line front end.  Exit codes: 0 for a definitive or certified
// verdict, 2 for INCONCLUSIVE, 1 for usage or input errors.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qfsplit/criteria.hpp"
#include "qfsplit/parse.hpp"
#include "qfsplit/report.hpp"
#include "qfsplit/witt.hpp"

namespace {

struct CommonOpts {
    std::uint64_t p = 0;
    std::string vars;
    std::string fexpr;
    bool json = false;
    unsigned precision = 0;  // 0: use the command's default W
    unsigned threads = 0;    // 0: machine parallelism
    unsigned deg_bound = 0;
    unsigned search_bound = 0;
};

std::vector<std::string> split_vars(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        const auto a = cur.find_first_not_of(" \t");
        const auto b = cur.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        out.push_back(cur.substr(a, b - a + 1));
    }
    return out;
}

void add_common(CLI::App* sub, CommonOpts& o, bool with_search) {
    sub->add_option("--p", o.p, "characteristic (prime)")->required();
    sub->add_option("--vars", o.vars, "comma-separated variable names")
        ->required();
    sub->add_option("f", o.fexpr, "polynomial f defining the hypersurface")
        ->required();
    sub->add_flag("--json", o.json, "emit the report as JSON");
    sub->add_option("--precision", o.precision,
                    "working precision W (default: per-command digit budget)");
    sub->add_option("--deg-bound", o.deg_bound,
                    "degree bound for ideal recursions (default: derived "
                    "from f)");
    if (with_search) {
        sub->add_option("--search-bound", o.search_bound,
                        "max total degree of multiplier candidates "
                        "(default: 4*k*p)");
        sub->add_option("--threads", o.threads,
                        "worker threads for the multiplier search "
                        "(default: machine parallelism)");
    }
}

qfs::RingPtr build_ring(const CommonOpts& o, unsigned W) {
    return qfs::make_ring(split_vars(o.vars), o.p, W);
}

unsigned pick_threads(unsigned flag) {
    if (flag) return flag;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

int exit_for(const qfs::Verdict& v) {
    return v.kind == qfs::VerdictKind::INCONCLUSIVE ? 2 : 0;
}

bool parse_range(const std::string& text, unsigned& lo, unsigned& hi) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) return false;
    try {
        lo = static_cast<unsigned>(std::stoul(text.substr(0, pos)));
        hi = static_cast<unsigned>(std::stoul(text.substr(pos + 2)));
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && hi >= lo;
}

int emit_and_exit(const qfs::ReportInput& in, const qfs::Verdict& v,
                  bool json) {
    std::cout << qfs::emit_report(in, v, json);
    return exit_for(v);
}

/* subcommand drivers */

int run_fpure(const CommonOpts& o) {
    const unsigned W = o.precision ? o.precision : 1;
    auto cfg = build_ring(o, W);
    auto f = qfs::parse_poly(o.fexpr, cfg);
    qfs::CriterionParams prm{f};
    prm.validate(1);
    auto v = qfs::fedder_fpure(f);
    qfs::ReportInput in{"fpure", cfg, o.fexpr, {}, {}, {}, {}, W};
    return emit_and_exit(in, v, o.json);
}

int run_height(const CommonOpts& o, unsigned n_max) {
    const unsigned W = o.precision ? o.precision : n_max + 1;
    auto cfg = build_ring(o, W);
    auto f = qfs::parse_poly(o.fexpr, cfg);
    qfs::CriterionParams prm{f, n_max};
    prm.validate(n_max + 1);
    const unsigned D =
        o.deg_bound ? o.deg_bound : qfs::default_degree_bound(f);
    auto v = qfs::qfs_height(f, n_max, D);
    qfs::ReportInput in{"height", cfg, o.fexpr, n_max, {}, {}, {}, W};
    return emit_and_exit(in, v, o.json);
}

int run_qfe(const CommonOpts& o, unsigned n, unsigned e,
            const std::string& mode, const std::string& witness) {
    const bool needs_extra_digit = mode != "sufficient";
    const unsigned Wdef = needs_extra_digit ? n + 1 : std::max(n, 1u);
    const unsigned W = o.precision ? o.precision : Wdef;
    auto cfg = build_ring(o, W);
    auto f = qfs::parse_poly(o.fexpr, cfg);
    qfs::CriterionParams prm{f, n, e};
    prm.validate(needs_extra_digit ? n + 1 : n);

    qfs::Verdict v;
    if (mode == "sufficient") {
        qfs::SearchOptions opt;
        opt.search_bound = o.search_bound;
        opt.threads = pick_threads(o.threads);
        if (!witness.empty()) opt.witness = qfs::parse_monomial(witness, cfg);
        v = qfs::sufficient_qfe(f, e, n, opt);
    } else {
        const unsigned D =
            o.deg_bound ? o.deg_bound : qfs::default_degree_bound(f);
        v = (mode == "necessary") ? qfs::necessary_qfe(f, e, n, D)
                                  : qfs::necessary_qf2_nonFpure(f, n, D);
    }
    qfs::ReportInput in{"qfe", cfg, o.fexpr, n, e, {}, {}, W};
    return emit_and_exit(in, v, o.json);
}

int run_qfr(const CommonOpts& o, unsigned n, const std::string& c_text,
            unsigned e_flag, const std::string& e_range,
            const std::string& witness) {
    unsigned lo = 1, hi = 8;
    std::string range_text = "1..8";
    if (e_flag) {
        lo = hi = e_flag;
        range_text = std::to_string(e_flag);
    } else if (!e_range.empty()) {
        if (!parse_range(e_range, lo, hi))
            throw qfs::error("--e-range must look like A..B with 1 <= A <= B");
        range_text = e_range;
    }
    const unsigned W = o.precision ? o.precision : std::max(n, 1u);
    auto cfg = build_ring(o, W);
    auto f = qfs::parse_poly(o.fexpr, cfg);
    auto c = qfs::parse_poly(c_text, cfg);
    qfs::CriterionParams prm{f, n, lo, c};
    prm.validate(n);

    qfs::SearchOptions opt;
    opt.search_bound = o.search_bound;
    opt.threads = pick_threads(o.threads);
    if (!witness.empty()) opt.witness = qfs::parse_monomial(witness, cfg);
    auto v = qfs::sufficient_qfr(f, n, c, lo, hi, opt);
    qfs::ReportInput in{"qfr", cfg, o.fexpr, n, {}, range_text, c_text, W};
    return emit_and_exit(in, v, o.json);
}

int run_tau(const CommonOpts& o, unsigned max_steps) {
    const unsigned W = o.precision ? o.precision : 1;
    auto cfg = build_ring(o, W);
    auto f = qfs::parse_poly(o.fexpr, cfg);
    qfs::CriterionParams prm{f};
    prm.validate(1);
    auto seeds = qfs::jacobian_seed(f);
    qfs::TauClosure cl;
    if (!seeds.empty()) cl = qfs::tau_closure(seeds, f, max_steps);

    std::string suggested_c;
    if (!cl.elements.empty())
        suggested_c = qfs::format_poly(cl.elements.front().pow(4));

    if (o.json) {
        nlohmann::ordered_json doc;
        doc["command"] = "tau";
        doc["ring"] = {{"vars", cfg->vars}, {"p", cfg->p}};
        doc["input"] = o.fexpr;
        doc["parameters"] = {{"max_steps", max_steps}, {"W", W}};
        nlohmann::ordered_json els = nlohmann::ordered_json::array();
        for (const auto& t : cl.elements) els.push_back(qfs::format_poly(t));
        doc["elements"] = std::move(els);
        doc["complete"] = cl.complete;
        doc["steps"] = cl.steps;
        if (!suggested_c.empty()) doc["suggested_c"] = suggested_c;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "command: tau\n";
        std::cout << "ring: p=" << cfg->p << " vars=" << o.vars << "\n";
        std::cout << "input: " << o.fexpr << "\n";
        std::cout << "parameters: max_steps=" << max_steps << " W=" << W
                  << "\n";
        std::cout << "elements:";
        for (const auto& t : cl.elements)
            std::cout << " " << qfs::format_poly(t);
        std::cout << "\n";
        std::cout << "complete: " << (cl.complete ? "true" : "false") << "\n";
        std::cout << "steps: " << cl.steps << "\n";
        if (!suggested_c.empty())
            std::cout << "suggested_c: " << suggested_c << "\n";
    }
    return cl.elements.empty() ? 2 : 0;
}

int run_witt_selftest(std::uint64_t p, unsigned n, std::uint64_t trials,
                      std::uint64_t seed, bool json) {
    std::vector<qfs::witt::SelfTestReport> reps;
    reps.push_back(qfs::witt::check_ghost_image_of_pW(p, 1, n, trials, seed));
    reps.push_back(
        qfs::witt::check_ghost_image_of_pW(p, 2, n, trials, seed + 1));
    reps.push_back(
        qfs::witt::check_ghost_well_defined_mod_p(p, n, trials, seed + 2));
    reps.push_back(qfs::witt::check_ring_laws(p, n, trials, seed + 3));

    std::uint64_t total_failures = 0;
    if (json) {
        nlohmann::ordered_json doc;
        doc["command"] = "witt-selftest";
        doc["p"] = p;
        doc["n"] = n;
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& r : reps) {
            total_failures += r.failures;
            nlohmann::ordered_json c;
            c["name"] = r.name;
            c["trials"] = r.trials;
            c["failures"] = r.failures;
            c["seed"] = r.seed;
            if (!r.first_failure.empty()) c["first_failure"] = r.first_failure;
            checks.push_back(std::move(c));
        }
        doc["checks"] = std::move(checks);
        doc["pass"] = total_failures == 0;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "command: witt-selftest p=" << p << " n=" << n << "\n";
        for (const auto& r : reps) {
            total_failures += r.failures;
            std::cout << "check: " << r.name << " trials=" << r.trials
                      << " failures=" << r.failures << " seed=" << r.seed
                      << "\n";
            if (!r.first_failure.empty())
                std::cout << "  first_failure: " << r.first_failure << "\n";
        }
        std::cout << (total_failures == 0 ? "pass" : "FAIL") << "\n";
    }
    return total_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Fedder-type tests for F-purity, quasi-F^e-splitting and "
        "quasi-F-regularity of hypersurfaces over Z/p^W"};
    app.require_subcommand(1);

    CommonOpts o_fpure, o_height, o_qfe, o_qfr, o_tau;
    unsigned height_n = 4, qfe_n = 1, qfe_e = 1, qfr_n = 2, qfr_e = 0;
    unsigned tau_steps = 16;
    std::string qfe_mode = "sufficient", qfe_witness, qfr_witness;
    std::string qfr_c, qfr_erange;
    std::uint64_t w_p = 2, w_trials = 500, w_seed = 42;
    unsigned w_n = 2;
    bool w_json = false;

    auto* s_fpure =
        app.add_subcommand("fpure", "classical F-purity of A/(f)");
    add_common(s_fpure, o_fpure, false);

    auto* s_height = app.add_subcommand(
        "height", "smallest level at which the e=1 recursion escapes");
    add_common(s_height, o_height, false);
    s_height->add_option("--n", height_n, "maximum level to try")
        ->default_val(4);

    auto* s_qfe = app.add_subcommand(
        "qfe", "n-quasi-F^e-splitting certificates and exclusions");
    add_common(s_qfe, o_qfe, true);
    s_qfe->add_option("--n", qfe_n, "level n")->default_val(1);
    s_qfe->add_option("--e", qfe_e, "Frobenius exponent e")->default_val(1);
    s_qfe->add_option("--mode", qfe_mode,
                      "sufficient | necessary | necessary-f2")
        ->check(CLI::IsMember({"sufficient", "necessary", "necessary-f2"}));
    s_qfe->add_option("--witness", qfe_witness,
                      "replay a monomial multiplier instead of searching");

    auto* s_qfr =
        app.add_subcommand("qfr", "n-quasi-F-regularity certificates");
    add_common(s_qfr, o_qfr, true);
    s_qfr->add_option("--n", qfr_n, "level n")->default_val(2);
    s_qfr->add_option("--c", qfr_c, "test-element multiple c (polynomial)")
        ->required();
    s_qfr->add_option("--e", qfr_e, "single Frobenius exponent to try");
    s_qfr->add_option("--e-range", qfr_erange,
                      "range of exponents A..B (default 1..8)");
    s_qfr->add_option("--witness", qfr_witness,
                      "replay a monomial multiplier instead of searching");

    auto* s_tau = app.add_subcommand(
        "tau", "test-ideal element discovery from Jacobian seeds");
    add_common(s_tau, o_tau, false);
    s_tau->add_option("--max-steps", tau_steps, "closure step limit")
        ->default_val(16);

    auto* s_witt = app.add_subcommand(
        "witt-selftest", "randomized laws of the Witt-vector oracle");
    s_witt->add_option("--p", w_p, "characteristic")->default_val(2);
    s_witt->add_option("--n", w_n, "Witt length")->default_val(2);
    s_witt->add_option("--trials", w_trials, "trials per check")
        ->default_val(500);
    s_witt->add_option("--seed", w_seed, "base RNG seed")->default_val(42);
    s_witt->add_flag("--json", w_json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (s_fpure->parsed()) return run_fpure(o_fpure);
        if (s_height->parsed()) return run_height(o_height, height_n);
        if (s_qfe->parsed())
            return run_qfe(o_qfe, qfe_n, qfe_e, qfe_mode, qfe_witness);
        if (s_qfr->parsed())
            return run_qfr(o_qfr, qfr_n, qfr_c, qfr_e, qfr_erange,
                           qfr_witness);
        if (s_tau->parsed()) return run_tau(o_tau, tau_steps);
        if (s_witt->parsed())
            return run_witt_selftest(w_p, w_n, w_trials, w_seed, w_json);
    } catch (const qfs::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
