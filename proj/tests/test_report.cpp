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

#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qfsplit/criteria.hpp"
#include "qfsplit/report.hpp"
#include "test_util.hpp"

using namespace qfs;
using tutil::P;

namespace {

ReportInput fpure_input(RingPtr cfg) {
    ReportInput in;
    in.command = "fpure";
    in.ring = cfg;
    in.input_text = "x*y";
    in.precision = 1;
    return in;
}

}  // namespace

TEST_SUITE("report") {
    TEST_CASE("JSON document carries the run context") {
        auto cfg = tutil::ring_xy(2, 1);
        auto v = fedder_fpure(P("x*y", cfg));
        auto out = emit_report(fpure_input(cfg), v, /*json=*/true);
        auto doc = nlohmann::json::parse(out);

        CHECK(doc.at("command") == "fpure");
        CHECK(doc.at("ring").at("p") == 2);
        CHECK(doc.at("ring").at("vars") ==
              std::vector<std::string>({"x", "y"}));
        CHECK(doc.at("input") == "x*y");
        CHECK(doc.at("parameters").at("W") == 1);
        CHECK(doc.at("verdict") == "F_PURE");
        CHECK(doc.at("soundness") == "EXACT");
        CHECK(doc.at("certificate").at("escape") == "x*y");
        CHECK(!doc.contains("detail"));
    }

    TEST_CASE("certified searches expose the replay fields") {
        auto cfg = tutil::ring_xyz(2, 2);
        auto f = P("z^2+x^3+y^2*z", cfg);
        SearchOptions opt;
        opt.witness = tutil::ev({7, 15, 1});
        auto v = sufficient_qfr(f, 2, P("x^4", cfg), 6, 6, opt);
        REQUIRE(v.kind == VerdictKind::QFR_CERTIFIED);

        ReportInput in;
        in.command = "qfr";
        in.ring = cfg;
        in.input_text = "z^2+x^3+y^2*z";
        in.n = 2;
        in.e_range = "6..6";
        in.c_text = "x^4";
        in.precision = 2;
        auto doc = nlohmann::json::parse(emit_report(in, v, true));

        CHECK(doc.at("verdict") == "QFR_CERTIFIED");
        CHECK(doc.at("detail") == "assumes_c_valid");
        CHECK(doc.at("parameters").at("n") == 2);
        CHECK(doc.at("parameters").at("e") == "6..6");
        CHECK(doc.at("parameters").at("c") == "x^4");
        auto cert = doc.at("certificate");
        CHECK(cert.at("multiplier") == "x^7*y^15*z");
        CHECK(cert.at("escape") == "x*y*z");
        CHECK(cert.at("e") == "6");
        CHECK(cert.at("index_offset") == "0");
    }

    TEST_CASE("text mode prints the same labeled fields") {
        auto cfg = tutil::ring_xy(2, 1);
        auto v = fedder_fpure(P("x*y", cfg));
        auto out = emit_report(fpure_input(cfg), v, /*json=*/false);

        CHECK(out.find("command: fpure\n") != std::string::npos);
        CHECK(out.find("ring: p=2 vars=x,y\n") != std::string::npos);
        CHECK(out.find("input: x*y\n") != std::string::npos);
        CHECK(out.find("verdict: F_PURE\n") != std::string::npos);
        CHECK(out.find("soundness: EXACT\n") != std::string::npos);
        CHECK(out.find("escape=x*y") != std::string::npos);
    }

    TEST_CASE("height and stability fields appear when set") {
        auto cfg = tutil::ring_xyz(2, 3);
        auto f = P("x^3+y^3+z^3", cfg);
        auto v = qfs_height(f, 2, 10);
        REQUIRE(v.kind == VerdictKind::HEIGHT);

        ReportInput in;
        in.command = "height";
        in.ring = cfg;
        in.input_text = "x^3+y^3+z^3";
        in.n = 2;
        in.precision = 3;
        auto doc = nlohmann::json::parse(emit_report(in, v, true));
        CHECK(doc.at("verdict") == "HEIGHT");
        CHECK(doc.at("certificate").at("height") == "2");
        CHECK(doc.at("certificate").at("degree_bound") == "10");
        CHECK(doc.at("soundness") == "SOUND_ONE_SIDED");

        auto nec = necessary_qfe(f, 1, 1, 10);
        auto doc2 = nlohmann::json::parse(emit_report(in, nec, true));
        CHECK(doc2.at("certificate").contains("degree_stability"));
    }

    TEST_CASE("rendering is deterministic") {
        auto cfg = tutil::ring_xy(2, 1);
        auto v = fedder_fpure(P("x*y", cfg));
        auto a = emit_report(fpure_input(cfg), v, true);
        auto b = emit_report(fpure_input(cfg), v, true);
        CHECK(a == b);
        auto c = emit_report(fpure_input(cfg), v, false);
        auto d = emit_report(fpure_input(cfg), v, false);
        CHECK(c == d);
    }
}
