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

#include "qfsplit/report.hpp"

#include <sstream>
#include <vector>

#include "json.hpp"

#include "qfsplit/parse.hpp"

namespace qfs {

namespace {

/// Certificate fields as ordered (key, value) string pairs; shared by
/// the JSON and text renderings so they can never drift apart.
std::vector<std::pair<std::string, std::string>> certificate_fields(
    const ReportInput& in, const Verdict& v) {
    std::vector<std::pair<std::string, std::string>> out;
    const auto& c = v.cert;
    if (c.multiplier)
        out.emplace_back("multiplier", format_monomial(*in.ring, *c.multiplier));
    if (c.escape)
        out.emplace_back("escape", format_monomial(*in.ring, *c.escape));
    if (c.escape_row)
        out.emplace_back("escape_row", format_poly(*c.escape_row));
    if (v.kind == VerdictKind::QFR_CERTIFIED ||
        v.kind == VerdictKind::QFE_SPLIT_CERTIFIED) {
        out.emplace_back("e", std::to_string(c.e));
        out.emplace_back("index_offset", std::to_string(c.index_offset));
    }
    if (c.height) out.emplace_back("height", std::to_string(c.height));
    if (c.degree_bound)
        out.emplace_back("degree_bound", std::to_string(c.degree_bound));
    if (c.search_bound)
        out.emplace_back("search_bound", std::to_string(c.search_bound));
    if (!c.degree_stability.empty())
        out.emplace_back("degree_stability", c.degree_stability);
    return out;
}

}  // namespace

std::string emit_report(const ReportInput& in, const Verdict& v, bool json) {
    auto cert = certificate_fields(in, v);
    if (json) {
        nlohmann::ordered_json doc;
        doc["command"] = in.command;
        doc["ring"] = {{"vars", in.ring->vars}, {"p", in.ring->p}};
        doc["input"] = in.input_text;
        nlohmann::ordered_json params;
        if (in.n) params["n"] = *in.n;
        if (in.e_range)
            params["e"] = *in.e_range;
        else if (in.e)
            params["e"] = *in.e;
        if (in.c_text) params["c"] = *in.c_text;
        params["W"] = in.precision;
        doc["parameters"] = std::move(params);
        doc["verdict"] = to_string(v.kind);
        if (!v.detail.empty()) doc["detail"] = v.detail;
        if (!cert.empty()) {
            nlohmann::ordered_json jc;
            for (const auto& [k, val] : cert) jc[k] = val;
            doc["certificate"] = std::move(jc);
        }
        doc["soundness"] = to_string(v.soundness);
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "command: " << in.command << "\n";
    os << "ring: p=" << in.ring->p << " vars=";
    for (std::size_t i = 0; i < in.ring->vars.size(); ++i) {
        if (i) os << ",";
        os << in.ring->vars[i];
    }
    os << "\n";
    os << "input: " << in.input_text << "\n";
    os << "parameters:";
    if (in.n) os << " n=" << *in.n;
    if (in.e_range)
        os << " e=" << *in.e_range;
    else if (in.e)
        os << " e=" << *in.e;
    if (in.c_text) os << " c=" << *in.c_text;
    os << " W=" << in.precision << "\n";
    os << "verdict: " << to_string(v.kind) << "\n";
    if (!v.detail.empty()) os << "detail: " << v.detail << "\n";
    if (!cert.empty()) {
        os << "certificate:";
        for (const auto& [k, val] : cert) os << " " << k << "=" << val;
        os << "\n";
    }
    os << "soundness: " << to_string(v.soundness) << "\n";
    return os.str();
}

}  // namespace qfs
