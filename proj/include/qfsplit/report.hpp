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

#ifndef QFSPLIT_REPORT_HPP
#define QFSPLIT_REPORT_HPP

#include <optional>
#include <string>

#include "qfsplit/criteria.hpp"

// Structured rendering of verdicts.  The JSON document carries: command,
// ring {vars, p}, input, parameters {n, e, c, W}, verdict, detail (when
// set), certificate (when set), soundness.  The text form prints the
// same fields as labeled lines.  Both renderings are deterministic.

namespace qfs {

/// Run context the command layer hands to the renderer.
struct ReportInput {
    std::string command;
    RingPtr ring;
    std::string input_text;                // f exactly as supplied
    std::optional<unsigned> n;
    std::optional<unsigned> e;
    std::optional<std::string> e_range;    // e.g. "1..8", shown instead of e
    std::optional<std::string> c_text;     // c exactly as supplied
    unsigned precision = 0;                // W
};

std::string emit_report(const ReportInput& in, const Verdict& v, bool json);

}  // namespace qfs

#endif  // QFSPLIT_REPORT_HPP
