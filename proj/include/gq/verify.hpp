#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gq/json_io.hpp"

namespace gq {

struct CheckResult {
    std::string tag;       // e.g. "Eq(3)", "Prop3.1", "Table1:SD:Alt"
    std::string subject;   // what was checked, e.g. "Q-(5,2)"
    bool passed = false;
    Json detail = Json::object();
};

struct VerifyOptions {
    bool quick = false;
    /// Called after each check; used by the CLI for progress on stderr.
    std::function<void(const CheckResult&)> on_check;
};

/// Runs every check against the numeric claims: construction counts,
/// Benson's congruence, primitivity, Singer groups and their multipliers,
/// the inequality sweeps, the centralizer formulas and Table 1. Quick mode
/// shrinks the sweep ranges and checks only one Singer group per geometry
/// beyond Q-(5,2). Checks are returned in a fixed order.
std::vector<CheckResult> verify_paper(const VerifyOptions& opts = {});

Json to_json(const CheckResult& c);

} // namespace gq
