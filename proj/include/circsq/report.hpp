#pragma once

#include <string>
#include <vector>

#include "circsq/rauzy.hpp"
#include "circsq/squares.hpp"
#include "circsq/verify.hpp"
#include "json.hpp"

namespace circsq {

// Square counts and class decomposition of one word:
// {word, n, Sq, Sq_circular, classes: [{root, l, t, E, O}]}.
nlohmann::json word_report(const Word& w);

nlohmann::json to_json(const CheckReport& report);
CheckReport check_report_from_json(const nlohmann::json& j);

// {"passed": bool, "checks": [...]}
nlohmann::json to_json(const std::vector<CheckReport>& reports);

nlohmann::json to_json(const RauzyGraph& g);
nlohmann::json to_json(const Circuit& c);

// Aligned columns, one row per check.
std::string format_text(const std::vector<CheckReport>& reports);
std::string format_csv(const std::vector<CheckReport>& reports);

std::string to_string(const Ratio& r);

}  // namespace circsq
