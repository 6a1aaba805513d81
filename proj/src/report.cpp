#include "circsq/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace circsq {

using nlohmann::json;

std::string to_string(const Ratio& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

json word_report(const Word& w) {
  const ClassDecomposition dec = class_decomposition(w);
  json classes = json::array();
  for (const PowerClass& pc : dec.classes) {
    classes.push_back({{"root", pc.root.str()},
                       {"l", pc.root_length},
                       {"t", pc.t()},
                       {"E", pc.even.size()},
                       {"O", pc.odd.size()}});
  }
  return {{"word", w.str()},
          {"n", w.size()},
          {"Sq", distinct_squares(w).count()},
          {"Sq_circular", distinct_squares_circular(CircularWord(w)).count()},
          {"classes", std::move(classes)}};
}

json to_json(const CheckReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"word", v.word}, {"detail", v.detail}});
  }
  json j = {{"check", report.check_id},
            {"alphabet", report.alphabet_size},
            {"max_len", report.max_length},
            {"words_tested", report.words_tested},
            {"skipped", report.skipped},
            {"passed", report.passed()},
            {"violations", std::move(violations)},
            {"tallies", report.tallies}};
  if (report.max_ratio) {
    j["max_ratio"] = {{"num", report.max_ratio->num},
                      {"den", report.max_ratio->den},
                      {"value", report.max_ratio->value()}};
    j["witness"] = report.witness;
  } else {
    j["max_ratio"] = nullptr;
    j["witness"] = nullptr;
  }
  return j;
}

CheckReport check_report_from_json(const json& j) {
  CheckReport r;
  r.check_id = j.at("check").get<std::string>();
  r.alphabet_size = j.at("alphabet").get<std::size_t>();
  r.max_length = j.at("max_len").get<std::size_t>();
  r.words_tested = j.at("words_tested").get<std::uint64_t>();
  r.skipped = j.at("skipped").get<std::uint64_t>();
  for (const auto& v : j.at("violations")) {
    r.violations.push_back({v.at("word").get<std::string>(), v.at("detail").get<std::string>()});
  }
  r.tallies = j.at("tallies").get<std::map<std::string, std::uint64_t>>();
  if (!j.at("max_ratio").is_null()) {
    r.max_ratio = Ratio{j["max_ratio"].at("num").get<std::uint64_t>(),
                        j["max_ratio"].at("den").get<std::uint64_t>()};
    r.witness = j.at("witness").get<std::string>();
  }
  return r;
}

json to_json(const std::vector<CheckReport>& reports) {
  json checks = json::array();
  bool passed = true;
  for (const auto& r : reports) {
    checks.push_back(to_json(r));
    passed = passed && r.passed();
  }
  return {{"passed", passed}, {"checks", std::move(checks)}};
}

json to_json(const RauzyGraph& g) {
  json vertices = json::array();
  for (const Word& v : g.vertices()) vertices.push_back(v.str());
  json edges = json::array();
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    edges.push_back({{"label", g.edges()[e].str()},
                     {"from", g.vertices()[g.head(e)].str()},
                     {"to", g.vertices()[g.tail(e)].str()}});
  }
  json j = {{"order", g.order()}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
  j["weakly_connected"] = is_weakly_connected(g);
  j["cyclomatic_number"] = j["weakly_connected"].get<bool>() ? json(cyclomatic_number(g)) : json(nullptr);
  return j;
}

json to_json(const Circuit& c) {
  json edges = json::array();
  for (const Word& e : c.edges) edges.push_back(e.str());
  json vertices = json::array();
  for (const Word& v : c.vertices()) vertices.push_back(v.str());
  return {{"length", c.length()},
          {"root", circuit_root(c).str()},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

std::string format_text(const std::vector<CheckReport>& reports) {
  const std::vector<std::string> header{"check", "k", "n_max", "tested", "skipped",
                                        "violations", "max_ratio", "witness", "status"};
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& r : reports) {
    rows.push_back({r.check_id, std::to_string(r.alphabet_size), std::to_string(r.max_length),
                    std::to_string(r.words_tested), std::to_string(r.skipped),
                    std::to_string(r.violations.size()),
                    r.max_ratio ? to_string(*r.max_ratio) : "-",
                    r.max_ratio && !r.witness.empty() ? r.witness : "-",
                    r.passed() ? "PASS" : "FAIL"});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      os << (c + 1 < row.size() ? "  " : "\n");
    }
  }
  for (const auto& r : reports) {
    if (!r.tallies.empty()) {
      os << r.check_id << ":";
      for (const auto& [key, count] : r.tallies) os << ' ' << key << '=' << count;
      os << '\n';
    }
    for (const auto& v : r.violations) os << "  violation " << v.word << ": " << v.detail << '\n';
  }
  return os.str();
}

std::string format_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "check,alphabet,max_len,words_tested,skipped,violations,max_ratio_num,max_ratio_den,"
        "witness,passed\n";
  for (const auto& r : reports) {
    os << r.check_id << ',' << r.alphabet_size << ',' << r.max_length << ',' << r.words_tested
       << ',' << r.skipped << ',' << r.violations.size() << ',';
    if (r.max_ratio) {
      os << r.max_ratio->num << ',' << r.max_ratio->den << ',' << r.witness;
    } else {
      os << ",,";
    }
    os << ',' << (r.passed() ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace circsq
