#include "spexlab/report.hpp"

namespace spexlab {

Report::Report(const std::string& command, const std::string& paper_anchor) {
  doc_["command"] = command;
  doc_["params"] = nlohmann::ordered_json::object();
  doc_["paper_anchor"] = paper_anchor;
  doc_["checks"] = nlohmann::ordered_json::array();
  doc_["witnesses"] = nlohmann::ordered_json::array();
  doc_["values"] = nlohmann::ordered_json::object();
  doc_["runtime_ms"] = 0.0;
  doc_["cache_hits"] = 0;
}

void Report::add_check(const std::string& name, bool pass, const std::string& details) {
  doc_["checks"].push_back({{"name", name}, {"pass", pass}, {"details", details}});
}

void Report::set_witnesses(const std::vector<std::string>& g6) {
  doc_["witnesses"] = g6;
}

bool Report::all_pass() const {
  for (const auto& c : doc_["checks"])
    if (!c["pass"].get<bool>()) return false;
  return true;
}

std::string Report::dump() const { return doc_.dump(2) + "\n"; }

}  // namespace spexlab
