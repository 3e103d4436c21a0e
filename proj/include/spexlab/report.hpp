#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace spexlab {

// Uniform result document with a fixed field order:
// {command, params, paper_anchor, checks, witnesses, values, runtime_ms,
// cache_hits}. Identical inputs and caches serialize identically; readers
// comparing documents drop runtime_ms first.
class Report {
 public:
  Report(const std::string& command, const std::string& paper_anchor);

  nlohmann::ordered_json& params() { return doc_["params"]; }
  nlohmann::ordered_json& values() { return doc_["values"]; }

  void add_check(const std::string& name, bool pass, const std::string& details);
  void set_witnesses(const std::vector<std::string>& g6);
  void set_runtime_ms(double ms) { doc_["runtime_ms"] = ms; }
  void set_cache_hits(long hits) { doc_["cache_hits"] = hits; }

  bool all_pass() const;
  std::string dump() const;  // two-space indent, trailing newline
  const nlohmann::ordered_json& doc() const { return doc_; }

 private:
  nlohmann::ordered_json doc_;
};

}  // namespace spexlab
