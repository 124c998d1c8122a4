#pragma once

#include <map>
#include <string>
#include <vector>

namespace qdp {

struct ReportEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  int schema = 1;
  std::string command;
  std::map<std::string, std::string> fields;
  std::vector<ReportEntry> entries;

  void add(const std::string& name, bool pass, const std::string& detail = {});
  bool all_pass() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Curated checks of the worked example values; the CLI surface for
/// `report --suite paper-examples`.
Report run_paper_examples();

}  // namespace qdp
