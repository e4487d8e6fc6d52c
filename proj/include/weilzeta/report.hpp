#pragma once

#include <string>
#include <utility>
#include <vector>

namespace weilzeta {

/// Ordered key/value sections plus timing lines. Sections and keys print in
/// insertion order, so equal inputs give byte-identical text.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void set(const std::string& section, const std::string& key, const std::string& value);
  /// Record a named check; a failing check makes the whole report FAIL.
  void check(const std::string& name, bool ok, const std::string& detail = "");
  void fail(const std::string& reason);
  void timing(const std::string& name, double ms);

  bool pass() const { return pass_; }
  int exit_code() const { return pass_ ? 0 : 1; }
  const std::string& command() const { return command_; }
  /// Value of section/key, empty when absent.
  std::string get(const std::string& section, const std::string& key) const;

  std::string text() const;

 private:
  struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;
  };
  std::string command_;
  std::vector<Section> sections_;
  std::vector<std::string> timings_;
  bool pass_ = true;
};

/// Drops "# timing" lines, for comparing reports across runs.
std::string strip_timing(const std::string& text);

}  // namespace weilzeta
