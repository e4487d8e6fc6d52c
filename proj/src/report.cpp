#include "weilzeta/report.hpp"

#include <cstdio>
#include <sstream>

namespace weilzeta {

void Report::set(const std::string& section, const std::string& key, const std::string& value) {
  for (auto& s : sections_)
    if (s.name == section) {
      for (auto& [k, v] : s.entries)
        if (k == key) {
          v = value;
          return;
        }
      s.entries.emplace_back(key, value);
      return;
    }
  sections_.push_back({section, {{key, value}}});
}

void Report::check(const std::string& name, bool ok, const std::string& detail) {
  set("checks", name, std::string(ok ? "PASS" : "FAIL") + (detail.empty() ? "" : " (" + detail + ")"));
  if (!ok) pass_ = false;
}

void Report::fail(const std::string& reason) {
  set("checks", "error", reason);
  pass_ = false;
}

void Report::timing(const std::string& name, double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f ms", ms);
  timings_.push_back("# timing " + name + " = " + buf);
}

std::string Report::get(const std::string& section, const std::string& key) const {
  for (const auto& s : sections_)
    if (s.name == section)
      for (const auto& [k, v] : s.entries)
        if (k == key) return v;
  return "";
}

std::string Report::text() const {
  std::ostringstream out;
  out << "weilzeta " << command_ << "\n";
  // Checks go last so the verdict follows its evidence.
  auto print = [&](const Section& s) {
    out << "\n[" << s.name << "]\n";
    for (const auto& [k, v] : s.entries) out << k << " = " << v << "\n";
  };
  for (const auto& s : sections_)
    if (s.name != "checks") print(s);
  for (const auto& s : sections_)
    if (s.name == "checks") print(s);
  out << "\nverdict = " << (pass_ ? "PASS" : "FAIL") << "\n";
  for (const auto& t : timings_) out << t << "\n";
  return out.str();
}

std::string strip_timing(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.rfind("# timing", 0) != 0) out += line + "\n";
  return out;
}

}  // namespace weilzeta
