#include "gkd/report.hpp"

namespace gkd {

Report::Report() { out_ << "# gkd report\n"; }

void Report::section(const std::string& title) { out_ << "\n## " << title << '\n'; }

void Report::value(const std::string& key, const std::string& v) { out_ << key << " = " << v << '\n'; }

void Report::check(const std::string& name, bool pass, const std::string& detail) {
  ++checks_;
  if (!pass) ++failures_;
  out_ << name << ": " << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) out_ << ' ' << detail;
  out_ << '\n';
}

void Report::skip(const std::string& name, const std::string& reason) { out_ << name << ": SKIP " << reason << '\n'; }

void Report::note(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out_ << "  " << line << '\n';
}

}  // namespace gkd
