#pragma once

// Plain-text reports: "key = value" lines, "name: PASS|FAIL detail" check
// lines and indented witness text, assembled in call order.

#include <sstream>
#include <string>

namespace gkd {

class Report {
public:
  Report();

  void section(const std::string& title);
  void value(const std::string& key, const std::string& v);
  void value(const std::string& key, std::size_t v) { value(key, std::to_string(v)); }
  void check(const std::string& name, bool pass, const std::string& detail = {});
  void skip(const std::string& name, const std::string& reason);
  void note(const std::string& text);  // one indented line per input line

  bool failed() const { return failures_ > 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  std::string str() const { return out_.str(); }

private:
  std::ostringstream out_;
  std::size_t checks_ = 0, failures_ = 0;
};

}  // namespace gkd
