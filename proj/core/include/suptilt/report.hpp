#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace suptilt {

struct Check {
  std::string id;
  std::string subject;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Ordered list of checks. Serialized as plain text:
///
///   # suptilt verification report
///   # <note>                                       (zero or more)
///   <id> TAB <subject> TAB <expected> TAB <actual> TAB PASS|FAIL
///   # summary: <k> checks, <f> failed
///
/// Fields never contain tabs or newlines (they are replaced by spaces).
class VerificationReport {
 public:
  void add(Check check);
  void add(std::string id, std::string subject, std::string expected, std::string actual, bool pass);
  /// Records `expected` vs `actual` and passes when they are equal.
  void expect_equal(std::string id, std::string subject, std::string expected, std::string actual);
  void note(std::string text);
  void append(const VerificationReport& other);

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  std::string serialize() const;

 private:
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
};

}  // namespace suptilt
