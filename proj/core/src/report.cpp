#include <suptilt/report.hpp>

#include <algorithm>

namespace suptilt {
namespace {

std::string clean(std::string text) {
  std::replace_if(text.begin(), text.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return text;
}

}  // namespace

void VerificationReport::add(Check check) {
  check.id = clean(std::move(check.id));
  check.subject = clean(std::move(check.subject));
  check.expected = clean(std::move(check.expected));
  check.actual = clean(std::move(check.actual));
  checks_.push_back(std::move(check));
}

void VerificationReport::add(std::string id, std::string subject, std::string expected, std::string actual,
                             bool pass) {
  add(Check{std::move(id), std::move(subject), std::move(expected), std::move(actual), pass});
}

void VerificationReport::expect_equal(std::string id, std::string subject, std::string expected,
                                      std::string actual) {
  const bool pass = expected == actual;
  add(std::move(id), std::move(subject), std::move(expected), std::move(actual), pass);
}

void VerificationReport::note(std::string text) { notes_.push_back(clean(std::move(text))); }

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

std::string VerificationReport::serialize() const {
  std::string out = "# suptilt verification report\n";
  for (const auto& n : notes_) out += "# " + n + "\n";
  for (const auto& c : checks_) {
    out += c.id + '\t' + c.subject + '\t' + c.expected + '\t' + c.actual + '\t' + (c.pass ? "PASS" : "FAIL") + '\n';
  }
  out += "# summary: " + std::to_string(checks_.size()) + " checks, " + std::to_string(failures()) + " failed\n";
  return out;
}

}  // namespace suptilt
