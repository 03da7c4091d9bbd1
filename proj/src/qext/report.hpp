#ifndef QEXT_REPORT_HPP
#define QEXT_REPORT_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace qext {

enum class check_status { pass, fail, skipped };

struct check_result {
  std::string name;
  check_status status = check_status::fail;
  std::optional<std::string> witness;
  double elapsed_ms = 0.0;
};

struct suite_report {
  std::string suite;
  std::vector<check_result> checks;
  double elapsed_ms = 0.0;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == check_status::fail) return false;
    return true;
  }
};

struct run_report {
  std::string group;     // "o" | "sp"
  int n = 0;
  std::string calculus;  // "plus" | "minus"
  std::string mode;      // "symbolic" | "numeric"
  std::string q;         // scalar string of q in the active field
  std::vector<suite_report> suites;

  bool passed() const {
    for (const auto& s : suites)
      if (!s.passed()) return false;
    return true;
  }
};

std::string to_json(const run_report& r, bool with_timing);
std::string to_text(const run_report& r, bool with_timing);

// Small helper for collecting timed checks inside a suite.
class suite_builder {
 public:
  explicit suite_builder(std::string name) { rep_.suite = std::move(name); }

  template <class Fn>
  void check(const std::string& name, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    check_result c;
    c.name = name;
    try {
      std::optional<std::string> witness;
      bool ok = fn(witness);
      c.status = ok ? check_status::pass : check_status::fail;
      c.witness = std::move(witness);
    } catch (const std::exception& e) {
      c.status = check_status::fail;
      c.witness = std::string("exception: ") + e.what();
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep_.elapsed_ms += c.elapsed_ms;
    rep_.checks.push_back(std::move(c));
  }

  void skip(const std::string& name, const std::string& reason) {
    check_result c;
    c.name = name;
    c.status = check_status::skipped;
    c.witness = reason;
    rep_.checks.push_back(std::move(c));
  }

  suite_report take() { return std::move(rep_); }

 private:
  suite_report rep_;
};

}  // namespace qext

#endif
