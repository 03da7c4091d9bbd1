#include "qext/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qext {

namespace {
const char* status_name(check_status s) {
  switch (s) {
    case check_status::pass: return "pass";
    case check_status::fail: return "fail";
    case check_status::skipped: return "skipped";
  }
  return "?";
}
}  // namespace

std::string to_json(const run_report& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["N"] = r.n;
  j["calculus"] = r.calculus;
  j["mode"] = r.mode;
  j["q"] = r.q;
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : r.suites) {
    nlohmann::ordered_json js;
    js["name"] = s.suite;
    js["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : s.checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      jc["status"] = status_name(c.status);
      if (c.witness) jc["witness"] = *c.witness;
      js["checks"].push_back(std::move(jc));
    }
    if (with_timing) js["elapsed_ms"] = s.elapsed_ms;
    j["suites"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

std::string to_text(const run_report& r, bool with_timing) {
  std::ostringstream out;
  out << "group=" << r.group << " N=" << r.n << " calculus=" << r.calculus << " mode=" << r.mode
      << " q=" << r.q << "\n";
  for (const auto& s : r.suites) {
    out << "suite " << s.suite << (s.passed() ? "  [pass]" : "  [FAIL]");
    if (with_timing) out << "  (" << s.elapsed_ms << " ms)";
    out << "\n";
    for (const auto& c : s.checks) {
      out << "  [" << status_name(c.status) << "] " << c.name;
      if (c.witness) out << "  -- " << *c.witness;
      out << "\n";
    }
  }
  out << (r.passed() ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace qext
