#include "prym/report.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace prym {

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void SuiteReport::add(const std::string& name, bool pass,
                      const std::string& details, double elapsed_ms) {
  checks.push_back({name, pass, details, elapsed_ms});
}

void SuiteReport::absorb(const SuiteReport& other) {
  for (const auto& c : other.checks)
    checks.push_back({other.suite + "." + c.name, c.pass, c.details, c.elapsed_ms});
}

std::string SuiteReport::digest() const {
  nlohmann::json p(parameters);
  std::string bytes = suite + "\n" + p.dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["parameters"] = nlohmann::json(parameters);
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["input_digest"] = digest();
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["verdict"] = c.pass ? "pass" : "fail";
    e["details"] = c.details;
    e["elapsed_ms"] = timings ? c.elapsed_ms : 0.0;
    cs.push_back(e);
  }
  j["checks"] = cs;
  j["overall"] = pass() ? "pass" : "fail";
  return j;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  os << "parameters: " << nlohmann::json(parameters).dump() << "\n";
  for (const auto& c : checks) {
    os << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
    if (!c.details.empty()) os << ": " << c.details;
    if (timings) os << " (" << c.elapsed_ms << " ms)";
    os << "\n";
  }
  os << "overall: " << (pass() ? "pass" : "fail") << "\n";
  return os.str();
}

} // namespace prym
