#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace prym {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
  double elapsed_ms = 0.0;
};

// One suite run. Serialization is canonical: nlohmann objects keep keys
// sorted, and elapsed_ms is zeroed unless timings is set, so identical
// inputs produce byte-identical reports.
struct SuiteReport {
  std::string suite;
  std::map<std::string, nlohmann::json> parameters;
  std::vector<CheckResult> checks;
  bool timings = false;

  bool pass() const;
  void add(const std::string& name, bool pass, const std::string& details,
           double elapsed_ms = 0.0);
  // Appends the other suite's checks under suite-prefixed names. Parameters
  // are not merged; aggregated reports keep their own parameter block.
  void absorb(const SuiteReport& other);

  std::string digest() const;  // FNV-1a over the canonical parameter dump
  nlohmann::json to_json() const;
  std::string to_text() const;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

} // namespace prym
