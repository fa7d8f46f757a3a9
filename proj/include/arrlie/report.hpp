#pragma once

#include <string>

#include <json.hpp>

namespace arrlie {

// Outcome of a verification pass.  "ok" means every checked identity held;
// "violation" carries the counterexamples in the payload.
struct CheckReport {
  bool ok = true;
  nlohmann::json payload = nlohmann::json::object();

  std::string status() const { return ok ? "ok" : "violation"; }
};

// Raised for bad input files, malformed literals, out-of-range parameters
// and exceeded brute-force caps.  The command line maps it to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Brute-force guards.  ARRLIE_CAP_OVERRIDE=<n> raises every cap to at
// least n, at the user's own risk.
int cap_with_override(int default_cap);

}  // namespace arrlie
