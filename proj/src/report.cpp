#include "arrlie/report.hpp"

#include <cstdlib>

namespace arrlie {

int cap_with_override(int default_cap) {
  const char* env = std::getenv("ARRLIE_CAP_OVERRIDE");
  if (!env || !*env) return default_cap;
  int v = std::atoi(env);
  return v > default_cap ? v : default_cap;
}

}  // namespace arrlie
