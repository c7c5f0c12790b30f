#include "csflab/errors.hpp"

#include <cstdlib>
#include <optional>
#include <string>

namespace csflab {

namespace {

std::optional<int> env_override() {
  static const std::optional<int> value = []() -> std::optional<int> {
    const char* raw = std::getenv("CSF_LAB_MAX_N");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    try {
      return std::stoi(raw);
    } catch (...) {
      return std::nullopt;
    }
  }();
  return value;
}

}  // namespace

int vertex_guard_limit(int default_limit) {
  if (auto v = env_override()) return *v;
  return default_limit;
}

void check_vertex_guard(int n, int default_limit, const char* what) {
  int limit = vertex_guard_limit(default_limit);
  if (n > limit) {
    throw ResourceError(std::string(what) + ": n=" + std::to_string(n) +
                        " exceeds guard " + std::to_string(limit) +
                        " (set CSF_LAB_MAX_N to override)");
  }
}

}  // namespace csflab
