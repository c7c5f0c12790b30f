#pragma once

#include <stdexcept>
#include <string>

namespace csflab {

// Invalid value in an otherwise well-formed call: bad partition, mismatched
// weights, non-forest argument where a forest is required, and so on.
// The CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input rejected by a size guard. The CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6 strings, edge lists, partition syntax).
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Vertex-count guards honor CSF_LAB_MAX_N when set; setting it is an
// explicitly unsafe override and replaces the built-in limit.
int vertex_guard_limit(int default_limit);
void check_vertex_guard(int n, int default_limit, const char* what);

}  // namespace csflab
