#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csflab/numbers.hpp"

namespace csflab {

// Integer partition: weakly decreasing positive parts. The empty partition
// (weight 0) is a legal value; it is what reduced_form gives for all-ones.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // "3,2,1" with optional surrounding whitespace; "" parses to the empty
  // partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Canonical order: ascending by length, ties broken lexicographically
// descending ((4) before (3,1) before (2,2) before (2,1,1) ...).
bool operator<(const Partition& a, const Partition& b);

// All partitions of n in canonical order. 1 <= n <= 40.
std::vector<Partition> enumerate_partitions(int n);

// Whether mu refines lambda: lambda is obtained by merging parts of mu.
// Requires equal weights.
bool is_refinement(const Partition& mu, const Partition& lambda);

// Strips all 1-parts. All-ones (and empty) reduce to the empty partition.
Partition reduced_form(const Partition& lambda);

// Reduced form padded with 1-parts back up to weight s; absent when the
// reduced weight already exceeds s. Requires s <= weight(lambda).
std::optional<Partition> s_reduced_form(const Partition& lambda, int s);

// Equal reduced forms.
bool equivalent(const Partition& a, const Partition& b);

// Product of r_i! over the part multiplicities r_i.
BigInt multiplicity_factorial(const Partition& lambda);

}  // namespace csflab
