#include "csflab/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "csflab/errors.hpp"

namespace csflab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return Partition();
  auto last = text.find_last_not_of(" \t\r\n");
  std::string body = text.substr(first, last - first + 1);

  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string piece = body.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (...) {
      throw ParseError("bad partition syntax: '" + piece + "'");
    }
    if (used != piece.size())
      throw ParseError("bad partition syntax: '" + piece + "'");
    parts.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(parts);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

bool operator<(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.parts() > b.parts();  // same length: larger parts first
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1 || n > 40)
    throw DomainError("partition enumeration requires 1 <= n <= 40");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> gen = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      gen(remaining - p, p);
      current.pop_back();
    }
  };
  gen(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_refinement(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw DomainError("refinement test requires equal weights");
  if (mu == lambda) return true;
  if (mu.length() < lambda.length()) return false;

  // Place parts of mu, largest first, into blocks with the capacities of
  // lambda; weights being equal, success means every block fills exactly.
  std::map<std::pair<std::size_t, std::vector<int>>, bool> memo;
  const std::vector<int>& parts = mu.parts();
  std::function<bool(std::size_t, std::vector<int>)> place =
      [&](std::size_t i, std::vector<int> caps) -> bool {
    if (i == parts.size()) return true;
    std::sort(caps.begin(), caps.end(), std::greater<int>());
    auto key = std::make_pair(i, caps);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    int tried = -1;
    for (std::size_t j = 0; j < caps.size() && !ok; ++j) {
      if (caps[j] < parts[i]) break;  // caps descending
      if (caps[j] == tried) continue;
      tried = caps[j];
      std::vector<int> next = caps;
      next[j] -= parts[i];
      ok = place(i + 1, std::move(next));
    }
    memo[key] = ok;
    return ok;
  };
  return place(0, lambda.parts());
}

Partition reduced_form(const Partition& lambda) {
  std::vector<int> kept;
  for (int p : lambda.parts())
    if (p > 1) kept.push_back(p);
  return Partition(kept);
}

std::optional<Partition> s_reduced_form(const Partition& lambda, int s) {
  if (s < 0 || s > lambda.weight())
    throw DomainError("s-reduced form requires 0 <= s <= weight");
  Partition r = reduced_form(lambda);
  if (r.weight() > s) return std::nullopt;
  std::vector<int> parts = r.parts();
  parts.insert(parts.end(), s - r.weight(), 1);
  return Partition(parts);
}

bool equivalent(const Partition& a, const Partition& b) {
  return reduced_form(a) == reduced_form(b);
}

BigInt multiplicity_factorial(const Partition& lambda) {
  BigInt r = 1;
  const std::vector<int>& parts = lambda.parts();
  int run = 1;
  for (std::size_t i = 1; i <= parts.size(); ++i) {
    if (i < parts.size() && parts[i] == parts[i - 1]) {
      ++run;
    } else {
      r *= factorial(run);
      run = 1;
    }
  }
  return r;
}

}  // namespace csflab
