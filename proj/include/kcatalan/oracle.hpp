#pragma once

#include "kcatalan/integer.hpp"
#include "kcatalan/weights.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Brute-force counts by walking every path. Shares only the lattice path primitives with
// the dynamic programs it is used to validate.
namespace kcatalan::oracle {

inline constexpr std::uint64_t default_path_cap = 100000;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const Integer& estimate, std::uint64_t cap);
};

struct BruteCount {
  std::uint64_t total = 0;
  Integer weighted_total = 0;
  std::map<int, std::uint64_t> by_max_height;
  std::map<std::size_t, std::uint64_t> by_peaks;
};

/// Refuses (CapExceeded) when catalan_exact(k, n) exceeds `cap`. Without weights the
/// weighted total equals the plain total.
BruteCount brute_count(int k, int n, const std::optional<WeightVector>& wv = std::nullopt,
                       std::uint64_t cap = default_path_cap);

struct Comparison {
  std::string name;
  std::string expected;  // oracle value
  std::string actual;    // implementation value
  bool passed = false;
};

struct CrossCheckReport {
  int k = 2;
  int n = 0;
  std::vector<Comparison> comparisons;

  bool passed() const;
};

/// Oracle against catalan_exact, weighted_catalan, a transfer-matrix route, and the
/// height / narayana triangle rows.
CrossCheckReport cross_check(int k, int n, const WeightVector& wv,
                             std::uint64_t cap = default_path_cap);

}  // namespace kcatalan::oracle
