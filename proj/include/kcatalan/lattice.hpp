#pragma once

#include "kcatalan/integer.hpp"
#include "kcatalan/weights.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kcatalan {

/// Coordinates of a point in Z^k; path-valid points satisfy x_1 >= x_2 >= ... >= x_k >= 0.
using Coords = std::vector<int>;

/// Throws std::invalid_argument when k < 2.
void require_dimension(int k);

/// (k-1) x_1 - (x_2 + ... + x_k). Nonnegative on dominance-valid points.
int height(std::span<const int> coords);

bool is_dominant(std::span<const int> coords);

/// Steps are direction indices 1..k; step i moves along e_i.
struct BallotPath {
  int k = 2;
  std::vector<int> steps;

  int n() const { return static_cast<int>(steps.size()) / k; }
  friend bool operator==(const BallotPath&, const BallotPath&) = default;
};

struct PathDiagnostics {
  bool valid = true;
  /// Length of the shortest offending prefix; steps.size() when only the final balance fails.
  std::optional<std::size_t> first_violation;
  std::string reason;
};

/// Throws std::invalid_argument when a direction lies outside 1..k.
PathDiagnostics validate_path(int k, std::span<const int> steps);

struct PathStats {
  int max_height = 0;
  std::size_t peak_count = 0;
  std::vector<int> up_step_start_heights;
};

/// Throws std::invalid_argument for invalid paths.
PathStats path_stats(const BallotPath& path);

/// Product of b_h over the starting heights of the up-steps; 1 for the empty path.
Integer path_weight(const BallotPath& path, const WeightVector& wv);

/// Lexicographic stream of the balanced ballot paths from the origin to (n, ..., n),
/// optionally restricted to points of height <= height_cap. Backtracking keeps O(kn) state.
class PathEnumerator {
 public:
  PathEnumerator(int k, int n, std::optional<int> height_cap = std::nullopt);

  /// Advances to the next path; false once the stream is exhausted.
  bool next();
  /// The current path, valid after next() returned true.
  const std::vector<int>& steps() const { return steps_; }
  BallotPath path() const { return {k_, steps_}; }

 private:
  bool can_step(int dir) const;
  void push(int dir);
  int pop();
  bool search(int first_dir);

  int k_;
  int n_;
  std::optional<int> cap_;
  std::vector<int> steps_;
  std::vector<int> counts_;
  int height_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Collects at most `limit` paths.
std::vector<BallotPath> enumerate_paths(int k, int n, std::optional<int> height_cap = std::nullopt,
                                        std::size_t limit = 100000);

}  // namespace kcatalan
