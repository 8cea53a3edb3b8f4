#include "kcatalan/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcatalan {

void require_dimension(int k) {
  if (k < 2) throw std::invalid_argument("dimension k must be >= 2, got " + std::to_string(k));
}

int height(std::span<const int> coords) {
  require_dimension(static_cast<int>(coords.size()));
  const int k = static_cast<int>(coords.size());
  int h = (k - 1) * coords[0];
  for (int i = 1; i < k; ++i) h -= coords[static_cast<std::size_t>(i)];
  return h;
}

bool is_dominant(std::span<const int> coords) {
  if (coords.empty() || coords.back() < 0) return false;
  for (std::size_t i = 1; i < coords.size(); ++i) {
    if (coords[i - 1] < coords[i]) return false;
  }
  return true;
}

PathDiagnostics validate_path(int k, std::span<const int> steps) {
  require_dimension(k);
  for (int d : steps) {
    if (d < 1 || d > k) {
      throw std::invalid_argument("direction " + std::to_string(d) + " outside 1.." +
                                  std::to_string(k));
    }
  }
  Coords x(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto d = static_cast<std::size_t>(steps[i] - 1);
    ++x[d];
    if (d > 0 && x[d] > x[d - 1]) {
      return {false, i + 1, "dominance fails after step " + std::to_string(i + 1)};
    }
  }
  if (std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>()) != x.end()) {
    return {false, steps.size(), "direction counts are unequal"};
  }
  return {};
}

PathStats path_stats(const BallotPath& path) {
  const PathDiagnostics diag = validate_path(path.k, path.steps);
  if (!diag.valid) throw std::invalid_argument("path_stats: " + diag.reason);
  PathStats stats;
  int h = 0;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const int d = path.steps[i];
    if (d == 1) {
      stats.up_step_start_heights.push_back(h);
      h += path.k - 1;
      if (i + 1 < path.steps.size() && path.steps[i + 1] != 1) ++stats.peak_count;
    } else {
      --h;
    }
    stats.max_height = std::max(stats.max_height, h);
  }
  return stats;
}

Integer path_weight(const BallotPath& path, const WeightVector& wv) {
  Integer w = 1;
  for (int h : path_stats(path).up_step_start_heights) w *= wv.at(h);
  return w;
}

PathEnumerator::PathEnumerator(int k, int n, std::optional<int> height_cap)
    : k_(k), n_(n), cap_(height_cap), counts_(static_cast<std::size_t>(std::max(k, 0)), 0) {
  require_dimension(k);
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (cap_ && *cap_ < 0) throw std::invalid_argument("height cap must be >= 0");
  steps_.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(n));
}

bool PathEnumerator::can_step(int dir) const {
  const auto i = static_cast<std::size_t>(dir - 1);
  if (counts_[i] >= n_) return false;
  if (i > 0 && counts_[i - 1] <= counts_[i]) return false;
  if (dir == 1 && cap_ && height_ + k_ - 1 > *cap_) return false;
  return true;
}

void PathEnumerator::push(int dir) {
  steps_.push_back(dir);
  ++counts_[static_cast<std::size_t>(dir - 1)];
  height_ += dir == 1 ? k_ - 1 : -1;
}

int PathEnumerator::pop() {
  const int dir = steps_.back();
  steps_.pop_back();
  --counts_[static_cast<std::size_t>(dir - 1)];
  height_ -= dir == 1 ? k_ - 1 : -1;
  return dir;
}

// Depth-first extension of the current prefix, trying directions >= first_dir at the
// current depth and backtracking into shallower depths when a level is exhausted.
bool PathEnumerator::search(int first_dir) {
  const std::size_t total = static_cast<std::size_t>(k_) * static_cast<std::size_t>(n_);
  int dir = first_dir;
  while (true) {
    if (steps_.size() == total) return true;
    while (dir <= k_ && !can_step(dir)) ++dir;
    if (dir <= k_) {
      push(dir);
      dir = 1;
      continue;
    }
    if (steps_.empty()) return false;
    dir = pop() + 1;
  }
}

bool PathEnumerator::next() {
  if (done_) return false;
  bool found;
  if (!started_) {
    started_ = true;
    found = search(1);
  } else if (steps_.empty()) {
    found = false;  // the empty path (n = 0) is the only one
  } else {
    found = search(pop() + 1);
  }
  if (!found) done_ = true;
  return found;
}

std::vector<BallotPath> enumerate_paths(int k, int n, std::optional<int> height_cap,
                                        std::size_t limit) {
  std::vector<BallotPath> out;
  PathEnumerator it(k, n, height_cap);
  while (out.size() < limit && it.next()) out.push_back(it.path());
  return out;
}

}  // namespace kcatalan
