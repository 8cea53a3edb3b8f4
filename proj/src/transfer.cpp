#include "kcatalan/transfer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kcatalan {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : size_(rows.size()), entries_() {
  entries_.reserve(size_ * size_);
  for (const auto& row : rows) {
    if (row.size() != size_) throw std::invalid_argument("Matrix: rows must be square");
    for (long v : row) entries_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t size) {
  Matrix out(size);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = 1;
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Modulus& m) {
  if (a.size() != b.size()) throw std::invalid_argument("multiply: size mismatch");
  const std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += a(i, l) * b(l, j);
        reduce_in_place(out(i, j), m);
      }
    }
  }
  return out;
}

std::vector<Integer> multiply(const Matrix& a, std::span<const Integer> v, const Modulus& m) {
  if (a.size() != v.size()) throw std::invalid_argument("multiply: size mismatch");
  std::vector<Integer> out(v.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      out[i] += a(i, j) * v[j];
      reduce_in_place(out[i], m);
    }
  }
  return out;
}

namespace {

// Enumerates every k-step continuation from `start` that stays dominance-valid and within
// the height cap, accumulating weight per normalized endpoint.
class ContinuationWalker {
 public:
  ContinuationWalker(int k, int s, const std::vector<Integer>& weights, const Modulus& m)
      : k_(k), s_(s), weights_(weights), m_(m) {}

  std::map<NormalizedState, Integer> run(const NormalizedState& start) {
    out_.clear();
    point_ = start;
    walk(0, height(point_), reduce(Integer(1), m_));
    return std::move(out_);
  }

 private:
  void walk(int depth, int h, const Integer& weight) {
    if (depth == k_) {
      NormalizedState z = point_;
      const int base = z.back();
      for (int& c : z) c -= base;
      Integer& slot = out_[z];
      slot += weight;
      reduce_in_place(slot, m_);
      return;
    }
    for (std::size_t i = 0; i < point_.size(); ++i) {
      if (i > 0 && point_[i - 1] <= point_[i]) continue;
      const int h_next = i == 0 ? h + k_ - 1 : h - 1;
      if (h_next > s_) continue;
      ++point_[i];
      if (i == 0) {
        walk(depth + 1, h_next, reduce(weight * weights_[static_cast<std::size_t>(h)], m_));
      } else {
        walk(depth + 1, h_next, weight);
      }
      --point_[i];
    }
  }

  int k_;
  int s_;
  const std::vector<Integer>& weights_;
  const Modulus& m_;
  Coords point_;
  std::map<NormalizedState, Integer> out_;
};

}  // namespace

TransferMatrix build_transfer_matrix(int k, int s, const WeightVector& wv, const Modulus& m) {
  require_dimension(k);
  check_modulus(m);
  if (s < k - 1) {
    throw std::invalid_argument("build_transfer_matrix: s=" + std::to_string(s) +
                                " < k-1; no path of positive length fits under the cap");
  }
  std::vector<Integer> weights = wv.values(static_cast<std::size_t>(s) + 1);
  for (auto& b : weights) reduce_in_place(b, m);

  ContinuationWalker walker(k, s, weights, m);
  std::map<NormalizedState, std::map<NormalizedState, Integer>> transitions;
  std::deque<NormalizedState> frontier{NormalizedState(static_cast<std::size_t>(k), 0)};
  while (!frontier.empty()) {
    NormalizedState z = std::move(frontier.front());
    frontier.pop_front();
    if (transitions.count(z)) continue;
    auto row = walker.run(z);
    for (const auto& [target, w] : row) {
      if (!transitions.count(target)) frontier.push_back(target);
    }
    transitions.emplace(std::move(z), std::move(row));
  }

  TransferMatrix out{k, s, {}, Matrix(transitions.size())};
  std::map<NormalizedState, std::size_t> index;
  for (const auto& [z, row] : transitions) {
    index.emplace(z, out.states.size());
    out.states.push_back(z);
  }
  for (const auto& [z, row] : transitions) {
    for (const auto& [target, w] : row) out.entries(index.at(z), index.at(target)) = w;
  }
  return out;
}

TransferMatrix two_dim_lemma_matrix(const WeightVector& wv, int size, const Modulus& m) {
  if (size < 1) throw std::invalid_argument("two_dim_lemma_matrix: size must be >= 1");
  check_modulus(m);
  const auto n = static_cast<std::size_t>(size);
  const auto b = wv.values(2 * n + 1);
  TransferMatrix out{2, 2 * (size - 1), {}, Matrix(n)};
  for (std::size_t i = 0; i < n; ++i) out.states.push_back({static_cast<int>(2 * i), 0});
  Matrix& a = out.entries;
  a(0, 0) = b[0];
  if (n > 1) a(0, 1) = b[0] * b[1];
  for (std::size_t i = 1; i < n; ++i) {
    a(i, i - 1) = 1;
    a(i, i) = b[2 * i - 1] + b[2 * i];
    if (i + 1 < n) a(i, i + 1) = b[2 * i] * b[2 * i + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) reduce_in_place(a(i, j), m);
  }
  return out;
}

Matrix mat_pow(const Matrix& matrix, long long n, const Modulus& m) {
  if (n < 0) throw std::invalid_argument("mat_pow: exponent must be >= 0");
  check_modulus(m);
  Matrix result = Matrix::identity(matrix.size());
  for (std::size_t i = 0; i < result.size(); ++i) reduce_in_place(result(i, i), m);
  Matrix base = matrix;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = 0; j < base.size(); ++j) reduce_in_place(base(i, j), m);
  }
  while (n > 0) {
    if (n & 1) result = multiply(result, base, m);
    n >>= 1;
    if (n > 0) base = multiply(base, base, m);
  }
  return result;
}

std::vector<Integer> sequence_from_matrix(const Matrix& matrix, int n_max, const Modulus& m) {
  if (n_max < 0) throw std::invalid_argument("sequence_from_matrix: n_max must be >= 0");
  check_modulus(m);
  if (matrix.size() == 0) throw std::invalid_argument("sequence_from_matrix: empty matrix");
  std::vector<Integer> v(matrix.size(), 0);
  v[0] = reduce(Integer(1), m);
  std::vector<Integer> out{v[0]};
  for (int n = 1; n <= n_max; ++n) {
    v = multiply(matrix, v, m);
    out.push_back(v[0]);
  }
  return out;
}

bool check_scalar_recurrence(std::span<const Integer> seq, std::span<const Integer> coeffs,
                             std::size_t burn_in) {
  if (seq.size() <= coeffs.size() + burn_in) {
    throw std::invalid_argument("check_scalar_recurrence: sequence too short");
  }
  for (std::size_t n = burn_in + coeffs.size(); n < seq.size(); ++n) {
    Integer rhs = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) rhs += coeffs[j] * seq[n - 1 - j];
    if (rhs != seq[n]) return false;
  }
  return true;
}

Alignment best_alignment(const Matrix& expected, const Matrix& actual) {
  if (expected.size() != actual.size()) {
    throw std::invalid_argument("best_alignment: size mismatch");
  }
  const std::size_t n = expected.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Alignment best{perm, n * n + 1};
  do {
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < n && mismatches < best.mismatches; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (expected(i, j) != actual(perm[i], perm[j])) ++mismatches;
      }
    }
    if (mismatches < best.mismatches) {
      best = {perm, mismatches};
      if (mismatches == 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool permutation_equivalent(const Matrix& a, const Matrix& b) {
  return a.size() == b.size() && best_alignment(a, b).mismatches == 0;
}

}  // namespace kcatalan
