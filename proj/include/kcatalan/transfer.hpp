#pragma once

#include "kcatalan/integer.hpp"
#include "kcatalan/lattice.hpp"
#include "kcatalan/weights.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace kcatalan {

/// Square exact-integer matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t size) : size_(size), entries_(size * size, 0) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t size);

  std::size_t size() const { return size_; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Integer> entries_;
};

Matrix multiply(const Matrix& a, const Matrix& b, const Modulus& m = {});
std::vector<Integer> multiply(const Matrix& a, std::span<const Integer> v, const Modulus& m = {});

/// Diagonal-translation class of a boundary point, stored with last coordinate 0.
using NormalizedState = Coords;

/// entry(i, j) is the total weight of the admissible k-step continuations from state i
/// whose endpoint normalizes to state j.
struct TransferMatrix {
  int k = 2;
  int s = 0;
  std::vector<NormalizedState> states;  // lexicographic; the origin is index 0
  Matrix entries;
};

/// Discovers the states reachable from the origin under the height cap s and fills the
/// weighted k-step transition counts. Throws std::invalid_argument for s < k-1.
TransferMatrix build_transfer_matrix(int k, int s, const WeightVector& wv, const Modulus& m = {});

/// The tridiagonal two-dimensional recurrence matrix truncated to `size` states
/// (heights 0, 2, ..., 2(size-1)): first row [b0, b0 b1], row i >= 1 has
/// 1, b_{2i-1} + b_{2i}, b_{2i} b_{2i+1} around the diagonal.
TransferMatrix two_dim_lemma_matrix(const WeightVector& wv, int size, const Modulus& m = {});

/// Binary exponentiation; M^0 is the identity.
Matrix mat_pow(const Matrix& matrix, long long n, const Modulus& m = {});

/// Entry n is the first coordinate of M^n e_1 for n = 0..n_max, by iterated products.
std::vector<Integer> sequence_from_matrix(const Matrix& matrix, int n_max, const Modulus& m = {});

/// True iff seq[n] = sum_j coeffs[j] seq[n-1-j] for every n >= burn_in + coeffs.size().
/// Throws std::invalid_argument unless seq.size() > coeffs.size() + burn_in.
bool check_scalar_recurrence(std::span<const Integer> seq, std::span<const Integer> coeffs,
                             std::size_t burn_in);

/// Best simultaneous row/column relabelling of `actual` onto `expected`:
/// expected(i, j) is compared with actual(perm[i], perm[j]).
struct Alignment {
  std::vector<std::size_t> permutation;
  std::size_t mismatches = 0;
};

/// Exhaustive search over permutations (sizes up to ~8).
Alignment best_alignment(const Matrix& expected, const Matrix& actual);

bool permutation_equivalent(const Matrix& a, const Matrix& b);

}  // namespace kcatalan
