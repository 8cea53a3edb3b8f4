#pragma once

#include "kcatalan/integer.hpp"
#include "kcatalan/weights.hpp"

#include <optional>
#include <vector>

namespace kcatalan {

/// 0!1!...(n-1)! (kn)! / (k! (k+1)! ... (k+n-1)!). Throws std::logic_error if the
/// division leaves a remainder.
Integer catalan_exact(int k, int n, const Modulus& m = {});

/// Sum of path weights over all balanced ballot paths of kn steps.
Integer weighted_catalan(int k, int n, const WeightVector& wv, const Modulus& m = {});

/// As weighted_catalan, restricted to paths whose points all have height <= s.
Integer bounded_weighted_catalan(int k, int s, int n, const WeightVector& wv,
                                 const Modulus& m = {});

/// Entry j is the (optionally height-capped) weighted count for n = j, j = 0..n_max,
/// read off the diagonal points of a single lattice sweep.
std::vector<Integer> diagonal_counts(int k, std::optional<int> height_cap, int n_max,
                                     const WeightVector& wv, const Modulus& m = {});

/// D_{k,s,n}: paths whose maximum height is exactly s (n >= 1).
Integer exact_height_count(int k, int s, int n, const Modulus& m = {});

/// N_{k,p,n}: paths with exactly p peaks, a peak being an e_1 step followed by e_j, j > 1.
Integer narayana_count(int k, int p, int n, const Modulus& m = {});

enum class TriangleKind { height, narayana };

struct Triangle {
  TriangleKind kind = TriangleKind::height;
  int k = 2;
  /// Column label of entry 0: s = k-1 for height triangles, p = 1 for narayana triangles.
  int column_origin = 1;
  /// rows[n-1] is row n.
  std::vector<std::vector<Integer>> rows;

  const std::vector<Integer>& row(int n) const { return rows.at(static_cast<std::size_t>(n - 1)); }
};

/// Rows n = 1..n_max of D_{k,s,n} for s = k-1 .. (k-1)n.
Triangle height_triangle(int k, int n_max, const Modulus& m = {});

/// Rows n = 1..n_max of N_{k,p,n} for p = 1.. up to the last nonzero count. With `padded`
/// every row is extended with zeros to n_max columns.
Triangle narayana_triangle(int k, int n_max, const Modulus& m = {}, bool padded = false);

}  // namespace kcatalan
