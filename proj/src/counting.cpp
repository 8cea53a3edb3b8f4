#include "kcatalan/counting.hpp"

#include "kcatalan/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kcatalan {
namespace {

void require_nonnegative(int value, const char* name) {
  if (value < 0) throw std::invalid_argument(std::string(name) + " must be >= 0");
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

bool on_diagonal(const Coords& x) {
  return std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>()) == x.end();
}

// Successor x + e_i inside the box [0, n_max]^k keeping dominance; height bookkeeping is
// left to the caller.
bool can_advance(const Coords& x, std::size_t i, int n_max) {
  if (x[i] >= n_max) return false;
  return i == 0 || x[i - 1] > x[i];
}

}  // namespace

Integer catalan_exact(int k, int n, const Modulus& m) {
  require_dimension(k);
  require_nonnegative(n, "n");
  check_modulus(m);
  Integer num = factorial(k * n);
  Integer den = 1;
  for (int i = 0; i < n; ++i) {
    num *= factorial(i);
    den *= factorial(k + i);
  }
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw std::logic_error("catalan_exact: inexact division for k=" + std::to_string(k) +
                           ", n=" + std::to_string(n));
  }
  return reduce(q, m);
}

std::vector<Integer> diagonal_counts(int k, std::optional<int> height_cap, int n_max,
                                     const WeightVector& wv, const Modulus& m) {
  require_dimension(k);
  require_nonnegative(n_max, "n");
  check_modulus(m);
  std::vector<Integer> out(static_cast<std::size_t>(n_max) + 1, 0);
  if (height_cap && *height_cap < 0) return out;

  const int max_height = (k - 1) * n_max;
  std::vector<Integer> weights = wv.values(static_cast<std::size_t>(max_height) + 1);
  for (auto& b : weights) reduce_in_place(b, m);

  const auto dims = static_cast<std::size_t>(k);
  std::map<Coords, Integer> layer{{Coords(dims, 0), reduce(Integer(1), m)}};
  out[0] = layer.begin()->second;
  for (int sum = 0; sum < k * n_max; ++sum) {
    std::map<Coords, Integer> next;
    for (const auto& [x, f] : layer) {
      if (f == 0) continue;
      const int h = height(x);
      for (std::size_t i = 0; i < dims; ++i) {
        if (!can_advance(x, i, n_max)) continue;
        const int h_next = i == 0 ? h + k - 1 : h - 1;
        if (height_cap && h_next > *height_cap) continue;
        Coords y = x;
        ++y[i];
        Integer& slot = next[y];
        if (i == 0) {
          slot += f * weights[static_cast<std::size_t>(h)];
        } else {
          slot += f;
        }
        reduce_in_place(slot, m);
      }
    }
    layer = std::move(next);
    for (const auto& [x, f] : layer) {
      if (on_diagonal(x)) out[static_cast<std::size_t>(x[0])] = f;
    }
  }
  return out;
}

Integer weighted_catalan(int k, int n, const WeightVector& wv, const Modulus& m) {
  return diagonal_counts(k, std::nullopt, n, wv, m).back();
}

Integer bounded_weighted_catalan(int k, int s, int n, const WeightVector& wv, const Modulus& m) {
  require_nonnegative(s, "s");
  return diagonal_counts(k, s, n, wv, m).back();
}

Integer exact_height_count(int k, int s, int n, const Modulus& m) {
  require_dimension(k);
  if (n < 1) throw std::invalid_argument("exact_height_count: n must be >= 1");
  require_nonnegative(s, "s");
  const WeightVector ones = WeightVector::ones();
  Integer upper = diagonal_counts(k, s, n, ones).back();
  Integer lower = diagonal_counts(k, s - 1, n, ones).back();
  return reduce(upper - lower, m);
}

namespace {

// Per point and last-step kind, the weighted count split by peaks so far.
struct PeakProfile {
  std::vector<Integer> after_up;
  std::vector<Integer> after_other;
};

void add_into(std::vector<Integer>& dst, const std::vector<Integer>& src, std::size_t shift,
              const Modulus& m) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
  for (std::size_t p = 0; p < src.size(); ++p) {
    dst[p + shift] += src[p];
    reduce_in_place(dst[p + shift], m);
  }
}

// rows[j] is the peak distribution of the paths to (j, ..., j), j = 0..n_max.
std::vector<std::vector<Integer>> peak_distributions(int k, int n_max, const Modulus& m) {
  const auto dims = static_cast<std::size_t>(k);
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n_max) + 1);
  std::map<Coords, PeakProfile> layer;
  layer[Coords(dims, 0)].after_other = {reduce(Integer(1), m)};
  rows[0] = {reduce(Integer(1), m)};
  for (int sum = 0; sum < k * n_max; ++sum) {
    std::map<Coords, PeakProfile> next;
    for (const auto& [x, profile] : layer) {
      for (std::size_t i = 0; i < dims; ++i) {
        if (!can_advance(x, i, n_max)) continue;
        Coords y = x;
        ++y[i];
        PeakProfile& target = next[y];
        if (i == 0) {
          add_into(target.after_up, profile.after_up, 0, m);
          add_into(target.after_up, profile.after_other, 0, m);
        } else {
          add_into(target.after_other, profile.after_up, 1, m);
          add_into(target.after_other, profile.after_other, 0, m);
        }
      }
    }
    layer = std::move(next);
    for (const auto& [x, profile] : layer) {
      if (!on_diagonal(x)) continue;
      std::vector<Integer> total;
      add_into(total, profile.after_up, 0, m);
      add_into(total, profile.after_other, 0, m);
      rows[static_cast<std::size_t>(x[0])] = std::move(total);
    }
  }
  return rows;
}

}  // namespace

Integer narayana_count(int k, int p, int n, const Modulus& m) {
  require_dimension(k);
  if (n < 1 || p < 1) throw std::invalid_argument("narayana_count: n and p must be >= 1");
  check_modulus(m);
  const auto row = peak_distributions(k, n, m).back();
  const auto idx = static_cast<std::size_t>(p);
  return idx < row.size() ? row[idx] : Integer(0);
}

Triangle height_triangle(int k, int n_max, const Modulus& m) {
  require_dimension(k);
  if (n_max < 1) throw std::invalid_argument("height_triangle: n_max must be >= 1");
  check_modulus(m);
  const WeightVector ones = WeightVector::ones();
  // One capped sweep per s yields C_{k,s,n} for every n at once.
  const int s_max = (k - 1) * n_max;
  std::vector<std::vector<Integer>> bounded;
  for (int s = k - 2; s <= s_max; ++s) bounded.push_back(diagonal_counts(k, s, n_max, ones));

  Triangle t{TriangleKind::height, k, k - 1, {}};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Integer> row;
    for (int s = k - 1; s <= (k - 1) * n; ++s) {
      const auto col = static_cast<std::size_t>(s - (k - 2));
      const auto nn = static_cast<std::size_t>(n);
      row.push_back(reduce(bounded[col][nn] - bounded[col - 1][nn], m));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Triangle narayana_triangle(int k, int n_max, const Modulus& m, bool padded) {
  require_dimension(k);
  if (n_max < 1) throw std::invalid_argument("narayana_triangle: n_max must be >= 1");
  check_modulus(m);
  // Trimming is decided on exact counts so residues that vanish mod m keep their column.
  const auto exact = peak_distributions(k, n_max, std::nullopt);
  Triangle t{TriangleKind::narayana, k, 1, {}};
  for (int n = 1; n <= n_max; ++n) {
    const auto& dist = exact[static_cast<std::size_t>(n)];
    std::size_t last = dist.size();
    while (last > 1 && dist[last - 1] == 0) --last;
    std::vector<Integer> row;
    for (std::size_t p = 1; p < last; ++p) row.push_back(reduce(dist[p], m));
    if (padded) row.resize(static_cast<std::size_t>(n_max), 0);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace kcatalan
