#include "doctest.h"

#include "kcatalan/counting.hpp"
#include "kcatalan/lattice.hpp"

#include <random>

using namespace kcatalan;

namespace {

// Independent route: weighted sum over the enumerated paths capped at `cap`.
Integer enumerated(int k, int n, const WeightVector& wv, std::optional<int> cap = std::nullopt) {
  Integer total = 0;
  PathEnumerator it(k, n, cap);
  while (it.next()) total += path_weight(it.path(), wv);
  return total;
}

WeightVector random_weights(std::mt19937& rng, std::size_t length) {
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<Integer> prefix;
  for (std::size_t i = 0; i < length; ++i) prefix.emplace_back(dist(rng));
  return WeightVector(std::move(prefix));
}

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("catalan_exact") {
  CHECK(catalan_exact(3, 3) == 42);
  CHECK(catalan_exact(4, 2) == 14);
  CHECK(catalan_exact(2, 4) == 14);
  CHECK(catalan_exact(2, 10) == 16796);
  CHECK(catalan_exact(3, 5) == 6006);
  for (int k = 2; k <= 9; ++k) CHECK(catalan_exact(k, 0) == 1);
  CHECK(catalan_exact(3, 5, 97) == 6006 % 97);
  CHECK(catalan_exact(3, 5, 1) == 0);
  CHECK_THROWS_AS(catalan_exact(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(catalan_exact(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(catalan_exact(3, 3, 0), std::invalid_argument);
  // Large values stay exact.
  CHECK(catalan_exact(2, 30) == Integer("3814986502092304"));
  CHECK(catalan_exact(2, 60) == Integer("1583850964596120042686772779038896"));
}

TEST_CASE("weighted_catalan") {
  CHECK(weighted_catalan(2, 3, WeightVector({1, 2, 3})) == 15);
  CHECK(weighted_catalan(3, 2, WeightVector::ones()) == 5);
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 4; ++n) CHECK(weighted_catalan(k, n, WeightVector({0, 5, 5, 5})) == 0);
    CHECK(weighted_catalan(k, 0, WeightVector({0})) == 1);
  }
}

TEST_CASE("bounded_weighted_catalan") {
  const WeightVector ones = WeightVector::ones();
  CHECK(bounded_weighted_catalan(3, 4, 3, ones) == 27);
  CHECK(bounded_weighted_catalan(3, 3, 4, ones) == 27);
  for (int k = 2; k <= 5; ++k) {
    for (int n = 0; n <= 6; ++n) CHECK(bounded_weighted_catalan(k, k - 1, n, ones) == 1);
  }
  CHECK(bounded_weighted_catalan(3, 1, 2, ones) == 0);
  CHECK(bounded_weighted_catalan(3, 0, 0, ones) == 1);
  CHECK_THROWS_AS(bounded_weighted_catalan(3, -1, 2, ones), std::invalid_argument);
}

TEST_CASE("exact_height_count") {
  CHECK(exact_height_count(3, 4, 3) == 18);
  CHECK(exact_height_count(3, 8, 4) == 14);
  for (int k = 2; k <= 5; ++k) {
    for (int s = 0; s < k - 1; ++s) CHECK(exact_height_count(k, s, 3) == 0);
  }
  CHECK(exact_height_count(3, 0, 1) == 0);
  CHECK_THROWS_AS(exact_height_count(3, 2, 0), std::invalid_argument);
}

TEST_CASE("narayana_count") {
  CHECK(narayana_count(3, 2, 3) == 23);
  CHECK(narayana_count(4, 3, 3) == 184);
  CHECK(narayana_count(4, 1, 4) == 462);
  CHECK(narayana_count(4, 1, 4) == catalan_exact(3, 4));
  CHECK(narayana_count(3, 9, 3) == 0);
  CHECK_THROWS_AS(narayana_count(3, 0, 3), std::invalid_argument);
}

TEST_CASE("triangles") {
  const Triangle h3 = height_triangle(3, 3);
  CHECK(h3.row(3) == ints({1, 8, 18, 10, 5}));
  CHECK(h3.column_origin == 2);
  CHECK(height_triangle(4, 2).row(2) == ints({1, 3, 5, 5}));
  const Triangle n3 = narayana_triangle(3, 4);
  CHECK(n3.row(4) == ints({14, 131, 233, 84}));
  CHECK(narayana_triangle(4, 2).row(2) == ints({5, 9}));
  for (int k = 2; k <= 5; ++k) {
    CHECK(height_triangle(k, 1).row(1) == ints({1}));
    CHECK(narayana_triangle(k, 1).row(1) == ints({1}));
  }
  const Triangle padded = narayana_triangle(3, 4, std::nullopt, true);
  CHECK(padded.row(1) == ints({1, 0, 0, 0}));
  CHECK(padded.row(4) == n3.row(4));
  CHECK_THROWS_AS(height_triangle(3, 0), std::invalid_argument);

  for (int k = 2; k <= 5; ++k) {
    const int n_max = k <= 3 ? 6 : (k == 4 ? 5 : 4);
    const Triangle h = height_triangle(k, n_max);
    const Triangle p = narayana_triangle(k, n_max);
    for (int n = 1; n <= n_max; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(h.row(n).size() == static_cast<std::size_t>((k - 1) * (n - 1) + 1));
      Integer hs = 0, ps = 0;
      for (const auto& x : h.row(n)) {
        CHECK(x >= 0);
        hs += x;
      }
      for (const auto& x : p.row(n)) ps += x;
      CHECK(hs == catalan_exact(k, n));
      CHECK(ps == catalan_exact(k, n));
    }
  }
}

TEST_CASE("property: saturation and monotonicity in s") {
  const WeightVector ones = WeightVector::ones();
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 5; ++n) {
      Integer previous = 0;
      for (int s = 0; s <= (k - 1) * n + 2; ++s) {
        const Integer c = bounded_weighted_catalan(k, s, n, ones);
        CHECK(c >= previous);
        previous = c;
        if (s >= (k - 1) * n) CHECK(c == catalan_exact(k, n));
      }
    }
  }
}

TEST_CASE("property: weighted count with zeroed tail equals the capped count") {
  std::mt19937 rng(5);
  for (int k = 2; k <= 5; ++k) {
    for (int trial = 0; trial < 4; ++trial) {
      const WeightVector wv = trial == 0 ? WeightVector::odd_squares() : random_weights(rng, 20);
      for (int t = 1; t <= 5; ++t) {
        const WeightVector cut = zero_from(wv, t);
        for (int n = 0; n <= (k <= 3 ? 5 : 3); ++n) {
          CHECK(weighted_catalan(k, n, cut) == bounded_weighted_catalan(k, t + k - 2, n, cut));
        }
      }
    }
  }
}

TEST_CASE("unit weights below s-k+2 reproduce the s-bounded count") {
  // A cap of s keeps exactly the up-steps starting below s-k+2, so s-k+2 leading ones
  // (not s+k-1) encode C_{k,s,n}; checked against capped enumeration.
  for (int k = 2; k <= 4; ++k) {
    for (int s = k - 1; s <= 3 * (k - 1); ++s) {
      const WeightVector leading = zero_from(WeightVector::ones(), s - k + 2);
      for (int n = 1; n <= (k == 4 ? 3 : 5); ++n) {
        const Integer capped = enumerated(k, n, WeightVector::ones(), s);
        CHECK(weighted_catalan(k, n, leading) == capped);
        CHECK(bounded_weighted_catalan(k, s, n, WeightVector::ones()) == capped);
      }
    }
  }
  // The s+k-1 reading over-counts, e.g. k=3, s=2, n=2.
  CHECK(weighted_catalan(3, 2, zero_from(WeightVector::ones(), 4)) !=
        bounded_weighted_catalan(3, 2, 2, WeightVector::ones()));
}

TEST_CASE("structural identities") {
  for (int k = 3; k <= 5; ++k) {
    for (int n = 1; n <= 5; ++n) {
      CHECK(exact_height_count(k, (k - 1) * n, n) == catalan_exact(k - 1, n));
      CHECK(exact_height_count(k, (k - 1) * n - 1, n) == (n - 1) * catalan_exact(k - 1, n));
    }
  }
  for (int k = 2; k <= 6; ++k) {
    for (int n = 2; n <= 6; ++n) CHECK(catalan_exact(k, n) == catalan_exact(n, k));
  }
}

TEST_CASE("property: modulus consistency") {
  std::mt19937 rng(8);
  const WeightVector wv = random_weights(rng, 20);
  for (std::int64_t m : {1, 2, 3, 5, 27, 97}) {
    CAPTURE(m);
    for (int k = 2; k <= 4; ++k) {
      for (int n = 1; n <= 4; ++n) {
        CHECK(catalan_exact(k, n, m) == reduce(catalan_exact(k, n), m));
        CHECK(weighted_catalan(k, n, wv, m) == reduce(weighted_catalan(k, n, wv), m));
        CHECK(bounded_weighted_catalan(k, k + 1, n, wv, m) ==
              reduce(bounded_weighted_catalan(k, k + 1, n, wv), m));
        CHECK(exact_height_count(k, k, n, m) == reduce(exact_height_count(k, k, n), m));
        CHECK(narayana_count(k, 2, n, m) == reduce(narayana_count(k, 2, n), m));
      }
      const Triangle exact_h = height_triangle(k, 4);
      const Triangle mod_h = height_triangle(k, 4, m);
      const Triangle exact_p = narayana_triangle(k, 4);
      const Triangle mod_p = narayana_triangle(k, 4, m);
      for (int n = 1; n <= 4; ++n) {
        for (std::size_t i = 0; i < exact_h.row(n).size(); ++i) {
          CHECK(mod_h.row(n)[i] == reduce(exact_h.row(n)[i], m));
        }
        REQUIRE(mod_p.row(n).size() == exact_p.row(n).size());
        for (std::size_t i = 0; i < exact_p.row(n).size(); ++i) {
          CHECK(mod_p.row(n)[i] == reduce(exact_p.row(n)[i], m));
        }
      }
    }
  }
}

TEST_CASE("oracle equivalence: DP against enumeration") {
  std::mt19937 rng(3);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 7}, {3, 4}, {4, 3}, {5, 2}}) {
    const WeightVector wv = random_weights(rng, static_cast<std::size_t>((k - 1) * n + 1));
    CHECK(weighted_catalan(k, n, wv) == enumerated(k, n, wv));
    for (int s = 0; s <= (k - 1) * n; ++s) {
      CHECK(bounded_weighted_catalan(k, s, n, wv) == enumerated(k, n, wv, s));
    }
  }
}
