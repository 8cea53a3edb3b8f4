#include "kcatalan/checks.hpp"

#include "kcatalan/counting.hpp"
#include "kcatalan/lattice.hpp"
#include "kcatalan/periodicity.hpp"
#include "kcatalan/transfer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kcatalan::checks {

namespace reference {

const Rows& height_k3() {
  static const Rows rows{
      {1},
      {1, 2, 2},
      {1, 8, 18, 10, 5},
      {1, 26, 120, 142, 117, 42, 14},
      {1, 80, 720, 1481, 1789, 1130, 596, 168, 42},
      {1, 242, 4122, 13680, 23205, 20940, 14817, 6936, 2781, 660, 132},
  };
  return rows;
}

const Rows& height_k4() {
  static const Rows rows{
      {1},
      {1, 3, 5, 5},
      {1, 15, 68, 147, 105, 84, 42},
      {1, 63, 722, 3098, 4720, 5940, 5112, 2520, 1386, 462},
  };
  return rows;
}

const Rows& narayana_k3() {
  static const Rows rows{
      {1},
      {2, 3},
      {5, 23, 14},
      {14, 131, 233, 84},
      {42, 664, 2339, 2367, 594},
      {132, 3166, 18520, 36265, 24714, 4719},
  };
  return rows;
}

const Rows& narayana_k4() {
  static const Rows rows{
      {1},
      {5, 9},
      {42, 236, 184},
      {462, 5354, 12268, 5940},
      {6006, 118914, 543119, 737129, 257636},
      {87516, 2653224, 20245479, 53243052, 50245691, 13754842},
  };
  return rows;
}

}  // namespace reference

namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<Integer>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].get_str();
  }
  return out;
}

std::vector<Integer> as_integers(const std::vector<long>& xs) {
  return {xs.begin(), xs.end()};
}

class Recorder {
 public:
  Recorder(int id, std::string title) : result_{id, std::move(title), true, {}} {}

  bool expect(bool ok, const std::string& what) {
    if (!ok) {
      result_.passed = false;
      result_.notes.push_back("FAILED: " + what);
    }
    return ok;
  }
  void note(std::string text) { result_.notes.push_back(std::move(text)); }
  CriterionResult take() { return std::move(result_); }

 private:
  CriterionResult result_;
};

std::string label(int k, int n) {
  return "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
}

WeightVector random_weights(std::mt19937& rng, std::size_t length, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<Integer> prefix;
  for (std::size_t i = 0; i < length; ++i) prefix.emplace_back(dist(rng));
  return WeightVector(std::move(prefix));
}

// ---------------------------------------------------------------------------- tables

CriterionResult table_reproduction() {
  Recorder r(1, "Table reproduction (height triangles k=3, k=4)");
  const Triangle t3 = height_triangle(3, 6);
  std::size_t exact_entries = 0;
  for (int n : {1, 2, 3, 4, 6}) {
    const auto expected = as_integers(reference::height_k3()[static_cast<std::size_t>(n - 1)]);
    r.expect(t3.row(n) == expected, "k=3 row " + std::to_string(n) + ": got " + join(t3.row(n)));
    exact_entries += expected.size();
  }
  r.note("k=3 rows 1-4 and 6: " + std::to_string(exact_entries) + " entries compared exactly");

  // Row 5 as printed sums to 6007; the computed row must differ in exactly one entry by 1.
  const auto& row5 = t3.row(5);
  const auto printed = as_integers(reference::height_k3()[4]);
  Integer sum = 0;
  for (const auto& x : row5) sum += x;
  r.expect(sum == catalan_exact(3, 5), "k=3 row 5 sums to " + sum.get_str());
  std::size_t differing = 0;
  std::string erratum;
  if (r.expect(row5.size() == printed.size(), "k=3 row 5 length")) {
    for (std::size_t i = 0; i < printed.size(); ++i) {
      if (row5[i] == printed[i]) continue;
      ++differing;
      Integer gap = row5[i] - printed[i];
      r.expect(abs(gap) == 1, "k=3 row 5 entry s=" + std::to_string(i + 2) + " differs by " +
                                  gap.get_str());
      erratum = "s=" + std::to_string(i + 2) + ": printed " + printed[i].get_str() +
                ", computed " + row5[i].get_str();
    }
  }
  r.expect(differing == 1, "k=3 row 5 differs from print in " + std::to_string(differing) +
                               " entries");
  const auto brute = oracle::brute_count(3, 5);
  bool oracle_agrees = brute.total == 6006;
  for (std::size_t i = 0; i < row5.size(); ++i) {
    const auto it = brute.by_max_height.find(static_cast<int>(i) + 2);
    const std::uint64_t count = it == brute.by_max_height.end() ? 0 : it->second;
    oracle_agrees = oracle_agrees && row5[i] == Integer(static_cast<unsigned long>(count));
  }
  r.expect(oracle_agrees, "oracle enumeration of the 6006 paths disagrees with row 5");
  r.note("erratum confirmed by 6006-path enumeration: " + erratum);

  const Triangle t4 = height_triangle(4, 4);
  std::size_t entries4 = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto expected = as_integers(reference::height_k4()[static_cast<std::size_t>(n - 1)]);
    r.expect(t4.row(n) == expected, "k=4 row " + std::to_string(n) + ": got " + join(t4.row(n)));
    entries4 += expected.size();
  }
  r.note("k=4 rows 1-4: " + std::to_string(entries4) + " entries compared exactly");
  return r.take();
}

CriterionResult narayana_reproduction() {
  Recorder r(2, "Narayana reproduction (k=3, k=4, rows 1-6)");
  for (int k : {3, 4}) {
    const auto& printed = k == 3 ? reference::narayana_k3() : reference::narayana_k4();
    const Triangle t = narayana_triangle(k, 6);
    std::size_t entries = 0;
    for (int n = 1; n <= 6; ++n) {
      const auto expected = as_integers(printed[static_cast<std::size_t>(n - 1)]);
      r.expect(t.row(n) == expected, "k=" + std::to_string(k) + " row " + std::to_string(n) +
                                         ": got " + join(t.row(n)));
      entries += expected.size();
    }
    r.note("k=" + std::to_string(k) + ": " + std::to_string(entries) + " entries compared");
  }
  return r.take();
}

CriterionResult closed_form_consistency() {
  Recorder r(3, "Closed-form consistency (row sums, symmetry, exact division)");
  const std::vector<std::pair<int, int>> shapes{{3, 6}, {4, 4}};
  for (auto [k, n_max] : shapes) {
    const Triangle heights = height_triangle(k, n_max);
    for (int n = 1; n <= n_max; ++n) {
      Integer sum = 0;
      for (const auto& x : heights.row(n)) sum += x;
      r.expect(sum == catalan_exact(k, n), "height row sum " + label(k, n));
    }
  }
  for (int k : {3, 4}) {
    const Triangle peaks = narayana_triangle(k, 6);
    for (int n = 1; n <= 6; ++n) {
      Integer sum = 0;
      for (const auto& x : peaks.row(n)) sum += x;
      r.expect(sum == catalan_exact(k, n), "narayana row sum " + label(k, n));
    }
  }
  for (int k = 2; k <= 6; ++k) {
    for (int n = 2; n <= 6; ++n) {
      r.expect(catalan_exact(k, n) == catalan_exact(n, k), "symmetry " + label(k, n));
    }
  }
  std::size_t evaluated = 0;
  for (int k = 2; k <= 8; ++k) {
    for (int n = 0; n <= 8; ++n) {
      try {
        catalan_exact(k, n);
        ++evaluated;
      } catch (const std::logic_error& e) {
        r.expect(false, e.what());
      }
    }
  }
  r.note("exact division held for " + std::to_string(evaluated) + " (k, n) pairs");
  return r.take();
}

// ------------------------------------------------------------------------ identities

CriterionResult recurrence_corollaries() {
  Recorder r(4, "Linear recurrences ((6,-3) recurrence, k^(n-1), constant 1)");
  const WeightVector ones = WeightVector::ones();
  auto c34 = diagonal_counts(3, 4, 12, ones);
  c34.erase(c34.begin());  // n = 1..12
  const std::vector<Integer> coeffs{6, -3};
  r.expect(check_scalar_recurrence(c34, coeffs, 0), "C_{3,4,n} = 6C_{3,4,n-1} - 3C_{3,4,n-2}");
  r.note("C_{3,4,n}, n=1..12: " + join(c34));
  for (int k = 2; k <= 5; ++k) {
    const auto kk = diagonal_counts(k, k, 10, ones);
    const auto below = diagonal_counts(k, k - 1, 10, ones);
    for (int n = 1; n <= 10; ++n) {
      Integer power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k),
                    static_cast<unsigned long>(n - 1));
      r.expect(kk[static_cast<std::size_t>(n)] == power, "C_{k,k,n} = k^(n-1) " + label(k, n));
      r.expect(below[static_cast<std::size_t>(n)] == 1, "C_{k,k-1,n} = 1 " + label(k, n));
    }
  }
  return r.take();
}

CriterionResult structural_identities() {
  Recorder r(10, "Structural identities (D, N and weighted-bounded correspondences)");
  for (int k = 3; k <= 5; ++k) {
    for (int n = 1; n <= 5; ++n) {
      const Integer top = exact_height_count(k, (k - 1) * n, n);
      const Integer lower = catalan_exact(k - 1, n);
      r.expect(top == lower, "D_{k,(k-1)n,n} = C_{k-1,n} " + label(k, n));
      r.expect(exact_height_count(k, (k - 1) * n - 1, n) == (n - 1) * lower,
               "D_{k,(k-1)n-1,n} = (n-1) C_{k-1,n} " + label(k, n));
    }
  }
  for (int k = 3; k <= 4; ++k) {
    for (int n = 1; n <= 6; ++n) {
      r.expect(narayana_count(k, 1, n) == catalan_exact(k - 1, n), "N_{k,1,n} " + label(k, n));
    }
  }
  std::mt19937 rng(20251014);
  std::size_t grid = 0;
  for (int k = 2; k <= 4; ++k) {
    const int n_max = k == 4 ? 4 : 5;
    std::vector<WeightVector> samples{WeightVector::ones(), WeightVector::odd_squares(),
                                      random_weights(rng, 16, 9), random_weights(rng, 16, 9)};
    for (const auto& wv : samples) {
      for (int t = 1; t <= 4; ++t) {
        const WeightVector cut = zero_from(wv, t);
        const auto lhs = diagonal_counts(k, std::nullopt, n_max, cut);
        const auto rhs = diagonal_counts(k, t + k - 2, n_max, cut);
        r.expect(lhs == rhs, "weighted = bounded(t+k-2) for k=" + std::to_string(k) +
                                 ", t=" + std::to_string(t) + ", " + render_weight_spec(wv));
        grid += static_cast<std::size_t>(n_max) + 1;
      }
    }
  }
  r.note("weighted-bounded identity checked at " + std::to_string(grid) + " grid points");
  return r.take();
}

// -------------------------------------------------------------------------- matrices

// Published recurrence matrices as functions of the weights b_0, b_1, ...
Matrix theorem_kk_matrix(int k, const std::vector<Integer>& b) {
  Matrix m(2);
  m(0, 0) = b[0];
  m(0, 1) = b[0] * b[1];
  m(1, 0) = k - 1;
  m(1, 1) = (k - 1) * b[1];
  return m;
}

Matrix four_bounded_matrix(const std::vector<Integer>& b) {
  Matrix m(3);
  m(0, 0) = b[0];
  m(0, 1) = b[0] * b[1] + b[0] * b[2];
  m(1, 0) = 2;
  m(1, 1) = 2 * b[1] + 2 * b[2];
  m(1, 2) = b[2];
  m(2, 0) = 1;
  m(2, 1) = b[1] + b[2];
  m(2, 2) = b[2];
  return m;
}

Matrix five_bounded_matrix(const std::vector<Integer>& b) {
  Matrix m(3);
  m(0, 0) = b[0];
  m(0, 1) = b[0] * b[2] + b[0] * b[1];
  m(1, 0) = 2;
  m(1, 1) = 2 * (b[1] + b[2] + b[3]);
  m(1, 2) = b[3] + b[2];
  m(2, 0) = 1;
  m(2, 1) = b[3] + b[2] + b[1];
  m(2, 2) = 2 * (b[3] + b[2] + b[1]);
  return m;
}

Matrix six_bounded_matrix() {
  return Matrix{{1, 2, 0, 1, 0, 0}, {2, 6, 2, 1, 1, 0}, {1, 3, 3, 0, 2, 2},
                {0, 2, 1, 3, 3, 0}, {0, 3, 3, 0, 2, 0}, {0, 1, 3, 0, 1, 2}};
}

std::string render(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      out += m(i, j).get_str();
    }
    out += ']';
  }
  return out + "]";
}

void compare_with_published(Recorder& r, const std::string& name, const Matrix& published,
                            const TransferMatrix& built, const WeightVector& wv) {
  if (!r.expect(published.size() == built.entries.size(),
                name + ": published has " + std::to_string(published.size()) + " states, built " +
                    std::to_string(built.entries.size()))) {
    return;
  }
  const Alignment a = best_alignment(published, built.entries);
  const std::string weights = render_weight_spec(wv);
  if (a.mismatches != 0) {
    auto published_seq = sequence_from_matrix(published, 6);
    auto built_seq = sequence_from_matrix(built.entries, 6);
    r.expect(false, name + " at " + weights + ": " + std::to_string(a.mismatches) +
                        " entries differ under the best relabelling; published " +
                        render(published) + " gives " + join(published_seq) +
                        ", enumeration gives " + render(built.entries) + " -> " +
                        join(built_seq));
    if (built.k == 3 && wv == WeightVector::ones()) {
      // Partial sums of the printed height triangle over s <= cap.
      std::vector<Integer> table_sums{1};
      for (const auto& row : reference::height_k3()) {
        Integer sum = 0;
        for (std::size_t i = 0; i < row.size() && static_cast<int>(i) + 2 <= built.s; ++i) {
          sum += row[i];
        }
        table_sums.push_back(sum);
      }
      r.note(name + ": printed height-triangle partial sums for s <= " +
             std::to_string(built.s) + " are " + join(table_sums));
    }
  } else {
    r.note(name + " at " + weights + ": permutation-equivalent");
  }
}

void compare_with_dp(Recorder& r, const TransferMatrix& built, const WeightVector& wv) {
  const auto from_matrix = sequence_from_matrix(built.entries, 10);
  const auto from_dp = diagonal_counts(built.k, built.s, 10, wv);
  r.expect(from_matrix == from_dp, "matrix sequence differs from DP for k=" +
                                       std::to_string(built.k) + ", s=" + std::to_string(built.s) +
                                       ", " + render_weight_spec(wv));
}

CriterionResult matrix_equivalence() {
  Recorder r(5, "Matrix equivalence (published matrices, k=2 tridiagonal fixture, DP)");
  const std::vector<WeightVector> evaluations{WeightVector::ones(),
                                              WeightVector({1, 2, 3, 4})};
  for (const auto& wv : evaluations) {
    const auto b = wv.values(8);
    for (int k = 2; k <= 5; ++k) {
      const TransferMatrix built = build_transfer_matrix(k, k, wv);
      compare_with_published(r, "k-bounded 2x2 (k=" + std::to_string(k) + ")",
                             theorem_kk_matrix(k, b), built, wv);
      compare_with_dp(r, built, wv);
    }
    const TransferMatrix four = build_transfer_matrix(3, 4, wv);
    compare_with_published(r, "3x3 four-bounded", four_bounded_matrix(b), four, wv);
    compare_with_dp(r, four, wv);
    const TransferMatrix five = build_transfer_matrix(3, 5, wv);
    compare_with_published(r, "3x3 five-bounded", five_bounded_matrix(b), five, wv);
    compare_with_dp(r, five, wv);
  }
  // The six-state matrix is only published unweighted.
  const WeightVector ones = WeightVector::ones();
  const TransferMatrix six = build_transfer_matrix(3, 6, ones);
  compare_with_published(r, "6x6 six-bounded", six_bounded_matrix(), six, ones);
  compare_with_dp(r, six, ones);
  compare_with_dp(r, build_transfer_matrix(3, 6, WeightVector({1, 2, 3, 4})),
                  WeightVector({1, 2, 3, 4}));

  std::mt19937 rng(7);
  for (int sample = 0; sample < 5; ++sample) {
    const WeightVector wv = random_weights(rng, 10, 9);
    for (int s : {2, 4, 6}) {
      const TransferMatrix built = build_transfer_matrix(2, s, wv);
      const TransferMatrix lemma = two_dim_lemma_matrix(zero_from(wv, s), s / 2 + 1);
      r.expect(permutation_equivalent(lemma.entries, built.entries),
               "k=2 builder vs lemma matrix, s=" + std::to_string(s) + ", " +
                   render_weight_spec(wv));
      r.expect(sequence_from_matrix(lemma.entries, 10) == diagonal_counts(2, s, 10, wv),
               "lemma sequence vs DP, s=" + std::to_string(s));
      compare_with_dp(r, built, wv);
    }
  }
  r.note("k=2 builder matched the lemma matrix for 5 sampled weight vectors at s=2,4,6");
  return r.take();
}

// --------------------------------------------------------------------------- periods

CriterionResult odd_squares_periodicity() {
  Recorder r(7, "Odd-squares weighted Catalan periods modulo 27 and 81");
  const WeightVector odd = WeightVector::odd_squares();
  const std::vector<std::pair<std::int64_t, std::size_t>> cases{{27, 2}, {81, 6}};
  for (auto [m, expected_period] : cases) {
    const auto start = Clock::now();
    const auto form = periodic_form(2, odd, m);
    if (!r.expect(form.has_value(), "periodic_form found no hypothesis mod " + std::to_string(m))) {
      continue;
    }
    r.expect(form->hypothesis == Hypothesis::product,
             "mod " + std::to_string(m) + " used " + to_string(form->hypothesis));
    const PeriodReport report = detect_cycle(form->system.entries, m, 1u << 22);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    r.expect(report.scalar_period == expected_period,
             "mod " + std::to_string(m) + " scalar period " + std::to_string(report.scalar_period));
    r.expect(seconds < 10.0, "mod " + std::to_string(m) + " took " + std::to_string(seconds) + "s");
    const auto system_seq = sequence_from_matrix(form->system.entries, 30, m);
    const auto direct = diagonal_counts(2, std::nullopt, 30, odd, m);
    r.expect(system_seq == direct, "reduced system disagrees with the weighted count mod " +
                                       std::to_string(m));
    std::ostringstream os;
    os << "mod " << m << ": product hypothesis t=" << form->index << ", cap " << form->cap << ", "
       << form->system.states.size() << " states, scalar (mu*, lambda*) = ("
       << report.scalar_preperiod << ", " << report.scalar_period << "), vector ("
       << report.vector_preperiod << ", " << report.vector_period << ")";
    r.note(os.str());
  }
  return r.take();
}

CriterionResult bounded_periodicity_sweep() {
  Recorder r(8, "Bounded periodicity sweep (k,s) x m=2..12");
  const std::vector<std::pair<int, int>> systems{{3, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 4}};
  std::size_t confirmed = 0;
  for (auto [k, s] : systems) {
    const TransferMatrix system = build_transfer_matrix(k, s, WeightVector::ones());
    for (std::int64_t m = 2; m <= 12; ++m) {
      const double bound =
          std::pow(static_cast<double>(m), static_cast<double>(system.entries.size()));
      const auto budget = static_cast<std::size_t>(std::min(bound, 1e8));
      try {
        const PeriodReport report = detect_cycle(system.entries, m, budget);
        if (r.expect(report.confirmed, "unconfirmed report")) ++confirmed;
      } catch (const UndeterminedCycle& e) {
        r.expect(false, "(k=" + std::to_string(k) + ", s=" + std::to_string(s) + ") " + e.what());
      }
    }
  }
  r.note(std::to_string(confirmed) + " confirmed reports");
  return r.take();
}

// ---------------------------------------------------------------------------- oracle

CriterionResult weighted_polynomial_identity() {
  Recorder r(6, "Weighted polynomial identity for k=2, n=3");
  std::mt19937 rng(2025);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightVector wv = random_weights(rng, 4, 9);
    const auto b = wv.values(3);
    const Integer polynomial =
        b[0] * b[0] * b[0] + 2 * b[0] * b[0] * b[1] + b[0] * b[1] * b[1] + b[0] * b[1] * b[2];
    const Integer dp = weighted_catalan(2, 3, wv);
    const Integer brute = oracle::brute_count(2, 3, wv).weighted_total;
    r.expect(dp == polynomial && brute == polynomial,
             render_weight_spec(wv) + ": polynomial " + polynomial.get_str() + ", DP " +
                 dp.get_str() + ", oracle " + brute.get_str());
  }
  r.note("10 integer evaluations with |b_i| <= 9");
  return r.take();
}

CriterionResult oracle_equivalence(const SuiteOptions& options) {
  Recorder r(9, "Oracle equivalence (cross_check over every small (k, n))");
  std::mt19937 rng(99);
  std::size_t runs = 0;
  for (int k = 2; k <= 5; ++k) {
    for (int n = 0;; ++n) {
      if (catalan_exact(k, n) > Integer(static_cast<unsigned long>(options.max_paths))) break;
      std::vector<WeightVector> samples{WeightVector::ones()};
      for (int i = 0; i < 3; ++i) {
        samples.push_back(random_weights(rng, static_cast<std::size_t>((k - 1) * n + 1), 9));
      }
      for (const auto& wv : samples) {
        const auto report = oracle::cross_check(k, n, wv, options.max_paths);
        ++runs;
        for (const auto& c : report.comparisons) {
          r.expect(c.passed, label(k, n) + " " + render_weight_spec(wv) + " " + c.name +
                                 ": oracle " + c.expected + ", implementation " + c.actual);
        }
      }
    }
  }
  r.note(std::to_string(runs) + " cross checks with path cap " + std::to_string(options.max_paths));
  return r.take();
}

using Batch = std::function<std::vector<CriterionResult>(const SuiteOptions&)>;

const std::map<std::string, Batch, std::less<>>& batches() {
  static const std::map<std::string, Batch, std::less<>> table{
      {"tables",
       [](const SuiteOptions&) {
         return std::vector{table_reproduction(), narayana_reproduction(),
                            closed_form_consistency()};
       }},
      {"identities",
       [](const SuiteOptions&) {
         return std::vector{recurrence_corollaries(), structural_identities()};
       }},
      {"matrices", [](const SuiteOptions&) { return std::vector{matrix_equivalence()}; }},
      {"periods",
       [](const SuiteOptions&) {
         return std::vector{odd_squares_periodicity(), bounded_periodicity_sweep()};
       }},
      {"oracle",
       [](const SuiteOptions& o) {
         return std::vector{weighted_polynomial_identity(), oracle_equivalence(o)};
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tables", "identities", "matrices", "periods",
                                              "oracle"};
  return names;
}

std::vector<CriterionResult> run_suite(std::string_view name, const SuiteOptions& options) {
  const auto it = batches().find(name);
  if (it == batches().end()) throw std::invalid_argument("unknown suite: " + std::string(name));
  return it->second(options);
}

std::vector<CriterionResult> run_all(const SuiteOptions& options) {
  std::vector<CriterionResult> all;
  for (const auto& name : suite_names()) {
    auto part = run_suite(name, options);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return all;
}

void print(std::ostream& os, const CriterionResult& result) {
  os << (result.passed ? "PASS" : "FAIL") << "  criterion " << result.id << ": " << result.title
     << "\n";
  for (const auto& note : result.notes) os << "      " << note << "\n";
}

}  // namespace kcatalan::checks
