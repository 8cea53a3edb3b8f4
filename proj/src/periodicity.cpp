#include "kcatalan/periodicity.hpp"

#include <algorithm>
#include <map>

namespace kcatalan {
namespace {

using Residues = std::vector<std::uint64_t>;

void require_orbit_modulus(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("cycle detection needs modulus >= 2");
}

struct ResidueMatrix {
  std::size_t size = 0;
  std::vector<std::uint64_t> entries;

  ResidueMatrix(const Matrix& matrix, std::int64_t m) : size(matrix.size()) {
    entries.reserve(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        entries.push_back(reduce(matrix(i, j), m).get_ui());
      }
    }
  }

  Residues apply(const Residues& v, std::uint64_t m) const {
    Residues out(size, 0);
    for (std::size_t i = 0; i < size; ++i) {
      unsigned __int128 acc = 0;
      for (std::size_t j = 0; j < size; ++j) {
        acc += static_cast<unsigned __int128>(entries[i * size + j]) * v[j];
        acc %= m;
      }
      out[i] = static_cast<std::uint64_t>(acc);
    }
    return out;
  }
};

template <typename Step, typename Readout>
PeriodReport orbit_report(Residues start, Step step, Readout readout, std::int64_t m,
                          std::size_t max_steps) {
  std::map<Residues, std::size_t> first_visit;
  std::vector<std::int64_t> scalars;
  Residues v = std::move(start);
  for (std::size_t n = 0;; ++n) {
    auto [it, inserted] = first_visit.emplace(v, n);
    if (!inserted) {
      PeriodReport report;
      report.modulus = m;
      report.vector_preperiod = it->second;
      report.vector_period = n - it->second;
      std::tie(report.scalar_preperiod, report.scalar_period) =
          minimal_scalar_period(scalars, report.vector_preperiod, report.vector_period);
      report.confirmed = true;
      return report;
    }
    if (n == max_steps) throw UndeterminedCycle(max_steps, m);
    scalars.push_back(readout(v));
    v = step(v);
  }
}

}  // namespace

UndeterminedCycle::UndeterminedCycle(std::size_t steps, std::int64_t modulus)
    : std::runtime_error("cycle undetermined: no repeated state within " + std::to_string(steps) +
                         " steps modulo " + std::to_string(modulus)) {}

std::pair<std::size_t, std::size_t> minimal_scalar_period(std::span<const std::int64_t> seq,
                                                          std::size_t preperiod,
                                                          std::size_t period) {
  if (seq.size() < preperiod + period) {
    throw std::invalid_argument("minimal_scalar_period: sequence shorter than one cycle");
  }
  // a_n for n >= preperiod is read cyclically from the stored window.
  auto at = [&](std::size_t n) {
    if (n < preperiod + period) return seq[n];
    return seq[preperiod + (n - preperiod) % period];
  };
  for (std::size_t d = 1; d <= period; ++d) {
    if (period % d) continue;
    bool invariant = true;
    for (std::size_t n = preperiod; n < preperiod + period && invariant; ++n) {
      invariant = at(n + d) == at(n);
    }
    if (!invariant) continue;
    std::size_t mu = preperiod;
    while (mu > 0 && at(mu - 1 + d) == at(mu - 1)) --mu;
    return {mu, d};
  }
  return {preperiod, period};
}

PeriodReport detect_cycle(const Matrix& matrix, std::int64_t m, std::size_t max_steps) {
  require_orbit_modulus(m);
  if (max_steps < 1) throw std::invalid_argument("detect_cycle: max_steps must be >= 1");
  if (matrix.size() == 0) throw std::invalid_argument("detect_cycle: empty matrix");
  const ResidueMatrix residues(matrix, m);
  const auto um = static_cast<std::uint64_t>(m);
  Residues start(matrix.size(), 0);
  start[0] = 1 % um;
  return orbit_report(
      std::move(start), [&](const Residues& v) { return residues.apply(v, um); },
      [](const Residues& v) { return static_cast<std::int64_t>(v[0]); }, m, max_steps);
}

PeriodReport detect_difference_cycle(const Matrix& a, const Matrix& b, std::int64_t m,
                                     std::size_t max_steps) {
  require_orbit_modulus(m);
  if (max_steps < 1) throw std::invalid_argument("detect_cycle: max_steps must be >= 1");
  const ResidueMatrix ra(a, m);
  const ResidueMatrix rb(b, m);
  const auto um = static_cast<std::uint64_t>(m);
  const std::size_t na = a.size();
  Residues start(na + b.size(), 0);
  start[0] = 1 % um;
  start[na] = 1 % um;
  auto step = [&](const Residues& v) {
    Residues va(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(na));
    Residues vb(v.begin() + static_cast<std::ptrdiff_t>(na), v.end());
    Residues out = ra.apply(va, um);
    const Residues tail = rb.apply(vb, um);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  };
  auto readout = [&](const Residues& v) {
    return static_cast<std::int64_t>((v[0] + um - v[na]) % um);
  };
  return orbit_report(std::move(start), step, readout, m, max_steps);
}

namespace {

bool divides(std::int64_t m, const Integer& x) {
  return mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(m)) != 0;
}

void require_hypothesis_modulus(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("hypothesis modulus must be >= 1");
}

}  // namespace

std::optional<long long> product_hypothesis(const WeightVector& wv, std::int64_t m,
                                            long long limit) {
  require_hypothesis_modulus(m);
  Integer product = 1;
  for (long long t = 0; t <= limit; ++t) {
    product *= wv.at(t);
    reduce_in_place(product, m);
    if (product == 0) return t;
  }
  return std::nullopt;
}

std::optional<long long> consecutive_hypothesis(const WeightVector& wv, std::int64_t m, int k,
                                                long long limit) {
  require_dimension(k);
  require_hypothesis_modulus(m);
  for (long long s = 0; s <= limit; ++s) {
    bool all = true;
    for (long long i = s; i <= s + k - 2 && all; ++i) all = divides(m, wv.at(i));
    if (all) return s;
  }
  return std::nullopt;
}

std::optional<long long> pair_hypothesis(const WeightVector& wv, std::int64_t m, int k,
                                         long long limit) {
  require_dimension(k);
  require_hypothesis_modulus(m);
  for (long long s = k - 1; s <= limit; ++s) {
    bool all = true;
    for (int j = 0; j < k && all; ++j) {
      for (int jp = j; jp < k && all; ++jp) {
        all = divides(m, wv.at(s - j) * wv.at(s + k - jp));
      }
    }
    if (all) return s;
  }
  return std::nullopt;
}

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::product:
      return "product";
    case Hypothesis::consecutive:
      return "consecutive";
    case Hypothesis::pair:
      return "pair";
  }
  return "unknown";
}

std::optional<PeriodicForm> periodic_form(int k, const WeightVector& wv, std::int64_t m,
                                          long long limit) {
  require_dimension(k);
  if (m < 2) throw std::invalid_argument("periodic_form: modulus must be >= 2");

  auto make = [&](Hypothesis h, long long index, long long zero_at, long long cap) {
    PeriodicForm f;
    f.hypothesis = h;
    f.index = index;
    f.cap = static_cast<int>(cap);
    f.weights = reduce_weights(zero_from(wv, zero_at), m);
    // Weights vanish from zero_at on, so any cap >= zero_at + k - 2 gives the same counts.
    f.system = build_transfer_matrix(k, std::max(f.cap, k - 1), f.weights, m);
    return f;
  };

  // At k = 2 a product witness never comes later than a consecutive one and gives the
  // smallest system.
  if (k == 2) {
    if (auto t = product_hypothesis(wv, m, limit)) return make(Hypothesis::product, *t, *t, *t);
  }
  if (auto s = consecutive_hypothesis(wv, m, k, limit)) {
    return make(Hypothesis::consecutive, *s, *s, *s + k - 2);
  }
  if (auto s = pair_hypothesis(wv, m, k, limit)) {
    return make(Hypothesis::pair, *s, *s + 1, *s + k - 1);
  }
  return std::nullopt;
}

}  // namespace kcatalan
