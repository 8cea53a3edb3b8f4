#include "kcatalan/oracle.hpp"

#include "kcatalan/counting.hpp"
#include "kcatalan/lattice.hpp"
#include "kcatalan/transfer.hpp"

#include <algorithm>
#include <sstream>

namespace kcatalan::oracle {
namespace {

template <typename Map>
std::string render_counts(const Map& counts) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [key, value] : counts) {
    if (!first) os << ", ";
    first = false;
    os << key << ':' << value;
  }
  os << '}';
  return os.str();
}

Comparison compare(std::string name, const std::string& expected, const std::string& actual) {
  return {std::move(name), expected, actual, expected == actual};
}

// Triangle row as a key -> count map, zero entries dropped, for comparison with the oracle maps.
template <typename Key>
std::map<Key, std::string> row_map(const std::vector<Integer>& row, int origin) {
  std::map<Key, std::string> out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != 0) out.emplace(static_cast<Key>(origin + static_cast<int>(i)), row[i].get_str());
  }
  return out;
}

}  // namespace

CapExceeded::CapExceeded(const Integer& estimate, std::uint64_t cap)
    : std::runtime_error("oracle refused: " + estimate.get_str() + " paths exceeds the cap of " +
                         std::to_string(cap)) {}

BruteCount brute_count(int k, int n, const std::optional<WeightVector>& wv, std::uint64_t cap) {
  const Integer estimate = catalan_exact(k, n);
  if (estimate > Integer(static_cast<unsigned long>(cap))) throw CapExceeded(estimate, cap);

  BruteCount out;
  PathEnumerator it(k, n);
  while (it.next()) {
    const BallotPath path = it.path();
    const PathStats stats = path_stats(path);
    ++out.total;
    ++out.by_max_height[stats.max_height];
    ++out.by_peaks[stats.peak_count];
    out.weighted_total += wv ? path_weight(path, *wv) : Integer(1);
  }
  return out;
}

bool CrossCheckReport::passed() const {
  return std::all_of(comparisons.begin(), comparisons.end(),
                     [](const Comparison& c) { return c.passed; });
}

CrossCheckReport cross_check(int k, int n, const WeightVector& wv, std::uint64_t cap) {
  const BruteCount brute = brute_count(k, n, wv, cap);
  CrossCheckReport report{k, n, {}};
  auto& cmp = report.comparisons;

  cmp.push_back(compare("total vs catalan_exact", std::to_string(brute.total),
                        catalan_exact(k, n).get_str()));
  cmp.push_back(compare("weighted_total vs weighted_catalan", brute.weighted_total.get_str(),
                        weighted_catalan(k, n, wv).get_str()));
  if (n >= 1) {
    // A cap of (k-1)n never binds, so the transfer route must reproduce the unbounded sum.
    const TransferMatrix system = build_transfer_matrix(k, (k - 1) * n, wv);
    cmp.push_back(compare("weighted_total vs transfer sequence", brute.weighted_total.get_str(),
                          sequence_from_matrix(system.entries, n).back().get_str()));

    std::map<int, std::string> heights;
    for (const auto& [h, c] : brute.by_max_height) heights.emplace(h, std::to_string(c));
    const auto height_row = height_triangle(k, n).row(n);
    cmp.push_back(compare("by_max_height vs height triangle", render_counts(heights),
                          render_counts(row_map<int>(height_row, k - 1))));

    std::map<std::size_t, std::string> peaks;
    for (const auto& [p, c] : brute.by_peaks) peaks.emplace(p, std::to_string(c));
    const auto peak_row = narayana_triangle(k, n).row(n);
    cmp.push_back(compare("by_peaks vs narayana triangle", render_counts(peaks),
                          render_counts(row_map<std::size_t>(peak_row, 1))));
  }
  return report;
}

}  // namespace kcatalan::oracle
