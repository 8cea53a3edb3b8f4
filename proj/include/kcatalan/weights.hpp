#pragma once

#include "kcatalan/integer.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kcatalan {

enum class TailKind { zero, constant, odd_squares, geometric };

/// Rule for indices past the explicit prefix. Formulas use the absolute index h,
/// so odd_squares gives (2h+1)^2 and geometric(q) gives q^h wherever the tail starts.
struct Tail {
  TailKind kind = TailKind::zero;
  Integer param = 0;  // c for constant, q for geometric

  friend bool operator==(const Tail& a, const Tail& b) {
    return a.kind == b.kind && a.param == b.param;
  }
};

/// Integer weight b_h for every height h >= 0: explicit prefix followed by a tail rule.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Integer> prefix, Tail tail = {});

  static WeightVector ones();
  static WeightVector odd_squares();
  static WeightVector geometric(Integer q);
  static WeightVector constant(Integer c);

  /// Throws std::invalid_argument for h < 0.
  Integer at(long long h) const;

  /// b_0 .. b_{count-1}.
  std::vector<Integer> values(std::size_t count) const;

  const std::vector<Integer>& prefix() const { return prefix_; }
  const Tail& tail() const { return tail_; }

  /// Canonical representative: trailing prefix entries that coincide with the tail are dropped
  /// and degenerate tails (const 0, geom 1, geom 0 past index 0) are rewritten.
  WeightVector normalized() const;

  /// Equality of the sequences b_0, b_1, ..., not of the representations.
  friend bool operator==(const WeightVector& a, const WeightVector& b);

 private:
  std::vector<Integer> prefix_;
  Tail tail_;
};

inline Integer weight_at(const WeightVector& wv, long long h) { return wv.at(h); }

/// Agrees with wv below t and is zero from t on.
WeightVector zero_from(const WeightVector& wv, long long t);

/// Prefix entries reduced into [0, m); the tail must be zero.
WeightVector reduce_weights(const WeightVector& wv, const Modulus& m);

class WeightSpecError : public std::invalid_argument {
 public:
  WeightSpecError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   ones | odd-squares | geom:<int>
//   | list:<int>(,<int>)*[;tail:(zero|const=<int>|odd-squares|geom=<int>)]
// An omitted tail is zero.
WeightVector parse_weight_spec(std::string_view text);
std::string render_weight_spec(const WeightVector& wv);

}  // namespace kcatalan
