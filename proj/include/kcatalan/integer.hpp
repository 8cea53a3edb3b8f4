#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kcatalan {

/// Exact, unbounded integer used for every count and weight.
using Integer = mpz_class;

/// Optional modulus applied at every accumulation step. A present value must be >= 1;
/// m == 1 collapses everything to 0.
using Modulus = std::optional<std::int64_t>;

/// Throws std::invalid_argument when a present modulus is < 1.
void check_modulus(const Modulus& m);

/// Least nonnegative residue of x when m is present, x otherwise.
Integer reduce(const Integer& x, const Modulus& m);
void reduce_in_place(Integer& x, const Modulus& m);

std::string to_decimal(const Integer& x);
std::vector<std::string> to_decimal(const std::vector<Integer>& xs);

}  // namespace kcatalan
