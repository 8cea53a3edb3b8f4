#include "kcatalan/integer.hpp"

#include <stdexcept>

namespace kcatalan {

void check_modulus(const Modulus& m) {
  if (m && *m < 1) {
    throw std::invalid_argument("modulus must be >= 1, got " + std::to_string(*m));
  }
}

void reduce_in_place(Integer& x, const Modulus& m) {
  if (!m) return;
  const Integer mod(static_cast<long>(*m));
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
}

Integer reduce(const Integer& x, const Modulus& m) {
  Integer r = x;
  reduce_in_place(r, m);
  return r;
}

std::string to_decimal(const Integer& x) { return x.get_str(); }

std::vector<std::string> to_decimal(const std::vector<Integer>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

}  // namespace kcatalan
