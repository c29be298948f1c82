#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "ordtop/vec.hpp"

namespace ordtop::test {

inline Rational R(long n, long d = 1) { return Rational(n, d); }

inline Vec fd(std::initializer_list<Rational> xs) { return Vec::fin_dim(xs); }

inline Vec ts(std::initializer_list<Rational> prefix, Rational tail) {
  return Vec::tail_seq(prefix, std::move(tail));
}

inline const Carrier kSeq = Carrier::tail_seq();

inline Vec e(std::size_t j) { return Vec::unit(kSeq, j); }

/// Random rational with |numerator| <= 2 * den_max and denominator <= den_max.
inline Rational random_rational(std::mt19937_64 &rng, long den_max) {
  std::uniform_int_distribution<long> den(1, den_max);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(-2 * den_max, 2 * den_max);
  return Rational(num(rng), d);
}

inline Vec random_vec(std::mt19937_64 &rng, const Carrier &c, long den_max,
                      std::size_t max_prefix = 8) {
  std::vector<Rational> xs;
  const std::size_t n =
      c.is_fin_dim() ? c.dim() : std::uniform_int_distribution<std::size_t>(0, max_prefix)(rng);
  for (std::size_t i = 0; i < n; ++i)
    xs.push_back(random_rational(rng, den_max));
  if (c.is_fin_dim())
    return Vec::fin_dim(std::move(xs));
  return Vec::tail_seq(std::move(xs), random_rational(rng, den_max));
}

} // namespace ordtop::test
