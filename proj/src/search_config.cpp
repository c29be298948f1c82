#include "ordtop/search_config.hpp"

namespace ordtop {

std::vector<Rational> SearchConfig::lambdas() const {
  std::vector<Rational> out;
  for (long j = 2; j <= static_cast<long>(grid_scale) + 2; ++j)
    out.emplace_back(1, j);
  return out;
}

std::vector<Rational> SearchConfig::vector_scales() const {
  std::vector<Rational> out;
  for (long i = static_cast<long>(grid_scale); i >= 1; --i)
    out.emplace_back(1, 1L << i);
  out.emplace_back(1);
  for (long i = 1; i <= static_cast<long>(grid_scale); ++i)
    out.emplace_back(1L << i);
  return out;
}

std::vector<Rational> SearchConfig::decay_offsets() const {
  std::vector<Rational> out;
  for (long q = 0; q <= static_cast<long>(grid_scale); ++q)
    out.emplace_back(q);
  return out;
}

} // namespace ordtop
