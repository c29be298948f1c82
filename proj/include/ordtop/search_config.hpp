#pragma once

#include <cstddef>
#include <vector>

#include "ordtop/interval.hpp"
#include "ordtop/rational.hpp"

namespace ordtop {

/// Knobs for witness searches and horizon checks. Every grid is enumerated in
/// a fixed order so results do not depend on `threads`.
struct SearchConfig {
  /// Exact per-index checks run for k <= horizon.
  Index horizon = 100;
  /// Enlarges every candidate grid; 1 is the default grid.
  unsigned grid_scale = 1;
  unsigned threads = 1;
  IntervalSemantics semantics = IntervalSemantics::strict_partial;

  /// Coordinates tried by the solidity witness search.
  std::vector<Rational> solidity_grid{Rational(-2),   Rational(-1), Rational(-1, 2),
                                      Rational(0),    Rational(1, 2), Rational(1),
                                      Rational(2)};
  std::size_t solidity_budget = 200000;
  /// Explicit prefix positions sampled for TailSeq searches beyond the set's
  /// own relevant length.
  std::size_t extra_positions = 1;

  /// interval_fit: dyadic steps t = 0..fit_budget.
  unsigned fit_budget = 16;
  /// Grid samples used when containment cannot be decided exactly.
  std::size_t fit_samples = 1000;

  /// Scale template ratios {1/2, 1/3, ...}.
  std::vector<Rational> lambdas() const;
  /// Multipliers applied to anchor vectors {1/2, 1, 2, ...}.
  std::vector<Rational> vector_scales() const;
  /// CoordDecay offsets q.
  std::vector<Rational> decay_offsets() const;
};

} // namespace ordtop
