#pragma once

#include <stdexcept>
#include <string>

#include "ordtop/vec.hpp"

namespace ordtop {

/// Meaning of the strict order "<" used by open intervals.
///  - strict_partial: a < z iff a <= z and a != z.
///  - strict_uniform: a < z iff a_i < z_i in every coordinate, tail included.
enum class IntervalSemantics { strict_partial, strict_uniform };

enum class IntervalKind { open, closed };

std::string to_string(IntervalSemantics s);
IntervalSemantics parse_semantics(const std::string &s);

/// Thrown when an interval would be empty or ill-formed, e.g. open(-e1, e1)
/// in TailSeq under strict_uniform.
class InvalidInterval : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

bool strictly_below(const Vec &a, const Vec &z, IntervalSemantics sem);

class Interval {
public:
  Interval(Vec lo, Vec hi, IntervalKind kind,
           IntervalSemantics sem = IntervalSemantics::strict_partial);

  static Interval closed(Vec lo, Vec hi) {
    return {std::move(lo), std::move(hi), IntervalKind::closed};
  }
  static Interval open(Vec lo, Vec hi,
                       IntervalSemantics sem = IntervalSemantics::strict_partial) {
    return {std::move(lo), std::move(hi), IntervalKind::open, sem};
  }

  const Vec &lo() const { return lo_; }
  const Vec &hi() const { return hi_; }
  IntervalKind kind() const { return kind_; }
  bool is_open() const { return kind_ == IntervalKind::open; }
  IntervalSemantics semantics() const { return sem_; }
  const Carrier &carrier() const { return lo_.carrier(); }

  friend bool operator==(const Interval &, const Interval &) = default;

private:
  Vec lo_;
  Vec hi_;
  IntervalKind kind_;
  IntervalSemantics sem_;
};

bool interval_contains(const Interval &I, const Vec &z);

/// Range of the coordinate at `position` (0-based or kTail) over the points of
/// a nonempty interval, with attainment of each end.
struct CoordinateRange {
  Rational min;
  bool min_attained;
  Rational max;
  bool max_attained;
};

CoordinateRange coordinate_range(const Interval &I, std::size_t position);

std::string to_string(const Interval &I);

} // namespace ordtop
