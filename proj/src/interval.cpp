#include "ordtop/interval.hpp"

namespace ordtop {

std::string to_string(IntervalSemantics s) {
  return s == IntervalSemantics::strict_partial ? "strict-partial" : "strict-uniform";
}

IntervalSemantics parse_semantics(const std::string &s) {
  if (s == "strict-partial")
    return IntervalSemantics::strict_partial;
  if (s == "strict-uniform")
    return IntervalSemantics::strict_uniform;
  throw std::invalid_argument("unknown interval semantics \"" + s + "\"");
}

bool strictly_below(const Vec &a, const Vec &z, IntervalSemantics sem) {
  if (sem == IntervalSemantics::strict_partial)
    return leq(a, z) && a != z;
  require_same_carrier(a, z);
  const std::size_t n = aligned_size(a, z);
  for (std::size_t i = 0; i < n; ++i)
    if (!(a[i] < z[i]))
      return false;
  return a.carrier().is_fin_dim() || a.tail() < z.tail();
}

Interval::Interval(Vec lo, Vec hi, IntervalKind kind, IntervalSemantics sem)
    : lo_(std::move(lo)), hi_(std::move(hi)), kind_(kind), sem_(sem) {
  if (!leq(lo_, hi_))
    throw InvalidInterval("interval endpoints not ordered: " + to_string(lo_) +
                          " vs " + to_string(hi_));
  if (kind_ == IntervalKind::open && !strictly_below(lo_, hi_, sem_))
    throw InvalidInterval("interval empty under this semantics (" +
                          ordtop::to_string(sem_) + "): (" + to_string(lo_) +
                          ", " + to_string(hi_) + ")");
}

bool interval_contains(const Interval &I, const Vec &z) {
  if (I.kind() == IntervalKind::closed)
    return leq(I.lo(), z) && leq(z, I.hi());
  return strictly_below(I.lo(), z, I.semantics()) &&
         strictly_below(z, I.hi(), I.semantics());
}

namespace {

// Whether some coordinate other than `position` separates lo and hi.
bool other_position_open(const Interval &I, std::size_t position) {
  const Vec &a = I.lo();
  const Vec &b = I.hi();
  if (a.carrier().is_tail_seq() && a.tail() < b.tail())
    return true; // infinitely many positions past the prefixes
  const std::size_t n = aligned_size(a, b);
  for (std::size_t i = 0; i < n; ++i)
    if (i != position && a[i] < b[i])
      return true;
  return false;
}

} // namespace

CoordinateRange coordinate_range(const Interval &I, std::size_t position) {
  const Rational &lo = I.lo()[position];
  const Rational &hi = I.hi()[position];
  if (I.kind() == IntervalKind::closed)
    return {lo, true, hi, true};
  if (I.semantics() == IntervalSemantics::strict_uniform)
    return {lo, false, hi, false};
  // strict_partial: [lo, hi] with the two endpoints removed. An end value is
  // reached by a point other than lo/hi iff another coordinate can move.
  const bool other = position == kTail
                         ? I.lo() != I.hi()
                         : other_position_open(I, position);
  const bool attained = other || lo == hi;
  return {lo, attained, hi, attained};
}

std::string to_string(const Interval &I) {
  const bool open = I.is_open();
  return std::string(open ? "(" : "[") + to_string(I.lo()) + ", " +
         to_string(I.hi()) + (open ? ")" : "]");
}

} // namespace ordtop
