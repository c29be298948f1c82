#include "ordtop/family.hpp"

#include <algorithm>
#include <set>

#include "overloaded.hpp"

namespace ordtop {

using detail::overloaded;

namespace {

template <class T> Family make(T node) {
  return Family(std::make_shared<const Family::Node>(std::move(node)));
}

Vec shift_pattern(Index k, const Rational &lead, const Rational &rest) {
  return Vec::tail_seq(std::vector<Rational>(k, lead), rest);
}

Rational power(const Rational &base, Index k) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), k);
  return Rational(mpq_class(num, den));
}

bool is_shift_like(const Family &f);

Rational index_rational(Index k) {
  return Rational(mpq_class(mpz_class(static_cast<unsigned long>(k))));
}

} // namespace

const Carrier &Family::carrier() const {
  return visit(overloaded{
                   [](const families::Explicit &n) -> const Carrier & {
                     return n.values.front().carrier();
                   },
                   [](const families::Shift &n) -> const Carrier & { return n.offset.carrier(); },
                   [](const families::ShiftUp &n) -> const Carrier & {
                     return n.offset.carrier();
                   },
                   [](const families::Scale &n) -> const Carrier & { return n.v.carrier(); },
                   [](const families::CoordDecay &n) -> const Carrier & { return n.c.carrier(); },
                   [](const families::RunningSupMeet &n) -> const Carrier & {
                     return n.cap.carrier();
                   },
                   [](const families::Deviation &n) -> const Carrier & {
                     return n.center.carrier();
                   },
               },
               *this);
}

namespace families {

Family explicit_values(std::vector<Vec> values) {
  if (values.empty())
    throw DomainError("explicit family needs at least one value");
  for (const auto &v : values)
    require_same_carrier(values.front(), v);
  return make(Explicit{std::move(values)});
}

Family shift(Rational scale, std::optional<Vec> offset) {
  Vec off = offset.value_or(Vec::zero(Carrier::tail_seq()));
  if (!off.carrier().is_tail_seq())
    throw DomainError("shift family lives on TailSeq");
  return make(Shift{std::move(scale), std::move(off)});
}

Family shift_up(Rational scale, std::optional<Vec> offset) {
  Vec off = offset.value_or(Vec::zero(Carrier::tail_seq()));
  if (!off.carrier().is_tail_seq())
    throw DomainError("shift-up family lives on TailSeq");
  return make(ShiftUp{std::move(scale), std::move(off)});
}

Family scale(Vec v, Rational lambda) {
  if (!leq(Vec::zero(v.carrier()), v))
    throw DomainError("scale family needs v >= 0");
  if (lambda.sign() <= 0 || lambda >= Rational(1))
    throw DomainError("scale family needs 0 < lambda < 1, got " + lambda.str());
  return make(Scale{std::move(v), std::move(lambda)});
}

Family coord_decay(Vec c, Vec p, Rational q) {
  require_same_carrier(c, p);
  if (q.sign() < 0)
    throw DomainError("coord-decay offset q must be >= 0, got " + q.str());
  return make(CoordDecay{std::move(c), std::move(p), std::move(q)});
}

Family running_sup_meet(Family base, Vec cap) {
  if (base.carrier() != cap.carrier())
    throw CarrierMismatch(base.carrier(), cap.carrier());
  if (is_shift_like(base) &&
      monotonicity(base, 0).direction == Monotonicity::Direction::neither)
    throw DomainError("running-sup-meet over a non-monotone shifting family has no tail rule");
  return make(RunningSupMeet{std::move(base), std::move(cap)});
}

Family deviation(Family base, Vec center) {
  if (base.carrier() != center.carrier())
    throw CarrierMismatch(base.carrier(), center.carrier());
  if (monotonicity(base, 0).direction == Monotonicity::Direction::neither)
    throw DomainError("deviation family needs a monotone base");
  if (order_limit(base) != center)
    throw DomainError("deviation family must be centred at the base's order limit");
  return make(Deviation{std::move(base), std::move(center)});
}

} // namespace families

std::string template_name(const Family &f) {
  return visit(overloaded{
                   [](const families::Explicit &) { return std::string("explicit"); },
                   [](const families::Shift &) { return std::string("shift"); },
                   [](const families::ShiftUp &) { return std::string("shift-up"); },
                   [](const families::Scale &) { return std::string("scale"); },
                   [](const families::CoordDecay &) { return std::string("coord-decay"); },
                   [](const families::RunningSupMeet &) {
                     return std::string("running-sup-meet");
                   },
                   [](const families::Deviation &) { return std::string("deviation"); },
               },
               f);
}

std::string to_string(const Family &f) {
  return visit(
      overloaded{
          [](const families::Explicit &e) {
            std::string out = "explicit(";
            for (std::size_t i = 0; i < e.values.size(); ++i)
              out += (i ? ", " : "") + to_string(e.values[i]);
            return out + ")";
          },
          [](const families::Shift &s) {
            return "shift(scale=" + s.scale.str() + ", offset=" + to_string(s.offset) + ")";
          },
          [](const families::ShiftUp &s) {
            return "shift-up(scale=" + s.scale.str() + ", offset=" + to_string(s.offset) + ")";
          },
          [](const families::Scale &s) {
            return "scale(v=" + to_string(s.v) + ", lambda=" + s.lambda.str() + ")";
          },
          [](const families::CoordDecay &d) {
            return "coord-decay(c=" + to_string(d.c) + ", p=" + to_string(d.p) +
                   ", q=" + d.q.str() + ")";
          },
          [](const families::RunningSupMeet &r) {
            return "running-sup-meet(base=" + to_string(r.base) + ", cap=" + to_string(r.cap) +
                   ")";
          },
          [](const families::Deviation &d) {
            return "deviation(base=" + to_string(d.base) + ", center=" + to_string(d.center) +
                   ")";
          },
      },
      f);
}

namespace {

// sup_{j <= k} base(j). Every template except Explicit is monotone in each
// coordinate, so the running supremum is value(0) v value(k) there.
Vec running_sup(const Family &base, Index k) {
  if (const auto *e = get_if<families::Explicit>(base)) {
    const Index last = std::min<Index>(k, e->values.size() - 1);
    Vec acc = e->values.front();
    for (Index j = 1; j <= last; ++j)
      acc = sup(acc, e->values[j]);
    return acc;
  }
  return sup(value(base, 0), value(base, k));
}

} // namespace

Vec value(const Family &f, Index k) {
  return visit(
      overloaded{
          [k](const families::Explicit &n) {
            return n.values[std::min<Index>(k, n.values.size() - 1)];
          },
          [k](const families::Shift &n) {
            return n.offset + scale(n.scale, shift_pattern(k, Rational(0), Rational(1)));
          },
          [k](const families::ShiftUp &n) {
            return n.offset + scale(n.scale, shift_pattern(k, Rational(1), Rational(0)));
          },
          [k](const families::Scale &n) { return scale(power(n.lambda, k), n.v); },
          [k](const families::CoordDecay &n) {
            const Rational w = Rational(1) / (index_rational(k) + Rational(1) + n.q);
            return n.c + scale(w, n.p);
          },
          [k](const families::RunningSupMeet &n) { return inf(running_sup(n.base, k), n.cap); },
          [k](const families::Deviation &n) { return abs(value(n.base, k) - n.center); },
      },
      f);
}

std::string to_string(Monotonicity::Direction d) {
  switch (d) {
  case Monotonicity::Direction::increasing:
    return "increasing";
  case Monotonicity::Direction::decreasing:
    return "decreasing";
  case Monotonicity::Direction::neither:
    return "neither";
  }
  return "neither";
}

namespace {

using Dir = Monotonicity::Direction;

Monotonicity by_rule(Dir d, std::string rule) {
  Monotonicity m{};
  m.direction = d;
  m.rule = std::move(rule);
  return m;
}

Monotonicity closed_form_direction(const Family &f) {
  return visit(
      overloaded{
          [](const families::Explicit &n) {
            Monotonicity m = by_rule(Dir::neither, "explicit list, constant after the last value");
            for (std::size_t k = 0; k + 1 < n.values.size(); ++k) {
              if (!m.not_decreasing_at && !leq(n.values[k + 1], n.values[k]))
                m.not_decreasing_at = k;
              if (!m.not_increasing_at && !leq(n.values[k], n.values[k + 1]))
                m.not_increasing_at = k;
            }
            if (!m.not_decreasing_at)
              m.direction = Dir::decreasing;
            else if (!m.not_increasing_at)
              m.direction = Dir::increasing;
            if (m.direction != Dir::neither) {
              m.not_decreasing_at.reset();
              m.not_increasing_at.reset();
            }
            return m;
          },
          [](const families::Shift &n) {
            return n.scale.sign() >= 0
                       ? by_rule(Dir::decreasing, "shift with scale >= 0: coordinate k drops at step k")
                       : by_rule(Dir::increasing, "shift with scale < 0: coordinate k rises at step k");
          },
          [](const families::ShiftUp &n) {
            if (n.scale.is_zero())
              return by_rule(Dir::decreasing, "shift-up with scale 0 is constant");
            return n.scale.sign() > 0
                       ? by_rule(Dir::increasing, "shift-up with scale > 0: coordinate k rises at step k")
                       : by_rule(Dir::decreasing, "shift-up with scale < 0: coordinate k drops at step k");
          },
          [](const families::Scale &) {
            return by_rule(Dir::decreasing, "lambda^(k+1) v <= lambda^k v for v >= 0, 0 < lambda < 1");
          },
          [](const families::CoordDecay &n) {
            bool any_pos = false, any_neg = false;
            const std::size_t L = std::max(n.p.size(), n.c.size());
            for (std::size_t j = 0; j < L; ++j) {
              any_pos |= n.p[j].sign() > 0;
              any_neg |= n.p[j].sign() < 0;
            }
            if (n.p.carrier().is_tail_seq()) {
              any_pos |= n.p.tail().sign() > 0;
              any_neg |= n.p.tail().sign() < 0;
            }
            if (!any_neg)
              return by_rule(Dir::decreasing, "coord-decay with p >= 0");
            if (!any_pos)
              return by_rule(Dir::increasing, "coord-decay with p <= 0");
            // A coordinate with p_j > 0 strictly drops at step 0, one with
            // p_j < 0 strictly rises.
            return Monotonicity{Dir::neither, "coord-decay with mixed signs in p", 0, 0, 0};
          },
          [](const families::RunningSupMeet &) {
            return by_rule(Dir::increasing, "running supremum over a growing index set, meet with a fixed cap");
          },
          [](const families::Deviation &) {
            return by_rule(Dir::decreasing, "deviation of a monotone family from its order limit");
          },
      },
      f);
}

} // namespace

Monotonicity monotonicity(const Family &f, Index horizon) {
  Monotonicity m = closed_form_direction(f);
  if (m.direction == Dir::neither) {
    m.horizon_checked = horizon;
    return m;
  }
  Vec prev = value(f, 0);
  for (Index k = 0; k < horizon; ++k) {
    Vec next = value(f, k + 1);
    const bool ok = m.direction == Dir::decreasing ? leq(next, prev) : leq(prev, next);
    if (!ok)
      throw std::logic_error("monotonicity rule \"" + m.rule + "\" violated at k = " +
                             std::to_string(k));
    prev = std::move(next);
  }
  m.horizon_checked = horizon;
  return m;
}

Vec coordinate_limit(const Family &f) {
  return visit(overloaded{
                   [](const families::Explicit &n) { return n.values.back(); },
                   [](const families::Shift &n) { return n.offset; },
                   [](const families::ShiftUp &n) {
                     return n.offset + Vec::constant(n.offset.carrier(), n.scale);
                   },
                   [](const families::Scale &n) { return Vec::zero(n.v.carrier()); },
                   [](const families::CoordDecay &n) { return n.c; },
                   [](const families::RunningSupMeet &n) {
                     return inf(coordinate_sup(n.base), n.cap);
                   },
                   [](const families::Deviation &n) { return Vec::zero(n.center.carrier()); },
               },
               f);
}

Vec order_limit(const Family &f) {
  if (monotonicity(f, 0).direction == Dir::neither)
    throw std::domain_error("order_limit needs a monotone family; " + template_name(f) +
                            " is neither increasing nor decreasing");
  return coordinate_limit(f);
}

Vec coordinate_sup(const Family &f) {
  if (const auto *e = get_if<families::Explicit>(f)) {
    Vec acc = e->values.front();
    for (const auto &v : e->values)
      acc = sup(acc, v);
    return acc;
  }
  return sup(value(f, 0), coordinate_limit(f));
}

// ---------------------------------------------------------------------------
// Tail rules.
//
// A family is either position-fixed (every value has at most fixed_length
// explicit coordinates, the rest equal the tail) or shifting (Shift, ShiftUp
// and wrappers around them). For position-fixed families each coordinate
// trajectory k -> value(k)[j] compared with a constant r changes sign at
// finitely many computable indices. Shifting families only move the boundary
// between two constant regions; once that boundary passes every position a
// set looks at, membership is frozen.
// ---------------------------------------------------------------------------

namespace {

bool is_shift_like(const Family &f) {
  return visit(overloaded{
                   [](const families::Shift &) { return true; },
                   [](const families::ShiftUp &) { return true; },
                   [](const families::RunningSupMeet &n) {
                     return is_shift_like(n.base) &&
                            closed_form_direction(n.base).direction != Dir::decreasing;
                   },
                   [](const families::Deviation &n) { return is_shift_like(n.base); },
                   [](const auto &) { return false; },
               },
               f);
}

// Index from which a shifting family's values look identical to any set whose
// relevant coordinates lie below P.
Index shift_stable_index(const Family &f, std::size_t P) {
  return visit(overloaded{
                   [P](const families::Shift &n) {
                     return static_cast<Index>(std::max(P, n.offset.size())) + 1;
                   },
                   [P](const families::ShiftUp &n) {
                     return static_cast<Index>(std::max(P, n.offset.size())) + 1;
                   },
                   [P](const families::RunningSupMeet &n) {
                     return shift_stable_index(n.base, std::max(P, n.cap.size()));
                   },
                   [P](const families::Deviation &n) {
                     return shift_stable_index(n.base, std::max(P, n.center.size()));
                   },
                   [](const auto &) -> Index {
                     throw std::logic_error("shift_stable_index on a position-fixed family");
                   },
               },
               f);
}

std::size_t fixed_length(const Family &f) {
  return visit(overloaded{
                   [](const families::Explicit &n) {
                     std::size_t m = 0;
                     for (const auto &v : n.values)
                       m = std::max(m, v.size());
                     return m;
                   },
                   [](const families::Scale &n) { return n.v.size(); },
                   [](const families::CoordDecay &n) { return std::max(n.c.size(), n.p.size()); },
                   [](const families::RunningSupMeet &n) {
                     if (closed_form_direction(n.base).direction == Dir::decreasing)
                       return inf(value(n.base, 0), n.cap).size();
                     return std::max(fixed_length(n.base), n.cap.size());
                   },
                   [](const families::Deviation &n) {
                     return std::max(fixed_length(n.base), n.center.size());
                   },
                   [](const auto &) -> std::size_t {
                     throw std::logic_error("fixed_length on a shifting family");
                   },
               },
               f);
}

int sign_of(const Rational &a, const Rational &r) {
  const auto c = a <=> r;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

// First index at which (c - r) + p / (k + 1 + q) stops being positive and
// first index at which it becomes negative, for p > 0 and c - r < 0.
void decay_crossings(const Rational &p, const Rational &gap, const Rational &q,
                     std::vector<Index> &out) {
  const Rational t = p / gap - Rational(1) - q;
  out.push_back(to_index(ceil(t)));
  out.push_back(to_index(floor(t) + 1));
}

// Indices k >= 1 where sign(value(k)[pos] - r) differs from k - 1 (a superset
// is allowed). Only for position-fixed families.
std::vector<Index> sign_change_points(const Family &f, std::size_t pos, const Rational &r) {
  return visit(
      overloaded{
          [&](const families::Explicit &n) {
            std::vector<Index> out;
            for (std::size_t k = 1; k < n.values.size(); ++k)
              if (sign_of(n.values[k][pos], r) != sign_of(n.values[k - 1][pos], r))
                out.push_back(k);
            return out;
          },
          [&](const families::Scale &n) {
            std::vector<Index> out;
            const Rational &v = n.v[pos];
            if (v.is_zero() || r.sign() <= 0)
              return out;
            Index k = 0;
            Rational x = v;
            while (x > r) {
              x *= n.lambda;
              ++k;
            }
            out.push_back(k);
            out.push_back(x == r ? k + 1 : k);
            return out;
          },
          [&](const families::CoordDecay &n) {
            std::vector<Index> out;
            const Rational &p = n.p[pos];
            const Rational gap = n.c[pos] - r;
            if (p.sign() > 0 && gap.sign() < 0)
              decay_crossings(p, -gap, n.q, out);
            else if (p.sign() < 0 && gap.sign() > 0)
              decay_crossings(-p, gap, n.q, out);
            return out;
          },
          [&](const families::RunningSupMeet &n) {
            std::vector<Index> out;
            if (closed_form_direction(n.base).direction == Dir::decreasing)
              return out; // constant: base(0) inf cap
            std::vector<Index> candidates = sign_change_points(n.base, pos, r);
            candidates.push_back(0);
            std::sort(candidates.begin(), candidates.end());
            bool have_ge = false, have_gt = false;
            for (Index k : candidates) {
              const int s = sign_of(value(n.base, k)[pos], r);
              if (s >= 0 && !have_ge) {
                have_ge = true;
                out.push_back(k);
              }
              if (s > 0 && !have_gt) {
                have_gt = true;
                out.push_back(k);
              }
            }
            return out;
          },
          [&](const families::Deviation &n) {
            std::vector<Index> out;
            if (r.sign() < 0)
              return out;
            const Rational &x = n.center[pos];
            out = sign_change_points(n.base, pos, x + r);
            if (r.sign() > 0) {
              auto more = sign_change_points(n.base, pos, x - r);
              out.insert(out.end(), more.begin(), more.end());
            }
            return out;
          },
          [](const auto &) -> std::vector<Index> {
            throw std::logic_error("sign_change_points on a shifting family");
          },
      },
      f);
}

} // namespace

std::vector<Index> membership_change_points(const Family &f, const SetExpr &s) {
  const Carrier &c = f.carrier();
  validate(s, c);
  const SetProfile prof = profile(s, c);
  std::set<Index> points{0};
  if (is_shift_like(f)) {
    const Index n = shift_stable_index(f, prof.relevant_length);
    for (Index k = 1; k <= n; ++k)
      points.insert(k);
    return {points.begin(), points.end()};
  }
  const std::size_t L =
      c.is_fin_dim() ? c.dim() : std::max(prof.relevant_length, fixed_length(f));
  auto add = [&](std::size_t pos, const std::set<Rational> &constants) {
    for (const auto &r : constants)
      for (Index k : sign_change_points(f, pos, r))
        points.insert(k);
  };
  for (std::size_t pos = 0; pos < L; ++pos)
    add(pos, prof.at(pos));
  if (c.is_tail_seq())
    add(kTail, prof.rest);
  return {points.begin(), points.end()};
}

} // namespace ordtop
