#include "ordtop/topology.hpp"

#include <algorithm>
#include <random>

#include "overloaded.hpp"
#include "parallel.hpp"

namespace ordtop {

using detail::overloaded;
using Dir = Monotonicity::Direction;

std::string to_string(Verdict::Status s) {
  switch (s) {
  case Verdict::Status::certified:
    return "certified";
  case Verdict::Status::refuted:
    return "refuted";
  case Verdict::Status::unknown:
    return "unknown";
  }
  return "unknown";
}

namespace {

// ---------------------------------------------------------------------------
// Structural closedness rules. Each applies to sets in complement-pushed form
// and is valid for both quasi-order and order closedness: every rule rests on
// coordinatewise limits, which both kinds of convergence produce.
// ---------------------------------------------------------------------------

using Trace = std::vector<std::string>;

std::optional<Trace> closed_rules(const SetExpr &s, const Carrier &c, std::size_t depth);

std::optional<Trace> leaf(std::size_t depth, std::string line) {
  return Trace{std::string(2 * depth, ' ') + std::move(line)};
}

std::optional<Trace> combine(const std::vector<SetExpr> &parts, const Carrier &c,
                             std::size_t depth, std::string head) {
  Trace out{std::string(2 * depth, ' ') + std::move(head)};
  for (const auto &p : parts) {
    auto sub = closed_rules(p, c, depth + 1);
    if (!sub)
      return std::nullopt;
    out.insert(out.end(), sub->begin(), sub->end());
  }
  return out;
}

std::optional<Trace> closed_rules(const SetExpr &s, const Carrier &c, std::size_t depth) {
  return visit(
      overloaded{
          [&](const sets::IntervalSet &n) -> std::optional<Trace> {
            if (n.interval.is_open())
              return std::nullopt;
            return leaf(depth, "closed interval " + to_string(n.interval) +
                                   ": limits keep lo <= x <= hi coordinatewise");
          },
          [&](const sets::HalfSpace &n) -> std::optional<Trace> {
            if (n.index == kTail)
              return std::nullopt;
            return leaf(depth, "closed half-space " + to_string(s) +
                                   ": a bound on one coordinate passes to the limit");
          },
          [&](const sets::Band &) -> std::optional<Trace> {
            return leaf(depth, "band " + to_string(s) +
                                   ": limits vanish wherever every generator vanishes");
          },
          [&](const sets::Ideal &) -> std::optional<Trace> {
            return leaf(depth, "ideal " + to_string(s) +
                                   ": a finitely generated ideal equals its band here, since "
                                   "vectors take finitely many values");
          },
          [&](const sets::SolidHull &n) -> std::optional<Trace> {
            return leaf(depth, "solid hull " + to_string(s) + ": union of " +
                                   std::to_string(n.gens.size()) +
                                   " closed intervals [-|g|, |g|]");
          },
          [&](const sets::TailZero &) -> std::optional<Trace> { return std::nullopt; },
          [&](const sets::Complement &n) -> std::optional<Trace> {
            const auto *iv = get_if<sets::IntervalSet>(n.inner);
            if (iv && c.is_fin_dim() && iv->interval.is_open() &&
                iv->interval.semantics() == IntervalSemantics::strict_uniform)
              return leaf(depth, "complement of the uniformly open box " +
                                     to_string(iv->interval) +
                                     ": finite union of closed half-spaces");
            return std::nullopt;
          },
          [&](const sets::Union &n) -> std::optional<Trace> {
            if (n.parts.empty())
              return leaf(depth, "empty set");
            return combine(n.parts, c, depth,
                           "finite union of " + std::to_string(n.parts.size()) + " closed sets");
          },
          [&](const sets::Intersection &n) -> std::optional<Trace> {
            if (n.parts.empty())
              return leaf(depth, "whole space");
            return combine(n.parts, c, depth,
                           "intersection of " + std::to_string(n.parts.size()) + " closed sets");
          },
          [&](const sets::Translate &n) -> std::optional<Trace> {
            return combine({n.inner}, c, depth, "translate by " + to_string(n.by) +
                                                    " of a closed set");
          },
          [&](const sets::Dilate &n) -> std::optional<Trace> {
            return combine({n.inner}, c, depth,
                           "dilation by " + n.factor.str() + " of a closed set");
          },
      },
      s);
}

// ---------------------------------------------------------------------------
// Witness candidates, in canonical order.
// ---------------------------------------------------------------------------

struct Candidates {
  std::vector<Family> families;
  std::vector<std::pair<std::string, std::size_t>> templates;

  void add(Family f) {
    const std::string name = template_name(f);
    auto it = std::find_if(templates.begin(), templates.end(),
                           [&name](const auto &t) { return t.first == name; });
    if (it == templates.end())
      it = templates.emplace(templates.end(), name, 0);
    ++it->second;
    families.push_back(std::move(f));
  }
};

void push_unique(std::vector<Vec> &out, Vec v) {
  if (std::find(out.begin(), out.end(), v) == out.end())
    out.push_back(std::move(v));
}

std::vector<Rational> signed_scales(const SearchConfig &cfg) {
  std::vector<Rational> out{Rational(1), Rational(-1)};
  for (const auto &t : cfg.vector_scales())
    if (t != Rational(1)) {
      out.push_back(t);
      out.push_back(-t);
    }
  return out;
}

Candidates witness_candidates(const SetExpr &s, const Carrier &c, const SearchConfig &cfg,
                              ClosureKind kind) {
  Candidates out;
  const std::vector<Vec> anchors = anchor_points(s, c);
  const std::size_t P =
      c.is_fin_dim() ? c.dim() : relevant_length(s) + cfg.extra_positions;
  const std::vector<Rational> sigma = signed_scales(cfg);

  if (c.is_tail_seq()) {
    std::vector<Vec> offsets = anchors;
    for (const auto &r : profile(s, c).rest)
      push_unique(offsets, Vec::constant(c, r));
    push_unique(offsets, Vec::ones(c));
    push_unique(offsets, -Vec::ones(c));
    for (const auto &a : offsets)
      for (const auto &t : sigma) {
        out.add(families::shift(t, a));
        out.add(families::shift_up(t, a));
      }
  }

  std::vector<Vec> directions{Vec::ones(c)};
  for (std::size_t j = 1; j <= P; ++j)
    push_unique(directions, Vec::unit(c, j));
  for (const auto &a : anchors)
    if (!a.is_zero())
      push_unique(directions, a);
  std::vector<Vec> signed_dirs;
  for (const auto &d : directions) {
    push_unique(signed_dirs, d);
    push_unique(signed_dirs, -d);
  }
  const std::vector<Rational> offsets_q = cfg.decay_offsets();
  for (const auto &center : anchors)
    for (const auto &p : signed_dirs)
      for (const auto &q : offsets_q)
        out.add(families::coord_decay(center, p, q));

  for (const auto &a : anchors) {
    if (a.is_zero())
      continue;
    for (const auto &t : cfg.vector_scales())
      for (const auto &l : cfg.lambdas())
        out.add(families::scale(t * abs(a), l));
  }

  if (kind == ClosureKind::order) {
    std::vector<Vec> mixed;
    const std::size_t m = std::min<std::size_t>(P, 4);
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 1; j <= m + (c.is_tail_seq() ? 1 : 0); ++j)
        if (i != j && (c.is_tail_seq() || j <= c.dim()))
          push_unique(mixed, Vec::unit(c, i) - Vec::unit(c, j));
    for (std::size_t j = 1; j <= m; ++j)
      push_unique(mixed, Vec::ones(c) - Rational(2) * Vec::unit(c, j));
    for (const auto &center : anchors)
      for (const auto &p : mixed)
        for (const auto &q : offsets_q)
          out.add(families::coord_decay(center, p, q));
  }
  return out;
}

bool is_witness(const Family &f, const SetExpr &s, ClosureKind kind) {
  if (kind == ClosureKind::quasi_order && monotonicity(f, 0).direction == Dir::neither)
    return false;
  if (member(s, coordinate_limit(f)))
    return false;
  return eventually_in(f, s, 0).holds;
}

Verdict decide_closed(const SetExpr &raw, const Carrier &c, const SearchConfig &cfg,
                      ClosureKind kind) {
  validate(raw, c);
  const SetExpr s = push_complements(raw);
  Verdict v;
  v.search.grid_scale = cfg.grid_scale;
  if (auto trace = closed_rules(s, c, 0)) {
    v.status = Verdict::Status::certified;
    v.rule_trace = std::move(*trace);
    return v;
  }
  const Candidates cands = witness_candidates(s, c, cfg, kind);
  v.search.grid_size = cands.families.size();
  v.search.templates = cands.templates;
  const auto hit = detail::first_match(cands.families.size(), cfg.threads, [&](std::size_t i) {
    return is_witness(cands.families[i], s, kind);
  });
  if (!hit) {
    v.search.examined = cands.families.size();
    return v;
  }
  v.search.examined = *hit + 1;
  const Family &f = cands.families[*hit];
  const EventualMembership em = eventually_in(f, s, cfg.horizon);
  v.status = Verdict::Status::refuted;
  v.witness = ClosureWitness{f, monotonicity(f, cfg.horizon).direction, coordinate_limit(f),
                             em.from, true};
  return v;
}

} // namespace

Verdict check_quasi_order_closed(const SetExpr &s, const Carrier &c, const SearchConfig &cfg) {
  return decide_closed(s, c, cfg, ClosureKind::quasi_order);
}

Verdict is_order_open(const SetExpr &s, const Carrier &c, const SearchConfig &cfg) {
  return check_quasi_order_closed(sets::complement(s), c, cfg);
}

Verdict check_order_closed(const SetExpr &s, const Carrier &c, const SearchConfig &cfg) {
  return decide_closed(s, c, cfg, ClosureKind::order);
}

WitnessCheck replay_witness(const SetExpr &s, const ClosureWitness &w, ClosureKind kind,
                            Index horizon) {
  auto fail = [](std::string why) { return WitnessCheck{false, std::move(why)}; };
  validate(s, w.family.carrier());
  const Monotonicity m = monotonicity(w.family, horizon);
  if (m.direction != w.direction)
    return fail("stored direction " + to_string(w.direction) + " but the family is " +
                to_string(m.direction));
  if (kind == ClosureKind::quasi_order && m.direction == Dir::neither)
    return fail("quasi-order witness is not monotone");
  if (coordinate_limit(w.family) != w.limit)
    return fail("stored limit differs from the family's limit");
  if (member(s, w.limit) == w.limit_outside)
    return fail("limit membership differs from the stored claim");
  if (!w.limit_outside)
    return fail("witness does not claim the limit lies outside");
  const EventualMembership em = eventually_in(w.family, s, horizon);
  if (!em.holds || em.from != w.in_set_from)
    return fail("family is not in the set from index " + std::to_string(w.in_set_from));
  return {};
}

// ---------------------------------------------------------------------------
// Neighbourhoods.
// ---------------------------------------------------------------------------

NeighborhoodCatalog neighborhood_catalog(const Vec &x, std::size_t depth, CatalogMode mode,
                                         IntervalSemantics sem) {
  if (depth == 0)
    throw std::invalid_argument("neighbourhood catalog depth must be >= 1");
  const Carrier &c = x.carrier();
  NeighborhoodCatalog cat{x, {}, depth};
  const Vec e = Vec::ones(c);
  for (std::size_t m = 1; m <= depth; ++m) {
    const Vec w = Rational(1, static_cast<long>(m)) * e;
    cat.intervals.push_back(Interval::open(x - w, x + w, sem));
  }
  if (mode == CatalogMode::chain || sem == IntervalSemantics::strict_uniform)
    return cat;
  const std::size_t J = c.is_fin_dim() ? std::min(depth, c.dim()) : depth;
  for (std::size_t j = 1; j <= J; ++j)
    for (const Rational &d : {Rational(1), Rational(1, 2)}) {
      Interval I = Interval::open(x - d * Vec::unit(c, j), x + d * Vec::unit(c, j), sem);
      if (std::find(cat.intervals.begin(), cat.intervals.end(), I) == cat.intervals.end())
        cat.intervals.push_back(std::move(I));
    }
  return cat;
}

TauEReport tau_e_convergence_report(const Family &f, const Vec &x, const NeighborhoodCatalog &cat,
                                    Index horizon) {
  if (cat.center != x)
    throw std::invalid_argument("catalog is centred at " + to_string(cat.center) + ", not " +
                                to_string(x));
  if (f.carrier() != x.carrier())
    throw CarrierMismatch(f.carrier(), x.carrier());
  TauEReport out;
  for (const auto &I : cat.intervals) {
    out.entries.push_back({I, eventually_in(f, sets::interval(I), horizon)});
    if (!out.entries.back().membership.holds) {
      out.consistent = false;
      out.refuting.push_back(out.entries.size() - 1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact containment of an interval in a set.
//
// Every leaf of the grammar constrains coordinates one at a time, apart from
// the two removed endpoints of a partially open interval. Coordinates past
// every prefix behave alike, so positions 0..L-1, one representative position
// L and the tail cover all cases.
// ---------------------------------------------------------------------------

namespace {

struct Range {
  std::optional<Rational> lo; // nullopt: unbounded
  bool lo_in = true;
  std::optional<Rational> hi;
  bool hi_in = true;

  static Range exactly(const Rational &v) { return {v, true, v, true}; }
  static Range all() { return {std::nullopt, false, std::nullopt, false}; }
};

Range from_coordinate(const CoordinateRange &r) {
  return {r.min, r.min_attained, r.max, r.max_attained};
}

Range meet(const Range &a, const Range &b) {
  Range out = a;
  if (b.lo && (!out.lo || *b.lo > *out.lo || (*b.lo == *out.lo && !b.lo_in))) {
    const bool tie = out.lo && *b.lo == *out.lo;
    out.lo_in = tie ? (out.lo_in && b.lo_in) : b.lo_in;
    out.lo = b.lo;
  }
  if (b.hi && (!out.hi || *b.hi < *out.hi || (*b.hi == *out.hi && !b.hi_in))) {
    const bool tie = out.hi && *b.hi == *out.hi;
    out.hi_in = tie ? (out.hi_in && b.hi_in) : b.hi_in;
    out.hi = b.hi;
  }
  return out;
}

bool range_empty(const Range &r) {
  if (!r.lo || !r.hi)
    return false;
  return *r.lo > *r.hi || (*r.lo == *r.hi && !(r.lo_in && r.hi_in));
}

bool range_point(const Range &r) { return r.lo && r.hi && *r.lo == *r.hi && r.lo_in && r.hi_in; }

// r subset of [lo, hi] with the given inclusion at each end (nullopt ends
// unbounded).
bool range_within(const Range &r, const Range &bound) {
  if (bound.lo) {
    if (!r.lo || *r.lo < *bound.lo)
      return false;
    if (*r.lo == *bound.lo && r.lo_in && !bound.lo_in)
      return false;
  }
  if (bound.hi) {
    if (!r.hi || *r.hi > *bound.hi)
      return false;
    if (*r.hi == *bound.hi && r.hi_in && !bound.hi_in)
      return false;
  }
  return true;
}

// A product-shaped subset of the carrier with at most a few points removed.
struct Box {
  std::vector<Range> head; // positions 0..L (L is the representative)
  Range tail = Range::all();
  std::vector<Vec> removed;
  std::size_t L = 0;
  bool fin_dim = false;
};

std::size_t span_of(const Interval &I) { return std::max(I.lo().size(), I.hi().size()); }

Box full_box(const Carrier &c, std::size_t L) {
  Box b;
  b.fin_dim = c.is_fin_dim();
  b.L = b.fin_dim ? c.dim() : L;
  b.head.assign(b.fin_dim ? b.L : b.L + 1, Range::all());
  return b;
}

// Outer description of I: coordinate ranges of its points, plus the endpoints
// a partially open interval drops.
Box interval_box(const Interval &I, std::size_t L) {
  Box b = full_box(I.carrier(), L);
  for (std::size_t p = 0; p < b.head.size(); ++p)
    b.head[p] = from_coordinate(coordinate_range(I, p));
  if (!b.fin_dim)
    b.tail = from_coordinate(coordinate_range(I, kTail));
  return b;
}

// Plain product description of an interval set J (endpoint removals listed
// separately).
Box product_box(const Interval &J, std::size_t L) {
  Box b = full_box(J.carrier(), L);
  const bool in = !J.is_open() || J.semantics() == IntervalSemantics::strict_partial;
  for (std::size_t p = 0; p < b.head.size(); ++p)
    b.head[p] = {J.lo()[p], in, J.hi()[p], in};
  if (!b.fin_dim)
    b.tail = {J.lo().tail(), in, J.hi().tail(), in};
  if (J.is_open() && J.semantics() == IntervalSemantics::strict_partial)
    b.removed = {J.lo(), J.hi()};
  return b;
}

// Product box of a band or ideal: zero wherever every generator vanishes.
Box support_box(const std::vector<Vec> &gens, const Carrier &c, std::size_t L) {
  Box b = full_box(c, L);
  Vec g = abs(gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i)
    g = g + abs(gens[i]);
  for (std::size_t p = 0; p < b.head.size(); ++p)
    if (g[p].is_zero())
      b.head[p] = Range::exactly(Rational(0));
  if (!b.fin_dim && g.tail().is_zero())
    b.tail = Range::exactly(Rational(0));
  return b;
}

Box tail_zero_box(const Carrier &c, std::size_t L) {
  Box b = full_box(c, L);
  b.tail = Range::exactly(Rational(0));
  b.head.back() = Range::exactly(Rational(0));
  return b;
}

// Every point of `inner` (an interval box) satisfies every range of `outer`,
// and no point of `outer.removed` is in I.
bool box_within(const Interval &I, const Box &inner, const Box &outer) {
  for (std::size_t p = 0; p < inner.head.size(); ++p)
    if (!range_within(inner.head[p], outer.head[p]))
      return false;
  if (!inner.fin_dim && !range_within(inner.tail, outer.tail))
    return false;
  return std::none_of(outer.removed.begin(), outer.removed.end(),
                      [&I](const Vec &v) { return interval_contains(I, v); });
}

// Whether the interval I and the set described by b share a point. Both boxes are products up to finitely many removed points,
// so the meet is empty, a single point, or infinite.
bool boxes_meet(const Interval &I, const Box &b) {
  Box m = product_box(I, b.L);
  for (std::size_t p = 0; p < m.head.size(); ++p)
    m.head[p] = meet(m.head[p], b.head[p]);
  if (!m.fin_dim)
    m.tail = meet(m.tail, b.tail);
  for (const auto &r : m.head)
    if (range_empty(r))
      return false;
  if (!m.fin_dim && range_empty(m.tail))
    return false;
  const bool single = std::all_of(m.head.begin(), m.head.end(), range_point) &&
                      (m.fin_dim || range_point(m.tail));
  if (!single)
    return true;
  std::vector<Rational> xs;
  for (std::size_t p = 0; p < m.L; ++p)
    xs.push_back(*m.head[p].lo);
  const Vec z = m.fin_dim ? Vec::fin_dim(xs) : Vec::tail_seq(xs, *m.tail.lo);
  if (!m.fin_dim && *m.head[m.L].lo != *m.tail.lo)
    return false;
  auto removed = m.removed;
  removed.insert(removed.end(), b.removed.begin(), b.removed.end());
  return std::find(removed.begin(), removed.end(), z) == removed.end();
}

Interval transform(const Interval &I, const Rational &t, const Vec &shift) {
  Vec a = t * I.lo() + shift;
  Vec b = t * I.hi() + shift;
  if (t.sign() < 0)
    std::swap(a, b);
  return Interval(std::move(a), std::move(b), I.kind(), I.semantics());
}

std::size_t width_for(const Interval &I, const SetExpr &s) {
  return std::max(span_of(I), relevant_length(s)) + 1;
}

std::optional<bool> subset_exact(const Interval &I, const SetExpr &s);

std::optional<bool> disjoint_exact(const Interval &I, const SetExpr &leaf_set) {
  const std::size_t L = width_for(I, leaf_set);
  const Carrier &c = I.carrier();
  return visit(
      overloaded{
          [&](const sets::IntervalSet &n) -> std::optional<bool> {
            return !boxes_meet(I, product_box(n.interval, L));
          },
          [&](const sets::Band &n) -> std::optional<bool> {
            return !boxes_meet(I, support_box(n.gens, c, L));
          },
          [&](const sets::Ideal &n) -> std::optional<bool> {
            return !boxes_meet(I, support_box(n.gens, c, L));
          },
          [&](const sets::TailZero &) -> std::optional<bool> {
            return !boxes_meet(I, tail_zero_box(c, L));
          },
          [&](const sets::SolidHull &n) -> std::optional<bool> {
            for (const auto &g : n.gens)
              if (boxes_meet(I, product_box(Interval::closed(-abs(g), abs(g)), L)))
                return false;
            return true;
          },
          [&](const sets::HalfSpace &n) -> std::optional<bool> {
            Box b = full_box(c, L);
            const Range r = n.rel == Relation::le ? Range{std::nullopt, false, n.bound, true}
                                                  : Range{n.bound, true, std::nullopt, false};
            if (n.index == kTail) {
              b.tail = r;
              b.head.back() = r;
            } else {
              b.head[n.index - 1] = r;
            }
            return !boxes_meet(I, b);
          },
          [&](const auto &) -> std::optional<bool> { return std::nullopt; },
      },
      leaf_set);
}

std::optional<bool> subset_exact(const Interval &I, const SetExpr &s) {
  const Carrier &c = I.carrier();
  auto inside = [&](const Box &outer) { return box_within(I, interval_box(I, outer.L), outer); };
  const std::size_t L = width_for(I, s);
  return visit(
      overloaded{
          [&](const sets::IntervalSet &n) -> std::optional<bool> {
            return inside(product_box(n.interval, L));
          },
          [&](const sets::Band &n) -> std::optional<bool> {
            return inside(support_box(n.gens, c, L));
          },
          [&](const sets::Ideal &n) -> std::optional<bool> {
            return inside(support_box(n.gens, c, L));
          },
          [&](const sets::TailZero &) -> std::optional<bool> {
            return inside(tail_zero_box(c, L));
          },
          [&](const sets::SolidHull &n) -> std::optional<bool> {
            for (const auto &g : n.gens)
              if (inside(product_box(Interval::closed(-abs(g), abs(g)), L)))
                return true;
            if (n.gens.size() == 1)
              return false;
            return std::nullopt;
          },
          [&](const sets::HalfSpace &n) -> std::optional<bool> {
            const auto r = from_coordinate(
                coordinate_range(I, n.index == kTail ? kTail : n.index - 1));
            return n.rel == Relation::le ? range_within(r, {std::nullopt, false, n.bound, true})
                                         : range_within(r, {n.bound, true, std::nullopt, false});
          },
          [&](const sets::Complement &n) -> std::optional<bool> {
            return disjoint_exact(I, n.inner);
          },
          [&](const sets::Union &n) -> std::optional<bool> {
            if (n.parts.empty())
              return false;
            bool all_false = true;
            for (const auto &p : n.parts) {
              const auto r = subset_exact(I, p);
              if (r && *r)
                return true;
              all_false = all_false && r.has_value();
            }
            if (n.parts.size() == 1 && all_false)
              return false;
            return std::nullopt;
          },
          [&](const sets::Intersection &n) -> std::optional<bool> {
            bool unknown = false;
            for (const auto &p : n.parts) {
              const auto r = subset_exact(I, p);
              if (r && !*r)
                return false;
              unknown = unknown || !r;
            }
            if (unknown)
              return std::nullopt;
            return true;
          },
          [&](const sets::Translate &n) -> std::optional<bool> {
            return subset_exact(transform(I, Rational(1), -n.by), n.inner);
          },
          [&](const sets::Dilate &n) -> std::optional<bool> {
            return subset_exact(transform(I, Rational(1) / n.factor, Vec::zero(c)), n.inner);
          },
      },
      s);
}

std::vector<Vec> interval_samples(const Interval &I, const SetExpr &s, const SearchConfig &cfg) {
  const Carrier &c = I.carrier();
  const std::size_t L =
      c.is_fin_dim() ? c.dim() : std::max(span_of(I), relevant_length(s)) + cfg.extra_positions;
  constexpr long kSteps = 64;
  std::mt19937 rng(20240501);
  std::vector<Vec> out;
  const std::size_t attempts = 50 * cfg.fit_samples;
  for (std::size_t a = 0; a < attempts && out.size() < cfg.fit_samples; ++a) {
    auto pick = [&](const Rational &lo, const Rational &hi) {
      return lo + (hi - lo) * Rational(static_cast<long>(rng() % (kSteps + 1)), kSteps);
    };
    std::vector<Rational> xs;
    for (std::size_t p = 0; p < L; ++p)
      xs.push_back(pick(I.lo()[p], I.hi()[p]));
    Vec z = c.is_fin_dim() ? Vec::fin_dim(std::move(xs))
                           : Vec::tail_seq(std::move(xs), pick(I.lo().tail(), I.hi().tail()));
    if (interval_contains(I, z))
      out.push_back(std::move(z));
  }
  return out;
}

} // namespace

std::optional<bool> interval_subset_exact(const Interval &I, const SetExpr &s) {
  validate(s, I.carrier());
  return subset_exact(I, push_complements(s));
}

Containment interval_subset(const Interval &I, const SetExpr &s, const SearchConfig &cfg) {
  if (auto exact = interval_subset_exact(I, s))
    return {*exact, true, 0};
  const auto samples = interval_samples(I, s, cfg);
  const bool ok =
      std::all_of(samples.begin(), samples.end(), [&s](const Vec &z) { return member(s, z); });
  return {ok && samples.size() >= cfg.fit_samples, false, samples.size()};
}

FitResult fit_dyadic(const Vec &c, const SetExpr &s, const SearchConfig &cfg) {
  const Vec e = Vec::ones(c.carrier());
  FitResult out;
  for (unsigned t = 0; t <= cfg.fit_budget; ++t) {
    const Rational w(mpq_class(mpz_class(1), mpz_class(1) << t));
    Interval I = Interval::open(c - w * e, c + w * e, cfg.semantics);
    Containment k = interval_subset(I, s, cfg);
    if (k.contained) {
      out.interval = std::move(I);
      out.step = t;
      out.containment = k;
      return out;
    }
    out.containment = k;
  }
  out.step = cfg.fit_budget;
  return out;
}

FitResult interval_fit(const Vec &c, const SetExpr &s, const SearchConfig &cfg) {
  validate(s, c.carrier());
  if (!member(s, c))
    throw std::invalid_argument("fit centre " + to_string(c) + " is not in " + to_string(s));
  const Verdict open = is_order_open(s, c.carrier(), cfg);
  if (open.status == Verdict::Status::refuted)
    throw std::invalid_argument("set is not order open (its complement is not quasi-order "
                                "closed), so no interval fit is promised");
  return fit_dyadic(c, s, cfg);
}

VectorTopologyReport vector_topology_probe(const SetExpr &s, const Carrier &c,
                                           const std::vector<Vec> &shifts,
                                           const std::vector<Rational> &scalars,
                                           const SearchConfig &cfg) {
  if (is_order_open(s, c, cfg).status != Verdict::Status::certified)
    throw std::invalid_argument("vector topology probe needs a certified order-open set");
  VectorTopologyReport out;
  for (const auto &a : shifts) {
    Verdict v = is_order_open(sets::translate(s, a), c, cfg);
    out.any_refuted = out.any_refuted || v.status == Verdict::Status::refuted;
    out.translates.emplace_back(a, std::move(v));
  }
  for (const auto &t : scalars) {
    Verdict v = is_order_open(sets::dilate(s, t), c, cfg);
    out.any_refuted = out.any_refuted || v.status == Verdict::Status::refuted;
    out.dilates.emplace_back(t, std::move(v));
  }
  return out;
}

} // namespace ordtop
