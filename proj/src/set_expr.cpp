#include "ordtop/set_expr.hpp"

#include <algorithm>

#include "ordtop/structure.hpp"
#include "overloaded.hpp"

namespace ordtop {

using detail::overloaded;

namespace {

template <class T> SetExpr make(T node) {
  return SetExpr(std::make_shared<const SetExpr::Node>(std::move(node)));
}

void require_gens(const std::vector<Vec> &gens, const char *what) {
  if (gens.empty())
    throw std::invalid_argument(std::string(what) + " needs at least one generator");
  for (const auto &g : gens)
    require_same_carrier(gens.front(), g);
}

} // namespace

namespace sets {

SetExpr interval(Interval I) { return make(IntervalSet{std::move(I)}); }

SetExpr ideal(std::vector<Vec> gens) {
  require_gens(gens, "ideal");
  return make(Ideal{std::move(gens)});
}

SetExpr band(std::vector<Vec> gens) {
  require_gens(gens, "band");
  return make(Band{std::move(gens)});
}

SetExpr solid_hull(std::vector<Vec> gens) {
  require_gens(gens, "solid hull");
  return make(SolidHull{std::move(gens)});
}

SetExpr half_space(std::size_t index, Relation rel, Rational bound) {
  if (index == 0)
    throw std::invalid_argument("half-space coordinate index is 1-based");
  return make(HalfSpace{index, rel, std::move(bound)});
}

SetExpr tail_zero() { return make(TailZero{}); }
SetExpr complement(SetExpr s) { return make(Complement{std::move(s)}); }
SetExpr unite(std::vector<SetExpr> parts) { return make(Union{std::move(parts)}); }
SetExpr intersect(std::vector<SetExpr> parts) {
  return make(Intersection{std::move(parts)});
}
SetExpr translate(SetExpr s, Vec by) { return make(Translate{std::move(s), std::move(by)}); }

SetExpr dilate(SetExpr s, Rational factor) {
  if (factor.is_zero())
    throw std::invalid_argument("dilation factor must be nonzero");
  return make(Dilate{std::move(s), std::move(factor)});
}

SetExpr full() { return intersect({}); }
SetExpr empty() { return unite({}); }

} // namespace sets

bool is_full(const SetExpr &s) {
  const auto *i = get_if<sets::Intersection>(s);
  return i && i->parts.empty();
}

bool is_empty_union(const SetExpr &s) {
  const auto *u = get_if<sets::Union>(s);
  return u && u->parts.empty();
}

void validate(const SetExpr &s, const Carrier &c) {
  auto check_vec = [&c](const Vec &v) {
    if (v.carrier() != c)
      throw CarrierMismatch(v.carrier(), c);
  };
  visit(overloaded{
            [&](const sets::IntervalSet &n) {
              check_vec(n.interval.lo());
              check_vec(n.interval.hi());
            },
            [&](const sets::Ideal &n) { std::for_each(n.gens.begin(), n.gens.end(), check_vec); },
            [&](const sets::Band &n) { std::for_each(n.gens.begin(), n.gens.end(), check_vec); },
            [&](const sets::SolidHull &n) {
              std::for_each(n.gens.begin(), n.gens.end(), check_vec);
            },
            [&](const sets::HalfSpace &n) {
              if (c.is_fin_dim() && (n.index == kTail || n.index > c.dim()))
                throw std::invalid_argument("half-space index outside " + c.str());
            },
            [&](const sets::TailZero &) {
              if (!c.is_tail_seq())
                throw std::invalid_argument("tail-zero is only defined on TailSeq");
            },
            [&](const sets::Complement &n) { validate(n.inner, c); },
            [&](const sets::Union &n) {
              for (const auto &p : n.parts)
                validate(p, c);
            },
            [&](const sets::Intersection &n) {
              for (const auto &p : n.parts)
                validate(p, c);
            },
            [&](const sets::Translate &n) {
              check_vec(n.by);
              validate(n.inner, c);
            },
            [&](const sets::Dilate &n) { validate(n.inner, c); },
        },
        s);
}

bool member(const SetExpr &s, const Vec &z) {
  return visit(
      overloaded{
          [&](const sets::IntervalSet &n) { return interval_contains(n.interval, z); },
          [&](const sets::Ideal &n) { return ideal_member(n.gens, z).member; },
          [&](const sets::Band &n) { return band_member(n.gens, z); },
          [&](const sets::SolidHull &n) { return solid_hull_member(n.gens, z); },
          [&](const sets::HalfSpace &n) {
            if (n.index == kTail && !z.carrier().is_tail_seq())
              throw std::invalid_argument("tail half-space on " + z.carrier().str());
            const Rational &v = n.index == kTail ? z.tail() : z[n.index - 1];
            return n.rel == Relation::le ? v <= n.bound : v >= n.bound;
          },
          [&](const sets::TailZero &) {
            if (!z.carrier().is_tail_seq())
              throw std::invalid_argument("tail-zero on " + z.carrier().str());
            return z.tail().is_zero();
          },
          [&](const sets::Complement &n) { return !member(n.inner, z); },
          [&](const sets::Union &n) {
            return std::any_of(n.parts.begin(), n.parts.end(),
                               [&](const SetExpr &p) { return member(p, z); });
          },
          [&](const sets::Intersection &n) {
            return std::all_of(n.parts.begin(), n.parts.end(),
                               [&](const SetExpr &p) { return member(p, z); });
          },
          [&](const sets::Translate &n) { return member(n.inner, sub(z, n.by)); },
          [&](const sets::Dilate &n) {
            return member(n.inner, scale(Rational(1) / n.factor, z));
          },
      },
      s);
}

namespace {

SetExpr push(const SetExpr &s, bool negate) {
  return visit(
      overloaded{
          [&](const sets::Complement &n) { return push(n.inner, !negate); },
          [&](const sets::Union &n) {
            std::vector<SetExpr> parts;
            for (const auto &p : n.parts)
              parts.push_back(push(p, negate));
            return negate ? sets::intersect(std::move(parts)) : sets::unite(std::move(parts));
          },
          [&](const sets::Intersection &n) {
            std::vector<SetExpr> parts;
            for (const auto &p : n.parts)
              parts.push_back(push(p, negate));
            return negate ? sets::unite(std::move(parts)) : sets::intersect(std::move(parts));
          },
          [&](const sets::Translate &n) { return sets::translate(push(n.inner, negate), n.by); },
          [&](const sets::Dilate &n) { return sets::dilate(push(n.inner, negate), n.factor); },
          [&](const auto &) { return negate ? sets::complement(s) : s; },
      },
      s);
}

} // namespace

SetExpr push_complements(const SetExpr &s) { return push(s, false); }

std::size_t relevant_length(const SetExpr &s) {
  auto gens_len = [](const std::vector<Vec> &gens) {
    std::size_t m = 0;
    for (const auto &g : gens)
      m = std::max(m, g.size());
    return m;
  };
  auto parts_len = [](const std::vector<SetExpr> &parts) {
    std::size_t m = 0;
    for (const auto &p : parts)
      m = std::max(m, relevant_length(p));
    return m;
  };
  return visit(overloaded{
                   [&](const sets::IntervalSet &n) {
                     return std::max(n.interval.lo().size(), n.interval.hi().size());
                   },
                   [&](const sets::Ideal &n) { return gens_len(n.gens); },
                   [&](const sets::Band &n) { return gens_len(n.gens); },
                   [&](const sets::SolidHull &n) { return gens_len(n.gens); },
                   [&](const sets::HalfSpace &n) {
                     return n.index == kTail ? std::size_t{0} : n.index;
                   },
                   [&](const sets::TailZero &) { return std::size_t{0}; },
                   [&](const sets::Complement &n) { return relevant_length(n.inner); },
                   [&](const sets::Union &n) { return parts_len(n.parts); },
                   [&](const sets::Intersection &n) { return parts_len(n.parts); },
                   [&](const sets::Translate &n) {
                     return std::max(relevant_length(n.inner), n.by.size());
                   },
                   [&](const sets::Dilate &n) { return relevant_length(n.inner); },
               },
               s);
}

namespace {

void merge_into(SetProfile &into, const SetProfile &from) {
  for (std::size_t j = 0; j < into.head.size(); ++j)
    into.head[j].insert(from.head[j].begin(), from.head[j].end());
  into.rest.insert(from.rest.begin(), from.rest.end());
}

template <class F> SetProfile transformed(const SetProfile &p, F f) {
  SetProfile out;
  out.relevant_length = p.relevant_length;
  out.head.resize(p.head.size());
  for (std::size_t j = 0; j < p.head.size(); ++j)
    for (const auto &r : p.head[j])
      out.head[j].insert(f(r, j));
  for (const auto &r : p.rest)
    out.rest.insert(f(r, kTail));
  return out;
}

SetProfile collect(const SetExpr &s, std::size_t P) {
  SetProfile out;
  out.relevant_length = P;
  out.head.resize(P);
  auto add_everywhere = [&out](const Rational &r) {
    for (auto &h : out.head)
      h.insert(r);
    out.rest.insert(r);
  };
  auto add_vec = [&out](const Vec &v, bool with_negation) {
    for (std::size_t j = 0; j < out.head.size(); ++j) {
      out.head[j].insert(v[j]);
      if (with_negation)
        out.head[j].insert(-v[j]);
    }
    if (v.carrier().is_tail_seq()) {
      out.rest.insert(v.tail());
      if (with_negation)
        out.rest.insert(-v.tail());
    }
  };
  auto add_parts = [&out, P](const std::vector<SetExpr> &parts) {
    for (const auto &p : parts)
      merge_into(out, collect(p, P));
  };
  visit(overloaded{
            [&](const sets::IntervalSet &n) {
              add_vec(n.interval.lo(), false);
              add_vec(n.interval.hi(), false);
            },
            [&](const sets::Ideal &) { add_everywhere(Rational(0)); },
            [&](const sets::Band &) { add_everywhere(Rational(0)); },
            [&](const sets::SolidHull &n) {
              for (const auto &g : n.gens)
                add_vec(abs(g), true);
            },
            [&](const sets::HalfSpace &n) {
              if (n.index == kTail)
                out.rest.insert(n.bound);
              else
                out.head[n.index - 1].insert(n.bound);
            },
            [&](const sets::TailZero &) { out.rest.insert(Rational(0)); },
            [&](const sets::Complement &n) { merge_into(out, collect(n.inner, P)); },
            [&](const sets::Union &n) { add_parts(n.parts); },
            [&](const sets::Intersection &n) { add_parts(n.parts); },
            [&](const sets::Translate &n) {
              const Vec &a = n.by;
              merge_into(out, transformed(collect(n.inner, P),
                                          [&a](const Rational &r, std::size_t j) {
                                            return r + (j == kTail ? a.tail() : a[j]);
                                          }));
            },
            [&](const sets::Dilate &n) {
              const Rational &t = n.factor;
              merge_into(out, transformed(collect(n.inner, P),
                                          [&t](const Rational &r, std::size_t) { return t * r; }));
            },
        },
        s);
  return out;
}

void push_unique(std::vector<Vec> &out, Vec v) {
  if (std::find(out.begin(), out.end(), v) == out.end())
    out.push_back(std::move(v));
}

std::vector<Vec> anchors(const SetExpr &s, const Carrier &c, std::size_t P) {
  std::vector<Vec> out;
  auto add_gens = [&out](const std::vector<Vec> &gens) {
    for (const auto &g : gens) {
      push_unique(out, g);
      push_unique(out, -g);
      push_unique(out, abs(g));
    }
  };
  visit(overloaded{
            [&](const sets::IntervalSet &n) {
              const Vec &lo = n.interval.lo();
              const Vec &hi = n.interval.hi();
              const Vec mid = scale(Rational(1, 2), lo + hi);
              push_unique(out, lo);
              push_unique(out, hi);
              push_unique(out, mid);
              // Face centres: mid with one coordinate pushed to an endpoint.
              const std::size_t n_pos = c.is_fin_dim() ? c.dim() : P + 1;
              for (std::size_t j = 0; j < n_pos; ++j) {
                for (const Vec *end : {&lo, &hi}) {
                  if ((*end)[j] == mid[j])
                    continue;
                  std::vector<Rational> coords(mid.head().begin(), mid.head().end());
                  if (c.is_fin_dim()) {
                    coords[j] = (*end)[j];
                    push_unique(out, Vec::fin_dim(std::move(coords)));
                  } else {
                    coords.resize(std::max(coords.size(), j + 1), mid.tail());
                    coords[j] = (*end)[j];
                    push_unique(out, Vec::tail_seq(std::move(coords), mid.tail()));
                  }
                }
              }
            },
            [&](const sets::Ideal &n) { add_gens(n.gens); },
            [&](const sets::Band &n) { add_gens(n.gens); },
            [&](const sets::SolidHull &n) { add_gens(n.gens); },
            [&](const sets::HalfSpace &n) {
              if (n.index == kTail)
                push_unique(out, Vec::constant(c, n.bound));
              else
                push_unique(out, scale(n.bound, Vec::unit(c, n.index)));
            },
            [&](const sets::TailZero &) { push_unique(out, Vec::ones(c)); },
            [&](const sets::Complement &n) { out = anchors(n.inner, c, P); },
            [&](const sets::Union &n) {
              for (const auto &p : n.parts)
                for (auto &v : anchors(p, c, P))
                  push_unique(out, std::move(v));
            },
            [&](const sets::Intersection &n) {
              for (const auto &p : n.parts)
                for (auto &v : anchors(p, c, P))
                  push_unique(out, std::move(v));
            },
            [&](const sets::Translate &n) {
              for (const auto &v : anchors(n.inner, c, P))
                push_unique(out, v + n.by);
              push_unique(out, n.by);
            },
            [&](const sets::Dilate &n) {
              for (const auto &v : anchors(n.inner, c, P))
                push_unique(out, scale(n.factor, v));
            },
        },
        s);
  return out;
}

} // namespace

SetProfile profile(const SetExpr &s, const Carrier &c) {
  const std::size_t P = c.is_fin_dim() ? c.dim() : relevant_length(s);
  return collect(s, P);
}

std::vector<Vec> anchor_points(const SetExpr &s, const Carrier &c) {
  const std::size_t P = c.is_fin_dim() ? c.dim() : relevant_length(s);
  std::vector<Vec> out{Vec::zero(c)};
  for (auto &v : anchors(s, c, P))
    push_unique(out, std::move(v));
  return out;
}

std::string to_string(const SetExpr &s) {
  auto gens_str = [](const char *name, const std::vector<Vec> &gens) {
    std::string out = std::string(name) + "{";
    for (std::size_t i = 0; i < gens.size(); ++i)
      out += (i ? ", " : "") + to_string(gens[i]);
    return out + "}";
  };
  auto parts_str = [](const char *op, const std::vector<SetExpr> &parts) {
    if (parts.empty())
      return std::string(op[0] == 'U' ? "Empty" : "Full");
    std::string out = std::string(op) + "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
      out += (i ? ", " : "") + to_string(parts[i]);
    return out + ")";
  };
  return visit(
      overloaded{
          [&](const sets::IntervalSet &n) { return to_string(n.interval); },
          [&](const sets::Ideal &n) { return gens_str("Ideal", n.gens); },
          [&](const sets::Band &n) { return gens_str("Band", n.gens); },
          [&](const sets::SolidHull &n) { return gens_str("SolidHull", n.gens); },
          [&](const sets::HalfSpace &n) {
            const std::string coord =
                n.index == kTail ? std::string("z_tail") : "z_" + std::to_string(n.index);
            return "{" + coord + (n.rel == Relation::le ? " <= " : " >= ") + n.bound.str() + "}";
          },
          [&](const sets::TailZero &) { return std::string("TailZero"); },
          [&](const sets::Complement &n) { return "Complement(" + to_string(n.inner) + ")"; },
          [&](const sets::Union &n) { return parts_str("Union", n.parts); },
          [&](const sets::Intersection &n) { return parts_str("Intersection", n.parts); },
          [&](const sets::Translate &n) {
            return "Translate(" + to_string(n.inner) + ", " + to_string(n.by) + ")";
          },
          [&](const sets::Dilate &n) {
            return "Dilate(" + to_string(n.inner) + ", " + n.factor.str() + ")";
          },
      },
      s);
}

} // namespace ordtop
