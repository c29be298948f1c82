#include "ordtop/structure.hpp"

#include <algorithm>

#include "overloaded.hpp"

namespace ordtop {

using detail::overloaded;

namespace {

void require_generators(const std::vector<Vec> &gens, const Vec &y) {
  if (gens.empty())
    throw std::invalid_argument("generator list is empty");
  for (const auto &g : gens)
    require_same_carrier(g, y);
}

Vec generator_sum(const std::vector<Vec> &gens) {
  Vec g = abs(gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i)
    g = g + abs(gens[i]);
  return g;
}

// Calls f(g_j, y_j) on every explicit position and once on the tails.
template <class F> bool all_positions(const Vec &g, const Vec &y, F f) {
  const std::size_t n = aligned_size(g, y);
  for (std::size_t j = 0; j < n; ++j)
    if (!f(g[j], y[j]))
      return false;
  return g.carrier().is_fin_dim() || f(g.tail(), y.tail());
}

} // namespace

IdealMembership ideal_member(const std::vector<Vec> &gens, const Vec &y) {
  require_generators(gens, y);
  const Vec g = generator_sum(gens);
  Rational lambda(0);
  const bool ok = all_positions(g, y, [&lambda](const Rational &gj, const Rational &yj) {
    if (gj.is_zero())
      return yj.is_zero();
    lambda = max(lambda, abs(yj) / gj);
    return true;
  });
  if (!ok)
    return {false, std::nullopt};
  return {true, lambda};
}

bool band_member(const std::vector<Vec> &gens, const Vec &y) {
  require_generators(gens, y);
  const Vec g = generator_sum(gens);
  return all_positions(g, y, [](const Rational &gj, const Rational &yj) {
    return !gj.is_zero() || yj.is_zero();
  });
}

bool solid_hull_member(const std::vector<Vec> &gens, const Vec &y) {
  require_generators(gens, y);
  const Vec ay = abs(y);
  return std::any_of(gens.begin(), gens.end(),
                     [&ay](const Vec &g) { return leq(ay, abs(g)); });
}

bool disjoint(const Vec &x, const Vec &y) { return inf(abs(x), abs(y)).is_zero(); }

bool is_atom(const Vec &x) {
  if (!leq(Vec::zero(x.carrier()), x))
    throw std::invalid_argument("atom candidate must be positive: " + to_string(x));
  if (x.is_zero())
    throw std::invalid_argument("atom candidate must be nonzero");
  if (x.carrier().is_tail_seq() && !x.tail().is_zero())
    return false;
  return std::count_if(x.head().begin(), x.head().end(),
                       [](const Rational &r) { return !r.is_zero(); }) == 1;
}

AtomDescription carrier_atoms(const Carrier &c, std::size_t sample) {
  AtomDescription out{c, {}, c.is_tail_seq(), true};
  const std::size_t n = c.is_fin_dim() ? c.dim() : sample;
  for (std::size_t j = 1; j <= n; ++j)
    out.unit_atoms.push_back(Vec::unit(c, j));
  return out;
}

namespace {

std::optional<std::string> solid_rule(const SetExpr &s) {
  auto all_solid = [](const std::vector<SetExpr> &parts) {
    return std::all_of(parts.begin(), parts.end(),
                       [](const SetExpr &p) { return solid_rule(p).has_value(); });
  };
  return visit(
      overloaded{
          [](const sets::Ideal &) -> std::optional<std::string> { return "ideal"; },
          [](const sets::Band &) -> std::optional<std::string> { return "band"; },
          [](const sets::SolidHull &) -> std::optional<std::string> { return "solid hull"; },
          [](const sets::TailZero &) -> std::optional<std::string> {
            return "ideal of finitely supported sequences";
          },
          [](const sets::IntervalSet &n) -> std::optional<std::string> {
            const auto &I = n.interval;
            if (I.lo() != -I.hi())
              return std::nullopt;
            if (!I.is_open())
              return "symmetric closed interval [-b, b]";
            if (I.semantics() == IntervalSemantics::strict_uniform)
              return "symmetric uniformly open interval (-b, b)";
            return std::nullopt;
          },
          [&](const sets::Union &n) -> std::optional<std::string> {
            if (all_solid(n.parts))
              return "union of solid sets";
            return std::nullopt;
          },
          [&](const sets::Intersection &n) -> std::optional<std::string> {
            if (all_solid(n.parts))
              return "intersection of solid sets";
            return std::nullopt;
          },
          [](const sets::Dilate &n) -> std::optional<std::string> {
            if (solid_rule(n.inner))
              return "dilation of a solid set";
            return std::nullopt;
          },
          [](const auto &) -> std::optional<std::string> { return std::nullopt; },
      },
      s);
}

// Mixed-radix enumeration over per-position value lists. Stops when f
// returns false.
template <class F>
void for_each_tuple(const std::vector<std::vector<Rational>> &choices, F f) {
  if (std::any_of(choices.begin(), choices.end(),
                  [](const auto &c) { return c.empty(); }))
    return;
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<Rational> cur(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i)
      cur[i] = choices[i][idx[i]];
    if (!f(cur))
      return;
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size())
        break;
      idx[i] = 0;
      if (i == 0)
        return;
    }
    if (choices.empty())
      return;
  }
}

// Positions are the explicit coordinates followed, for TailSeq, by the tail.
Vec from_positions(const Carrier &c, const std::vector<Rational> &v) {
  if (c.is_fin_dim())
    return Vec::fin_dim(v);
  return Vec::tail_seq({v.begin(), v.end() - 1}, v.back());
}

std::vector<Rational> to_positions(const Vec &x, std::size_t count) {
  std::vector<Rational> out;
  const std::size_t explicit_count =
      x.carrier().is_fin_dim() ? count : std::max(count - 1, x.size());
  for (std::size_t j = 0; j < explicit_count; ++j)
    out.push_back(x[j]);
  if (x.carrier().is_tail_seq())
    out.push_back(x.tail());
  return out;
}

} // namespace

SolidityVerdict check_solid(const SetExpr &s, const Carrier &c, const SearchConfig &cfg) {
  validate(s, c);
  if (auto rule = solid_rule(s))
    return {SolidityVerdict::Status::certified, *rule, std::nullopt, std::nullopt, 0};

  const std::size_t positions =
      c.is_fin_dim() ? c.dim() : relevant_length(s) + cfg.extra_positions + 1;
  std::size_t checked = 0;
  std::optional<std::pair<Vec, Vec>> witness;

  // Returns false once a witness is found or the budget is spent.
  auto try_pair = [&](const Vec &x, const Vec &y) {
    if (checked >= cfg.solidity_budget)
      return false;
    ++checked;
    if (!member(s, y)) {
      witness.emplace(x, y);
      return false;
    }
    return true;
  };

  auto probe_x = [&](const Vec &x) {
    if (!member(s, x))
      return true;
    std::vector<Vec> quick{-x, abs(x), -abs(x), pos(x), -neg(x), Vec::zero(c)};
    const auto xp = to_positions(x, positions);
    for (std::size_t j = 0; j < xp.size(); ++j) {
      auto zeroed = xp;
      zeroed[j] = Rational(0);
      quick.push_back(from_positions(c, zeroed));
      auto flipped = xp;
      flipped[j] = -flipped[j];
      quick.push_back(from_positions(c, flipped));
    }
    for (const auto &y : quick)
      if (!try_pair(x, y))
        return false;
    std::vector<std::vector<Rational>> choices(xp.size());
    for (std::size_t j = 0; j < xp.size(); ++j)
      for (const auto &g : cfg.solidity_grid)
        if (abs(g) <= abs(xp[j]))
          choices[j].push_back(g);
    bool go = true;
    for_each_tuple(choices, [&](const std::vector<Rational> &yp) {
      go = try_pair(x, from_positions(c, yp));
      return go;
    });
    return go;
  };

  bool go = true;
  for (const auto &a : anchor_points(s, c)) {
    if (!(go = probe_x(a)))
      break;
  }
  if (go) {
    std::vector<std::vector<Rational>> grid(positions, cfg.solidity_grid);
    for_each_tuple(grid, [&](const std::vector<Rational> &xp) {
      return probe_x(from_positions(c, xp));
    });
  }
  if (witness)
    return {SolidityVerdict::Status::refuted, "", witness->first, witness->second, checked};
  return {SolidityVerdict::Status::unknown, "", std::nullopt, std::nullopt, checked};
}

} // namespace ordtop
