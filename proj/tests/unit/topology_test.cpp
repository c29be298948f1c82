#include "doctest.h"

#include "ordtop/structure.hpp"
#include "ordtop/topology.hpp"
#include "support.hpp"

using namespace ordtop;
using namespace ordtop::test;
using Status = Verdict::Status;
using Dir = Monotonicity::Direction;

namespace {

const Carrier kQ2 = Carrier::fin_dim(2);

SetExpr open_e1() { return sets::interval(Interval::open(-e(1), e(1))); }

// {z : z_1 > 0 and z_2 > 0}.
SetExpr positive_quadrant() {
  return sets::intersect({sets::complement(sets::half_space(1, Relation::le, R(0))),
                          sets::complement(sets::half_space(2, Relation::le, R(0)))});
}

void check_replays(const SetExpr &s, const Verdict &v, ClosureKind kind) {
  REQUIRE(v.witness.has_value());
  const WitnessCheck w = replay_witness(s, *v.witness, kind);
  CHECK_MESSAGE(w.valid, w.reason);
}

} // namespace

TEST_CASE("quasi-order closedness of the complement of (-e1, e1)") {
  const SetExpr s = sets::complement(open_e1());
  const Verdict v = check_quasi_order_closed(s, kSeq);
  REQUIRE(v.status == Status::refuted);
  CHECK(v.witness->family == families::shift());
  CHECK(v.witness->direction == Dir::decreasing);
  CHECK(v.witness->limit.is_zero());
  CHECK(v.witness->in_set_from <= 1);
  CHECK(v.witness->limit_outside);
  check_replays(s, v, ClosureKind::quasi_order);
}

TEST_CASE("certified closed sets") {
  const SetExpr box = sets::interval(Interval::closed(fd({0, -1}), fd({2, 1})));
  const Verdict v = check_quasi_order_closed(box, kQ2);
  CHECK(v.status == Status::certified);
  CHECK_FALSE(v.rule_trace.empty());
  CHECK(check_quasi_order_closed(sets::band({e(1)}), kSeq).status == Status::certified);
  CHECK(check_quasi_order_closed(sets::ideal({e(2), e(3)}), kSeq).status == Status::certified);
  CHECK(check_quasi_order_closed(sets::full(), kSeq).status == Status::certified);
  CHECK(check_quasi_order_closed(sets::empty(), kQ2).status == Status::certified);
  const SetExpr nested = sets::translate(
      sets::unite({box, sets::dilate(sets::half_space(1, Relation::ge, R(3)), R(-1))}), fd({1, 1}));
  const Verdict n = check_quasi_order_closed(nested, kQ2);
  CHECK(n.status == Status::certified);
  CHECK(n.rule_trace.size() == 5);
}

TEST_CASE("TailZero is refuted by an increasing shift-up family") {
  const Verdict v = check_quasi_order_closed(sets::tail_zero(), kSeq);
  REQUIRE(v.status == Status::refuted);
  CHECK(template_name(v.witness->family) == "shift-up");
  CHECK(v.witness->direction == Dir::increasing);
  CHECK(v.witness->limit == Vec::ones(kSeq));
  check_replays(sets::tail_zero(), v, ClosureKind::quasi_order);
  const Verdict o = check_order_closed(sets::tail_zero(), kSeq);
  REQUIRE(o.status == Status::refuted);
  CHECK(o.witness->family == v.witness->family);
}

TEST_CASE("non-closed sets in Q^2 are refuted with replayable witnesses") {
  const std::vector<SetExpr> cases{
      sets::interval(Interval::open(fd({0, 0}), fd({1, 1}))),
      positive_quadrant(),
      sets::complement(sets::interval(Interval::closed(fd({-1, -1}), fd({1, 1})))),
      sets::complement(sets::half_space(2, Relation::ge, R(1, 3))),
      sets::translate(sets::complement(sets::band({fd({1, 0})})), fd({1, 1})),
  };
  for (const auto &s : cases) {
    INFO(to_string(s));
    const Verdict q = check_quasi_order_closed(s, kQ2);
    REQUIRE(q.status == Status::refuted);
    check_replays(s, q, ClosureKind::quasi_order);
    const Verdict o = check_order_closed(s, kQ2);
    REQUIRE(o.status == Status::refuted);
    check_replays(s, o, ClosureKind::order);
  }
}

TEST_CASE("tail half-spaces and tail sets in TailSeq") {
  for (const auto &s :
       {sets::half_space(kTail, Relation::ge, R(0)), sets::half_space(kTail, Relation::le, R(1)),
        sets::complement(sets::tail_zero()), open_e1()}) {
    INFO(to_string(s));
    const Verdict v = check_quasi_order_closed(s, kSeq);
    REQUIRE(v.status == Status::refuted);
    check_replays(s, v, ClosureKind::quasi_order);
  }
}

TEST_CASE("replay rejects tampered witnesses") {
  const SetExpr s = sets::complement(open_e1());
  ClosureWitness w = *check_quasi_order_closed(s, kSeq).witness;
  ClosureWitness bad_from = w;
  bad_from.in_set_from += 5;
  CHECK_FALSE(replay_witness(s, bad_from, ClosureKind::quasi_order).valid);
  ClosureWitness bad_limit = w;
  bad_limit.limit = e(1);
  CHECK_FALSE(replay_witness(s, bad_limit, ClosureKind::quasi_order).valid);
  ClosureWitness bad_dir = w;
  bad_dir.direction = Dir::increasing;
  CHECK_FALSE(replay_witness(s, bad_dir, ClosureKind::quasi_order).valid);
  ClosureWitness mixed{families::coord_decay(fd({0, 0}), fd({1, -1})), Dir::neither, fd({0, 0}),
                       0, true};
  CHECK_FALSE(replay_witness(positive_quadrant(), mixed, ClosureKind::quasi_order).valid);
}

TEST_CASE("is_order_open") {
  const Verdict v = is_order_open(open_e1(), kSeq);
  CHECK(v.status == Status::refuted);
  CHECK(is_order_open(positive_quadrant(), kQ2).status == Status::certified);
  CHECK(is_order_open(sets::full(), kSeq).status == Status::certified);
  CHECK(is_order_open(sets::empty(), kSeq).status == Status::certified);
  const auto uniform = sets::interval(
      Interval::open(fd({0, 0}), fd({1, 1}), IntervalSemantics::strict_uniform));
  CHECK(is_order_open(uniform, kQ2).status == Status::certified);
}

TEST_CASE("duality between openness and closedness of the complement") {
  const std::vector<std::pair<SetExpr, Carrier>> cases{
      {positive_quadrant(), kQ2},
      {open_e1(), kSeq},
      {sets::tail_zero(), kSeq},
      {sets::band({e(1)}), kSeq},
      {sets::complement(sets::band({e(1)})), kSeq},
      {sets::half_space(kTail, Relation::ge, R(1)), kSeq}};
  for (const auto &[s, c] : cases)
    CHECK(is_order_open(s, c).status == check_quasi_order_closed(sets::complement(s), c).status);
}

TEST_CASE("openness is stable under unions and intersections") {
  const SetExpr a = positive_quadrant();
  const SetExpr b = sets::complement(sets::interval(Interval::closed(fd({-1, -1}), fd({1, 1}))));
  REQUIRE(is_order_open(a, kQ2).status == Status::certified);
  REQUIRE(is_order_open(b, kQ2).status == Status::certified);
  CHECK(is_order_open(sets::unite({a, b}), kQ2).status == Status::certified);
  CHECK(is_order_open(sets::intersect({a, b}), kQ2).status == Status::certified);
}

TEST_CASE("verdicts do not flip when the grid grows") {
  const std::vector<SetExpr> cases{sets::complement(open_e1()), sets::tail_zero(),
                                   sets::band({e(1)}), open_e1()};
  for (const auto &s : cases) {
    const Verdict a = check_quasi_order_closed(s, kSeq);
    SearchConfig big;
    big.grid_scale = 3;
    const Verdict b = check_quasi_order_closed(s, kSeq, big);
    if (a.status != Status::unknown && b.status != Status::unknown)
      CHECK(a.status == b.status);
    CHECK(b.search.grid_size >= a.search.grid_size);
  }
}

TEST_CASE("parallel search returns the sequential witness") {
  const std::vector<SetExpr> cases{sets::complement(open_e1()), sets::tail_zero(), open_e1(),
                                   sets::half_space(kTail, Relation::le, R(1))};
  for (const auto &s : cases) {
    SearchConfig one, four;
    four.threads = 4;
    const Verdict a = check_order_closed(s, kSeq, one);
    const Verdict b = check_order_closed(s, kSeq, four);
    REQUIRE(a.status == b.status);
    CHECK(a.search.examined == b.search.examined);
    if (a.witness)
      CHECK(a.witness->family == b.witness->family);
  }
}

TEST_CASE("solid quasi-order closed sets are order closed") {
  const std::vector<std::pair<SetExpr, Carrier>> cases{
      {sets::band({e(1)}), kSeq},
      {sets::ideal({fd({1, 0})}), kQ2},
      {sets::solid_hull({fd({1, 2})}), kQ2},
      {sets::interval(Interval::closed(-Vec::ones(kSeq), Vec::ones(kSeq))), kSeq},
  };
  for (const auto &[s, c] : cases) {
    REQUIRE(check_solid(s, c).status == SolidityVerdict::Status::certified);
    REQUIRE(check_quasi_order_closed(s, c).status == Status::certified);
    CHECK(check_order_closed(s, c).status != Status::refuted);
  }
}

TEST_CASE("neighborhood_catalog") {
  const NeighborhoodCatalog cat = neighborhood_catalog(fd({0, 0}), 2);
  CHECK(cat.chain_length == 2);
  const auto has = [&](const Vec &lo, const Vec &hi) {
    return std::find(cat.intervals.begin(), cat.intervals.end(), Interval::open(lo, hi)) !=
           cat.intervals.end();
  };
  CHECK(has(fd({-1, -1}), fd({1, 1})));
  CHECK(has(fd({R(-1, 2), R(-1, 2)}), fd({R(1, 2), R(1, 2)})));
  CHECK(has(fd({-1, 0}), fd({1, 0})));
  CHECK(has(fd({0, -1}), fd({0, 1})));
  for (std::size_t m = 0; m + 1 < cat.chain_length; ++m)
    CHECK(leq(cat.intervals[m + 1].hi() - cat.intervals[m + 1].lo(),
              cat.intervals[m].hi() - cat.intervals[m].lo()));
  for (const auto &I : cat.intervals)
    CHECK(interval_contains(I, cat.center));
  CHECK(neighborhood_catalog(fd({0, 0}), 3, CatalogMode::chain).intervals.size() == 3);
  CHECK(neighborhood_catalog(Vec::zero(kSeq), 2, CatalogMode::full,
                             IntervalSemantics::strict_uniform)
            .intervals.size() == 2);
  CHECK_THROWS(neighborhood_catalog(fd({0, 0}), 0));
}

TEST_CASE("tau_e_convergence_report") {
  const Vec z = Vec::zero(kSeq);
  const TauEReport a = tau_e_convergence_report(families::shift(), z, neighborhood_catalog(z, 1));
  CHECK_FALSE(a.consistent);
  bool by_e1 = false;
  for (auto i : a.refuting)
    by_e1 = by_e1 || a.entries[i].interval == Interval::open(-e(1), e(1));
  CHECK(by_e1);

  const Vec z2 = fd({0, 0});
  const TauEReport b =
      tau_e_convergence_report(families::coord_decay(z2, fd({1, 1})), z2,
                               neighborhood_catalog(z2, 5, CatalogMode::chain));
  CHECK(b.consistent);
  for (std::size_t m = 0; m < 5; ++m)
    CHECK(b.entries[m].membership.from == m + 1);

  const TauEReport c = tau_e_convergence_report(families::explicit_values({fd({1, 2})}),
                                                fd({1, 2}), neighborhood_catalog(fd({1, 2}), 3));
  CHECK(c.consistent);
  for (const auto &en : c.entries)
    CHECK(en.membership.from == 0);
  CHECK_THROWS(tau_e_convergence_report(families::shift(), e(1), neighborhood_catalog(z, 1)));
}

TEST_CASE("interval_fit") {
  const FitResult a = interval_fit(fd({1, 1}), positive_quadrant());
  REQUIRE(a.interval.has_value());
  CHECK(a.step == 1);
  CHECK(*a.interval == Interval::open(fd({R(1, 2), R(1, 2)}), fd({R(3, 2), R(3, 2)})));
  CHECK(a.containment.exact);

  const FitResult b = interval_fit(fd({0, 0}), sets::full());
  REQUIRE(b.interval.has_value());
  CHECK(b.step == 0);
  CHECK(*b.interval == Interval::open(fd({-1, -1}), fd({1, 1})));

  CHECK_THROWS_AS(interval_fit(e(1), sets::complement(open_e1())), std::invalid_argument);
  CHECK_THROWS_AS(interval_fit(fd({-1, 1}), positive_quadrant()), std::invalid_argument);
}

TEST_CASE("exact interval containment agrees with sampling") {
  const Interval I = Interval::open(fd({0, 0}), fd({1, 1}));
  const std::vector<SetExpr> sets_q2{
      positive_quadrant(),
      sets::half_space(1, Relation::ge, R(0)),
      sets::complement(sets::half_space(1, Relation::le, R(0))),
      sets::interval(Interval::closed(fd({0, 0}), fd({1, 1}))),
      sets::interval(Interval::open(fd({-1, 0}), fd({1, 1}))),
      sets::complement(sets::interval(Interval::closed(fd({2, 2}), fd({3, 3})))),
      sets::complement(sets::interval(Interval::closed(fd({1, 1}), fd({3, 3})))),
      sets::band({fd({1, 0})}),
      sets::translate(positive_quadrant(), fd({R(-1, 2), 0})),
      sets::dilate(sets::interval(Interval::closed(fd({0, 0}), fd({1, 1}))), R(-1)),
  };
  SearchConfig cfg;
  for (const auto &s : sets_q2) {
    INFO(to_string(s));
    const auto exact = interval_subset_exact(I, s);
    REQUIRE(exact.has_value());
    // Sampling can only miss counterexamples, never invent them.
    bool all = true;
    for (long i = 0; i <= 8; ++i)
      for (long j = 0; j <= 8; ++j) {
        const Vec z = fd({R(i, 8), R(j, 8)});
        if (interval_contains(I, z))
          all = all && member(s, z);
      }
    if (*exact)
      CHECK(all);
    else
      CHECK_FALSE(all);
  }
}

TEST_CASE("containment in TailSeq") {
  const Interval I = Interval::open(Vec::ones(kSeq) - Vec::ones(kSeq), Vec::ones(kSeq));
  CHECK_FALSE(*interval_subset_exact(I, sets::tail_zero()));
  CHECK(*interval_subset_exact(I, sets::half_space(kTail, Relation::ge, R(0))));
  const Interval J = Interval::open(Rational(-1, 2) * e(1), Rational(1, 2) * e(1));
  CHECK(*interval_subset_exact(J, sets::tail_zero()));
  CHECK(*interval_subset_exact(J, sets::band({e(1)})));
  CHECK_FALSE(*interval_subset_exact(J, sets::band({e(2)})));
  CHECK(*interval_subset_exact(J, open_e1()));
}

TEST_CASE("vector_topology_probe") {
  const auto r = vector_topology_probe(positive_quadrant(), kQ2, {fd({-1, -1}), fd({2, 0})},
                                       {R(2), R(1, 3)});
  CHECK_FALSE(r.any_refuted);
  for (const auto &[a, v] : r.translates)
    CHECK(v.status == Status::certified);
  for (const auto &[t, v] : r.dilates)
    CHECK(v.status == Status::certified);
  const auto f = vector_topology_probe(sets::full(), kSeq, {e(1)}, {R(-1)});
  CHECK_FALSE(f.any_refuted);
  CHECK_THROWS(vector_topology_probe(open_e1(), kSeq, {}, {}));
}
