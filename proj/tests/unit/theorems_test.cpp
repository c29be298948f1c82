#include "doctest.h"

#include <chrono>

#include "ordtop/theorems.hpp"
#include "support.hpp"

using namespace ordtop;
using namespace ordtop::test;

namespace {

const Carrier kQ2 = Carrier::fin_dim(2);

SetExpr positive_quadrant() {
  return sets::intersect({sets::complement(sets::half_space(1, Relation::le, R(0))),
                          sets::complement(sets::half_space(2, Relation::le, R(0)))});
}

void check_replay(const TheoremReport &r) {
  const WitnessCheck w = replay_report(r);
  CHECK_MESSAGE(w.valid, w.reason);
}

NeighborhoodCatalog chain_at(const Vec &x, std::size_t depth) {
  return neighborhood_catalog(x, depth, CatalogMode::chain);
}

} // namespace

TEST_CASE("shifted-ones verifier confirms all four steps") {
  const auto t0 = std::chrono::steady_clock::now();
  const TheoremReport r = verify_example_e1();
  const auto elapsed = std::chrono::steady_clock::now() - t0;
  CHECK(elapsed < std::chrono::seconds(1));

  CHECK(r.conclusion == Conclusion::confirmed);
  CHECK_FALSE(r.contradicts_claim);
  REQUIRE(r.steps.size() == 4);
  CHECK(r.steps[0].operation == "monotonicity");
  CHECK(r.steps[0].status == "decreasing");
  CHECK(r.steps[0].point == Vec::zero(kSeq));
  CHECK(r.steps[1].operation == "eventually_in");
  REQUIRE(r.steps[1].membership.has_value());
  CHECK(r.steps[1].membership->holds);
  CHECK(r.steps[1].membership->from <= 1);
  CHECK(r.steps[1].membership->horizon_checked >= 100);
  CHECK(r.steps[2].operation == "is_order_open");
  CHECK(r.steps[2].status == "refuted");
  CHECK(r.steps[3].operation == "tau_e_convergence_report");
  CHECK(r.steps[3].status == "refuted");
  CHECK(r.steps[3].detail.find(to_string(Interval::open(-e(1), e(1)))) != std::string::npos);
  check_replay(r);
}

TEST_CASE("shifted-ones verifier is stable under grid enlargement and threads") {
  SearchConfig big;
  big.grid_scale = 3;
  big.threads = 4;
  const TheoremReport a = verify_example_e1();
  const TheoremReport b = verify_example_e1(big);
  CHECK(render_text(a) == render_text(b));
}

TEST_CASE("shifted-ones verifier under uniform semantics") {
  SearchConfig cfg;
  cfg.semantics = IntervalSemantics::strict_uniform;
  const TheoremReport r = verify_example_e1(cfg);
  CHECK(r.conclusion == Conclusion::inconclusive);
  CHECK_FALSE(r.contradicts_claim);
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].detail.find("interval empty under this semantics") != std::string::npos);
}

TEST_CASE("interval convergence verifier: decaying coordinates") {
  const Vec zero = Vec::zero(kQ2);
  const Family f = families::coord_decay(zero, fd({R(1), R(1)}), R(0));
  const TheoremReport r = verify_theorem_t1(f, zero, chain_at(zero, 10));
  CHECK(r.conclusion == Conclusion::confirmed);
  CHECK_FALSE(r.contradicts_claim);
  const auto &tau = r.steps.front();
  REQUIRE(tau.tau_e.has_value());
  REQUIRE(tau.tau_e->entries.size() == 10);
  // 1/(k+1) < 1/m needs k >= m, the chain interval being open.
  for (std::size_t m = 1; m <= 10; ++m)
    CHECK(tau.tau_e->entries[m - 1].membership.from == m);
  const auto *cert_step = &r.steps[2];
  REQUIRE(cert_step->operation == "validate_certificate");
  REQUIRE(cert_step->certificate.has_value());
  for (Index m = 1; m <= 10; ++m)
    CHECK(value(cert_step->certificate->dominating, m - 1) ==
          Rational(2, static_cast<long>(m)) * Vec::ones(kQ2));
  check_replay(r);
}

TEST_CASE("interval convergence verifier: non-zero limit and constant family") {
  const Vec x = fd({R(1, 2), R(-3)});
  const Family f = families::coord_decay(x, fd({R(-2), R(5)}), R(3));
  const TheoremReport r = verify_theorem_t1(f, x, chain_at(x, 6));
  CHECK(r.conclusion == Conclusion::confirmed);
  check_replay(r);

  const TheoremReport c = verify_theorem_t1(families::explicit_values({x}), x, chain_at(x, 4));
  CHECK(c.conclusion == Conclusion::confirmed);
  check_replay(c);
}

TEST_CASE("interval convergence verifier: shifted ones misses the hypothesis") {
  const Vec zero = Vec::zero(kSeq);
  const TheoremReport r = verify_theorem_t1(families::shift(), zero, chain_at(zero, 5));
  CHECK(r.conclusion == Conclusion::inconclusive_hypothesis);
  CHECK_FALSE(r.contradicts_claim);
  bool full_note = false;
  for (const auto &n : r.notes)
    full_note |= n.find("full catalog") != std::string::npos &&
                 n.find(to_string(Interval::open(-e(1), e(1)))) != std::string::npos;
  CHECK(full_note);
}

TEST_CASE("interval convergence verifier: limit closer than the chain resolves") {
  // The family tends to x + e/100, which a depth-5 chain cannot separate from x.
  const Vec x = Vec::zero(kQ2);
  const Vec near = Rational(1, 100) * Vec::ones(kQ2);
  const Family f = families::coord_decay(near, fd({R(1), R(1)}), R(0));
  const TheoremReport r = verify_theorem_t1(f, x, chain_at(x, 5));
  CHECK(r.conclusion == Conclusion::inconclusive_hypothesis);
  CHECK_FALSE(r.contradicts_claim);
  CHECK(r.steps.back().operation == "eventually_in");
  CHECK(r.steps.back().status == "fails");
  check_replay(r);
}

TEST_CASE("interval convergence verifier rejects malformed chains") {
  const Vec zero = Vec::zero(kQ2);
  const Family f = families::scale(fd({R(1), R(1)}), R(1, 2));
  NeighborhoodCatalog bad = chain_at(zero, 3);
  bad.intervals[1] = Interval::open(-Vec::ones(kQ2), Vec::ones(kQ2));
  CHECK_THROWS_AS(verify_theorem_t1(f, zero, bad), std::invalid_argument);
  NeighborhoodCatalog none{zero, {}, 0};
  CHECK_THROWS_AS(verify_theorem_t1(f, zero, none), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem_t1(f, fd({R(1), R(0)}), chain_at(zero, 3)),
                  std::invalid_argument);
}

TEST_CASE("band verifier expectation table") {
  const Carrier q3 = Carrier::fin_dim(3);
  struct Row {
    SetExpr s;
    Carrier c;
    Conclusion expected;
  };
  const std::vector<Row> rows{
      {sets::band({e(1)}), kSeq, Conclusion::confirmed},
      {sets::band({e(1), ts({R(0), R(0), R(-2)}, R(0))}), kSeq, Conclusion::confirmed},
      {sets::ideal({Vec::unit(q3, 1)}), q3, Conclusion::confirmed},
      {sets::band({Vec::unit(q3, 1), Vec::unit(q3, 3)}), q3, Conclusion::confirmed},
      {sets::tail_zero(), kSeq, Conclusion::counterexample_found},
  };
  for (const auto &row : rows) {
    CAPTURE(to_string(row.s));
    const TheoremReport r = verify_band_proposition(row.s, row.c);
    CHECK(r.conclusion == row.expected);
    CHECK_FALSE(r.contradicts_claim);
    check_replay(r);
  }
}

TEST_CASE("band verifier: finitely supported sequences give an increasing witness") {
  const TheoremReport r = verify_band_proposition(sets::tail_zero(), kSeq);
  REQUIRE(r.steps.front().verdict.has_value());
  const Verdict &v = *r.steps.front().verdict;
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->direction == Monotonicity::Direction::increasing);
  CHECK(template_name(v.witness->family) == "shift-up");
}

TEST_CASE("band verifier runs running-sup-meet probes") {
  const TheoremReport r = verify_band_proposition(sets::band({e(1), e(2)}), kSeq);
  std::size_t probes = 0;
  for (const auto &st : r.steps)
    if (st.operation == "running_sup_meet") {
      ++probes;
      CHECK(st.status == "pass");
    }
  CHECK(probes > 0);
}

TEST_CASE("band verifier rejects other shapes") {
  CHECK_THROWS_AS(verify_band_proposition(sets::complement(sets::tail_zero()), kSeq),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      verify_band_proposition(sets::interval(Interval::closed(-e(1), e(1))), kSeq),
      std::invalid_argument);
}

TEST_CASE("interval fits inside order-open sets") {
  const std::vector<SetExpr> cat{sets::full(), positive_quadrant(),
                                 sets::translate(positive_quadrant(), fd({R(-1), R(2)}))};
  const TheoremReport r = tau_subset_probe(cat, kQ2, 50);
  CHECK(r.conclusion == Conclusion::confirmed);
  std::size_t fits = 0;
  for (const auto &st : r.steps)
    if (st.operation == "interval_fit") {
      CHECK(st.status == "fitted");
      CHECK(st.fits.size() == 50);
      for (const auto &[z, fit] : st.fits) {
        CHECK(fit.interval.has_value());
        CHECK(fit.containment.exact);
      }
      ++fits;
    }
  CHECK(fits == 3);
  check_replay(r);
}

TEST_CASE("interval fits in sequences and the empty catalog") {
  const TheoremReport r = tau_subset_probe({sets::full()}, kSeq, 20);
  CHECK(r.conclusion == Conclusion::confirmed);
  for (const auto &[z, fit] : r.steps.back().fits)
    CHECK(fit.step == 0);

  const TheoremReport none = tau_subset_probe({}, kQ2, 50);
  CHECK(none.conclusion == Conclusion::confirmed);
  CHECK(none.steps.empty());
}

TEST_CASE("interval fit probe rejects sets that are not order open") {
  CHECK_THROWS_AS(tau_subset_probe({sets::interval(Interval::open(-e(1), e(1)))}, kSeq, 5),
                  std::invalid_argument);
}

TEST_CASE("vector topology verifier") {
  const SetExpr s = positive_quadrant();
  const TheoremReport r =
      verify_vector_topology(s, kQ2, {fd({R(1), R(-1)}), fd({R(1, 3), R(0)})}, {R(2), R(-1, 2)});
  CHECK(r.conclusion == Conclusion::confirmed);
  CHECK(r.steps.size() == 5);
  check_replay(r);
  CHECK_THROWS_AS(verify_vector_topology(s, kQ2, {}, {R(0)}), std::invalid_argument);
}

TEST_CASE("replay catches a tampered step") {
  TheoremReport r = verify_example_e1();
  r.steps[0].status = "increasing";
  CHECK_FALSE(replay_report(r).valid);

  TheoremReport t = verify_theorem_t1(families::scale(fd({R(1), R(2)}), R(1, 3)),
                                      Vec::zero(kQ2), chain_at(Vec::zero(kQ2), 4));
  REQUIRE(t.conclusion == Conclusion::confirmed);
  for (auto &st : t.steps)
    if (st.operation == "validate_certificate")
      st.certificate->thresholds[3] = 0;
  CHECK_FALSE(replay_report(t).valid);
}

TEST_CASE("text rendering lists steps in order") {
  const std::string text = render_text(verify_example_e1());
  const auto a = text.find("1. monotonicity");
  const auto b = text.find("2. eventually_in");
  const auto c = text.find("3. is_order_open");
  const auto d = text.find("4. tau_e_convergence_report");
  REQUIRE(a != std::string::npos);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < d);
  CHECK(text.find("conclusion: confirmed") != std::string::npos);
}
