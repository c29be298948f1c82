// Acceptance run: one PASS/FAIL line per primary criterion. Exit status is
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ordtop/cli.hpp"
#include "ordtop/structure.hpp"
#include "ordtop/theorems.hpp"
#include "support.hpp"

using namespace ordtop;
using namespace ordtop::test;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

Result fail(std::string why) { return {false, std::move(why)}; }

// -- shifted ones -------------------------------------------------------------

Result shifted_ones() {
  const auto t0 = std::chrono::steady_clock::now();
  const TheoremReport r = verify_example_e1();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.conclusion != Conclusion::confirmed || r.steps.size() != 4)
    return fail("conclusion " + to_string(r.conclusion));
  const Vec zero = Vec::zero(kSeq);
  const Interval I = Interval::open(-e(1), e(1));
  const auto &mono = r.steps[0];
  if (mono.status != "decreasing" || mono.point != zero)
    return fail("step (i): " + mono.status);
  const auto &mem = r.steps[1];
  if (!mem.membership || !mem.membership->holds || mem.membership->from > 1 ||
      mem.membership->horizon_checked < 100)
    return fail("step (ii): membership in the complement");
  for (Index k = 1; k <= 100; ++k)
    if (interval_contains(I, value(families::shift(), k)))
      return fail("step (ii): value(" + std::to_string(k) + ") inside the interval");
  if (r.steps[2].status != "refuted")
    return fail("step (iii): " + r.steps[2].status);
  const auto &tau = r.steps[3];
  bool by_interval = false;
  if (tau.tau_e)
    for (std::size_t i : tau.tau_e->refuting)
      by_interval |= tau.tau_e->entries[i].interval == I;
  if (!by_interval)
    return fail("step (iv): (-e1, e1) does not refute");
  const WitnessCheck replay = replay_report(r);
  if (!replay.valid)
    return fail("replay: " + replay.reason);
  if (secs >= 1.0)
    return fail("took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << "4/4 steps confirmed and replayed, threshold " << mem.membership->from << ", "
     << static_cast<int>(secs * 1000) << " ms";
  return {true, os.str()};
}

// -- lattice laws ---------------------------------------------------------------

std::string lattice_violation(const Vec &x, const Vec &y, const Vec &z, const Rational &t) {
  const Vec zero = Vec::zero(x.carrier());
  const Rational at = abs(t);
  if (sup(x, y) != sup(y, x) || inf(x, y) != inf(y, x) || x + y != y + x)
    return "commutativity";
  if (sup(sup(x, y), z) != sup(x, sup(y, z)) || inf(inf(x, y), z) != inf(x, inf(y, z)))
    return "associativity";
  if (sup(x, inf(x, y)) != x || inf(x, sup(x, y)) != x)
    return "absorption";
  if (inf(x, sup(y, z)) != sup(inf(x, y), inf(x, z)) ||
      sup(x, inf(y, z)) != inf(sup(x, y), sup(x, z)))
    return "distributivity";
  if (x != pos(x) - neg(x))
    return "x = x+ - x-";
  if (abs(x) != pos(x) + neg(x))
    return "|x| = x+ + x-";
  if (inf(pos(x), neg(x)) != zero)
    return "x+ inf x- = 0";
  if (leq(x, y) != (sup(x, y) == y))
    return "order from the lattice";
  // Compatibility, with a pair that is ordered by construction so the
  // implication is never vacuous.
  const Vec hi = x + abs(y);
  if (!leq(x, hi) || !leq(x + z, hi + z) || !leq(at * x, at * hi))
    return "compatibility";
  if (leq(x, y) && (!leq(x + z, y + z) || !leq(at * x, at * y)))
    return "compatibility";
  return {};
}

Result lattice_laws() {
  constexpr int kTriples = 10000;
  std::mt19937_64 rng(20240501);
  std::vector<Carrier> carriers;
  for (std::size_t n = 1; n <= 6; ++n)
    carriers.push_back(Carrier::fin_dim(n));
  carriers.push_back(kSeq);
  std::size_t checked = 0;
  for (const Carrier &c : carriers) {
    for (int i = 0; i < kTriples; ++i) {
      const Vec x = random_vec(rng, c, 64, 8);
      const Vec y = random_vec(rng, c, 64, 8);
      const Vec z = random_vec(rng, c, 64, 8);
      const Rational t = random_rational(rng, 64);
      const std::string bad = lattice_violation(x, y, z, t);
      if (!bad.empty())
        return fail(bad + " fails in " + c.str() + " at x = " + to_string(x) +
                    ", y = " + to_string(y));
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " triples over FinDim(1..6) and TailSeq, " +
                    std::to_string(kTriples) + " per carrier"};
}

// -- interval convergence implies order convergence -----------------------------

Result t1_desk() {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> dim(1, 4), coin(0, 1), small(0, 6);
  std::size_t confirmed = 0, consistent = 0, decay = 0, scaled = 0;
  for (int i = 0; i < 100; ++i) {
    const Carrier c = i % 5 == 4 ? kSeq : Carrier::fin_dim(static_cast<std::size_t>(dim(rng)));
    std::optional<Family> f;
    Vec x = Vec::zero(c);
    if (i % 2 == 0) {
      x = random_vec(rng, c, 8, 4);
      f = families::coord_decay(x, random_vec(rng, c, 8, 4), Rational(small(rng), 2));
      ++decay;
    } else {
      const long den = 2 + small(rng);
      const long num = 1 + static_cast<long>(rng() % static_cast<unsigned long>(den - 1));
      f = families::scale(abs(random_vec(rng, c, 8, 4)), Rational(num, den));
      ++scaled;
    }
    const NeighborhoodCatalog chain = neighborhood_catalog(x, 10, CatalogMode::chain);
    const TheoremReport r = verify_theorem_t1(*f, x, chain);
    if (r.steps.empty() || !r.steps.front().tau_e)
      return fail("no chain report for " + to_string(*f));
    if (!r.steps.front().tau_e->consistent)
      continue;
    ++consistent;
    if (r.conclusion != Conclusion::confirmed)
      return fail(to_string(*f) + " -> " + to_string(r.conclusion));
    bool construction = false, independent = false;
    for (const auto &st : r.steps) {
      if (st.operation == "validate_certificate" && st.status == "valid" && st.certificate)
        construction = st.certificate->dominating ==
                       families::coord_decay(Vec::zero(c), Rational(2) * Vec::ones(c), Rational(0));
      if (st.operation == "order_converges" && st.certificate)
        independent = st.certificate->limit == x &&
                      validate_certificate(*f, *st.certificate).valid;
    }
    if (!construction || !independent)
      return fail(to_string(*f) + ": construction or independent certificate missing");
    const WitnessCheck replay = replay_report(r);
    if (!replay.valid)
      return fail(to_string(*f) + ": " + replay.reason);
    ++confirmed;
  }
  if (consistent == 0)
    return fail("no consistent chain reports");
  return {true, std::to_string(confirmed) + "/" + std::to_string(consistent) +
                    " consistent reports agree (" + std::to_string(decay) + " coord-decay, " +
                    std::to_string(scaled) + " scale, depth 10)"};
}

// -- bands ------------------------------------------------------------------------

Result band_table() {
  const Carrier q3 = Carrier::fin_dim(3);
  const Carrier q4 = Carrier::fin_dim(4);
  struct Row {
    SetExpr s;
    Carrier c;
  };
  const std::vector<Row> bands{
      {sets::band({Vec::unit(q3, 1)}), q3},
      {sets::band({Vec::unit(q3, 1), Vec::unit(q3, 3)}), q3},
      {sets::band({fd({R(1), R(-2), R(0)})}), q3},
      {sets::ideal({Vec::unit(q3, 2)}), q3},
      {sets::band({fd({R(1), R(1), R(0), R(0)}), Vec::unit(q4, 4)}), q4},
      {sets::band({e(1)}), kSeq},
      {sets::band({e(1), e(3)}), kSeq},
      {sets::band({ts({R(1), R(-1)}, R(0))}), kSeq},
      {sets::band({ts({R(0), R(0), R(2)}, R(0)), e(5)}), kSeq},
      {sets::ideal({e(2), ts({R(3)}, R(0))}), kSeq},
  };
  std::size_t ok = 0;
  for (const auto &row : bands) {
    const TheoremReport r = verify_band_proposition(row.s, row.c);
    const std::string name = to_string(row.s) + " in " + row.c.str();
    if (r.conclusion != Conclusion::confirmed || r.contradicts_claim)
      return fail(name + " -> " + to_string(r.conclusion));
    if (r.steps.size() < 2 || r.steps[0].status != "certified" || r.steps[1].status == "refuted")
      return fail(name + ": closure verdicts " + r.steps[0].status + "/" + r.steps[1].status);
    std::size_t probes = 0;
    for (const auto &st : r.steps)
      if (st.operation == "running_sup_meet") {
        ++probes;
        if (st.status != "pass")
          return fail(name + ": probe " + st.detail);
      }
    if (probes == 0)
      return fail(name + ": no order-closed probes ran");
    if (const WitnessCheck w = replay_report(r); !w.valid)
      return fail(name + ": " + w.reason);
    ++ok;
  }
  const TheoremReport tz = verify_band_proposition(sets::tail_zero(), kSeq);
  if (tz.conclusion != Conclusion::counterexample_found || tz.contradicts_claim)
    return fail("TailZero -> " + to_string(tz.conclusion));
  const auto &v = tz.steps.front().verdict;
  if (!v || v->status != Verdict::Status::refuted || !v->witness ||
      v->witness->direction != Monotonicity::Direction::increasing)
    return fail("TailZero: no increasing witness");
  if (const WitnessCheck w = replay_witness(sets::tail_zero(), *v->witness, ClosureKind::quasi_order);
      !w.valid)
    return fail("TailZero witness does not replay: " + w.reason);
  return {true, std::to_string(ok) + " band/ideal rows confirmed with probes, TailZero refuted by " +
                    to_string(v->witness->family)};
}

// -- order-open sets contain interval neighbourhoods ------------------------------

SetExpr quadrant() {
  return sets::intersect({sets::complement(sets::half_space(1, Relation::le, R(0))),
                          sets::complement(sets::half_space(2, Relation::le, R(0)))});
}

Result tau_subset() {
  const Carrier q2 = Carrier::fin_dim(2);
  const auto uniform_box = [&](Vec lo, Vec hi) {
    return sets::interval(Interval::open(std::move(lo), std::move(hi), IntervalSemantics::strict_uniform));
  };
  const std::vector<SetExpr> plane{
      sets::full(),
      quadrant(),
      sets::translate(quadrant(), fd({R(-1), R(2)})),
      sets::complement(sets::interval(Interval::closed(fd({R(-1), R(-1)}), fd({R(1), R(1)})))),
      sets::unite({uniform_box(fd({R(-2), R(-2)}), fd({R(1), R(1)})),
                   uniform_box(fd({R(0), R(0)}), fd({R(3), R(3)}))}),
  };
  const std::vector<SetExpr> seqs{
      sets::full(),
      sets::complement(sets::band({e(1)})),
      sets::complement(sets::half_space(1, Relation::le, R(0))),
  };
  SearchConfig cfg;
  cfg.fit_budget = 16;
  std::size_t sets_done = 0, fits = 0, exact = 0, sampled = 0;
  unsigned worst = 0;
  for (const auto &[cat, c] : {std::pair{plane, q2}, std::pair{seqs, kSeq}}) {
    const TheoremReport r = tau_subset_probe(cat, c, 50, cfg);
    if (r.conclusion != Conclusion::confirmed)
      return fail(c.str() + " catalog -> " + to_string(r.conclusion));
    for (const auto &st : r.steps) {
      if (st.operation != "interval_fit")
        continue;
      ++sets_done;
      if (st.fits.size() != 50)
        return fail(to_string(*st.set) + ": only " + std::to_string(st.fits.size()) + " samples");
      for (const auto &[z, fit] : st.fits) {
        if (!fit.interval || fit.step > 16)
          return fail("no fit around " + to_string(z) + " in " + to_string(*st.set));
        if (fit.containment.exact)
          ++exact;
        else if (fit.containment.samples >= 1000 && fit.containment.contained)
          ++sampled;
        else
          return fail("containment around " + to_string(z) + " rests on " +
                      std::to_string(fit.containment.samples) + " samples");
        worst = std::max(worst, fit.step);
        ++fits;
      }
    }
    if (const WitnessCheck w = replay_report(r); !w.valid)
      return fail(w.reason);
  }
  return {true, std::to_string(sets_done) + " order-open sets, " + std::to_string(fits) +
                    " fits (" + std::to_string(exact) + " exact, " + std::to_string(sampled) +
                    " by >= 1000 samples), largest dyadic step " + std::to_string(worst)};
}

// -- oracles ----------------------------------------------------------------------

Result oracles() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> pick(-2, 2);
  auto sparse = [&] {
    std::vector<Rational> xs;
    for (int j = 0; j < 4; ++j)
      xs.emplace_back(pick(rng) * pick(rng) * pick(rng), 2);
    return Vec::fin_dim(xs);
  };
  std::size_t bands = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<Vec> g{sparse()};
    if (i % 2)
      g.push_back(sparse());
    const Vec y = sparse();
    if (band_member(g, y) != oracle::band_member_dd(g, y))
      return fail("band_member disagrees for y = " + to_string(y));
    ++bands;
  }

  std::size_t atoms = 0;
  const std::vector<Rational> vals{R(0), R(1, 4), R(1, 2), R(1), R(2)};
  for (const Vec &x : oracle::grid(3, vals)) {
    if (x.is_zero())
      continue;
    if (is_atom(x) != oracle::is_atom_uv(x, 4))
      return fail("is_atom disagrees at " + to_string(x));
    ++atoms;
  }

  std::size_t lambdas = 0;
  std::uniform_int_distribution<int> gpick(0, 3), ypick(-6, 6);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Rational> g1, g2, y;
    for (int j = 0; j < 3; ++j) {
      g1.emplace_back(gpick(rng));
      g2.emplace_back(i % 3 == 0 ? 0 : gpick(rng));
      y.emplace_back(g1.back().is_zero() && g2.back().is_zero() ? 0 : ypick(rng));
    }
    const std::vector<Vec> gens{Vec::fin_dim(g1), Vec::fin_dim(g2)};
    const auto m = ideal_member(gens, Vec::fin_dim(y));
    const auto o = oracle::ideal_lambda_bisect(gens, Vec::fin_dim(y), 6, 6);
    if (!m.member || !o || !m.lambda || *m.lambda != *o)
      return fail("minimal lambda disagrees for y = " + to_string(Vec::fin_dim(y)));
    ++lambdas;
  }
  return {true, std::to_string(bands) + " band instances in FinDim(4), " + std::to_string(atoms) +
                    " atom candidates in FinDim(3), " + std::to_string(lambdas) +
                    " minimal lambdas, all exact"};
}

// -- determinism ------------------------------------------------------------------

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Result determinism(const std::filesystem::path &examples) {
  std::vector<std::filesystem::path> docs;
  for (const auto &entry : std::filesystem::directory_iterator(examples))
    if (entry.path().extension() == ".json")
      docs.push_back(entry.path());
  std::sort(docs.begin(), docs.end());
  if (docs.empty())
    return fail("no documents in " + examples.string());
  const auto tmp = std::filesystem::temp_directory_path();
  std::size_t runs = 0;
  for (const auto &doc : docs) {
    const io::Json j = io::Json::parse(std::ifstream(doc));
    const std::string kind = j["task"]["kind"].get<std::string>();
    const std::string command = kind == "theorem" ? "theorems" : kind;
    std::vector<std::string> texts, reports;
    std::vector<int> codes;
    for (const char *jobs : {"1", "1", "4", "4"}) {
      const auto out_path = tmp / ("ordtop_acceptance_" + std::to_string(runs) + ".json");
      std::filesystem::remove(out_path);
      const std::string d = doc.string(), o = out_path.string();
      const char *argv[] = {"ordtop", command.c_str(), d.c_str(), "--output", o.c_str(),
                            "--jobs", jobs};
      std::ostringstream out, err;
      codes.push_back(cli::run(7, argv, out, err));
      texts.push_back(out.str() + err.str());
      reports.push_back(std::filesystem::exists(out_path) ? slurp(out_path) : "");
      std::filesystem::remove(out_path);
      ++runs;
    }
    for (std::size_t k = 1; k < texts.size(); ++k)
      if (texts[k] != texts[0] || reports[k] != reports[0] || codes[k] != codes[0])
        return fail(doc.filename().string() + " differs between runs");
  }
  return {true, std::to_string(docs.size()) + " documents, " + std::to_string(runs) +
                    " runs (twice each at --jobs 1 and 4), byte-identical"};
}

} // namespace

int main(int argc, char **argv) {
  const std::filesystem::path examples =
      argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::path(ORDTOP_EXAMPLES_DIR);
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"shifted-ones counterexample end to end", shifted_ones},
      {"lattice laws on random triples", lattice_laws},
      {"interval convergence forces order convergence", t1_desk},
      {"band probes", band_table},
      {"order-open sets are interval-topology open", tau_subset},
      {"oracle equivalence", oracles},
      {"CLI determinism", [&] { return determinism(examples); }},
  };
  int failures = 0;
  for (const auto &[name, run] : criteria) {
    Result r;
    try {
      r = run();
    } catch (const std::exception &e) {
      r = fail(std::string("exception: ") + e.what());
    }
    failures += r.pass ? 0 : 1;
    std::cout << (r.pass ? "PASS" : "FAIL") << " [PRIMARY] " << name << ": " << r.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
