#include "doctest.h"

#include "ordtop/json_io.hpp"
#include "support.hpp"

using namespace ordtop;
using namespace ordtop::test;
using io::Json;

namespace {

const Carrier kQ2 = Carrier::fin_dim(2);

io::ParseContext in(const Carrier &c) {
  io::ParseContext ctx;
  ctx.carrier = c;
  return ctx;
}

std::string pointer_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const io::InputError &e) {
    return e.pointer();
  }
  return "<no error>";
}

} // namespace

TEST_CASE("rationals and vectors round-trip") {
  for (const Rational &r : {R(0), R(-3), R(7, 12), R(-1, 64)})
    CHECK(io::parse_rational(io::encode(r), "") == r);
  CHECK(io::parse_rational(Json(5), "") == R(5));
  CHECK(pointer_of([] { io::parse_rational(Json("1/0"), "/x"); }) == "/x");
  CHECK(pointer_of([] { io::parse_rational(Json(0.5), "/x"); }) == "/x");

  const Vec a = fd({R(1, 2), R(-3)});
  const Vec b = ts({R(1), R(0), R(2, 3)}, R(-1));
  CHECK(io::parse_vec(io::encode(a), "", {}) == a);
  CHECK(io::parse_vec(io::encode(b), "", {}) == b);
  // Non-canonical prefixes are normalised on input.
  CHECK(io::parse_vec(Json::parse(R"({"prefix": ["1", "0", "0"], "tail": "0"})"), "", {}) ==
        ts({R(1)}, R(0)));
  CHECK(pointer_of([&] { io::parse_vec(io::encode(b), "/v", in(kQ2)); }) == "/v");
  CHECK(pointer_of([] { io::parse_vec(Json::parse(R"({"prefix": [], "tail": "0", "x": 1})"), "/v", {}); }) ==
        "/v/x");
  CHECK(pointer_of([] { io::parse_vec(Json::parse(R"(["1", "a"])"), "/v", {}); }) == "/v/1");
}

TEST_CASE("carriers round-trip and reject bad input") {
  CHECK(io::parse_carrier(io::encode(kQ2), "") == kQ2);
  CHECK(io::parse_carrier(io::encode(kSeq), "") == kSeq);
  CHECK(pointer_of([] { io::parse_carrier(Json::parse(R"({"kind": "fin-dim", "dim": 0})"), "/c"); }) ==
        "/c/dim");
  CHECK(pointer_of([] { io::parse_carrier(Json::parse(R"({"kind": "lp"})"), "/c"); }) == "/c/kind");
}

TEST_CASE("sets round-trip through JSON") {
  const std::vector<SetExpr> samples{
      sets::interval(Interval::open(-e(1), e(1))),
      sets::interval(Interval::closed(-e(2), e(1) + e(2))),
      sets::ideal({e(1), ts({R(0), R(2)}, R(0))}),
      sets::band({e(3)}),
      sets::solid_hull({ts({R(1)}, R(1, 2))}),
      sets::half_space(2, Relation::ge, R(-1, 3)),
      sets::half_space(kTail, Relation::le, R(0)),
      sets::tail_zero(),
      sets::complement(sets::tail_zero()),
      sets::unite({sets::band({e(1)}), sets::half_space(1, Relation::le, R(2))}),
      sets::intersect({}),
      sets::unite({}),
      sets::translate(sets::band({e(1)}), e(2)),
      sets::dilate(sets::tail_zero(), R(-2)),
  };
  for (const auto &s : samples) {
    CAPTURE(to_string(s));
    const SetExpr back = io::parse_set(io::encode(s), "", in(kSeq));
    CHECK(io::encode(back) == io::encode(s));
    CHECK(to_string(back) == to_string(s));
  }
}

TEST_CASE("set parse errors carry pointers") {
  const io::ParseContext ctx = in(kQ2);
  CHECK(pointer_of([&] {
          io::parse_set(Json::parse(R"({"op": "union", "parts": [{"op": "nope"}]})"), "/s", ctx);
        }) == "/s/parts/0/op");
  CHECK(pointer_of([&] {
          io::parse_set(Json::parse(R"({"op": "band", "gens": [["1", "0"]], "extra": 1})"), "/s",
                        ctx);
        }) == "/s/extra");
  CHECK(pointer_of([&] {
          io::parse_set(
              Json::parse(R"({"op": "interval", "lo": ["1", "1"], "hi": ["0", "0"], "kind": "open"})"),
              "/s", ctx);
        }) == "/s");
  CHECK(pointer_of([&] {
          io::parse_set(Json::parse(R"({"op": "dilate", "of": {"op": "tail-zero"}, "factor": "0"})"),
                        "/s", ctx);
        }) == "/s/factor");
  CHECK(pointer_of([&] {
          io::parse_set(Json::parse(R"({"op": "half-space", "index": 0, "rel": "le", "bound": 1})"),
                        "/s", ctx);
        }) == "/s/index");
  CHECK(pointer_of([&] { io::parse_set(Json::parse(R"({"op": "band"})"), "/s", ctx); }) ==
        "/s/gens");
}

TEST_CASE("families round-trip through JSON") {
  const Family base = families::coord_decay(e(1), e(2), R(1));
  const std::vector<Family> samples{
      families::explicit_values({e(1), -e(2), Vec::zero(kSeq)}),
      families::shift(),
      families::shift(R(-2), ts({R(1)}, R(0))),
      families::shift_up(R(1, 2)),
      families::scale(ts({R(1), R(2)}, R(1)), R(2, 3)),
      base,
      families::running_sup_meet(base, e(1)),
      families::deviation(base, e(1)),
  };
  for (const auto &f : samples) {
    CAPTURE(to_string(f));
    CHECK(io::parse_family(io::encode(f), "", in(kSeq)) == f);
  }
}

TEST_CASE("family domain errors become input errors") {
  const io::ParseContext ctx = in(kQ2);
  CHECK(pointer_of([&] {
          io::parse_family(Json::parse(R"({"template": "scale", "v": ["1", "1"], "lambda": "2"})"),
                           "/f", ctx);
        }) == "/f");
  CHECK(pointer_of([&] {
          io::parse_family(Json::parse(R"({"template": "shift"})"), "/f", ctx);
        }) == "/f/template");
  CHECK(pointer_of([&] {
          io::parse_family(Json::parse(R"({"template": "coord-decay", "c": ["0", "0"], "p": ["1"]})"),
                           "/f", ctx);
        }) == "/f/p");
  CHECK(pointer_of([&] { io::parse_family(Json::parse(R"({"template": "spiral"})"), "/f", ctx); }) ==
        "/f/template");
}

TEST_CASE("verdicts round-trip") {
  const Verdict v = check_quasi_order_closed(sets::tail_zero(), kSeq);
  REQUIRE(v.witness.has_value());
  const Verdict back = io::parse_verdict(io::encode(v), "", in(kSeq));
  CHECK(io::encode(back) == io::encode(v));
  CHECK(replay_witness(sets::tail_zero(), *back.witness, ClosureKind::quasi_order).valid);
}

TEST_CASE("theorem reports round-trip and replay from JSON") {
  const Vec zero = Vec::zero(kQ2);
  const std::vector<TheoremReport> reports{
      verify_example_e1(),
      verify_theorem_t1(families::coord_decay(zero, fd({R(1), R(1)}), R(0)), zero,
                        neighborhood_catalog(zero, 5, CatalogMode::chain)),
      verify_band_proposition(sets::tail_zero(), kSeq),
      verify_band_proposition(sets::band({e(1)}), kSeq),
      tau_subset_probe({sets::full()}, kQ2, 5),
  };
  for (const auto &r : reports) {
    CAPTURE(r.theorem);
    const Json j = io::encode(r);
    const TheoremReport back = io::parse_theorem_report(Json::parse(io::dump(j)));
    CHECK(io::encode(back) == j);
    CHECK(render_text(back) == render_text(r));
    const WitnessCheck w = replay_report(back);
    CHECK_MESSAGE(w.valid, w.reason);
  }
}

TEST_CASE("json pointer escaping") {
  CHECK(io::child("", "a/b") == "/a~1b");
  CHECK(io::child("/x", "m~n") == "/x/m~0n");
  CHECK(io::child("/x", std::size_t{3}) == "/x/3");
}
