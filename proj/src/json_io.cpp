#include "ordtop/json_io.hpp"

#include <algorithm>
#include <initializer_list>

#include "overloaded.hpp"

namespace ordtop::io {

InputError::InputError(std::string pointer, const std::string &message)
    : std::invalid_argument("at '" + pointer + "': " + message), pointer_(std::move(pointer)) {}

std::string child(const std::string &pointer, const std::string &key) {
  std::string out = pointer + "/";
  for (char ch : key) {
    if (ch == '~')
      out += "~0";
    else if (ch == '/')
      out += "~1";
    else
      out += ch;
  }
  return out;
}

std::string child(const std::string &pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

namespace {

const char *type_name(const Json &j) { return j.type_name(); }

void expect_object(const Json &j, const std::string &ptr) {
  if (!j.is_object())
    throw InputError(ptr, std::string("expected an object, got ") + type_name(j));
}

void expect_array(const Json &j, const std::string &ptr) {
  if (!j.is_array())
    throw InputError(ptr, std::string("expected an array, got ") + type_name(j));
}

void allow_keys(const Json &j, const std::string &ptr, std::initializer_list<const char *> keys) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(keys.begin(), keys.end(), [&](const char *k) { return it.key() == k; }))
      throw InputError(child(ptr, it.key()), "unknown field");
}

const Json &field(const Json &j, const std::string &ptr, const char *key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw InputError(child(ptr, key), "missing required field");
  return *it;
}

const Json *optional_field(const Json &j, const char *key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::string get_string(const Json &j, const std::string &ptr) {
  if (!j.is_string())
    throw InputError(ptr, std::string("expected a string, got ") + type_name(j));
  return j.get<std::string>();
}

bool get_bool(const Json &j, const std::string &ptr) {
  if (!j.is_boolean())
    throw InputError(ptr, std::string("expected a boolean, got ") + type_name(j));
  return j.get<bool>();
}

std::uint64_t get_uint(const Json &j, const std::string &ptr) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InputError(ptr, std::string("expected a non-negative integer, got ") + j.dump());
  return j.get<std::uint64_t>();
}

// Runs a library constructor and rewrites its argument errors as input
// errors at `ptr`.
template <class F> auto at(const std::string &ptr, F &&make) -> decltype(make()) {
  try {
    return make();
  } catch (const InputError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw InputError(ptr, e.what());
  } catch (const std::domain_error &e) {
    throw InputError(ptr, e.what());
  }
}

std::vector<Vec> parse_vecs(const Json &j, const std::string &ptr, const ParseContext &ctx) {
  expect_array(j, ptr);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_vec(j[i], child(ptr, i), ctx));
  return out;
}

Json encode_vecs(const std::vector<Vec> &xs) {
  Json out = Json::array();
  for (const auto &x : xs)
    out.push_back(encode(x));
  return out;
}

std::size_t parse_position(const Json &j, const std::string &ptr) {
  if (j.is_string() && j.get<std::string>() == "tail")
    return kTail;
  return static_cast<std::size_t>(get_uint(j, ptr));
}

Json encode_position(std::size_t p) { return p == kTail ? Json("tail") : Json(p); }

Monotonicity::Direction parse_direction(const Json &j, const std::string &ptr) {
  const std::string s = get_string(j, ptr);
  for (auto d : {Monotonicity::Direction::increasing, Monotonicity::Direction::decreasing,
                 Monotonicity::Direction::neither})
    if (to_string(d) == s)
      return d;
  throw InputError(ptr, "unknown direction '" + s + "'");
}

Verdict::Status parse_status(const Json &j, const std::string &ptr) {
  const std::string s = get_string(j, ptr);
  for (auto st : {Verdict::Status::certified, Verdict::Status::refuted, Verdict::Status::unknown})
    if (to_string(st) == s)
      return st;
  throw InputError(ptr, "unknown verdict status '" + s + "'");
}

} // namespace

// ---------------------------------------------------------------------------
// Scalars, carriers, vectors, intervals.
// ---------------------------------------------------------------------------

Rational parse_rational(const Json &j, const std::string &ptr) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (!j.is_string())
    throw InputError(ptr, std::string("expected a rational string like \"3/4\", got ") +
                              type_name(j));
  return at(ptr, [&] { return Rational::parse(j.get<std::string>()); });
}

Json encode(const Rational &r) { return r.str(); }

Carrier parse_carrier(const Json &j, const std::string &ptr) {
  expect_object(j, ptr);
  allow_keys(j, ptr, {"kind", "dim"});
  const std::string kind = get_string(field(j, ptr, "kind"), child(ptr, "kind"));
  if (kind == "tail-seq") {
    if (j.contains("dim"))
      throw InputError(child(ptr, "dim"), "tail-seq carriers take no dimension");
    return Carrier::tail_seq();
  }
  if (kind != "fin-dim")
    throw InputError(child(ptr, "kind"), "expected \"fin-dim\" or \"tail-seq\"");
  const std::string dptr = child(ptr, "dim");
  const auto n = get_uint(field(j, ptr, "dim"), dptr);
  return at(dptr, [&] { return Carrier::fin_dim(static_cast<std::size_t>(n)); });
}

Json encode(const Carrier &c) {
  if (c.is_tail_seq())
    return Json{{"kind", "tail-seq"}};
  return Json{{"kind", "fin-dim"}, {"dim", c.dim()}};
}

Vec parse_vec(const Json &j, const std::string &ptr, const ParseContext &ctx) {
  std::optional<Vec> v;
  if (j.is_array()) {
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < j.size(); ++i)
      xs.push_back(parse_rational(j[i], child(ptr, i)));
    if (xs.empty())
      throw InputError(ptr, "a fin-dim vector needs at least one coordinate");
    v = Vec::fin_dim(std::move(xs));
  } else if (j.is_object()) {
    allow_keys(j, ptr, {"prefix", "tail"});
    const std::string pptr = child(ptr, "prefix");
    const Json &pre = field(j, ptr, "prefix");
    expect_array(pre, pptr);
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < pre.size(); ++i)
      xs.push_back(parse_rational(pre[i], child(pptr, i)));
    v = Vec::tail_seq(std::move(xs), parse_rational(field(j, ptr, "tail"), child(ptr, "tail")));
  } else {
    throw InputError(ptr, std::string("expected a vector (array or {prefix, tail}), got ") +
                              type_name(j));
  }
  if (ctx.carrier && v->carrier() != *ctx.carrier)
    throw InputError(ptr, "vector lives in " + v->carrier().str() + ", expected " +
                              ctx.carrier->str());
  return *v;
}

Json encode(const Vec &x) {
  Json head = Json::array();
  for (const auto &r : x.head())
    head.push_back(encode(r));
  if (x.carrier().is_fin_dim())
    return head;
  return Json{{"prefix", head}, {"tail", encode(x.tail())}};
}

IntervalSemantics parse_semantics_field(const Json &j, const std::string &ptr) {
  const std::string s = get_string(j, ptr);
  return at(ptr, [&] { return parse_semantics(s); });
}

Interval parse_interval(const Json &j, const std::string &ptr, const ParseContext &ctx) {
  expect_object(j, ptr);
  allow_keys(j, ptr, {"op", "lo", "hi", "kind", "semantics"});
  Vec lo = parse_vec(field(j, ptr, "lo"), child(ptr, "lo"), ctx);
  ParseContext same = ctx;
  same.carrier = lo.carrier();
  Vec hi = parse_vec(field(j, ptr, "hi"), child(ptr, "hi"), same);
  const std::string kind = get_string(field(j, ptr, "kind"), child(ptr, "kind"));
  if (kind != "open" && kind != "closed")
    throw InputError(child(ptr, "kind"), "expected \"open\" or \"closed\"");
  const IntervalSemantics sem =
      j.contains("semantics") ? parse_semantics_field(j["semantics"], child(ptr, "semantics"))
                              : ctx.semantics;
  return at(ptr, [&] {
    return Interval(std::move(lo), std::move(hi),
                    kind == "open" ? IntervalKind::open : IntervalKind::closed, sem);
  });
}

Json encode(const Interval &I) {
  return Json{{"lo", encode(I.lo())},
              {"hi", encode(I.hi())},
              {"kind", I.is_open() ? "open" : "closed"},
              {"semantics", to_string(I.semantics())}};
}

// ---------------------------------------------------------------------------
// Sets.
// ---------------------------------------------------------------------------

SetExpr parse_set(const Json &j, const std::string &ptr, const ParseContext &ctx) {
  expect_object(j, ptr);
  const std::string op = get_string(field(j, ptr, "op"), child(ptr, "op"));
  auto sub = [&](const char *key) {
    return parse_set(field(j, ptr, key), child(ptr, key), ctx);
  };
  auto parts = [&] {
    const std::string pptr = child(ptr, "parts");
    const Json &ps = field(j, ptr, "parts");
    expect_array(ps, pptr);
    std::vector<SetExpr> out;
    for (std::size_t i = 0; i < ps.size(); ++i)
      out.push_back(parse_set(ps[i], child(pptr, i), ctx));
    return out;
  };
  auto gens = [&] { return parse_vecs(field(j, ptr, "gens"), child(ptr, "gens"), ctx); };

  if (op == "interval")
    return sets::interval(parse_interval(j, ptr, ctx));
  if (op == "ideal" || op == "band" || op == "solid-hull") {
    allow_keys(j, ptr, {"op", "gens"});
    std::vector<Vec> g = gens();
    if (op == "ideal")
      return sets::ideal(std::move(g));
    if (op == "band")
      return sets::band(std::move(g));
    return sets::solid_hull(std::move(g));
  }
  if (op == "half-space") {
    allow_keys(j, ptr, {"op", "index", "rel", "bound"});
    const std::string iptr = child(ptr, "index");
    const std::size_t index = parse_position(field(j, ptr, "index"), iptr);
    if (index == 0)
      throw InputError(iptr, "coordinate indices are 1-based");
    const std::string rel = get_string(field(j, ptr, "rel"), child(ptr, "rel"));
    if (rel != "le" && rel != "ge")
      throw InputError(child(ptr, "rel"), "expected \"le\" or \"ge\"");
    const Rational bound = parse_rational(field(j, ptr, "bound"), child(ptr, "bound"));
    return at(ptr, [&] {
      return sets::half_space(index, rel == "le" ? Relation::le : Relation::ge, bound);
    });
  }
  if (op == "tail-zero") {
    allow_keys(j, ptr, {"op"});
    return sets::tail_zero();
  }
  if (op == "complement") {
    allow_keys(j, ptr, {"op", "of"});
    return sets::complement(sub("of"));
  }
  if (op == "union" || op == "intersection") {
    allow_keys(j, ptr, {"op", "parts"});
    return op == "union" ? sets::unite(parts()) : sets::intersect(parts());
  }
  if (op == "translate") {
    allow_keys(j, ptr, {"op", "of", "by"});
    SetExpr inner = sub("of");
    return sets::translate(std::move(inner), parse_vec(field(j, ptr, "by"), child(ptr, "by"), ctx));
  }
  if (op == "dilate") {
    allow_keys(j, ptr, {"op", "of", "factor"});
    SetExpr inner = sub("of");
    const std::string fptr = child(ptr, "factor");
    const Rational t = parse_rational(field(j, ptr, "factor"), fptr);
    return at(fptr, [&] { return sets::dilate(std::move(inner), t); });
  }
  throw InputError(child(ptr, "op"), "unknown set operation '" + op + "'");
}

Json encode(const SetExpr &s) {
  auto parts = [](const std::vector<SetExpr> &ps) {
    Json out = Json::array();
    for (const auto &p : ps)
      out.push_back(encode(p));
    return out;
  };
  return visit(
      detail::overloaded{
          [](const sets::IntervalSet &n) {
            Json out{{"op", "interval"}};
            out.update(encode(n.interval));
            return out;
          },
          [](const sets::Ideal &n) { return Json{{"op", "ideal"}, {"gens", encode_vecs(n.gens)}}; },
          [](const sets::Band &n) { return Json{{"op", "band"}, {"gens", encode_vecs(n.gens)}}; },
          [](const sets::SolidHull &n) {
            return Json{{"op", "solid-hull"}, {"gens", encode_vecs(n.gens)}};
          },
          [](const sets::HalfSpace &n) {
            return Json{{"op", "half-space"},
                        {"index", encode_position(n.index)},
                        {"rel", n.rel == Relation::le ? "le" : "ge"},
                        {"bound", encode(n.bound)}};
          },
          [](const sets::TailZero &) { return Json{{"op", "tail-zero"}}; },
          [](const sets::Complement &n) { return Json{{"op", "complement"}, {"of", encode(n.inner)}}; },
          [&](const sets::Union &n) { return Json{{"op", "union"}, {"parts", parts(n.parts)}}; },
          [&](const sets::Intersection &n) {
            return Json{{"op", "intersection"}, {"parts", parts(n.parts)}};
          },
          [](const sets::Translate &n) {
            return Json{{"op", "translate"}, {"of", encode(n.inner)}, {"by", encode(n.by)}};
          },
          [](const sets::Dilate &n) {
            return Json{{"op", "dilate"}, {"of", encode(n.inner)}, {"factor", encode(n.factor)}};
          },
      },
      s);
}

// ---------------------------------------------------------------------------
// Families.
// ---------------------------------------------------------------------------

Family parse_family(const Json &j, const std::string &ptr, const ParseContext &ctx) {
  expect_object(j, ptr);
  const std::string name = get_string(field(j, ptr, "template"), child(ptr, "template"));
  auto vec = [&](const char *key) { return parse_vec(field(j, ptr, key), child(ptr, key), ctx); };
  auto rat = [&](const char *key) { return parse_rational(field(j, ptr, key), child(ptr, key)); };

  if (name == "explicit") {
    allow_keys(j, ptr, {"template", "values"});
    std::vector<Vec> values = parse_vecs(field(j, ptr, "values"), child(ptr, "values"), ctx);
    return at(ptr, [&] { return families::explicit_values(std::move(values)); });
  }
  if (name == "shift" || name == "shift-up") {
    allow_keys(j, ptr, {"template", "scale", "offset"});
    if (ctx.carrier && !ctx.carrier->is_tail_seq())
      throw InputError(child(ptr, "template"), name + " lives in tail-seq carriers only");
    const Rational s = j.contains("scale") ? rat("scale") : Rational(1);
    std::optional<Vec> offset;
    if (j.contains("offset"))
      offset = vec("offset");
    return at(ptr, [&] {
      return name == "shift" ? families::shift(s, offset) : families::shift_up(s, offset);
    });
  }
  if (name == "scale") {
    allow_keys(j, ptr, {"template", "v", "lambda"});
    Vec v = vec("v");
    const Rational lambda = rat("lambda");
    return at(ptr, [&] { return families::scale(std::move(v), lambda); });
  }
  if (name == "coord-decay") {
    allow_keys(j, ptr, {"template", "c", "p", "q"});
    Vec c = vec("c");
    ParseContext same = ctx;
    same.carrier = c.carrier();
    Vec p = parse_vec(field(j, ptr, "p"), child(ptr, "p"), same);
    const Rational q = j.contains("q") ? rat("q") : Rational(0);
    return at(ptr, [&] { return families::coord_decay(std::move(c), std::move(p), q); });
  }
  if (name == "running-sup-meet" || name == "deviation") {
    const char *second = name == "deviation" ? "center" : "cap";
    allow_keys(j, ptr, {"template", "base", second});
    Family base = parse_family(field(j, ptr, "base"), child(ptr, "base"), ctx);
    ParseContext same = ctx;
    same.carrier = base.carrier();
    Vec v = parse_vec(field(j, ptr, second), child(ptr, second), same);
    return at(ptr, [&] {
      return name == "deviation" ? families::deviation(std::move(base), std::move(v))
                                 : families::running_sup_meet(std::move(base), std::move(v));
    });
  }
  throw InputError(child(ptr, "template"), "unknown family template '" + name + "'");
}

Json encode(const Family &f) {
  return visit(detail::overloaded{
                   [](const families::Explicit &e) {
                     return Json{{"template", "explicit"}, {"values", encode_vecs(e.values)}};
                   },
                   [](const families::Shift &s) {
                     return Json{{"template", "shift"},
                                 {"scale", encode(s.scale)},
                                 {"offset", encode(s.offset)}};
                   },
                   [](const families::ShiftUp &s) {
                     return Json{{"template", "shift-up"},
                                 {"scale", encode(s.scale)},
                                 {"offset", encode(s.offset)}};
                   },
                   [](const families::Scale &s) {
                     return Json{{"template", "scale"}, {"v", encode(s.v)}, {"lambda", encode(s.lambda)}};
                   },
                   [](const families::CoordDecay &d) {
                     return Json{{"template", "coord-decay"},
                                 {"c", encode(d.c)},
                                 {"p", encode(d.p)},
                                 {"q", encode(d.q)}};
                   },
                   [](const families::RunningSupMeet &r) {
                     return Json{{"template", "running-sup-meet"},
                                 {"base", encode(r.base)},
                                 {"cap", encode(r.cap)}};
                   },
                   [](const families::Deviation &d) {
                     return Json{{"template", "deviation"},
                                 {"base", encode(d.base)},
                                 {"center", encode(d.center)}};
                   },
               },
               f);
}

// ---------------------------------------------------------------------------
// Verdicts and convergence artifacts.
// ---------------------------------------------------------------------------

Json encode(const Verdict &v) {
  Json out{{"status", to_string(v.status)}};
  out["rule_trace"] = v.rule_trace;
  if (v.witness) {
    const ClosureWitness &w = *v.witness;
    out["witness"] = Json{{"family", encode(w.family)},
                          {"direction", to_string(w.direction)},
                          {"limit", encode(w.limit)},
                          {"in_set_from", w.in_set_from},
                          {"limit_outside", w.limit_outside}};
  } else {
    out["witness"] = nullptr;
  }
  Json templates = Json::array();
  for (const auto &[name, count] : v.search.templates)
    templates.push_back(Json{{"template", name}, {"count", count}});
  out["search"] = Json{{"grid_size", v.search.grid_size},
                       {"examined", v.search.examined},
                       {"grid_scale", v.search.grid_scale},
                       {"templates", templates}};
  return out;
}

Verdict parse_verdict(const Json &j, const std::string &ptr, const ParseContext &ctx) {
  expect_object(j, ptr);
  allow_keys(j, ptr, {"status", "rule_trace", "witness", "search"});
  Verdict v;
  v.status = parse_status(field(j, ptr, "status"), child(ptr, "status"));
  const std::string tptr = child(ptr, "rule_trace");
  const Json &trace = field(j, ptr, "rule_trace");
  expect_array(trace, tptr);
  for (std::size_t i = 0; i < trace.size(); ++i)
    v.rule_trace.push_back(get_string(trace[i], child(tptr, i)));
  const Json &w = field(j, ptr, "witness");
  if (!w.is_null()) {
    const std::string wptr = child(ptr, "witness");
    expect_object(w, wptr);
    allow_keys(w, wptr, {"family", "direction", "limit", "in_set_from", "limit_outside"});
    Family f = parse_family(field(w, wptr, "family"), child(wptr, "family"), ctx);
    v.witness = ClosureWitness{
        f, parse_direction(field(w, wptr, "direction"), child(wptr, "direction")),
        parse_vec(field(w, wptr, "limit"), child(wptr, "limit"), ctx),
        get_uint(field(w, wptr, "in_set_from"), child(wptr, "in_set_from")),
        get_bool(field(w, wptr, "limit_outside"), child(wptr, "limit_outside"))};
  }
  const std::string sptr = child(ptr, "search");
  const Json &s = field(j, ptr, "search");
  expect_object(s, sptr);
  allow_keys(s, sptr, {"grid_size", "examined", "grid_scale", "templates"});
  v.search.grid_size = get_uint(field(s, sptr, "grid_size"), child(sptr, "grid_size"));
  v.search.examined = get_uint(field(s, sptr, "examined"), child(sptr, "examined"));
  v.search.grid_scale =
      static_cast<unsigned>(get_uint(field(s, sptr, "grid_scale"), child(sptr, "grid_scale")));
  const std::string tpl = child(sptr, "templates");
  const Json &ts = field(s, sptr, "templates");
  expect_array(ts, tpl);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string eptr = child(tpl, i);
    expect_object(ts[i], eptr);
    allow_keys(ts[i], eptr, {"template", "count"});
    v.search.templates.emplace_back(
        get_string(field(ts[i], eptr, "template"), child(eptr, "template")),
        get_uint(field(ts[i], eptr, "count"), child(eptr, "count")));
  }
  return v;
}

Json encode(const SolidityVerdict &v) {
  const char *status = v.status == SolidityVerdict::Status::certified ? "certified"
                       : v.status == SolidityVerdict::Status::refuted ? "refuted"
                                                                      : "unknown";
  Json out{{"status", status}, {"rule", v.rule}};
  out["x"] = v.x ? encode(*v.x) : Json(nullptr);
  out["y"] = v.y ? encode(*v.y) : Json(nullptr);
  out["pairs_checked"] = v.pairs_checked;
  return out;
}

Json encode(const Monotonicity &m) {
  Json out{{"direction", to_string(m.direction)},
           {"rule", m.rule},
           {"horizon_checked", m.horizon_checked}};
  out["not_decreasing_at"] = m.not_decreasing_at ? Json(*m.not_decreasing_at) : Json(nullptr);
  out["not_increasing_at"] = m.not_increasing_at ? Json(*m.not_increasing_at) : Json(nullptr);
  return out;
}

Json encode(const EventualMembership &m) {
  return Json{{"holds", m.holds},
              {"from", m.from},
              {"witness", m.witness},
              {"tail_threshold", m.tail_threshold},
              {"horizon_checked", m.horizon_checked}};
}

EventualMembership parse_membership(const Json &j, const std::string &ptr) {
  expect_object(j, ptr);
  allow_keys(j, ptr, {"holds", "from", "witness", "tail_threshold", "horizon_checked"});
  EventualMembership m;
  m.holds = get_bool(field(j, ptr, "holds"), child(ptr, "holds"));
  m.from = get_uint(field(j, ptr, "from"), child(ptr, "from"));
  m.witness = get_uint(field(j, ptr, "witness"), child(ptr, "witness"));
  m.tail_threshold = get_uint(field(j, ptr, "tail_threshold"), child(ptr, "tail_threshold"));
  m.horizon_checked = get_uint(field(j, ptr, "horizon_checked"), child(ptr, "horizon_checked"));
  return m;
}

Json encode(const ConvergenceCertificate &c) {
  return Json{{"limit", encode(c.limit)},
              {"dominating", encode(c.dominating)},
              {"thresholds", c.thresholds}};
}

ConvergenceCertificate parse_certificate(const Json &j, const std::string &ptr,
                                         const ParseContext &ctx) {
  expect_object(j, ptr);
  allow_keys(j, ptr, {"limit", "dominating", "thresholds"});
  Vec limit = parse_vec(field(j, ptr, "limit"), child(ptr, "limit"), ctx);
  Family dom = parse_family(field(j, ptr, "dominating"), child(ptr, "dominating"), ctx);
  const std::string tptr = child(ptr, "thresholds");
  const Json &ts = field(j, ptr, "thresholds");
  expect_array(ts, tptr);
  std::vector<Index> thresholds;
  for (std::size_t i = 0; i < ts.size(); ++i)
    thresholds.push_back(get_uint(ts[i], child(tptr, i)));
  return {std::move(limit), std::move(dom), std::move(thresholds)};
}

Json encode(const ConvergenceRefutation &r) {
  return Json{{"position", encode_position(r.position)},
              {"coordinate_limit", encode(r.coordinate_limit)},
              {"target", encode(r.target)}};
}

ConvergenceRefutation parse_refutation(const Json &j, const std::string &ptr) {
  expect_object(j, ptr);
  allow_keys(j, ptr, {"position", "coordinate_limit", "target"});
  return {parse_position(field(j, ptr, "position"), child(ptr, "position")),
          parse_rational(field(j, ptr, "coordinate_limit"), child(ptr, "coordinate_limit")),
          parse_rational(field(j, ptr, "target"), child(ptr, "target"))};
}

Json encode(const ConvergenceResult &r) {
  Json out{{"converges", r.converges()}};
  out["certificate"] = r.certificate ? encode(*r.certificate) : Json(nullptr);
  out["refutation"] = r.refutation ? encode(*r.refutation) : Json(nullptr);
  return out;
}

Json encode(const TauEReport &r) {
  Json entries = Json::array();
  for (const auto &e : r.entries)
    entries.push_back(Json{{"interval", encode(e.interval)}, {"membership", encode(e.membership)}});
  return Json{{"consistent", r.consistent}, {"entries", entries}, {"refuting", r.refuting}};
}

TauEReport parse_tau_e(const Json &j, const std::string &ptr, const ParseContext &ctx) {
  expect_object(j, ptr);
  allow_keys(j, ptr, {"consistent", "entries", "refuting"});
  TauEReport r;
  r.consistent = get_bool(field(j, ptr, "consistent"), child(ptr, "consistent"));
  const std::string eptr = child(ptr, "entries");
  const Json &es = field(j, ptr, "entries");
  expect_array(es, eptr);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string p = child(eptr, i);
    expect_object(es[i], p);
    allow_keys(es[i], p, {"interval", "membership"});
    r.entries.push_back({parse_interval(field(es[i], p, "interval"), child(p, "interval"), ctx),
                         parse_membership(field(es[i], p, "membership"), child(p, "membership"))});
  }
  const std::string rptr = child(ptr, "refuting");
  const Json &rs = field(j, ptr, "refuting");
  expect_array(rs, rptr);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const auto k = get_uint(rs[i], child(rptr, i));
    if (k >= r.entries.size())
      throw InputError(child(rptr, i), "index past the entries");
    r.refuting.push_back(static_cast<std::size_t>(k));
  }
  return r;
}

Json encode(const Containment &c) {
  return Json{{"contained", c.contained}, {"exact", c.exact}, {"samples", c.samples}};
}

Json encode(const FitResult &f) {
  Json out;
  out["interval"] = f.interval ? encode(*f.interval) : Json(nullptr);
  out["step"] = f.step;
  out["containment"] = encode(f.containment);
  return out;
}

FitResult parse_fit(const Json &j, const std::string &ptr, const ParseContext &ctx) {
  expect_object(j, ptr);
  allow_keys(j, ptr, {"interval", "step", "containment"});
  FitResult f;
  const Json &I = field(j, ptr, "interval");
  if (!I.is_null())
    f.interval = parse_interval(I, child(ptr, "interval"), ctx);
  f.step = static_cast<unsigned>(get_uint(field(j, ptr, "step"), child(ptr, "step")));
  const std::string cptr = child(ptr, "containment");
  const Json &c = field(j, ptr, "containment");
  expect_object(c, cptr);
  allow_keys(c, cptr, {"contained", "exact", "samples"});
  f.containment.contained = get_bool(field(c, cptr, "contained"), child(cptr, "contained"));
  f.containment.exact = get_bool(field(c, cptr, "exact"), child(cptr, "exact"));
  f.containment.samples = get_uint(field(c, cptr, "samples"), child(cptr, "samples"));
  return f;
}

// ---------------------------------------------------------------------------
// Theorem reports.
// ---------------------------------------------------------------------------

Json encode(const TheoremReport &r) {
  Json inputs = Json::array();
  for (const auto &[k, v] : r.inputs)
    inputs.push_back(Json{{"name", k}, {"value", v}});
  Json steps = Json::array();
  for (const auto &st : r.steps) {
    Json s{{"operation", st.operation}, {"status", st.status}, {"detail", st.detail}};
    if (st.family)
      s["family"] = encode(*st.family);
    if (st.set)
      s["set"] = encode(*st.set);
    if (st.point)
      s["point"] = encode(*st.point);
    if (st.verdict)
      s["verdict"] = encode(*st.verdict);
    if (st.membership)
      s["membership"] = encode(*st.membership);
    if (st.tau_e)
      s["tau_e"] = encode(*st.tau_e);
    if (st.certificate)
      s["certificate"] = encode(*st.certificate);
    if (st.refutation)
      s["refutation"] = encode(*st.refutation);
    if (!st.fits.empty()) {
      Json fits = Json::array();
      for (const auto &[z, fit] : st.fits)
        fits.push_back(Json{{"center", encode(z)}, {"fit", encode(fit)}});
      s["fits"] = fits;
    }
    steps.push_back(std::move(s));
  }
  Json out{{"theorem", r.theorem}};
  out["carrier"] = r.carrier ? encode(*r.carrier) : Json(nullptr);
  out["inputs"] = inputs;
  out["steps"] = steps;
  out["conclusion"] = to_string(r.conclusion);
  out["contradicts_claim"] = r.contradicts_claim;
  out["notes"] = r.notes;
  return out;
}

TheoremReport parse_theorem_report(const Json &j, const std::string &ptr) {
  expect_object(j, ptr);
  allow_keys(j, ptr,
             {"theorem", "carrier", "inputs", "steps", "conclusion", "contradicts_claim", "notes"});
  TheoremReport r;
  r.theorem = get_string(field(j, ptr, "theorem"), child(ptr, "theorem"));
  ParseContext ctx;
  if (const Json &c = field(j, ptr, "carrier"); !c.is_null()) {
    r.carrier = parse_carrier(c, child(ptr, "carrier"));
    ctx.carrier = r.carrier;
  }

  const std::string iptr = child(ptr, "inputs");
  const Json &inputs = field(j, ptr, "inputs");
  expect_array(inputs, iptr);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const std::string p = child(iptr, i);
    expect_object(inputs[i], p);
    allow_keys(inputs[i], p, {"name", "value"});
    r.inputs.emplace_back(get_string(field(inputs[i], p, "name"), child(p, "name")),
                          get_string(field(inputs[i], p, "value"), child(p, "value")));
  }

  const std::string sptr = child(ptr, "steps");
  const Json &steps = field(j, ptr, "steps");
  expect_array(steps, sptr);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = child(sptr, i);
    const Json &s = steps[i];
    expect_object(s, p);
    allow_keys(s, p,
               {"operation", "status", "detail", "family", "set", "point", "verdict",
                "membership", "tau_e", "certificate", "refutation", "fits"});
    TheoremStep st;
    st.operation = get_string(field(s, p, "operation"), child(p, "operation"));
    st.status = get_string(field(s, p, "status"), child(p, "status"));
    st.detail = get_string(field(s, p, "detail"), child(p, "detail"));
    if (const Json *f = optional_field(s, "family"))
      st.family = parse_family(*f, child(p, "family"), ctx);
    if (const Json *x = optional_field(s, "set"))
      st.set = parse_set(*x, child(p, "set"), ctx);
    if (const Json *x = optional_field(s, "point"))
      st.point = parse_vec(*x, child(p, "point"), ctx);
    if (const Json *x = optional_field(s, "verdict"))
      st.verdict = parse_verdict(*x, child(p, "verdict"), ctx);
    if (const Json *x = optional_field(s, "membership"))
      st.membership = parse_membership(*x, child(p, "membership"));
    if (const Json *x = optional_field(s, "tau_e"))
      st.tau_e = parse_tau_e(*x, child(p, "tau_e"), ctx);
    if (const Json *x = optional_field(s, "certificate"))
      st.certificate = parse_certificate(*x, child(p, "certificate"), ctx);
    if (const Json *x = optional_field(s, "refutation"))
      st.refutation = parse_refutation(*x, child(p, "refutation"));
    if (const Json *x = optional_field(s, "fits")) {
      const std::string fptr = child(p, "fits");
      expect_array(*x, fptr);
      for (std::size_t k = 0; k < x->size(); ++k) {
        const std::string q = child(fptr, k);
        const Json &e = (*x)[k];
        expect_object(e, q);
        allow_keys(e, q, {"center", "fit"});
        st.fits.emplace_back(parse_vec(field(e, q, "center"), child(q, "center"), ctx),
                             parse_fit(field(e, q, "fit"), child(q, "fit"), ctx));
      }
    }
    r.steps.push_back(std::move(st));
  }

  const std::string cptr = child(ptr, "conclusion");
  const std::string conclusion = get_string(field(j, ptr, "conclusion"), cptr);
  bool known = false;
  for (auto c : {Conclusion::confirmed, Conclusion::counterexample_found, Conclusion::inconclusive,
                 Conclusion::inconclusive_hypothesis})
    if (to_string(c) == conclusion) {
      r.conclusion = c;
      known = true;
    }
  if (!known)
    throw InputError(cptr, "unknown conclusion '" + conclusion + "'");
  r.contradicts_claim =
      get_bool(field(j, ptr, "contradicts_claim"), child(ptr, "contradicts_claim"));
  const std::string nptr = child(ptr, "notes");
  const Json &notes = field(j, ptr, "notes");
  expect_array(notes, nptr);
  for (std::size_t i = 0; i < notes.size(); ++i)
    r.notes.push_back(get_string(notes[i], child(nptr, i)));
  return r;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace ordtop::io
