#include "ordtop/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ordtop/convergence.hpp"
#include "ordtop/structure.hpp"
#include "ordtop/theorems.hpp"
#include "ordtop/topology.hpp"

namespace ordtop::cli {

using io::InputError;
using io::Json;
using io::child;
using io::encode;

namespace {

struct Problem {
  Carrier carrier;
  SearchConfig cfg;
  io::ParseContext ctx;
  const Json *task;
};

void allow(const Json &j, const std::string &ptr, std::initializer_list<const char *> keys) {
  if (!j.is_object())
    throw InputError(ptr, std::string("expected an object, got ") + j.type_name());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(keys.begin(), keys.end(), [&](const char *k) { return it.key() == k; }))
      throw InputError(child(ptr, it.key()), "unknown field");
}

const Json &need(const Json &j, const std::string &ptr, const char *key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw InputError(child(ptr, key), "missing required field");
  return *it;
}

std::uint64_t positive(const Json &j, const std::string &ptr, bool allow_zero = false) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < (allow_zero ? 0 : 1))
    throw InputError(ptr, std::string("expected ") + (allow_zero ? "a non-negative" : "a positive") +
                              " integer, got " + j.dump());
  return j.get<std::uint64_t>();
}

std::string text_of(const Json &j, const std::string &ptr) {
  if (!j.is_string())
    throw InputError(ptr, std::string("expected a string, got ") + j.type_name());
  return j.get<std::string>();
}

Problem read_problem(const Json &doc, const Overrides &o) {
  allow(doc, "", {"description", "carrier", "semantics", "config", "task"});
  if (doc.contains("description"))
    text_of(doc["description"], "/description");
  Problem p{io::parse_carrier(need(doc, "", "carrier"), "/carrier"), {}, {}, nullptr};
  if (doc.contains("semantics"))
    p.cfg.semantics = io::parse_semantics_field(doc["semantics"], "/semantics");
  if (const auto it = doc.find("config"); it != doc.end()) {
    const Json &c = *it;
    allow(c, "/config",
          {"horizon", "grid_scale", "fit_budget", "fit_samples", "extra_positions",
           "solidity_budget"});
    if (c.contains("horizon"))
      p.cfg.horizon = positive(c["horizon"], "/config/horizon", true);
    if (c.contains("grid_scale"))
      p.cfg.grid_scale = static_cast<unsigned>(positive(c["grid_scale"], "/config/grid_scale"));
    if (c.contains("fit_budget"))
      p.cfg.fit_budget = static_cast<unsigned>(positive(c["fit_budget"], "/config/fit_budget", true));
    if (c.contains("fit_samples"))
      p.cfg.fit_samples = positive(c["fit_samples"], "/config/fit_samples");
    if (c.contains("extra_positions"))
      p.cfg.extra_positions = positive(c["extra_positions"], "/config/extra_positions", true);
    if (c.contains("solidity_budget"))
      p.cfg.solidity_budget = positive(c["solidity_budget"], "/config/solidity_budget");
  }
  if (o.semantics)
    p.cfg.semantics = *o.semantics;
  if (o.horizon)
    p.cfg.horizon = *o.horizon;
  if (o.grid_scale)
    p.cfg.grid_scale = *o.grid_scale;
  p.cfg.threads = std::max(1u, o.jobs);
  p.ctx.carrier = p.carrier;
  p.ctx.semantics = p.cfg.semantics;
  p.task = &need(doc, "", "task");
  if (!p.task->is_object())
    throw InputError("/task", "expected an object");
  return p;
}

Json config_json(const SearchConfig &cfg) {
  return Json{{"horizon", cfg.horizon},
              {"grid_scale", cfg.grid_scale},
              {"fit_budget", cfg.fit_budget},
              {"fit_samples", cfg.fit_samples},
              {"extra_positions", cfg.extra_positions},
              {"solidity_budget", cfg.solidity_budget}};
}

std::string verdict_line(const Verdict &v) {
  std::string out = to_string(v.status);
  if (v.status == Verdict::Status::certified && !v.rule_trace.empty())
    out += " by " + v.rule_trace.front();
  if (v.witness)
    out += ", witness " + to_string(v.witness->family) + " (" + to_string(v.witness->direction) +
           ", limit " + to_string(v.witness->limit) + ", in the set from k = " +
           std::to_string(v.witness->in_set_from) + ")";
  if (v.status == Verdict::Status::unknown)
    out += ", " + std::to_string(v.search.grid_size) + " candidates examined";
  return out;
}

// -- check-set --------------------------------------------------------------

const char *const kChecks[] = {"quasi-order-closed", "order-open", "order-closed", "solid"};

Outcome check_set(const Problem &p) {
  const Json &t = *p.task;
  allow(t, "/task", {"kind", "set", "checks"});
  const SetExpr s = io::parse_set(need(t, "/task", "set"), "/task/set", p.ctx);
  try {
    validate(s, p.carrier);
  } catch (const std::invalid_argument &e) {
    throw InputError("/task/set", e.what());
  }
  std::vector<std::string> checks(std::begin(kChecks), std::end(kChecks));
  if (t.contains("checks")) {
    const Json &cs = t["checks"];
    if (!cs.is_array() || cs.empty())
      throw InputError("/task/checks", "expected a non-empty array of check names");
    checks.clear();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string name = text_of(cs[i], child("/task/checks", i));
      if (std::find(std::begin(kChecks), std::end(kChecks), name) == std::end(kChecks))
        throw InputError(child("/task/checks", i), "unknown check '" + name + "'");
      if (std::find(checks.begin(), checks.end(), name) == checks.end())
        checks.push_back(name);
    }
  }

  Outcome out;
  Json results = Json::object();
  std::ostringstream text;
  text << "check-set " << to_string(s) << " in " << p.carrier.str() << "\n";
  for (const auto &name : checks) {
    if (name == "solid") {
      const SolidityVerdict v = check_solid(s, p.carrier, p.cfg);
      results[name] = encode(v);
      text << "  solid: " << results[name]["status"].get<std::string>();
      if (!v.rule.empty())
        text << " by " << v.rule;
      if (v.x && v.y)
        text << ", " << to_string(*v.x) << " in the set, " << to_string(*v.y)
             << " dominated but outside";
      text << "\n";
      continue;
    }
    const Verdict v = name == "quasi-order-closed" ? check_quasi_order_closed(s, p.carrier, p.cfg)
                      : name == "order-open"       ? is_order_open(s, p.carrier, p.cfg)
                                                   : check_order_closed(s, p.carrier, p.cfg);
    results[name] = encode(v);
    text << "  " << name << ": " << verdict_line(v) << "\n";
  }
  out.report = Json{{"set", encode(s)}, {"results", results}};
  out.text = text.str();
  return out;
}

// -- convergence ------------------------------------------------------------

Outcome convergence(const Problem &p) {
  const Json &t = *p.task;
  allow(t, "/task", {"kind", "family", "limit", "catalog"});
  const Family f = io::parse_family(need(t, "/task", "family"), "/task/family", p.ctx);
  const Vec x = io::parse_vec(need(t, "/task", "limit"), "/task/limit", p.ctx);
  CatalogMode mode = CatalogMode::chain;
  std::size_t depth = 5;
  if (t.contains("catalog")) {
    const Json &c = t["catalog"];
    allow(c, "/task/catalog", {"mode", "depth"});
    if (c.contains("mode")) {
      const std::string m = text_of(c["mode"], "/task/catalog/mode");
      if (m != "chain" && m != "full")
        throw InputError("/task/catalog/mode", "expected \"chain\" or \"full\"");
      mode = m == "chain" ? CatalogMode::chain : CatalogMode::full;
    }
    if (c.contains("depth"))
      depth = positive(c["depth"], "/task/catalog/depth");
  }

  const Monotonicity mono = monotonicity(f, p.cfg.horizon);
  const ConvergenceResult res = order_converges(f, x, p.cfg.horizon);
  Json order = encode(res);
  std::ostringstream text;
  text << "convergence of " << to_string(f) << " to " << to_string(x) << " in "
       << p.carrier.str() << "\n";
  text << "  monotonicity: " << to_string(mono.direction) << " (" << mono.rule << ")\n";
  if (res.certificate) {
    const CertificateCheck chk = validate_certificate(f, *res.certificate, p.cfg.horizon);
    order["certificate_check"] = Json{{"valid", chk.valid}, {"reason", chk.reason}};
    text << "  order: certified, dominated by " << to_string(res.certificate->dominating)
         << (chk.valid ? "" : " (re-validation failed: " + chk.reason + ")") << "\n";
  } else {
    const auto &r = *res.refutation;
    text << "  order: refuted, coordinate "
         << (r.position == kTail ? std::string("tail") : std::to_string(r.position + 1))
         << " tends to " << r.coordinate_limit.str() << ", not " << r.target.str() << "\n";
  }

  const NeighborhoodCatalog cat = neighborhood_catalog(x, depth, mode, p.cfg.semantics);
  const TauEReport tau = tau_e_convergence_report(f, x, cat, p.cfg.horizon);
  text << "  tau_e (" << (mode == CatalogMode::chain ? "chain" : "full") << " catalog, depth "
       << depth << ", " << cat.intervals.size() << " intervals): ";
  if (tau.consistent) {
    text << "consistent\n";
  } else {
    text << "refuted by";
    for (std::size_t k = 0; k < tau.refuting.size(); ++k)
      text << (k ? ", " : " ") << to_string(tau.entries[tau.refuting[k]].interval);
    text << "\n";
  }

  Outcome out;
  out.report = Json{{"family", encode(f)},
                    {"limit", encode(x)},
                    {"monotonicity", encode(mono)},
                    {"order", order},
                    {"tau_e",
                     Json{{"mode", mode == CatalogMode::chain ? "chain" : "full"},
                          {"depth", depth},
                          {"report", encode(tau)}}}};
  out.text = text.str();
  return out;
}

// -- fit --------------------------------------------------------------------

Outcome fit(const Problem &p) {
  const Json &t = *p.task;
  allow(t, "/task", {"kind", "set", "point"});
  const SetExpr s = io::parse_set(need(t, "/task", "set"), "/task/set", p.ctx);
  const Vec c = io::parse_vec(need(t, "/task", "point"), "/task/point", p.ctx);
  try {
    validate(s, p.carrier);
  } catch (const std::invalid_argument &e) {
    throw InputError("/task/set", e.what());
  }
  if (!member(s, c))
    throw InputError("/task/point", to_string(c) + " is not in the set");
  const Verdict open = is_order_open(s, p.carrier, p.cfg);
  if (open.status == Verdict::Status::refuted)
    throw InputError("/task/set", "set is not order open, so no interval fit is promised");
  const FitResult r = fit_dyadic(c, s, p.cfg);

  std::ostringstream text;
  text << "fit around " << to_string(c) << " in " << to_string(s) << "\n";
  text << "  order-open: " << verdict_line(open) << "\n";
  if (r.interval)
    text << "  interval: " << to_string(*r.interval) << " (step " << r.step << ", "
         << (r.containment.exact ? "exact containment"
                                 : std::to_string(r.containment.samples) + " grid samples")
         << ")\n";
  else
    text << "  interval: none within dyadic budget " << p.cfg.fit_budget << "\n";

  Outcome out;
  out.report = Json{{"set", encode(s)},
                    {"point", encode(c)},
                    {"order_open", encode(open)},
                    {"fit", encode(r)}};
  out.text = text.str();
  return out;
}

// -- theorems ---------------------------------------------------------------

Outcome theorem(const Problem &p) {
  const Json &t = *p.task;
  const std::string id = text_of(need(t, "/task", "id"), "/task/id");
  TheoremReport r;
  if (id == "example-e1") {
    allow(t, "/task", {"kind", "id"});
    if (!p.carrier.is_tail_seq())
      throw InputError("/carrier", "example-e1 lives in the tail-seq carrier");
    r = verify_example_e1(p.cfg);
  } else if (id == "t1") {
    allow(t, "/task", {"kind", "id", "family", "limit", "depth"});
    const Family f = io::parse_family(need(t, "/task", "family"), "/task/family", p.ctx);
    const Vec x = io::parse_vec(need(t, "/task", "limit"), "/task/limit", p.ctx);
    const std::size_t depth = t.contains("depth") ? positive(t["depth"], "/task/depth") : 10;
    r = verify_theorem_t1(f, x, neighborhood_catalog(x, depth, CatalogMode::chain, p.cfg.semantics),
                          p.cfg);
  } else if (id == "band") {
    allow(t, "/task", {"kind", "id", "set"});
    const SetExpr s = io::parse_set(need(t, "/task", "set"), "/task/set", p.ctx);
    try {
      r = verify_band_proposition(s, p.carrier, p.cfg);
    } catch (const std::invalid_argument &e) {
      throw InputError("/task/set", e.what());
    }
  } else if (id == "tau-subset") {
    allow(t, "/task", {"kind", "id", "sets", "samples"});
    const Json &js = need(t, "/task", "sets");
    if (!js.is_array())
      throw InputError("/task/sets", "expected an array of sets");
    std::vector<SetExpr> sets;
    for (std::size_t i = 0; i < js.size(); ++i)
      sets.push_back(io::parse_set(js[i], child("/task/sets", i), p.ctx));
    const std::size_t samples = t.contains("samples") ? positive(t["samples"], "/task/samples") : 50;
    try {
      r = tau_subset_probe(sets, p.carrier, samples, p.cfg);
    } catch (const std::invalid_argument &e) {
      throw InputError("/task/sets", e.what());
    }
  } else if (id == "vector-topology") {
    allow(t, "/task", {"kind", "id", "set", "shifts", "scalars"});
    const SetExpr s = io::parse_set(need(t, "/task", "set"), "/task/set", p.ctx);
    std::vector<Vec> shifts;
    std::vector<Rational> scalars;
    if (t.contains("shifts")) {
      if (!t["shifts"].is_array())
        throw InputError("/task/shifts", "expected an array of vectors");
      for (std::size_t i = 0; i < t["shifts"].size(); ++i)
        shifts.push_back(io::parse_vec(t["shifts"][i], child("/task/shifts", i), p.ctx));
    }
    if (t.contains("scalars")) {
      if (!t["scalars"].is_array())
        throw InputError("/task/scalars", "expected an array of rationals");
      for (std::size_t i = 0; i < t["scalars"].size(); ++i)
        scalars.push_back(io::parse_rational(t["scalars"][i], child("/task/scalars", i)));
    }
    try {
      r = verify_vector_topology(s, p.carrier, shifts, scalars, p.cfg);
    } catch (const std::invalid_argument &e) {
      throw InputError("/task", e.what());
    }
  } else {
    throw InputError("/task/id", "unknown theorem id '" + id +
                                     "' (expected example-e1, t1, band, tau-subset or "
                                     "vector-topology)");
  }
  Outcome out;
  out.report = Json{{"theorem", encode(r)}};
  out.text = render_text(r);
  if (r.contradicts_claim)
    out.exit_code = exit_claim_contradicted;
  return out;
}

const char *task_kind_for(const std::string &command) {
  if (command == "check-set")
    return "check-set";
  if (command == "convergence")
    return "convergence";
  if (command == "fit")
    return "fit";
  if (command == "theorems")
    return "theorem";
  return nullptr;
}

} // namespace

Outcome execute(const std::string &command, const Json &doc, const Overrides &o) {
  Outcome out;
  try {
    const char *kind = task_kind_for(command);
    if (!kind)
      throw InputError("", "unknown command '" + command + "'");
    const Problem p = read_problem(doc, o);
    const std::string got = text_of(need(*p.task, "/task", "kind"), "/task/kind");
    if (got != kind)
      throw InputError("/task/kind", "command " + command + " expects a \"" + kind +
                                         "\" task, got \"" + got + "\"");
    out = command == "check-set"     ? check_set(p)
          : command == "convergence" ? convergence(p)
          : command == "fit"         ? fit(p)
                                     : theorem(p);
    Json report{{"command", command},
                {"carrier", encode(p.carrier)},
                {"semantics", to_string(p.cfg.semantics)},
                {"config", config_json(p.cfg)}};
    report.update(out.report);
    out.report = std::move(report);
  } catch (const InputError &e) {
    out = Outcome{exit_input_error, Json(), "", e.what()};
  } catch (const std::invalid_argument &e) {
    out = Outcome{exit_input_error, Json(), "", std::string("at '/task': ") + e.what()};
  } catch (const std::exception &e) {
    out = Outcome{exit_internal_error, Json(), "", std::string("internal error: ") + e.what()};
  }
  return out;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Order topologies on vector lattices: exact checks and theorem reports", "ordtop"};
  app.require_subcommand(1);
  std::string document;
  std::string semantics;
  long long horizon = -1;
  unsigned grid_scale = 0;
  unsigned jobs = 1;
  std::string output;

  const char *names[] = {"check-set", "convergence", "fit", "theorems"};
  const char *blurbs[] = {
      "closedness, openness and solidity verdicts for a set",
      "order convergence certificate and interval-topology catalog report",
      "dyadic interval fit around a point of an order-open set",
      "run a theorem verifier (example-e1, t1, band, tau-subset, vector-topology)",
  };
  for (int i = 0; i < 4; ++i) {
    CLI::App *sub = app.add_subcommand(names[i], blurbs[i]);
    sub->add_option("document", document, "problem document (JSON)")->required();
    sub->add_option("--semantics", semantics, "strict-partial or strict-uniform")
        ->check(CLI::IsMember({"strict-partial", "strict-uniform"}));
    sub->add_option("--horizon", horizon, "exact-check horizon")->check(CLI::NonNegativeNumber);
    sub->add_option("--grid-scale", grid_scale, "witness grid enlargement")
        ->check(CLI::PositiveNumber);
    sub->add_option("--output", output, "write the JSON report to this file");
    sub->add_option("--jobs", jobs, "search threads")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }

  std::string command;
  for (const char *n : names)
    if (app.got_subcommand(n))
      command = n;

  Overrides o;
  if (!semantics.empty())
    o.semantics = parse_semantics(semantics);
  if (horizon >= 0)
    o.horizon = static_cast<Index>(horizon);
  if (grid_scale > 0)
    o.grid_scale = grid_scale;
  o.jobs = jobs;

  std::ifstream in(document);
  if (!in) {
    err << "error: cannot read document '" << document << "'\n";
    return exit_input_error;
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error &e) {
    err << "error: document is not valid JSON: " << e.what() << "\n";
    return exit_input_error;
  }

  const Outcome res = execute(command, doc, o);
  if (!res.error.empty()) {
    err << "error: " << res.error << "\n";
    return res.exit_code;
  }
  out << res.text;
  if (!output.empty()) {
    std::ofstream f(output, std::ios::binary);
    f << io::dump(res.report);
    if (!f) {
      err << "error: cannot write '" << output << "'\n";
      return exit_internal_error;
    }
  }
  return res.exit_code;
}

} // namespace ordtop::cli
