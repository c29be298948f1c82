#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ordtop/convergence.hpp"
#include "ordtop/family.hpp"
#include "ordtop/set_expr.hpp"
#include "ordtop/structure.hpp"
#include "ordtop/theorems.hpp"
#include "ordtop/topology.hpp"

namespace ordtop::io {

/// Insertion-ordered so reports keep a stable, readable field order.
using Json = nlohmann::ordered_json;

/// Malformed input. `pointer` is the JSON pointer of the offending value.
class InputError : public std::invalid_argument {
public:
  InputError(std::string pointer, const std::string &message);
  const std::string &pointer() const { return pointer_; }

private:
  std::string pointer_;
};

/// Appends a key or index to a JSON pointer, escaping '~' and '/'.
std::string child(const std::string &pointer, const std::string &key);
std::string child(const std::string &pointer, std::size_t index);

struct ParseContext {
  /// When set, every vector must live in this carrier.
  std::optional<Carrier> carrier;
  /// Used by intervals that do not name their own semantics.
  IntervalSemantics semantics = IntervalSemantics::strict_partial;
};

// Formats. Rationals are strings "p/q" (integers may also be JSON numbers).
// FinDim vectors are arrays of rationals; TailSeq vectors are
// {"prefix": [...], "tail": r}. Sets are {"op": ...} objects and families are
// {"template": ...} objects; docs/schema holds the full grammar.

Rational parse_rational(const Json &j, const std::string &ptr);
Carrier parse_carrier(const Json &j, const std::string &ptr);
Vec parse_vec(const Json &j, const std::string &ptr, const ParseContext &ctx);
Interval parse_interval(const Json &j, const std::string &ptr, const ParseContext &ctx);
SetExpr parse_set(const Json &j, const std::string &ptr, const ParseContext &ctx);
Family parse_family(const Json &j, const std::string &ptr, const ParseContext &ctx);
IntervalSemantics parse_semantics_field(const Json &j, const std::string &ptr);

Verdict parse_verdict(const Json &j, const std::string &ptr, const ParseContext &ctx);
EventualMembership parse_membership(const Json &j, const std::string &ptr);
ConvergenceCertificate parse_certificate(const Json &j, const std::string &ptr,
                                         const ParseContext &ctx);
ConvergenceRefutation parse_refutation(const Json &j, const std::string &ptr);
TauEReport parse_tau_e(const Json &j, const std::string &ptr, const ParseContext &ctx);
FitResult parse_fit(const Json &j, const std::string &ptr, const ParseContext &ctx);
TheoremReport parse_theorem_report(const Json &j, const std::string &ptr = "");

Json encode(const Rational &r);
Json encode(const Carrier &c);
Json encode(const Vec &x);
Json encode(const Interval &I);
Json encode(const SetExpr &s);
Json encode(const Family &f);
Json encode(const Verdict &v);
Json encode(const SolidityVerdict &v);
Json encode(const Monotonicity &m);
Json encode(const EventualMembership &m);
Json encode(const ConvergenceCertificate &c);
Json encode(const ConvergenceRefutation &r);
Json encode(const ConvergenceResult &r);
Json encode(const TauEReport &r);
Json encode(const Containment &c);
Json encode(const FitResult &f);
Json encode(const TheoremReport &r);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json &j);

} // namespace ordtop::io
