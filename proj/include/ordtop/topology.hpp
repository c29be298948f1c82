#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordtop/convergence.hpp"
#include "ordtop/family.hpp"
#include "ordtop/search_config.hpp"
#include "ordtop/set_expr.hpp"

namespace ordtop {

/// A family that eventually lives in S while its limit does not.
struct ClosureWitness {
  Family family;
  Monotonicity::Direction direction;
  Vec limit;
  Index in_set_from;
  bool limit_outside;
};

struct SearchReport {
  /// Size of the canonical candidate grid, and how many of its entries (in
  /// canonical order) were needed to decide.
  std::size_t grid_size = 0;
  std::size_t examined = 0;
  /// (template name, number of candidates) in enumeration order.
  std::vector<std::pair<std::string, std::size_t>> templates;
  unsigned grid_scale = 1;
};

struct Verdict {
  enum class Status { certified, refuted, unknown };
  Status status = Status::unknown;
  /// Certified: one line per structural rule used, children indented.
  std::vector<std::string> rule_trace;
  std::optional<ClosureWitness> witness;
  SearchReport search;
};

std::string to_string(Verdict::Status s);

/// Which notion of closedness a witness refutes.
enum class ClosureKind { quasi_order, order };

Verdict check_quasi_order_closed(const SetExpr &s, const Carrier &c, const SearchConfig &cfg = {});
/// Order-open iff the complement is quasi-order closed.
Verdict is_order_open(const SetExpr &s, const Carrier &c, const SearchConfig &cfg = {});
/// Witnesses may be any order-convergent family, monotone or not.
Verdict check_order_closed(const SetExpr &s, const Carrier &c, const SearchConfig &cfg = {});

struct WitnessCheck {
  bool valid = true;
  std::string reason;
};

/// Re-validates a stored witness with no search: direction (monotone for
/// quasi-order witnesses), limit, eventual membership from in_set_from, and
/// exclusion of the limit.
WitnessCheck replay_witness(const SetExpr &s, const ClosureWitness &w, ClosureKind kind,
                            Index horizon = 100);

// -- interval neighbourhoods ------------------------------------------------

enum class CatalogMode { chain, full };

struct NeighborhoodCatalog {
  Vec center;
  std::vector<Interval> intervals;
  /// The first chain_length intervals are the symmetric chain
  /// (x - e/m, x + e/m), m = 1..chain_length, nested with widths 2e/m.
  std::size_t chain_length = 0;
};

/// Symmetric chain of the given depth and, in full mode, single-coordinate
/// perturbations (x - d e_j, x + d e_j) for j <= depth, d in {1, 1/2}.
/// Perturbations are empty under strict_uniform and are then left out.
NeighborhoodCatalog neighborhood_catalog(const Vec &x, std::size_t depth,
                                         CatalogMode mode = CatalogMode::full,
                                         IntervalSemantics sem = IntervalSemantics::strict_partial);

struct TauEEntry {
  Interval interval;
  EventualMembership membership;
};

struct TauEReport {
  /// No catalog interval refutes convergence. This is evidence over the
  /// catalog only, not a proof of convergence in the interval topology.
  bool consistent = true;
  std::vector<TauEEntry> entries;
  /// Indices into entries of intervals the family keeps leaving.
  std::vector<std::size_t> refuting;
};

TauEReport tau_e_convergence_report(const Family &f, const Vec &x, const NeighborhoodCatalog &cat,
                                    Index horizon = 100);

// -- interval fitting -------------------------------------------------------

/// Exact answer to I subset of S when the set's shape allows one.
std::optional<bool> interval_subset_exact(const Interval &I, const SetExpr &s);

struct Containment {
  bool contained = false;
  /// False: decided by sampling `samples` points of I.
  bool exact = true;
  std::size_t samples = 0;
};

Containment interval_subset(const Interval &I, const SetExpr &s, const SearchConfig &cfg = {});

struct FitResult {
  std::optional<Interval> interval;
  /// Dyadic step t of the accepted interval (c - 2^-t e, c + 2^-t e).
  unsigned step = 0;
  Containment containment;
};

/// Dyadic shrinkage around c without the openness precondition.
FitResult fit_dyadic(const Vec &c, const SetExpr &s, const SearchConfig &cfg = {});

/// Requires c in S and is_order_open(S) not refuted (std::invalid_argument
/// otherwise).
FitResult interval_fit(const Vec &c, const SetExpr &s, const SearchConfig &cfg = {});

struct VectorTopologyReport {
  std::vector<std::pair<Vec, Verdict>> translates;
  std::vector<std::pair<Rational, Verdict>> dilates;
  bool any_refuted = false;
};

/// Requires is_order_open(S) certified (std::invalid_argument otherwise).
VectorTopologyReport vector_topology_probe(const SetExpr &s, const Carrier &c,
                                           const std::vector<Vec> &shifts,
                                           const std::vector<Rational> &scalars,
                                           const SearchConfig &cfg = {});

} // namespace ordtop
