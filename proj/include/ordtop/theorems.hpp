#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordtop/family.hpp"
#include "ordtop/search_config.hpp"
#include "ordtop/set_expr.hpp"
#include "ordtop/topology.hpp"

namespace ordtop {

enum class Conclusion { confirmed, counterexample_found, inconclusive, inconclusive_hypothesis };

std::string to_string(Conclusion c);

/// One library call and its outcome. The optional payloads hold exactly what
/// replay_report needs to re-check the step without searching.
struct TheoremStep {
  /// Library operation name, e.g. "monotonicity" or "is_order_open".
  std::string operation;
  std::string status;
  std::string detail;

  std::optional<Family> family;
  std::optional<SetExpr> set;
  /// Limit, centre or target point the operation was run against.
  std::optional<Vec> point;
  std::optional<Verdict> verdict;
  std::optional<EventualMembership> membership;
  std::optional<TauEReport> tau_e;
  std::optional<ConvergenceCertificate> certificate;
  std::optional<ConvergenceRefutation> refutation;
  /// interval_fit samples: centre and fitted interval.
  std::vector<std::pair<Vec, FitResult>> fits;
};

struct TheoremReport {
  std::string theorem;
  std::optional<Carrier> carrier;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<TheoremStep> steps;
  Conclusion conclusion = Conclusion::inconclusive;
  /// Set when a computation disagrees with the mathematical statement being
  /// checked, as opposed to the statement simply not applying.
  bool contradicts_claim = false;
  std::vector<std::string> notes;
};

/// The shifted-ones sequence in TailSeq: decreasing to 0, never inside
/// (-e1, e1), so (-e1, e1) is in the interval topology but not order open.
TheoremReport verify_example_e1(const SearchConfig &cfg = {});

/// Convergence in the interval topology forces order convergence. Runs the
/// standard construction y_m = hi_m - lo_m over the symmetric chain and
/// cross-checks against order_converges. `chain` must be a catalog whose chain
/// part is the symmetric chain around x.
TheoremReport verify_theorem_t1(const Family &f, const Vec &x, const NeighborhoodCatalog &chain,
                                const SearchConfig &cfg = {});

/// A quasi-order closed ideal is a band. `s` must be an Ideal, Band or
/// TailZero expression.
TheoremReport verify_band_proposition(const SetExpr &s, const Carrier &c,
                                      const SearchConfig &cfg = {});

/// Every point of an order-open set sits in an open interval inside the set.
/// Each catalog entry must be certified order open.
TheoremReport tau_subset_probe(const std::vector<SetExpr> &catalog, const Carrier &c,
                               std::size_t samples_per_set, const SearchConfig &cfg = {});

/// Translations and nonzero dilations keep order-open sets order open.
TheoremReport verify_vector_topology(const SetExpr &s, const Carrier &c,
                                     const std::vector<Vec> &shifts,
                                     const std::vector<Rational> &scalars,
                                     const SearchConfig &cfg = {});

/// Re-checks every step from its stored payload: witnesses and certificates
/// are replayed, exact decisions recomputed, structural verdicts re-derived.
WitnessCheck replay_report(const TheoremReport &r, Index horizon = 100);

/// Plain-text rendering: statement order, one line per step.
std::string render_text(const TheoremReport &r);

} // namespace ordtop
