#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordtop/family.hpp"
#include "ordtop/set_expr.hpp"

namespace ordtop {

/// Exact answer to "is value(k) in S for all large k?".
struct EventualMembership {
  bool holds = false;
  /// holds: least k0 with value(k) in S for every k >= k0.
  Index from = 0;
  /// !holds: an index past the tail threshold with value(k) outside S. The
  /// membership pattern is frozen from there, so failures recur forever.
  Index witness = 0;
  /// Membership is constant for all k >= tail_threshold.
  Index tail_threshold = 0;
  /// Indices k <= horizon_checked were also evaluated directly.
  Index horizon_checked = 0;
};

EventualMembership eventually_in(const Family &f, const SetExpr &s, Index horizon = 100);

/// Witness of x_k -> x in order: |value(k) - limit| <= dominating(k) with
/// dominating decreasing to 0.
struct ConvergenceCertificate {
  Vec limit;
  Family dominating;
  /// Empty: domination holds index by index. Otherwise thresholds[i] is an
  /// index from which |value(k) - limit| <= dominating(i) for all k.
  std::vector<Index> thresholds;
};

struct ConvergenceRefutation {
  /// 0-based coordinate, or kTail.
  std::size_t position;
  Rational coordinate_limit;
  Rational target;
};

struct ConvergenceResult {
  std::optional<ConvergenceCertificate> certificate;
  std::optional<ConvergenceRefutation> refutation;
  bool converges() const { return certificate.has_value(); }
};

/// Per-template dominating family at the family's coordinate limit x.
/// Throws std::invalid_argument if x is not that limit.
Family dominating_family(const Family &f, const Vec &x);

ConvergenceResult order_converges(const Family &f, const Vec &x, Index horizon = 100);

struct CertificateCheck {
  bool valid = true;
  std::string reason;
};

/// Re-validates a certificate from its stored data: dominating is decreasing
/// with order limit 0, and either thresholds hold (decided exactly with
/// eventually_in) or per-index domination holds for k <= horizon and beyond by
/// template identity with dominating_family(f, limit).
CertificateCheck validate_certificate(const Family &f, const ConvergenceCertificate &cert,
                                      Index horizon = 100);

} // namespace ordtop
