#include "ordtop/convergence.hpp"

#include <algorithm>

#include "overloaded.hpp"

namespace ordtop {

using detail::overloaded;

EventualMembership eventually_in(const Family &f, const SetExpr &s, Index horizon) {
  const std::vector<Index> points = membership_change_points(f, s);
  std::vector<bool> in(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    in[i] = member(s, value(f, points[i]));

  EventualMembership out;
  out.tail_threshold = points.back();
  out.horizon_checked = horizon;
  if (!in.back()) {
    out.witness = points.back();
  } else {
    out.holds = true;
    std::size_t i = points.size() - 1;
    while (i > 0 && in[i - 1])
      --i;
    out.from = points[i];
  }

  // Replay the piecewise-constant prediction against direct evaluation.
  std::size_t seg = 0;
  for (Index k = 0; k <= horizon; ++k) {
    while (seg + 1 < points.size() && points[seg + 1] <= k)
      ++seg;
    if (member(s, value(f, k)) != in[seg])
      throw std::logic_error("tail rule for " + template_name(f) + " mispredicts membership in " +
                             to_string(s) + " at k = " + std::to_string(k));
  }
  return out;
}

namespace {

// max_{j >= k} d_j for a finite list, computed right to left.
std::vector<Vec> tail_suprema(std::vector<Vec> d) {
  for (std::size_t k = d.size() - 1; k-- > 0;)
    d[k] = sup(d[k], d[k + 1]);
  return d;
}

std::optional<ConvergenceRefutation> limit_mismatch(const Vec &limit, const Vec &x) {
  const std::size_t n = aligned_size(limit, x);
  for (std::size_t j = 0; j < n; ++j)
    if (limit[j] != x[j])
      return ConvergenceRefutation{j, limit[j], x[j]};
  if (limit.tail() != x.tail())
    return ConvergenceRefutation{kTail, limit.tail(), x.tail()};
  return std::nullopt;
}

} // namespace

Family dominating_family(const Family &f, const Vec &x) {
  if (f.carrier() != x.carrier())
    throw CarrierMismatch(f.carrier(), x.carrier());
  if (coordinate_limit(f) != x)
    throw std::invalid_argument(template_name(f) + " family does not converge to " + to_string(x));
  return visit(overloaded{
                   [&](const families::Explicit &n) {
                     std::vector<Vec> d;
                     d.reserve(n.values.size());
                     for (const auto &v : n.values)
                       d.push_back(abs(v - x));
                     return families::explicit_values(tail_suprema(std::move(d)));
                   },
                   [](const families::Shift &n) {
                     return families::shift(abs(n.scale), Vec::zero(Carrier::tail_seq()));
                   },
                   [](const families::ShiftUp &n) {
                     return families::shift(abs(n.scale), Vec::zero(Carrier::tail_seq()));
                   },
                   [&](const families::Scale &) { return f; },
                   [](const families::CoordDecay &n) {
                     return families::coord_decay(Vec::zero(n.c.carrier()), abs(n.p), n.q);
                   },
                   [&](const families::RunningSupMeet &) { return families::deviation(f, x); },
                   [&](const families::Deviation &) { return f; },
               },
               f);
}

ConvergenceResult order_converges(const Family &f, const Vec &x, Index horizon) {
  if (f.carrier() != x.carrier())
    throw CarrierMismatch(f.carrier(), x.carrier());
  ConvergenceResult out;
  if (auto miss = limit_mismatch(coordinate_limit(f), x)) {
    out.refutation = *miss;
    return out;
  }
  ConvergenceCertificate cert{x, dominating_family(f, x), {}};
  const CertificateCheck check = validate_certificate(f, cert, horizon);
  if (!check.valid)
    throw std::logic_error("constructed certificate failed validation: " + check.reason);
  out.certificate = std::move(cert);
  return out;
}

CertificateCheck validate_certificate(const Family &f, const ConvergenceCertificate &cert,
                                      Index horizon) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  const Family &y = cert.dominating;
  if (y.carrier() != f.carrier() || cert.limit.carrier() != f.carrier())
    return fail("carrier mismatch");
  if (monotonicity(y, horizon).direction != Monotonicity::Direction::decreasing)
    return fail("dominating family is not decreasing");
  if (!order_limit(y).is_zero())
    return fail("dominating family does not decrease to 0");

  if (!cert.thresholds.empty()) {
    for (std::size_t i = 0; i < cert.thresholds.size(); ++i) {
      const Vec yi = value(y, i);
      const SetExpr ball =
          sets::interval(Interval::closed(cert.limit - yi, cert.limit + yi));
      const EventualMembership em = eventually_in(f, ball, horizon);
      if (!em.holds || em.from > cert.thresholds[i])
        return fail("threshold " + std::to_string(cert.thresholds[i]) + " for y(" +
                    std::to_string(i) + ") is too small");
    }
    return {};
  }

  for (Index k = 0; k <= horizon; ++k)
    if (!leq(abs(value(f, k) - cert.limit), value(y, k)))
      return fail("|x_k - x| <= y_k fails at k = " + std::to_string(k));
  if (coordinate_limit(f) != cert.limit || !(dominating_family(f, cert.limit) == y))
    return fail("dominating family is not the template's canonical one, so domination past the "
                "horizon is not established");
  return {};
}

} // namespace ordtop
