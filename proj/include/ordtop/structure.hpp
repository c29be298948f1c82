#pragma once

#include <optional>
#include <vector>

#include "ordtop/search_config.hpp"
#include "ordtop/set_expr.hpp"
#include "ordtop/vec.hpp"

namespace ordtop {

struct IdealMembership {
  bool member = false;
  /// Least lambda with |y| <= lambda * (|g_1| + ... + |g_m|) when member.
  /// For y = 0 this is the infimum 0; every positive lambda works.
  std::optional<Rational> lambda;
};

/// Membership in the ideal generated by gens.
IdealMembership ideal_member(const std::vector<Vec> &gens, const Vec &y);

/// Membership in the band generated by gens: y vanishes wherever every
/// generator vanishes (tail included).
bool band_member(const std::vector<Vec> &gens, const Vec &y);

/// |y| <= |g_i| for some generator.
bool solid_hull_member(const std::vector<Vec> &gens, const Vec &y);

bool disjoint(const Vec &x, const Vec &y);

/// x must be positive and nonzero (std::invalid_argument otherwise). True iff
/// x has exactly one nonzero coordinate; a nonzero tail never qualifies.
bool is_atom(const Vec &x);

struct AtomDescription {
  Carrier carrier;
  /// FinDim: e_1..e_n. TailSeq: the first `sample` unit vectors of the
  /// infinite family {e_i}.
  std::vector<Vec> unit_atoms;
  bool infinitely_many;
  bool atomic;
};

AtomDescription carrier_atoms(const Carrier &c, std::size_t sample = 4);

struct SolidityVerdict {
  enum class Status { certified, refuted, unknown };
  Status status;
  /// Certified: the structural rule that applied.
  std::string rule;
  /// Refuted: member(S, x), !member(S, y), |y| <= |x|.
  std::optional<Vec> x;
  std::optional<Vec> y;
  std::size_t pairs_checked = 0;
};

SolidityVerdict check_solid(const SetExpr &s, const Carrier &c,
                            const SearchConfig &cfg = {});

} // namespace ordtop
