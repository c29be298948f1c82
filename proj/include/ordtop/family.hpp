#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ordtop/set_expr.hpp"
#include "ordtop/vec.hpp"

namespace ordtop {

/// Template parameters outside their domain (e.g. Scale with lambda >= 1).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Symbolic sequence (x_k), k >= 0, of carrier vectors drawn from a fixed
/// template catalog. Every template carries a tail rule, so eventual
/// properties are decided exactly rather than sampled.
class Family {
public:
  struct Node;

  explicit Family(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const Node &node() const { return *node_; }
  const Carrier &carrier() const;

  friend bool operator==(const Family &a, const Family &b);

private:
  std::shared_ptr<const Node> node_;
};

namespace families {

/// values[0], values[1], ..., then constant at values.back().
struct Explicit {
  std::vector<Vec> values;
  friend bool operator==(const Explicit &, const Explicit &) = default;
};
/// offset + scale * (0, ..., 0, 1, 1, ...) with k leading zeros (TailSeq).
struct Shift {
  Rational scale;
  Vec offset;
  friend bool operator==(const Shift &, const Shift &) = default;
};
/// offset + scale * (1, ..., 1, 0, 0, ...) with k leading ones (TailSeq).
struct ShiftUp {
  Rational scale;
  Vec offset;
  friend bool operator==(const ShiftUp &, const ShiftUp &) = default;
};
/// lambda^k * v, v >= 0, 0 < lambda < 1.
struct Scale {
  Vec v;
  Rational lambda;
  friend bool operator==(const Scale &, const Scale &) = default;
};
/// c + p / (k + 1 + q), q >= 0.
struct CoordDecay {
  Vec c;
  Vec p;
  Rational q;
  friend bool operator==(const CoordDecay &, const CoordDecay &) = default;
};
/// (sup_{j <= k} base(j)) inf cap.
struct RunningSupMeet {
  Family base;
  Vec cap;
  friend bool operator==(const RunningSupMeet &, const RunningSupMeet &) = default;
};
/// |base(k) - center| where base is monotone with order limit center.
struct Deviation {
  Family base;
  Vec center;
  friend bool operator==(const Deviation &, const Deviation &) = default;
};

Family explicit_values(std::vector<Vec> values);
Family shift(Rational scale = Rational(1),
             std::optional<Vec> offset = std::nullopt);
Family shift_up(Rational scale = Rational(1),
                std::optional<Vec> offset = std::nullopt);
Family scale(Vec v, Rational lambda);
Family coord_decay(Vec c, Vec p, Rational q = Rational(0));
Family running_sup_meet(Family base, Vec cap);
Family deviation(Family base, Vec center);

} // namespace families

struct Family::Node
    : std::variant<families::Explicit, families::Shift, families::ShiftUp,
                   families::Scale, families::CoordDecay,
                   families::RunningSupMeet, families::Deviation> {
  using variant::variant;
};

inline bool operator==(const Family &a, const Family &b) {
  return static_cast<const Family::Node::variant &>(a.node()) ==
         static_cast<const Family::Node::variant &>(b.node());
}

template <class T> const T *get_if(const Family &f) {
  return std::get_if<T>(&static_cast<const Family::Node::variant &>(f.node()));
}

template <class Visitor> decltype(auto) visit(Visitor &&v, const Family &f) {
  return std::visit(std::forward<Visitor>(v),
                    static_cast<const Family::Node::variant &>(f.node()));
}

std::string template_name(const Family &f);

/// Template name with its parameters, e.g. "scale(v=(1, 1), lambda=1/2)".
std::string to_string(const Family &f);

Vec value(const Family &f, Index k);

struct Monotonicity {
  enum class Direction { increasing, decreasing, neither };
  Direction direction;
  /// Closed-form rule that decides the direction for all k.
  std::string rule;
  /// Exact pairwise comparisons were replayed for k < horizon_checked.
  Index horizon_checked = 0;
  /// For `neither`: an index k with value(k+1) not <= value(k), and one with
  /// value(k+1) not >= value(k).
  std::optional<Index> not_decreasing_at;
  std::optional<Index> not_increasing_at;
};

std::string to_string(Monotonicity::Direction d);

Monotonicity monotonicity(const Family &f, Index horizon = 100);

/// Exact order limit of a monotone family (its supremum or infimum).
/// Throws std::domain_error for non-monotone families.
Vec order_limit(const Family &f);

/// Coordinatewise limit, defined for every template.
Vec coordinate_limit(const Family &f);

/// Coordinatewise supremum over all k.
Vec coordinate_sup(const Family &f);

/// Tail rule. Returns sorted indices 0 = c_0 < c_1 < ... < c_m such that
/// member(S, value(k)) is constant on each [c_i, c_{i+1}) and on [c_m, inf).
std::vector<Index> membership_change_points(const Family &f, const SetExpr &s);

} // namespace ordtop
