#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ordtop/interval.hpp"
#include "ordtop/vec.hpp"

namespace ordtop {

/// Subset of a carrier built from a closed grammar: intervals, ideals, bands,
/// solid hulls, coordinate half-spaces, the finitely supported sequences, and
/// boolean combinations and affine images of those.
class SetExpr {
public:
  struct Node;

  explicit SetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const Node &node() const { return *node_; }

private:
  std::shared_ptr<const Node> node_;
};

enum class Relation { le, ge };

namespace sets {

struct IntervalSet {
  Interval interval;
};
struct Ideal {
  std::vector<Vec> gens;
};
struct Band {
  std::vector<Vec> gens;
};
struct SolidHull {
  std::vector<Vec> gens;
};
/// {z : z_index rel bound}; index is 1-based, or kTail for the tail value.
struct HalfSpace {
  std::size_t index;
  Relation rel;
  Rational bound;
};
/// Finitely supported sequences (TailSeq vectors with tail 0).
struct TailZero {};
struct Complement {
  SetExpr inner;
};
struct Union {
  std::vector<SetExpr> parts;
};
struct Intersection {
  std::vector<SetExpr> parts;
};
/// S + by.
struct Translate {
  SetExpr inner;
  Vec by;
};
/// factor * S, factor nonzero.
struct Dilate {
  SetExpr inner;
  Rational factor;
};

SetExpr interval(Interval I);
SetExpr ideal(std::vector<Vec> gens);
SetExpr band(std::vector<Vec> gens);
SetExpr solid_hull(std::vector<Vec> gens);
SetExpr half_space(std::size_t index, Relation rel, Rational bound);
SetExpr tail_zero();
SetExpr complement(SetExpr s);
SetExpr unite(std::vector<SetExpr> parts);
SetExpr intersect(std::vector<SetExpr> parts);
SetExpr translate(SetExpr s, Vec by);
SetExpr dilate(SetExpr s, Rational factor);
/// Whole space (empty intersection) and empty set (empty union).
SetExpr full();
SetExpr empty();

} // namespace sets

struct SetExpr::Node
    : std::variant<sets::IntervalSet, sets::Ideal, sets::Band, sets::SolidHull,
                   sets::HalfSpace, sets::TailZero, sets::Complement,
                   sets::Union, sets::Intersection, sets::Translate,
                   sets::Dilate> {
  using variant::variant;
};

template <class T> const T *get_if(const SetExpr &s) {
  return std::get_if<T>(&static_cast<const SetExpr::Node::variant &>(s.node()));
}

template <class Visitor> decltype(auto) visit(Visitor &&v, const SetExpr &s) {
  return std::visit(std::forward<Visitor>(v),
                    static_cast<const SetExpr::Node::variant &>(s.node()));
}

bool is_full(const SetExpr &s);
bool is_empty_union(const SetExpr &s);

/// Checks every embedded vector lives in `c` and indices fit; throws
/// CarrierMismatch or std::invalid_argument.
void validate(const SetExpr &s, const Carrier &c);

bool member(const SetExpr &s, const Vec &z);

/// Rewrites so Complement only wraps leaves (De Morgan, double complement,
/// complement commutes with Translate and Dilate).
SetExpr push_complements(const SetExpr &s);

/// Per-position comparison constants of a set. Membership of a vector z in S
/// is a function of the signs of z_j - r for r in the constants of position j;
/// in TailSeq all positions >= relevant_length share the `rest` constants.
struct SetProfile {
  std::size_t relevant_length = 0;
  std::vector<std::set<Rational>> head;
  std::set<Rational> rest;

  const std::set<Rational> &at(std::size_t position) const {
    return position < head.size() ? head[position] : rest;
  }
};

SetProfile profile(const SetExpr &s, const Carrier &c);

/// Largest prefix length / coordinate index mentioned anywhere in s.
std::size_t relevant_length(const SetExpr &s);

/// All vectors embedded in s, mapped through the enclosing Translate/Dilate
/// nodes into the ambient coordinates. Used to seed witness searches.
std::vector<Vec> anchor_points(const SetExpr &s, const Carrier &c);

std::string to_string(const SetExpr &s);

} // namespace ordtop
