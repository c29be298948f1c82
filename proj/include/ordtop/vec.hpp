#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordtop/rational.hpp"

namespace ordtop {

/// Executable lattice model. FinDim(n) is Q^n with the coordinatewise order;
/// TailSeq holds sequences (p_1, ..., p_m, t, t, ...) inside l^infinity.
class Carrier {
public:
  enum class Kind { fin_dim, tail_seq };

  static Carrier fin_dim(std::size_t n);
  static Carrier tail_seq() { return Carrier(Kind::tail_seq, 0); }

  Kind kind() const { return kind_; }
  bool is_fin_dim() const { return kind_ == Kind::fin_dim; }
  bool is_tail_seq() const { return kind_ == Kind::tail_seq; }
  /// Dimension for FinDim; 0 for TailSeq.
  std::size_t dim() const { return dim_; }

  std::string str() const;
  friend bool operator==(const Carrier &, const Carrier &) = default;

private:
  Carrier(Kind k, std::size_t d) : kind_(k), dim_(d) {}
  Kind kind_;
  std::size_t dim_;
};

class CarrierMismatch : public std::invalid_argument {
public:
  CarrierMismatch(const Carrier &a, const Carrier &b);
};

/// Coordinate position of the tail class in a TailSeq vector.
inline constexpr std::size_t kTail = std::numeric_limits<std::size_t>::max();

/// Element of a carrier. TailSeq values are kept canonical: the prefix never
/// ends with an entry equal to the tail.
class Vec {
public:
  static Vec fin_dim(std::vector<Rational> coords);
  static Vec tail_seq(std::vector<Rational> prefix, Rational tail);

  static Vec zero(const Carrier &c);
  static Vec constant(const Carrier &c, const Rational &value);
  static Vec ones(const Carrier &c) { return constant(c, Rational(1)); }
  /// Standard unit vector e_j, j is 1-based.
  static Vec unit(const Carrier &c, std::size_t j);

  const Carrier &carrier() const { return carrier_; }
  /// FinDim: n. TailSeq: length of the canonical prefix.
  std::size_t size() const { return head_.size(); }
  std::span<const Rational> head() const { return head_; }
  /// TailSeq tail value. FinDim vectors report 0.
  const Rational &tail() const { return tail_; }

  /// 0-based coordinate; TailSeq positions past the prefix (and kTail) give the
  /// tail value.
  const Rational &operator[](std::size_t i) const;

  bool is_zero() const;

  friend bool operator==(const Vec &, const Vec &) = default;

private:
  Vec(Carrier c, std::vector<Rational> head, Rational tail)
      : carrier_(c), head_(std::move(head)), tail_(std::move(tail)) {}

  Carrier carrier_;
  std::vector<Rational> head_;
  Rational tail_;

  friend Vec normalize(std::vector<Rational> prefix, Rational tail);
};

/// Canonical TailSeq vector from raw prefix and tail.
Vec normalize(std::vector<Rational> prefix, Rational tail);
Vec normalize(const Vec &x);

void require_same_carrier(const Vec &x, const Vec &y);

/// Number of explicit positions needed to compare x and y coordinatewise.
std::size_t aligned_size(const Vec &x, const Vec &y);

template <class Op> Vec zip_with(const Vec &x, const Vec &y, Op op) {
  require_same_carrier(x, y);
  const std::size_t n = aligned_size(x, y);
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(op(x[i], y[i]));
  if (x.carrier().is_fin_dim())
    return Vec::fin_dim(std::move(out));
  return normalize(std::move(out), op(x.tail(), y.tail()));
}

template <class Op> Vec map(const Vec &x, Op op) {
  std::vector<Rational> out;
  out.reserve(x.size());
  for (const auto &v : x.head())
    out.push_back(op(v));
  if (x.carrier().is_fin_dim())
    return Vec::fin_dim(std::move(out));
  return normalize(std::move(out), op(x.tail()));
}

bool leq(const Vec &x, const Vec &y);
Vec sup(const Vec &x, const Vec &y);
Vec inf(const Vec &x, const Vec &y);
Vec abs(const Vec &x);
Vec pos(const Vec &x);
Vec neg(const Vec &x);
Vec add(const Vec &x, const Vec &y);
Vec sub(const Vec &x, const Vec &y);
Vec scale(const Rational &t, const Vec &x);

inline Vec operator+(const Vec &x, const Vec &y) { return add(x, y); }
inline Vec operator-(const Vec &x, const Vec &y) { return sub(x, y); }
inline Vec operator-(const Vec &x) { return scale(Rational(-1), x); }
inline Vec operator*(const Rational &t, const Vec &x) { return scale(t, x); }

/// "(1, 0)" for FinDim, "[1, 0 | 1]" for TailSeq (prefix | tail).
std::string to_string(const Vec &x);

} // namespace ordtop
