#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ordtop {

/// Exact rational scalar. Always in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : v_(value) {} // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Parses "p/q" or "p" (optional leading '-').
  static Rational parse(std::string_view text);

  std::string str() const;
  const mpq_class &raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

private:
  mpq_class v_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

Rational abs(const Rational &r);
inline const Rational &max(const Rational &a, const Rational &b) {
  return a < b ? b : a;
}
inline const Rational &min(const Rational &a, const Rational &b) {
  return b < a ? b : a;
}

/// Floor / ceiling as arbitrary-precision integers.
mpz_class floor(const Rational &r);
mpz_class ceil(const Rational &r);

/// Sequence index type. to_index clamps negatives to 0 and throws
/// std::overflow_error past 64 bits instead of wrapping.
using Index = std::uint64_t;
Index to_index(const mpz_class &z);

} // namespace ordtop
