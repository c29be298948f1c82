#include "ordtop/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ordtop {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-')
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational::Rational(long num, long den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0)
    throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-')
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw std::invalid_argument("rational with zero denominator \"" +
                                std::string(text) + "\"");
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (is_integer())
    return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational &Rational::operator+=(const Rational &o) {
  v_ += o.v_;
  return *this;
}
Rational &Rational::operator-=(const Rational &o) {
  v_ -= o.v_;
  return *this;
}
Rational &Rational::operator*=(const Rational &o) {
  v_ *= o.v_;
  return *this;
}
Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.str();
}

Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

mpz_class floor(const Rational &r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return q;
}

mpz_class ceil(const Rational &r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return q;
}

Index to_index(const mpz_class &z) {
  if (z < 0)
    return 0;
  if (!mpz_fits_ulong_p(z.get_mpz_t()))
    throw std::overflow_error("sequence index exceeds 64 bits: " + z.get_str());
  return static_cast<Index>(z.get_ui());
}

} // namespace ordtop
