#include "ordtop/vec.hpp"

#include <algorithm>

namespace ordtop {

Carrier Carrier::fin_dim(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("FinDim carrier needs a positive dimension");
  return Carrier(Kind::fin_dim, n);
}

std::string Carrier::str() const {
  return is_fin_dim() ? "FinDim(" + std::to_string(dim_) + ")" : "TailSeq";
}

CarrierMismatch::CarrierMismatch(const Carrier &a, const Carrier &b)
    : std::invalid_argument("carrier mismatch: " + a.str() + " vs " + b.str()) {}

Vec Vec::fin_dim(std::vector<Rational> coords) {
  Carrier c = Carrier::fin_dim(coords.size());
  return Vec(c, std::move(coords), Rational(0));
}

Vec Vec::tail_seq(std::vector<Rational> prefix, Rational tail) {
  return normalize(std::move(prefix), std::move(tail));
}

Vec normalize(std::vector<Rational> prefix, Rational tail) {
  while (!prefix.empty() && prefix.back() == tail)
    prefix.pop_back();
  return Vec(Carrier::tail_seq(), std::move(prefix), std::move(tail));
}

Vec normalize(const Vec &x) {
  if (x.carrier().is_fin_dim())
    return x;
  return normalize({x.head().begin(), x.head().end()}, x.tail());
}

Vec Vec::zero(const Carrier &c) { return constant(c, Rational(0)); }

Vec Vec::constant(const Carrier &c, const Rational &value) {
  if (c.is_fin_dim())
    return fin_dim(std::vector<Rational>(c.dim(), value));
  return tail_seq({}, value);
}

Vec Vec::unit(const Carrier &c, std::size_t j) {
  if (j == 0 || (c.is_fin_dim() && j > c.dim()))
    throw std::out_of_range("unit vector index " + std::to_string(j) +
                            " outside " + c.str());
  const std::size_t n = c.is_fin_dim() ? c.dim() : j;
  std::vector<Rational> coords(n, Rational(0));
  coords[j - 1] = Rational(1);
  if (c.is_fin_dim())
    return fin_dim(std::move(coords));
  return tail_seq(std::move(coords), Rational(0));
}

const Rational &Vec::operator[](std::size_t i) const {
  if (i < head_.size())
    return head_[i];
  if (carrier_.is_fin_dim())
    throw std::out_of_range("coordinate " + std::to_string(i) + " outside " +
                            carrier_.str());
  return tail_;
}

bool Vec::is_zero() const {
  return tail_.is_zero() &&
         std::all_of(head_.begin(), head_.end(),
                     [](const Rational &r) { return r.is_zero(); });
}

void require_same_carrier(const Vec &x, const Vec &y) {
  if (x.carrier() != y.carrier())
    throw CarrierMismatch(x.carrier(), y.carrier());
}

std::size_t aligned_size(const Vec &x, const Vec &y) {
  return std::max(x.size(), y.size());
}

bool leq(const Vec &x, const Vec &y) {
  require_same_carrier(x, y);
  const std::size_t n = aligned_size(x, y);
  for (std::size_t i = 0; i < n; ++i)
    if (y[i] < x[i])
      return false;
  return x.tail() <= y.tail();
}

Vec sup(const Vec &x, const Vec &y) {
  return zip_with(x, y, [](const Rational &a, const Rational &b) { return max(a, b); });
}

Vec inf(const Vec &x, const Vec &y) {
  return zip_with(x, y, [](const Rational &a, const Rational &b) { return min(a, b); });
}

Vec abs(const Vec &x) {
  return map(x, [](const Rational &a) { return ordtop::abs(a); });
}

Vec pos(const Vec &x) {
  return map(x, [](const Rational &a) { return a.sign() > 0 ? a : Rational(0); });
}

Vec neg(const Vec &x) {
  return map(x, [](const Rational &a) { return a.sign() < 0 ? -a : Rational(0); });
}

Vec add(const Vec &x, const Vec &y) {
  return zip_with(x, y, [](const Rational &a, const Rational &b) { return a + b; });
}

Vec sub(const Vec &x, const Vec &y) {
  return zip_with(x, y, [](const Rational &a, const Rational &b) { return a - b; });
}

Vec scale(const Rational &t, const Vec &x) {
  return map(x, [&t](const Rational &a) { return t * a; });
}

std::string to_string(const Vec &x) {
  std::string out = x.carrier().is_fin_dim() ? "(" : "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i)
      out += ", ";
    out += x.head()[i].str();
  }
  if (x.carrier().is_fin_dim())
    return out + ")";
  return out + (x.size() ? " | " : "| ") + x.tail().str() + "]";
}

} // namespace ordtop
