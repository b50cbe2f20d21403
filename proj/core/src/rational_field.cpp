#include <stdexcept>

#include "witt/field.hpp"

namespace witt {

Element RationalField::wrap(Rational r) const {
  r.canonicalize();
  return Element(this, std::move(r));
}

Element RationalField::add(const Element& a, const Element& b) const { return wrap(value(a) + value(b)); }
Element RationalField::sub(const Element& a, const Element& b) const { return wrap(value(a) - value(b)); }
Element RationalField::neg(const Element& a) const { return wrap(-value(a)); }
Element RationalField::mul(const Element& a, const Element& b) const { return wrap(value(a) * value(b)); }

Element RationalField::inv(const Element& a) const {
  if (value(a) == 0) throw std::domain_error("division by zero in Q");
  return wrap(1 / value(a));
}

bool RationalField::equal(const Element& a, const Element& b) const { return value(a) == value(b); }
bool RationalField::is_zero(const Element& a) const { return value(a) == 0; }

std::optional<Element> RationalField::sqrt(const Element& a) const {
  const Rational& r = value(a);
  if (r < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  return wrap(Rational(n, d));
}

Element RationalField::random(Rng& rng) const {
  long num = static_cast<long>(rng() % 21) - 10;
  long den = static_cast<long>(rng() % 4) + 1;
  return wrap(Rational(num, den));
}

std::string RationalField::format(const Element& a) const { return value(a).get_str(); }

}  // namespace witt
