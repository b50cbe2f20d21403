#include <algorithm>
#include <stdexcept>

#include "witt/field.hpp"

namespace witt {

namespace {

void trim(FunctionField::Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool atomic(const std::string& s) {
  return s.find_first_of("+-/", 1) == std::string::npos && s.find('*') == std::string::npos;
}

}  // namespace

FunctionField::FunctionField(const FiniteField& constants) : k0_(constants) {}

std::string FunctionField::descriptor() const { return k0_.descriptor() + "(t)"; }

const RationalFunction& FunctionField::value(const Element& a) const {
  return *std::get<std::shared_ptr<const RationalFunction>>(a.repr());
}

FunctionField::Poly FunctionField::padd(const Poly& a, const Poly& b) const {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = k0_.wadd(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

FunctionField::Poly FunctionField::psub(const Poly& a, const Poly& b) const {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = k0_.wsub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

FunctionField::Poly FunctionField::pmul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k0_.wadd(r[i + j], k0_.wmul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<FunctionField::Poly, FunctionField::Poly> FunctionField::pdivmod(const Poly& a,
                                                                          const Poly& b) const {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  trim(r);
  Poly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  const std::uint64_t lead_inv = k0_.winv(b.back());
  while (r.size() >= b.size()) {
    const std::uint64_t c = k0_.wmul(r.back(), lead_inv);
    const std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      r[shift + i] = k0_.wsub(r[shift + i], k0_.wmul(c, b[i]));
    trim(r);
  }
  trim(q);
  return {q, r};
}

FunctionField::Poly FunctionField::pgcd(Poly a, Poly b) const {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = pdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = k0_.winv(a.back());
    for (auto& c : a) c = k0_.wmul(c, inv);
  }
  return a;
}

std::optional<FunctionField::Poly> FunctionField::psqrt(const Poly& a) const {
  if (a.empty()) return Poly{};
  if ((a.size() - 1) % 2 != 0) return std::nullopt;
  const std::size_t m = (a.size() - 1) / 2;
  auto lead = k0_.wsqrt(a.back());
  if (!lead) return std::nullopt;
  Poly r(m + 1, 0);
  r[m] = *lead;
  if (k0_.prime() == 2) {
    for (std::size_t i = 0; i <= m; ++i) {
      auto c = k0_.wsqrt(a[2 * i]);
      r[i] = *c;
    }
  } else {
    const std::uint64_t two_lead_inv = k0_.winv(k0_.wadd(r[m], r[m]));
    for (std::size_t j = m; j-- > 0;) {
      std::uint64_t acc = a[m + j];
      for (std::size_t i = j + 1; i <= m; ++i) {
        const std::size_t l = m + j - i;
        if (l <= j || l > m) continue;
        acc = k0_.wsub(acc, k0_.wmul(r[i], r[l]));
      }
      r[j] = k0_.wmul(acc, two_lead_inv);
    }
  }
  if (pmul(r, r) != a) return std::nullopt;
  return r;
}

Element FunctionField::fraction(Poly num, Poly den) const {
  trim(num);
  trim(den);
  if (den.empty()) throw std::domain_error("division by zero in " + descriptor());
  auto rf = std::make_shared<RationalFunction>();
  if (num.empty()) {
    rf->den = Poly{1};
    return Element(this, std::shared_ptr<const RationalFunction>(std::move(rf)));
  }
  Poly g = pgcd(num, den);
  if (g.size() > 1) {
    num = pdivmod(num, g).first;
    den = pdivmod(den, g).first;
  }
  const std::uint64_t inv = k0_.winv(den.back());
  for (auto& c : num) c = k0_.wmul(c, inv);
  for (auto& c : den) c = k0_.wmul(c, inv);
  rf->num = std::move(num);
  rf->den = std::move(den);
  return Element(this, std::shared_ptr<const RationalFunction>(std::move(rf)));
}

Element FunctionField::constant(const Element& c) const {
  if (c.field() != &k0_) throw std::invalid_argument("constant from a different field");
  return polynomial(Poly{FiniteField::word(c)});
}

Element FunctionField::zero() const { return polynomial({}); }
Element FunctionField::one() const { return polynomial(Poly{1}); }
Element FunctionField::from_integer(const Integer& n) const { return constant(k0_.from_integer(n)); }

Element FunctionField::add(const Element& a, const Element& b) const {
  const auto& x = value(a);
  const auto& y = value(b);
  if (x.den == y.den) return fraction(padd(x.num, y.num), x.den);
  return fraction(padd(pmul(x.num, y.den), pmul(y.num, x.den)), pmul(x.den, y.den));
}

Element FunctionField::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element FunctionField::neg(const Element& a) const {
  const auto& x = value(a);
  Poly n = x.num;
  for (auto& c : n) c = k0_.wneg(c);
  return fraction(std::move(n), x.den);
}

Element FunctionField::mul(const Element& a, const Element& b) const {
  const auto& x = value(a);
  const auto& y = value(b);
  return fraction(pmul(x.num, y.num), pmul(x.den, y.den));
}

Element FunctionField::inv(const Element& a) const {
  const auto& x = value(a);
  if (x.num.empty()) throw std::domain_error("division by zero in " + descriptor());
  return fraction(x.den, x.num);
}

bool FunctionField::equal(const Element& a, const Element& b) const {
  const auto& x = value(a);
  const auto& y = value(b);
  return x.num == y.num && x.den == y.den;
}

bool FunctionField::is_zero(const Element& a) const { return value(a).num.empty(); }

std::optional<Element> FunctionField::sqrt(const Element& a) const {
  const auto& x = value(a);
  auto n = psqrt(x.num);
  if (!n) return std::nullopt;
  auto d = psqrt(x.den);
  if (!d) return std::nullopt;
  return fraction(*n, *d);
}

Element FunctionField::random(Rng& rng) const {
  Poly num(rng() % 4, 0), den(rng() % 3 + 1, 0);
  for (auto& c : num) c = rng() % k0_.size();
  for (auto& c : den) c = rng() % k0_.size();
  den.back() = 1;
  return fraction(std::move(num), std::move(den));
}

std::optional<Element> FunctionField::symbol(std::string_view name) const {
  if (name == "t") return variable();
  if (auto c = k0_.symbol(name)) return constant(*c);
  return std::nullopt;
}

std::string FunctionField::pformat(const Poly& a) const {
  if (a.empty()) return "0";
  std::string s;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    std::string c = k0_.wformat(a[i]);
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += atomic(c) ? c : "(" + c + ")";
      continue;
    }
    if (c != "1") s += (atomic(c) ? c : "(" + c + ")") + "*";
    s += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return s;
}

std::string FunctionField::format(const Element& a) const {
  const auto& x = value(a);
  if (x.den == Poly{1}) return pformat(x.num);
  std::string n = pformat(x.num), d = pformat(x.den);
  return (atomic(n) ? n : "(" + n + ")") + "/" + (atomic(d) ? d : "(" + d + ")");
}

}  // namespace witt
