#include <stdexcept>

#include "witt/field.hpp"

namespace witt {

namespace {

const ExtensionPair& pair_of(const Element& a) {
  return *std::get<std::shared_ptr<const ExtensionPair>>(a.repr());
}

bool atomic(const std::string& s) {
  return s.find_first_of("+-/*", 1) == std::string::npos;
}

// Generic Tonelli-Shanks for a finite field of odd order given by a Field.
std::optional<Element> tonelli_shanks(const Field& f, const Element& a, std::uint64_t order) {
  if (a.is_zero()) return a;
  const std::uint64_t qm1 = order - 1;
  auto power = [](Element b, std::uint64_t e) {
    Element r = b.field()->one();
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  };
  if (!power(a, qm1 / 2).is_one()) return std::nullopt;
  std::uint64_t t = qm1;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  Element z;
  for (std::uint64_t i = 1; i < order; ++i) {
    z = f.element_at(i);
    if (!z.is_zero() && !power(z, qm1 / 2).is_one()) break;
  }
  std::uint64_t m = s;
  Element c = power(z, t);
  Element x = power(a, (t + 1) / 2);
  Element b = power(a, t);
  while (!b.is_one()) {
    std::uint64_t i = 0;
    Element bb = b;
    while (!bb.is_one()) {
      bb = bb * bb;
      ++i;
    }
    Element e = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) e = e * e;
    x = x * e;
    c = e * e;
    b = b * c;
    m = i;
  }
  return x;
}

}  // namespace

QuadraticExtension::QuadraticExtension(FieldRef base, ExtensionKind kind, Element parameter)
    : base_(base), kind_(kind), parameter_(std::move(parameter)) {
  if (!base_) throw std::invalid_argument("extension of a null field");
  if (parameter_.field() != base_)
    throw std::invalid_argument("extension parameter is not in the base field");
  if (kind_ == ExtensionKind::radical) {
    if (base_->characteristic() == 2)
      throw std::invalid_argument("sqrt extensions are inseparable in characteristic 2");
    if (parameter_.is_zero() || base_->sqrt(parameter_))
      throw std::invalid_argument(parameter_.str() + " is a square in " + base_->descriptor());
  } else {
    if (base_->characteristic() != 2)
      throw std::invalid_argument("Artin-Schreier extensions need characteristic 2");
    auto wp = wp_membership(parameter_);
    if (wp.decision == Decision::yes)
      throw std::invalid_argument(parameter_.str() + " is of the form x^2+x in " +
                                  base_->descriptor());
    if (wp.decision == Decision::undecided)
      throw std::invalid_argument("cannot certify that x^2+x-" + parameter_.str() +
                                  " is irreducible: " + wp.reason);
  }
  base_order_ = base_->order();
  if (base_order_ && *base_order_ >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("finite extension too large");
}

std::string QuadraticExtension::descriptor() const {
  return base_->descriptor() + (kind_ == ExtensionKind::radical ? "(sqrt(" : "(artin-schreier(") +
         parameter_.str() + "))";
}

std::optional<std::uint64_t> QuadraticExtension::order() const {
  if (!base_order_) return std::nullopt;
  return *base_order_ * *base_order_;
}

Element QuadraticExtension::make(const Element& x, const Element& y) const {
  if (x.field() != base_ || y.field() != base_)
    throw std::invalid_argument("coordinates must lie in " + base_->descriptor());
  return Element(this, std::make_shared<const ExtensionPair>(ExtensionPair{x, y}));
}

Element QuadraticExtension::embed(const Element& a) const { return make(a, base_->zero()); }

std::pair<Element, Element> QuadraticExtension::coordinates(const Element& a) const {
  if (a.field() != this) throw std::invalid_argument("element not in " + descriptor());
  const auto& p = pair_of(a);
  return {p.x, p.y};
}

std::optional<Element> QuadraticExtension::to_base(const Element& a) const {
  auto [x, y] = coordinates(a);
  if (!y.is_zero()) return std::nullopt;
  return x;
}

Element QuadraticExtension::conjugate(const Element& a) const {
  auto [x, y] = coordinates(a);
  if (kind_ == ExtensionKind::radical) return make(x, -y);
  return make(x + y, y);
}

Element QuadraticExtension::norm(const Element& a) const {
  auto [x, y] = coordinates(a);
  if (kind_ == ExtensionKind::radical) return x * x - parameter_ * y * y;
  return x * x + x * y + parameter_ * y * y;
}

Element QuadraticExtension::trace(const Element& a) const {
  auto [x, y] = coordinates(a);
  if (kind_ == ExtensionKind::radical) return x + x;
  return y;
}

Element QuadraticExtension::zero() const { return make(base_->zero(), base_->zero()); }
Element QuadraticExtension::one() const { return make(base_->one(), base_->zero()); }

Element QuadraticExtension::add(const Element& a, const Element& b) const {
  const auto& p = pair_of(a);
  const auto& q = pair_of(b);
  return make(p.x + q.x, p.y + q.y);
}

Element QuadraticExtension::sub(const Element& a, const Element& b) const {
  const auto& p = pair_of(a);
  const auto& q = pair_of(b);
  return make(p.x - q.x, p.y - q.y);
}

Element QuadraticExtension::neg(const Element& a) const {
  const auto& p = pair_of(a);
  return make(-p.x, -p.y);
}

Element QuadraticExtension::mul(const Element& a, const Element& b) const {
  const auto& p = pair_of(a);
  const auto& q = pair_of(b);
  Element yy = p.y * q.y;
  Element x = p.x * q.x + parameter_ * yy;
  Element y = p.x * q.y + p.y * q.x;
  if (kind_ == ExtensionKind::artin_schreier) y = y + yy;
  return make(x, y);
}

Element QuadraticExtension::inv(const Element& a) const {
  Element n = norm(a);
  if (n.is_zero()) throw std::domain_error("division by zero in " + descriptor());
  auto [x, y] = coordinates(conjugate(a));
  Element ni = n.inverse();
  return make(x * ni, y * ni);
}

bool QuadraticExtension::equal(const Element& a, const Element& b) const {
  const auto& p = pair_of(a);
  const auto& q = pair_of(b);
  return p.x == q.x && p.y == q.y;
}

bool QuadraticExtension::is_zero(const Element& a) const {
  const auto& p = pair_of(a);
  return p.x.is_zero() && p.y.is_zero();
}

std::optional<Element> QuadraticExtension::sqrt(const Element& a) const {
  auto [x, y] = coordinates(a);
  if (kind_ == ExtensionKind::artin_schreier) {
    // (u + v eta)^2 = u^2 + delta v^2 + v^2 eta.
    auto v = base_->sqrt(y);
    if (!v) return std::nullopt;
    auto u = base_->sqrt(x + parameter_ * y);
    if (!u) return std::nullopt;
    return make(*u, *v);
  }
  if (order()) return tonelli_shanks(*this, a, *order());
  // (u + v eta)^2 = u^2 + d v^2 + 2uv eta.
  if (y.is_zero()) {
    if (auto u = base_->sqrt(x)) return make(*u, base_->zero());
    if (auto v = base_->sqrt(x / parameter_)) return make(base_->zero(), *v);
    return std::nullopt;
  }
  auto n = base_->sqrt(x * x - parameter_ * y * y);
  if (!n) return std::nullopt;
  const Element half = base_->from_int(2).inverse();
  for (const Element& cand : {(x + *n) * half, (x - *n) * half}) {
    if (cand.is_zero()) continue;
    if (auto u = base_->sqrt(cand)) return make(*u, y / (*u + *u));
  }
  return std::nullopt;
}

Element QuadraticExtension::random(Rng& rng) const { return make(base_->random(rng), base_->random(rng)); }

Element QuadraticExtension::element_at(std::uint64_t index) const {
  require_finite();
  const std::uint64_t qb = *base_order_;
  if (index >= qb * qb) throw std::out_of_range("element index out of range");
  return make(base_->element_at(index % qb), base_->element_at(index / qb));
}

std::uint64_t QuadraticExtension::index_of(const Element& a) const {
  require_finite();
  auto [x, y] = coordinates(a);
  return base_->index_of(x) + *base_order_ * base_->index_of(y);
}

std::optional<Element> QuadraticExtension::symbol(std::string_view name) const {
  if (name == "eta") return generator();
  if (auto s = base_->symbol(name)) return embed(*s);
  return std::nullopt;
}

std::string QuadraticExtension::format(const Element& a) const {
  auto [x, y] = coordinates(a);
  std::string out = x.is_zero() ? "" : x.str();
  if (y.is_zero()) return out.empty() ? "0" : out;
  std::string fy = y.str();
  std::string term;
  if (fy == "1") {
    term = "eta";
  } else if (fy == "-1") {
    term = "-eta";
  } else if (atomic(fy)) {
    term = fy + "*eta";
  } else {
    term = "(" + fy + ")*eta";
  }
  if (out.empty()) return term;
  if (term[0] == '-') return out + term;
  return out + "+" + term;
}

}  // namespace witt
