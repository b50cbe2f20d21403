#include <stdexcept>
#include <string>

#include "witt/field.hpp"

namespace witt {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly pmod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pmod(std::move(r), m, p);
}

Poly pgcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  Poly xp{0, 1};  // x^(p^i) mod f
  for (std::size_t i = 1; i <= k / 2; ++i) {
    Poly r{1}, b = xp;
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1u) r = pmulmod(r, b, f, p);
      b = pmulmod(b, b, f, p);
    }
    xp = r;
    Poly g = xp;
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    if (pgcd(f, g, p).size() > 1) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_probable_prime(Integer(static_cast<unsigned long>(p))))
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is not a supported prime");
  for (auto& c : modulus_) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree >= 1");
  k_ = static_cast<unsigned>(modulus_.size() - 1);
  if (k_ == 1 && modulus_[0] != 0)
    throw std::invalid_argument("prime fields use the modulus x");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k_; ++i) {
    if (q > (std::uint64_t{1} << 31) / p) throw std::invalid_argument("finite field too large");
    q *= p;
  }
  q_ = q;
  if (!is_irreducible_mod_p(modulus_, p))
    throw std::invalid_argument("modulus is reducible over GF(" + std::to_string(p) + ")");
  if (q_ <= 256 && k_ > 1) {
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    inv_table_.resize(q_);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = 0; b < q_; ++b) {
        std::uint64_t s = 0;
        if (p_ == 2) {
          s = a ^ b;
        } else {
          std::uint64_t x = a, y = b, scale = 1;
          for (unsigned i = 0; i < k_; ++i) {
            s += ((x % p_ + y % p_) % p_) * scale;
            x /= p_;
            y /= p_;
            scale *= p_;
          }
        }
        add_table_[a * q_ + b] = static_cast<std::uint16_t>(s);
        mul_table_[a * q_ + b] = static_cast<std::uint16_t>(mul_slow(a, b));
      }
    for (std::uint64_t a = 1; a < q_; ++a)
      for (std::uint64_t b = 1; b < q_; ++b)
        if (mul_table_[a * q_ + b] == 1) inv_table_[a] = static_cast<std::uint16_t>(b);
  }
}

std::string FiniteField::descriptor() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  std::string s = "Fq(" + std::to_string(p_) + "," + std::to_string(k_) + ",poly=[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(modulus_[i]);
  }
  return s + "])";
}

std::uint64_t FiniteField::wadd(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  std::uint64_t s = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    s += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return s;
}

std::uint64_t FiniteField::wneg(std::uint64_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  std::uint64_t s = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    s += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return s;
}

std::uint64_t FiniteField::wsub(std::uint64_t a, std::uint64_t b) const { return wadd(a, wneg(b)); }

std::uint64_t FiniteField::mul_slow(std::uint64_t a, std::uint64_t b) const {
  if (p_ == 2) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < k_; ++i)
      if ((b >> i) & 1u) r ^= a << i;
    std::uint64_t mod_bits = 0;
    for (unsigned i = 0; i <= k_; ++i)
      if (modulus_[i]) mod_bits |= std::uint64_t{1} << i;
    for (int d = 2 * static_cast<int>(k_) - 2; d >= static_cast<int>(k_); --d)
      if ((r >> d) & 1u) r ^= mod_bits << (d - static_cast<int>(k_));
    return r;
  }
  Poly x(k_), y(k_);
  for (unsigned i = 0; i < k_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  Poly r = pmulmod(x, y, modulus_, p_);
  std::uint64_t w = 0;
  for (std::size_t i = r.size(); i-- > 0;) w = w * p_ + r[i];
  return w;
}

std::uint64_t FiniteField::wmul(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) return a * b % p_;
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return mul_slow(a, b);
}

std::uint64_t FiniteField::wpow(std::uint64_t a, const Integer& e) const {
  std::uint64_t r = 1;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = wmul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = wmul(r, a);
  }
  return r;
}

std::uint64_t FiniteField::winv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("division by zero in " + descriptor());
  if (k_ == 1) return inv_mod(a, p_);
  if (!inv_table_.empty()) return inv_table_[a];
  return wpow(a, Integer(static_cast<unsigned long>(q_ - 2)));
}

std::optional<std::uint64_t> FiniteField::wsqrt(std::uint64_t a) const {
  if (a == 0) return 0;
  if (p_ == 2) return wpow(a, Integer(static_cast<unsigned long>(q_ / 2)));
  const std::uint64_t qm1 = q_ - 1;
  if (wpow(a, Integer(static_cast<unsigned long>(qm1 / 2))) != 1) return std::nullopt;
  // Tonelli-Shanks.
  std::uint64_t t = qm1;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (wpow(z, Integer(static_cast<unsigned long>(qm1 / 2))) == 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = wpow(z, Integer(static_cast<unsigned long>(t)));
  std::uint64_t x = wpow(a, Integer(static_cast<unsigned long>((t + 1) / 2)));
  std::uint64_t b = wpow(a, Integer(static_cast<unsigned long>(t)));
  while (b != 1) {
    std::uint64_t i = 0, bb = b;
    while (bb != 1) {
      bb = wmul(bb, bb);
      ++i;
    }
    std::uint64_t e = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) e = wmul(e, e);
    x = wmul(x, e);
    c = wmul(e, e);
    b = wmul(b, c);
    m = i;
  }
  return x;
}

std::uint64_t FiniteField::absolute_trace(std::uint64_t a) const {
  std::uint64_t s = 0, x = a;
  const Integer pz(static_cast<unsigned long>(p_));
  for (unsigned i = 0; i < k_; ++i) {
    s = wadd(s, x);
    x = wpow(x, pz);
  }
  return s;
}

std::string FiniteField::wformat(std::uint64_t a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::vector<std::uint64_t> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  std::string s;
  for (unsigned i = k_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) s += std::to_string(d[i]) + "*";
    s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

Element FiniteField::from_integer(const Integer& n) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p_);
  return wrap(r.get_ui());
}

Element FiniteField::add(const Element& a, const Element& b) const { return wrap(wadd(word(a), word(b))); }
Element FiniteField::sub(const Element& a, const Element& b) const { return wrap(wsub(word(a), word(b))); }
Element FiniteField::neg(const Element& a) const { return wrap(wneg(word(a))); }
Element FiniteField::mul(const Element& a, const Element& b) const { return wrap(wmul(word(a), word(b))); }
Element FiniteField::inv(const Element& a) const { return wrap(winv(word(a))); }
bool FiniteField::equal(const Element& a, const Element& b) const { return word(a) == word(b); }
bool FiniteField::is_zero(const Element& a) const { return word(a) == 0; }

std::optional<Element> FiniteField::sqrt(const Element& a) const {
  auto r = wsqrt(word(a));
  if (!r) return std::nullopt;
  return wrap(*r);
}

Element FiniteField::random(Rng& rng) const { return wrap(rng() % q_); }

Element FiniteField::element_at(std::uint64_t index) const {
  if (index >= q_) throw std::out_of_range("element index out of range");
  return wrap(index);
}

std::optional<Element> FiniteField::symbol(std::string_view name) const {
  if (name == "x" && k_ > 1) return wrap(p_);
  return std::nullopt;
}

}  // namespace witt
