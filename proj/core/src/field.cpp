#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "witt/field.hpp"

namespace witt {

namespace {

FieldRef common_field(const Element& a, const Element& b) {
  if (!a.valid() || !b.valid()) throw std::invalid_argument("operation on an empty element");
  if (a.field() != b.field())
    throw std::invalid_argument("mixed-field operands: " + a.field()->descriptor() + " and " +
                                b.field()->descriptor());
  return a.field();
}

FieldRef checked(const Element& a) {
  if (!a.valid()) throw std::invalid_argument("operation on an empty element");
  return a.field();
}

struct Registry {
  std::mutex mutex;
  std::map<std::string, std::unique_ptr<Field>> fields;

  FieldRef intern(std::unique_ptr<Field> f) {
    std::lock_guard lock(mutex);
    auto key = f->descriptor();
    auto [it, inserted] = fields.try_emplace(key, std::move(f));
    return it->second.get();
  }
  FieldRef find(const std::string& key) {
    std::lock_guard lock(mutex);
    auto it = fields.find(key);
    return it == fields.end() ? nullptr : it->second.get();
  }
};

Registry& registry() {
  static auto* r = new Registry;
  return *r;
}

// Dense linear algebra over GF(2) on bit rows.
using Bits = std::vector<std::uint64_t>;

bool get_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void flip_bit(Bits& b, std::size_t i) { b[i / 64] ^= std::uint64_t{1} << (i % 64); }

// Solves sum_j x_j * columns[j] = target.  All vectors have `rows` bits.
std::optional<Bits> solve_gf2(const std::vector<Bits>& columns, Bits target, std::size_t rows) {
  const std::size_t n = columns.size();
  const std::size_t words = (n + 64) / 64;
  // Row-major augmented matrix: bits [0, n) are coefficients, bit n is the rhs.
  std::vector<Bits> m(rows, Bits(words, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (get_bit(columns[j], i)) flip_bit(m[i], j);
  for (std::size_t i = 0; i < rows; ++i)
    if (get_bit(target, i)) flip_bit(m[i], n);
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && !get_bit(m[sel], c)) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && get_bit(m[i], c))
        for (std::size_t w = 0; w < words; ++w) m[i][w] ^= m[r][w];
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (get_bit(m[i], n)) return std::nullopt;
  Bits x((n + 63) / 64 + 1, 0);
  for (std::size_t i = 0; i < r; ++i)
    if (get_bit(m[i], n)) flip_bit(x, pivot_col[i]);
  return x;
}

// Artin-Schreier equation over a finite field of characteristic 2: the map
// x -> x^2 + x is GF(2)-linear on the bit coordinates of the word.
WpMembership wp_finite_binary(const FiniteField& f, const Element& delta) {
  const std::size_t k = f.degree();
  std::vector<Bits> cols;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t e = std::uint64_t{1} << i;
    cols.push_back(Bits{f.wadd(f.wmul(e, e), e)});
  }
  auto sol = solve_gf2(cols, Bits{FiniteField::word(delta)}, k);
  WpMembership out;
  if (!sol) {
    out.decision = Decision::no;
    out.reason = "absolute trace is 1";
    return out;
  }
  out.decision = Decision::yes;
  out.witness = f.wrap((*sol)[0]);
  out.reason = "absolute trace is 0";
  return out;
}

// delta = n / s^2 in k0(t).  x = r/s with r^2 + r*s = n; the map r -> r^2 + rs
// is GF(2)-linear, so membership reduces to one linear system.
WpMembership wp_function_field(const FunctionField& F, const Element& delta,
                               std::uint64_t budget) {
  WpMembership out;
  const auto& value = F.value(delta);
  if (value.num.empty()) {
    out.decision = Decision::yes;
    out.witness = F.zero();
    out.reason = "delta is zero";
    return out;
  }
  auto s = F.psqrt(value.den);
  if (!s) {
    out.decision = Decision::no;
    out.reason = "denominator is not a square (a finite pole of odd order)";
    return out;
  }
  const long deg_n = static_cast<long>(value.num.size()) - 1;
  const long deg_s = static_cast<long>(s->size()) - 1;
  const long deg_den = 2 * deg_s;
  if (deg_n > deg_den && (deg_n - deg_den) % 2 == 1) {
    out.decision = Decision::no;
    out.reason = "pole of odd order at infinity";
    return out;
  }
  const FiniteField& k0 = F.constants();
  const std::size_t kbits = k0.degree();
  const long R = std::max(deg_n / 2, deg_s);
  const std::size_t unknowns = static_cast<std::size_t>(R + 1) * kbits;
  if (unknowns > budget) {
    out.decision = Decision::undecided;
    out.reason = "linear system exceeds budget";
    return out;
  }
  const long out_deg = std::max({2 * R, R + deg_s, deg_n});
  const std::size_t rows = static_cast<std::size_t>(out_deg + 1) * kbits;
  auto to_bits = [&](const FunctionField::Poly& p) {
    Bits b((rows + 63) / 64, 0);
    for (std::size_t d = 0; d < p.size(); ++d)
      for (std::size_t j = 0; j < kbits; ++j)
        if ((p[d] >> j) & 1u) flip_bit(b, d * kbits + j);
    return b;
  };
  std::vector<Bits> cols;
  for (long d = 0; d <= R; ++d)
    for (std::size_t j = 0; j < kbits; ++j) {
      FunctionField::Poly r(static_cast<std::size_t>(d) + 1, 0);
      r[static_cast<std::size_t>(d)] = std::uint64_t{1} << j;
      cols.push_back(to_bits(F.padd(F.pmul(r, r), F.pmul(r, *s))));
    }
  auto sol = solve_gf2(cols, to_bits(value.num), rows);
  if (!sol) {
    out.decision = Decision::no;
    out.reason = "x^2 + x = delta has no solution with the forced denominator";
    return out;
  }
  FunctionField::Poly r(static_cast<std::size_t>(R) + 1, 0);
  for (long d = 0; d <= R; ++d)
    for (std::size_t j = 0; j < kbits; ++j)
      if (get_bit(*sol, static_cast<std::size_t>(d) * kbits + j))
        r[static_cast<std::size_t>(d)] ^= std::uint64_t{1} << j;
  while (!r.empty() && r.back() == 0) r.pop_back();
  out.decision = Decision::yes;
  out.witness = F.fraction(r, *s);
  out.reason = "explicit solution";
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Element

bool Element::is_zero() const { return checked(*this)->is_zero(*this); }
bool Element::is_one() const { return checked(*this)->equal(*this, field_->one()); }
Element Element::inverse() const { return checked(*this)->inv(*this); }
std::string Element::str() const { return valid() ? field_->format(*this) : "<empty>"; }
Element Element::operator-() const { return checked(*this)->neg(*this); }
Element& Element::operator+=(const Element& o) { return *this = *this + o; }
Element& Element::operator-=(const Element& o) { return *this = *this - o; }
Element& Element::operator*=(const Element& o) { return *this = *this * o; }
Element& Element::operator/=(const Element& o) { return *this = *this / o; }

Element operator+(const Element& a, const Element& b) { return common_field(a, b)->add(a, b); }
Element operator-(const Element& a, const Element& b) { return common_field(a, b)->sub(a, b); }
Element operator*(const Element& a, const Element& b) { return common_field(a, b)->mul(a, b); }
Element operator/(const Element& a, const Element& b) {
  FieldRef f = common_field(a, b);
  return f->mul(a, f->inv(b));
}
bool operator==(const Element& a, const Element& b) {
  if (!a.valid() || !b.valid()) return a.valid() == b.valid();
  return a.field() == b.field() && a.field()->equal(a, b);
}

Element pow(const Element& a, long long e) {
  FieldRef f = checked(a);
  Element base = e < 0 ? f->inv(a) : a;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Element r = f->one();
  while (n) {
    if (n & 1u) r = f->mul(r, base);
    n >>= 1;
    if (n) base = f->mul(base, base);
  }
  return r;
}

// ---------------------------------------------------------------- Field defaults

Element Field::from_integer(const Integer& n) const {
  Integer m = abs(n);
  Element r = zero();
  Element b = one();
  while (m > 0) {
    if (mpz_odd_p(m.get_mpz_t())) r = add(r, b);
    m >>= 1;
    if (m > 0) b = add(b, b);
  }
  return n < 0 ? neg(r) : r;
}

void Field::require_finite() const {
  if (!is_finite()) throw std::logic_error("enumeration of an infinite field: " + descriptor());
}

Element Field::element_at(std::uint64_t) const {
  require_finite();
  throw std::logic_error("element_at not implemented for " + descriptor());
}

std::uint64_t Field::index_of(const Element&) const {
  require_finite();
  throw std::logic_error("index_of not implemented for " + descriptor());
}

std::optional<Element> Field::symbol(std::string_view) const { return std::nullopt; }

// ---------------------------------------------------------------- factories

FieldRef rationals() {
  static FieldRef q = registry().intern(std::make_unique<RationalField>());
  return q;
}

FieldRef prime_field(std::uint64_t p) { return galois_field(p, 1); }

FieldRef galois_field(std::uint64_t p, unsigned k) {
  if (k == 0) throw std::invalid_argument("GF(p^k) needs k >= 1");
  if (k == 1) return galois_field(p, std::vector<std::uint64_t>{0, 1});
  if (p < 2 || !is_probable_prime(Integer(static_cast<unsigned long>(p))))
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (count > (std::uint64_t{1} << 31) / p)
      throw std::invalid_argument("finite field too large");
    count *= p;
  }
  for (std::uint64_t w = 0; w < count; ++w) {
    std::vector<std::uint64_t> poly(k + 1, 0);
    std::uint64_t v = w;
    for (unsigned i = 0; i < k; ++i) {
      poly[i] = v % p;
      v /= p;
    }
    poly[k] = 1;
    if (poly[0] != 0 && is_irreducible_mod_p(poly, p)) return galois_field(p, poly);
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldRef galois_field(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
  auto f = std::make_unique<FiniteField>(p, modulus);
  if (FieldRef existing = registry().find(f->descriptor())) return existing;
  return registry().intern(std::move(f));
}

FieldRef function_field(FieldRef constants) {
  if (!constants || !constants->as_finite())
    throw std::invalid_argument("rational function fields need a finite constant field");
  auto f = std::make_unique<FunctionField>(*constants->as_finite());
  if (FieldRef existing = registry().find(f->descriptor())) return existing;
  return registry().intern(std::move(f));
}

FieldRef radical_extension(FieldRef base, const Element& d) {
  auto f = std::make_unique<QuadraticExtension>(base, ExtensionKind::radical, d);
  if (FieldRef existing = registry().find(f->descriptor())) return existing;
  return registry().intern(std::move(f));
}

FieldRef artin_schreier_extension(FieldRef base, const Element& delta) {
  auto f = std::make_unique<QuadraticExtension>(base, ExtensionKind::artin_schreier, delta);
  if (FieldRef existing = registry().find(f->descriptor())) return existing;
  return registry().intern(std::move(f));
}

// ---------------------------------------------------------------- operations

std::optional<Element> square_root(const Element& a) { return checked(a)->sqrt(a); }

namespace {
const QuadraticExtension& extension_of(const Element& a) {
  const auto* ext = checked(a)->as_extension();
  if (!ext) throw std::invalid_argument("not an element of a quadratic extension: " + a.str());
  return *ext;
}
}  // namespace

Element norm(const Element& a) { return extension_of(a).norm(a); }
Element trace(const Element& a) { return extension_of(a).trace(a); }
Element functional_s(const Element& a) { return extension_of(a).functional_s(a); }
Element conjugate(const Element& a) { return extension_of(a).conjugate(a); }

WpMembership wp_membership(const Element& delta, std::uint64_t budget) {
  FieldRef f = checked(delta);
  if (f->characteristic() != 2)
    throw std::invalid_argument("Artin-Schreier membership needs characteristic 2");
  if (const auto* ff = f->as_finite()) return wp_finite_binary(*ff, delta);
  if (const auto* fn = f->as_function_field()) return wp_function_field(*fn, delta, budget);
  WpMembership out;
  if (f->is_finite() && *f->order() <= budget) {
    for (std::uint64_t i = 0; i < *f->order(); ++i) {
      Element x = f->element_at(i);
      if (x * x + x == delta) {
        out.decision = Decision::yes;
        out.witness = x;
        out.reason = "exhaustive search";
        return out;
      }
    }
    out.decision = Decision::no;
    out.reason = "exhaustive search";
    return out;
  }
  out.reason = "unsupported field for exact membership";
  return out;
}

}  // namespace witt
