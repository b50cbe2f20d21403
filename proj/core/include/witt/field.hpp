#pragma once

// Exact arithmetic in the supported base fields (GF(p^k), Q, k0(t)) and in
// their separable quadratic extensions.
//
// Fields are interned, immutable and never destroyed, so an Element carries a
// plain pointer to its field.  Every Element has a canonical representation:
// two elements compare equal iff their representations are identical.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "witt/decision.hpp"
#include "witt/integer.hpp"

namespace witt {

class Field;
class FiniteField;
class FunctionField;
class QuadraticExtension;
struct ExtensionPair;

using FieldRef = const Field*;
using Rng = std::mt19937_64;

/// num/den over the constant field of k0(t); coefficient words, lowest degree
/// first.  Canonical: gcd(num, den) = 1, den monic, zero is 0/1.
struct RationalFunction {
  std::vector<std::uint64_t> num;
  std::vector<std::uint64_t> den;
};

class Element {
 public:
  using Repr = std::variant<std::uint64_t, Rational, std::shared_ptr<const RationalFunction>,
                            std::shared_ptr<const ExtensionPair>>;

  Element() = default;
  Element(FieldRef field, Repr repr) : field_(field), repr_(std::move(repr)) {}

  FieldRef field() const noexcept { return field_; }
  bool valid() const noexcept { return field_ != nullptr; }
  const Repr& repr() const noexcept { return repr_; }

  bool is_zero() const;
  bool is_one() const;
  Element inverse() const;
  std::string str() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element& operator/=(const Element& o);

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);

 private:
  FieldRef field_ = nullptr;
  Repr repr_;
};

struct ExtensionPair {
  Element x;
  Element y;
};

Element pow(const Element& a, long long e);

enum class FieldKind { finite, rationals, function_field, quadratic_extension };

class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;
  virtual ~Field() = default;

  virtual FieldKind kind() const = 0;
  /// Canonical descriptor; parse_field(descriptor()) returns this field.
  virtual std::string descriptor() const = 0;
  virtual std::uint64_t characteristic() const = 0;
  virtual std::optional<std::uint64_t> order() const { return std::nullopt; }
  bool is_finite() const { return order().has_value(); }

  virtual Element zero() const = 0;
  virtual Element one() const = 0;
  virtual Element from_integer(const Integer& n) const;
  Element from_int(long n) const { return from_integer(Integer(n)); }

  virtual Element add(const Element& a, const Element& b) const = 0;
  virtual Element sub(const Element& a, const Element& b) const = 0;
  virtual Element neg(const Element& a) const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  /// Throws std::domain_error on zero.
  virtual Element inv(const Element& a) const = 0;
  virtual bool equal(const Element& a, const Element& b) const = 0;
  virtual bool is_zero(const Element& a) const = 0;

  /// A square root when one exists in this field.
  virtual std::optional<Element> sqrt(const Element& a) const = 0;
  /// Uniform for finite fields, small height otherwise.
  virtual Element random(Rng& rng) const = 0;
  /// Enumeration of finite fields: element_at(i) for 0 <= i < order().
  virtual Element element_at(std::uint64_t index) const;
  virtual std::uint64_t index_of(const Element& a) const;
  /// Named generators usable in element literals ("x", "t", "eta").
  virtual std::optional<Element> symbol(std::string_view name) const;
  virtual std::string format(const Element& a) const = 0;

  virtual const FiniteField* as_finite() const { return nullptr; }
  virtual const FunctionField* as_function_field() const { return nullptr; }
  virtual const QuadraticExtension* as_extension() const { return nullptr; }
  bool is_rationals() const { return kind() == FieldKind::rationals; }

 protected:
  Field() = default;
  void require_finite() const;
};

// ---------------------------------------------------------------- finite fields

/// GF(p^k) = GF(p)[x]/(modulus).  Elements are words: the base-p digits of
/// the word are the coefficients of the reduced polynomial, lowest first.
class FiniteField final : public Field {
 public:
  FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t prime() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return q_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  std::uint64_t wadd(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t wsub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t wneg(std::uint64_t a) const;
  std::uint64_t wmul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t winv(std::uint64_t a) const;
  std::uint64_t wpow(std::uint64_t a, const Integer& e) const;
  std::optional<std::uint64_t> wsqrt(std::uint64_t a) const;
  /// Trace down to the prime field, as an integer in [0, p).
  std::uint64_t absolute_trace(std::uint64_t a) const;
  std::string wformat(std::uint64_t a) const;

  Element wrap(std::uint64_t w) const { return Element(this, w); }
  static std::uint64_t word(const Element& a) { return std::get<std::uint64_t>(a.repr()); }

  FieldKind kind() const override { return FieldKind::finite; }
  std::string descriptor() const override;
  std::uint64_t characteristic() const override { return p_; }
  std::optional<std::uint64_t> order() const override { return q_; }
  Element zero() const override { return wrap(0); }
  Element one() const override { return wrap(1); }
  Element from_integer(const Integer& n) const override;
  Element add(const Element& a, const Element& b) const override;
  Element sub(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool equal(const Element& a, const Element& b) const override;
  bool is_zero(const Element& a) const override;
  std::optional<Element> sqrt(const Element& a) const override;
  Element random(Rng& rng) const override;
  Element element_at(std::uint64_t index) const override;
  std::uint64_t index_of(const Element& a) const override { return word(a); }
  std::optional<Element> symbol(std::string_view name) const override;
  std::string format(const Element& a) const override { return wformat(word(a)); }
  const FiniteField* as_finite() const override { return this; }

 private:
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;  // monic, degree k_, lowest first
  std::vector<std::uint16_t> mul_table_;  // q*q entries for small fields
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> inv_table_;
};

// ---------------------------------------------------------------- rationals

class RationalField final : public Field {
 public:
  static const Rational& value(const Element& a) { return std::get<Rational>(a.repr()); }
  Element wrap(Rational r) const;

  FieldKind kind() const override { return FieldKind::rationals; }
  std::string descriptor() const override { return "Q"; }
  std::uint64_t characteristic() const override { return 0; }
  Element zero() const override { return wrap(Rational(0)); }
  Element one() const override { return wrap(Rational(1)); }
  Element from_integer(const Integer& n) const override { return wrap(Rational(n)); }
  Element add(const Element& a, const Element& b) const override;
  Element sub(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool equal(const Element& a, const Element& b) const override;
  bool is_zero(const Element& a) const override;
  std::optional<Element> sqrt(const Element& a) const override;
  Element random(Rng& rng) const override;
  std::string format(const Element& a) const override;
};

// ---------------------------------------------------------------- k0(t)

class FunctionField final : public Field {
 public:
  using Poly = std::vector<std::uint64_t>;

  explicit FunctionField(const FiniteField& constants);

  const FiniteField& constants() const noexcept { return k0_; }
  const RationalFunction& value(const Element& a) const;
  /// Builds the canonical element num/den (den nonzero).
  Element fraction(Poly num, Poly den) const;
  Element polynomial(Poly p) const { return fraction(std::move(p), Poly{1}); }
  Element constant(const Element& c) const;
  Element variable() const { return polynomial(Poly{0, 1}); }

  // polynomial helpers over the constant field
  Poly padd(const Poly& a, const Poly& b) const;
  Poly psub(const Poly& a, const Poly& b) const;
  Poly pmul(const Poly& a, const Poly& b) const;
  std::pair<Poly, Poly> pdivmod(const Poly& a, const Poly& b) const;
  Poly pgcd(Poly a, Poly b) const;
  std::optional<Poly> psqrt(const Poly& a) const;
  std::string pformat(const Poly& a) const;

  FieldKind kind() const override { return FieldKind::function_field; }
  std::string descriptor() const override;
  std::uint64_t characteristic() const override { return k0_.prime(); }
  Element zero() const override;
  Element one() const override;
  Element from_integer(const Integer& n) const override;
  Element add(const Element& a, const Element& b) const override;
  Element sub(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool equal(const Element& a, const Element& b) const override;
  bool is_zero(const Element& a) const override;
  std::optional<Element> sqrt(const Element& a) const override;
  Element random(Rng& rng) const override;
  std::optional<Element> symbol(std::string_view name) const override;
  std::string format(const Element& a) const override;
  const FunctionField* as_function_field() const override { return this; }

 private:
  const FiniteField& k0_;
};

// ---------------------------------------------------------------- K = F(eta)

enum class ExtensionKind {
  radical,         // eta^2 = d, characteristic != 2
  artin_schreier,  // eta^2 + eta = delta, characteristic 2
};

class QuadraticExtension final : public Field {
 public:
  QuadraticExtension(FieldRef base, ExtensionKind kind, Element parameter);

  FieldRef base() const noexcept { return base_; }
  ExtensionKind extension_kind() const noexcept { return kind_; }
  /// d for radical extensions, delta for Artin-Schreier extensions.
  const Element& parameter() const noexcept { return parameter_; }

  Element generator() const { return make(base_->zero(), base_->one()); }
  Element embed(const Element& base_element) const;
  Element make(const Element& x, const Element& y) const;
  /// (x, y) with a = x + y*eta.
  std::pair<Element, Element> coordinates(const Element& a) const;
  /// a itself when it lies in the base field.
  std::optional<Element> to_base(const Element& a) const;

  Element conjugate(const Element& a) const;
  Element norm(const Element& a) const;
  Element trace(const Element& a) const;
  /// The canonical functional s(x + y*eta) = y; s(1) = 0.
  Element functional_s(const Element& a) const { return coordinates(a).second; }

  FieldKind kind() const override { return FieldKind::quadratic_extension; }
  std::string descriptor() const override;
  std::uint64_t characteristic() const override { return base_->characteristic(); }
  std::optional<std::uint64_t> order() const override;
  Element zero() const override;
  Element one() const override;
  Element from_integer(const Integer& n) const override { return embed(base_->from_integer(n)); }
  Element add(const Element& a, const Element& b) const override;
  Element sub(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool equal(const Element& a, const Element& b) const override;
  bool is_zero(const Element& a) const override;
  std::optional<Element> sqrt(const Element& a) const override;
  Element random(Rng& rng) const override;
  Element element_at(std::uint64_t index) const override;
  std::uint64_t index_of(const Element& a) const override;
  std::optional<Element> symbol(std::string_view name) const override;
  std::string format(const Element& a) const override;
  const QuadraticExtension* as_extension() const override { return this; }

 private:
  FieldRef base_;
  ExtensionKind kind_;
  Element parameter_;
  std::optional<std::uint64_t> base_order_;
};

// ---------------------------------------------------------------- factories

FieldRef rationals();
FieldRef prime_field(std::uint64_t p);
/// GF(p^k) with the lexicographically smallest monic irreducible modulus.
FieldRef galois_field(std::uint64_t p, unsigned k);
/// GF(p^k) with an explicit modulus (coefficients lowest first, monic).
FieldRef galois_field(std::uint64_t p, const std::vector<std::uint64_t>& modulus);
FieldRef function_field(FieldRef constants);
/// F(sqrt(d)); d must be a non-square of F, characteristic != 2.
FieldRef radical_extension(FieldRef base, const Element& d);
/// F(eta) with eta^2 + eta = delta; delta must be provably outside wp(F).
FieldRef artin_schreier_extension(FieldRef base, const Element& delta);

/// Ben-Or irreducibility test for a monic polynomial over GF(p).
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& poly, std::uint64_t p);

// ---------------------------------------------------------------- operations

std::optional<Element> square_root(const Element& a);
Element norm(const Element& a);
Element trace(const Element& a);
Element functional_s(const Element& a);
Element conjugate(const Element& a);

struct WpMembership {
  Decision decision = Decision::undecided;
  std::optional<Element> witness;  // x with x^2 + x = delta
  std::string reason;
};

/// Is delta of the form x^2 + x?  Exact over finite fields and for
/// polynomial delta in k0(t); otherwise a pole screen plus bounded search.
/// Throws std::invalid_argument in odd characteristic.
WpMembership wp_membership(const Element& delta, std::uint64_t budget = 4096);

// ---------------------------------------------------------------- text

/// Parses "Q", "GF(5)", "GF(3^2)", "Fq(2,8,poly=[...])", optionally followed
/// by "(t)", "(sqrt(d))" or "(artin-schreier(delta))" suffixes.
FieldRef parse_field(std::string_view text);
/// Parses "sqrt(d)" or "artin-schreier(delta)" over `base`.
FieldRef parse_extension(FieldRef base, std::string_view text);
/// Arithmetic expression in the field's symbols, e.g. "3+2*eta", "t^2+t".
Element parse_element(FieldRef field, std::string_view text);

}  // namespace witt
