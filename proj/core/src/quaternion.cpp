#include "witt/quaternion.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

#include "witt/hilbert.hpp"
#include "witt/quad_descent.hpp"
#include "witt/search.hpp"
#include "witt/transfer.hpp"
#include "witt/witt.hpp"

namespace witt {

namespace {

bool atomic(const std::string& s) {
  return s.find_first_of("+-/*", 1) == std::string::npos;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(strip(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(strip(s.substr(start)));
  return parts;
}

Vector to_vector(const Quaternion& u) { return Vector(u.begin(), u.end()); }
Quaternion from_vector(const Vector& v) { return {v[0], v[1], v[2], v[3]}; }

std::optional<Element> base_value(const Element& e) {
  if (const auto* ext = e.field()->as_extension()) return ext->to_base(e);
  return std::nullopt;
}

}  // namespace

QuaternionAlgebra::QuaternionAlgebra(FieldRef field, Element a, Element b)
    : field_(field), a_(std::move(a)), b_(std::move(b)) {
  if (!field_) throw std::invalid_argument("quaternion algebra over a null field");
  if (a_.field() != field_ || b_.field() != field_)
    throw std::invalid_argument("quaternion constants must lie in " + field_->descriptor());
  if (b_.is_zero() || (!characteristic_two() && a_.is_zero()))
    throw std::invalid_argument("quaternion constants must be nonzero");
  const Element z = field_->zero(), o = field_->one();
  auto q = [&](Element w, Element x, Element y, Element k) { return Quaternion{w, x, y, k}; };
  for (std::size_t r = 0; r < 4; ++r) {
    table_[0][r] = basis(r);
    table_[r][0] = basis(r);
  }
  if (!characteristic_two()) {
    table_[1][1] = q(a_, z, z, z);
    table_[1][2] = q(z, z, z, o);
    table_[1][3] = q(z, z, a_, z);
    table_[2][1] = q(z, z, z, -o);
    table_[2][2] = q(b_, z, z, z);
    table_[2][3] = q(z, -b_, z, z);
    table_[3][1] = q(z, z, -a_, z);
    table_[3][2] = q(z, b_, z, z);
    table_[3][3] = q(-(a_ * b_), z, z, z);
  } else {
    table_[1][1] = q(a_, o, z, z);
    table_[1][2] = q(z, z, z, o);
    table_[1][3] = q(z, z, a_, o);
    table_[2][1] = q(z, z, o, o);
    table_[2][2] = q(b_, z, z, z);
    table_[2][3] = q(b_, b_, z, z);
    table_[3][1] = q(z, z, a_, z);
    table_[3][2] = q(z, b_, z, z);
    table_[3][3] = q(a_ * b_, z, z, z);
  }
}

std::string QuaternionAlgebra::presentation() const {
  return (characteristic_two() ? "[" : "(") + a_.str() + "," + b_.str() + ")";
}

Quaternion QuaternionAlgebra::make(Element w, Element x, Element y, Element z) const {
  for (const auto* e : {&w, &x, &y, &z})
    if (e->field() != field_) throw std::invalid_argument("quaternion coordinate from another field");
  return {std::move(w), std::move(x), std::move(y), std::move(z)};
}

Quaternion QuaternionAlgebra::scalar(const Element& c) const {
  const Element z = field_->zero();
  return {c, z, z, z};
}

Quaternion QuaternionAlgebra::basis(std::size_t i) const {
  Quaternion u = zero();
  u.at(i) = field_->one();
  return u;
}

Quaternion QuaternionAlgebra::add(const Quaternion& u, const Quaternion& v) const {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]};
}

Quaternion QuaternionAlgebra::sub(const Quaternion& u, const Quaternion& v) const {
  return {u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3]};
}

Quaternion QuaternionAlgebra::neg(const Quaternion& u) const { return {-u[0], -u[1], -u[2], -u[3]}; }

Quaternion QuaternionAlgebra::scale(const Element& c, const Quaternion& u) const {
  return {c * u[0], c * u[1], c * u[2], c * u[3]};
}

Quaternion QuaternionAlgebra::mul(const Quaternion& u, const Quaternion& v) const {
  Quaternion out = zero();
  for (std::size_t r = 0; r < 4; ++r) {
    if (u[r].is_zero()) continue;
    for (std::size_t s = 0; s < 4; ++s) {
      if (v[s].is_zero()) continue;
      const Element c = u[r] * v[s];
      const Quaternion& t = table_[r][s];
      for (std::size_t k = 0; k < 4; ++k)
        if (!t[k].is_zero()) out[k] += c * t[k];
    }
  }
  return out;
}

Quaternion QuaternionAlgebra::gamma(const Quaternion& u) const {
  if (characteristic_two()) return {u[0] + u[1], u[1], u[2], u[3]};
  return {u[0], -u[1], -u[2], -u[3]};
}

Element QuaternionAlgebra::trd(const Quaternion& u) const {
  return characteristic_two() ? u[1] : u[0] + u[0];
}

Element QuaternionAlgebra::nrd(const Quaternion& u) const { return mul(u, gamma(u))[0]; }

Quaternion QuaternionAlgebra::inverse(const Quaternion& u) const {
  const Element n = nrd(u);
  if (n.is_zero()) throw std::domain_error("quaternion " + format(u) + " is not invertible");
  return scale(n.inverse(), gamma(u));
}

bool QuaternionAlgebra::is_zero(const Quaternion& u) const {
  return u[0].is_zero() && u[1].is_zero() && u[2].is_zero() && u[3].is_zero();
}

std::optional<Element> QuaternionAlgebra::as_scalar(const Quaternion& u) const {
  if (u[1].is_zero() && u[2].is_zero() && u[3].is_zero()) return u[0];
  return std::nullopt;
}

bool QuaternionAlgebra::equal(const Quaternion& u, const Quaternion& v) const {
  return u[0] == v[0] && u[1] == v[1] && u[2] == v[2] && u[3] == v[3];
}

QuadraticForm QuaternionAlgebra::norm_form() const {
  Matrix u(field_, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    u(i, i) = nrd(basis(i));
    for (std::size_t j = i + 1; j < 4; ++j)
      u(i, j) = nrd(add(basis(i), basis(j))) - nrd(basis(i)) - nrd(basis(j));
  }
  return QuadraticForm(u);
}

std::string QuaternionAlgebra::format(const Quaternion& u) const {
  static const char* names[] = {"", "i", "j", "ij"};
  std::string s;
  for (std::size_t k = 0; k < 4; ++k) {
    if (u[k].is_zero()) continue;
    std::string c = u[k].str();
    bool negative = false;
    if (c.size() > 1 && c[0] == '-' && atomic(c.substr(1))) {
      negative = true;
      c = c.substr(1);
    }
    std::string term;
    if (k == 0)
      term = atomic(c) ? c : "(" + c + ")";
    else if (c == "1")
      term = names[k];
    else
      term = (atomic(c) ? c : "(" + c + ")") + "*" + names[k];
    if (s.empty())
      s = negative ? "-" + term : term;
    else
      s += (negative ? "-" : "+") + term;
  }
  return s.empty() ? "0" : s;
}

QuaternionAlgebra parse_quaternion_algebra(FieldRef field, std::string_view text) {
  std::string_view s = strip(text);
  const bool char2 = field->characteristic() == 2;
  if (s.size() < 5 || s.back() != ')' || (s.front() != '(' && s.front() != '['))
    throw std::invalid_argument("cannot parse quaternion algebra \"" + std::string(text) + "\"");
  if (char2 != (s.front() == '['))
    throw std::invalid_argument(char2 ? "characteristic 2 quaternion algebras are written [a,b)"
                                      : "quaternion algebras are written (a,b) outside characteristic 2");
  auto parts = split_top_level(s.substr(1, s.size() - 2));
  if (parts.size() != 2) throw std::invalid_argument("quaternion algebra needs two constants");
  return QuaternionAlgebra(field, parse_element(field, parts[0]), parse_element(field, parts[1]));
}

Quaternion parse_quaternion(const QuaternionAlgebra& q, std::string_view text) {
  std::string_view s = strip(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  auto parts = split_top_level(s);
  if (parts.size() != 4)
    throw std::invalid_argument("quaternion \"" + std::string(text) + "\" needs four coordinates");
  return {parse_element(q.field(), parts[0]), parse_element(q.field(), parts[1]), parse_element(q.field(), parts[2]),
          parse_element(q.field(), parts[3])};
}

std::string InvolutionSpec::describe(const QuaternionAlgebra& q) const {
  if (kind == Kind::canonical) return "canonical";
  return "int(" + q.format(*u) + ")*gamma";
}

void validate_involution(const QuaternionAlgebra& q, const InvolutionSpec& sigma) {
  if (sigma.kind == InvolutionSpec::Kind::canonical) return;
  if (!sigma.u) throw std::invalid_argument("orthogonal involution needs u");
  const Quaternion& u = *sigma.u;
  for (const auto& c : u)
    if (c.field() != q.field()) throw std::invalid_argument("involution element from another field");
  if (q.as_scalar(u)) throw std::invalid_argument("Int(u) o gamma with central u is the canonical involution");
  if (q.nrd(u).is_zero()) throw std::invalid_argument("u must be invertible");
  const Quaternion g = q.gamma(u);
  const bool ok = q.characteristic_two() ? q.equal(g, u) : q.equal(g, q.neg(u));
  if (!ok)
    throw std::invalid_argument(q.characteristic_two() ? "Int(u) o gamma is an involution only when gamma(u) = u"
                                                       : "Int(u) o gamma is an involution only when gamma(u) = -u");
}

Quaternion apply_involution(const QuaternionAlgebra& q, const InvolutionSpec& sigma, const Quaternion& x) {
  if (sigma.kind == InvolutionSpec::Kind::canonical) return q.gamma(x);
  return q.mul(q.mul(*sigma.u, q.gamma(x)), q.inverse(*sigma.u));
}

InvolutionType involution_type(const QuaternionAlgebra& q, const InvolutionSpec& sigma) {
  validate_involution(q, sigma);
  if (sigma.kind == InvolutionSpec::Kind::canonical) return {true, q.characteristic_two() ? 1 : -1};
  return {false, 1};
}

namespace {

Matrix linear_map(const QuaternionAlgebra& q, const std::function<Quaternion(const Quaternion&)>& f) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < 4; ++i) cols.push_back(to_vector(f(q.basis(i))));
  return Matrix::from_columns(q.field(), 4, cols);
}

std::vector<Quaternion> column_space(const Matrix& m) {
  Echelon e = rref(m.transpose());
  std::vector<Quaternion> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(from_vector(e.reduced.row(r)));
  return out;
}

}  // namespace

std::vector<Quaternion> symd_basis(const QuaternionAlgebra& q, const InvolutionSpec& sigma, int lambda) {
  validate_involution(q, sigma);
  const Element l = q.field()->from_int(lambda);
  return column_space(linear_map(q, [&](const Quaternion& x) {
    return q.add(x, q.scale(l, apply_involution(q, sigma, x)));
  }));
}

std::vector<Quaternion> sym_basis(const QuaternionAlgebra& q, const InvolutionSpec& sigma, int lambda) {
  validate_involution(q, sigma);
  const Element l = q.field()->from_int(lambda);
  std::vector<Quaternion> out;
  for (const auto& v : nullspace(linear_map(q, [&](const Quaternion& x) {
         return q.sub(apply_involution(q, sigma, x), q.scale(l, x));
       })))
    out.push_back(from_vector(v));
  return out;
}

SplitReport split_report(const QuaternionAlgebra& q, const QuaternionOptions& o) {
  SplitReport r;
  FieldRef f = q.field();
  if (f->is_finite()) {
    r.split = Decision::yes;
    r.method = "finite-field";
    return r;
  }
  if (f->is_rationals()) {
    const Rational a = RationalField::value(q.a()), b = RationalField::value(q.b());
    auto primes = relevant_primes({a, b}, o.factor_budget);
    r.method = "hilbert-symbols";
    if (!primes) {
      r.method += " (factorisation budget exhausted)";
      return r;
    }
    if (hilbert_symbol(a, b, Place::infinity()) == -1) r.ramified.push_back("inf");
    for (const auto& p : *primes)
      if (hilbert_symbol(a, b, Place{p}) == -1) r.ramified.push_back(p.get_str());
    r.split = from_bool(r.ramified.empty());
    return r;
  }
  WittOptions wo;
  wo.factor_budget = o.factor_budget;
  wo.search_budget = o.budget;
  wo.seed = o.seed;
  if (const auto* ext = f->as_extension(); ext && ext->base()->is_rationals() && !q.characteristic_two()) {
    auto a = ext->to_base(q.a()), b = ext->to_base(q.b());
    if (a && b) {
      // (a,b) splits over F(sqrt d) iff it splits over F or the pure part
      // <a, b, -ab> represents d.
      QuaternionAlgebra qf(ext->base(), *a, *b);
      SplitReport base = split_report(qf, o);
      if (base.split == Decision::yes) {
        r.split = Decision::yes;
        r.method = "split-over-base";
        return r;
      }
      const Element d = ext->parameter();
      QuadraticForm pure = QuadraticForm::diagonal(ext->base(), {*a, *b, -(*a * *b), -d});
      r.split = is_isotropic(pure, wo);
      r.method = "pure-part-represents-radicand";
      return r;
    }
  }
  const QuadraticForm n = q.norm_form();
  if (const auto* ext = f->as_extension()) {
    // A split norm form is hyperbolic, so its transfer is hyperbolic too.
    if (is_hyperbolic(transfer_form(n), wo) == Decision::no) {
      r.split = Decision::no;
      r.method = "transfer-of-norm-form-not-hyperbolic";
      return r;
    }
    (void)ext;
  }
  r.split = is_isotropic(n, wo);
  if (r.split == Decision::no && !f->is_finite() && !f->is_rationals()) r.split = Decision::undecided;
  r.method = "norm-form-isotropy-search";
  return r;
}

Decision is_split(const QuaternionAlgebra& q, const QuaternionOptions& o) { return split_report(q, o).split; }

QuaternionAlgebra extend_scalars(const QuaternionAlgebra& q, FieldRef extension) {
  const auto& ext = extension_of(extension);
  if (ext.base() != q.field()) throw std::invalid_argument("extend_scalars: field mismatch");
  return QuaternionAlgebra(extension, ext.embed(q.a()), ext.embed(q.b()));
}

Quaternion extend_scalars(const Quaternion& u, FieldRef extension) {
  const auto& ext = extension_of(extension);
  return {ext.embed(u[0]), ext.embed(u[1]), ext.embed(u[2]), ext.embed(u[3])};
}

InvolutionSpec extend_scalars(const InvolutionSpec& sigma, FieldRef extension) {
  if (sigma.kind == InvolutionSpec::Kind::canonical) return sigma;
  return InvolutionSpec::inner(extend_scalars(*sigma.u, extension));
}

std::optional<Quaternion> restrict_to_base(const Quaternion& u) {
  Quaternion out;
  for (std::size_t k = 0; k < 4; ++k) {
    auto v = base_value(u[k]);
    if (!v) return std::nullopt;
    out[k] = *v;
  }
  return out;
}

namespace {

// Second slot partner of x: y with xy = -yx (odd characteristic) or
// yx = (x+1)y (characteristic 2), y^2 central and nonzero.  When
// `rational_square` is set, y^2 must also lie in F.
std::optional<Quaternion> find_partner(const QuaternionAlgebra& q, const Quaternion& x, bool rational_square,
                                       std::uint64_t seed, std::uint64_t budget) {
  FieldRef K = q.field();
  Matrix m = q.characteristic_two()
                 ? linear_map(q, [&](const Quaternion& y) { return q.add(q.add(q.mul(y, x), q.mul(x, y)), y); })
                 : linear_map(q, [&](const Quaternion& y) { return q.add(q.mul(x, y), q.mul(y, x)); });
  auto space = nullspace(m);
  if (space.empty()) return std::nullopt;
  const Matrix basis = Matrix::from_columns(K, 4, space);
  VectorSearch s(K, space.size(), seed, budget);
  while (auto c = s.next()) {
    Quaternion y = from_vector(basis * *c);
    auto sq = q.as_scalar(q.mul(y, y));
    if (!sq || sq->is_zero()) continue;
    if (!rational_square) return y;
    auto scale = line_descent_scale(*sq);
    if (!scale) continue;
    return q.scale(*scale, y);
  }
  return std::nullopt;
}

// First slot: x with x^2 in F^x and trd x = 0 (odd characteristic), or
// trd x = 1 and x^2 + x in F (characteristic 2).
std::optional<Quaternion> find_first_slot(const QuaternionAlgebra& q, std::uint64_t seed, std::uint64_t budget) {
  const auto& ext = extension_of(q.field());
  FieldRef K = q.field();
  if (ext.to_base(q.a())) return q.basis(1);
  VectorSearch s(K, 3, seed, budget);
  if (!q.characteristic_two()) {
    if (ext.to_base(q.b())) return q.basis(2);
    while (auto c = s.next()) {
      Quaternion x{K->zero(), (*c)[0], (*c)[1], (*c)[2]};
      auto sq = q.as_scalar(q.mul(x, x));
      if (!sq || sq->is_zero()) continue;
      if (auto scale = line_descent_scale(*sq)) return q.scale(*scale, x);
    }
    return std::nullopt;
  }
  while (auto c = s.next()) {
    Quaternion x{(*c)[0], K->one(), (*c)[1], (*c)[2]};
    if (ext.to_base(q.nrd(x))) return x;
  }
  return std::nullopt;
}

std::optional<FPresentation> make_presentation(const QuaternionAlgebra& q, const Quaternion& x,
                                               const Quaternion& y) {
  const auto& ext = extension_of(q.field());
  auto x2 = q.as_scalar(q.mul(x, x));
  auto y2 = q.as_scalar(q.mul(y, y));
  if (q.characteristic_two()) x2 = q.as_scalar(q.add(q.mul(x, x), x));
  if (!x2 || !y2) return std::nullopt;
  auto a = ext.to_base(*x2);
  auto b = ext.to_base(*y2);
  if (!a || !b || b->is_zero() || (!q.characteristic_two() && a->is_zero())) return std::nullopt;
  const Quaternion xy = q.mul(x, y);
  Matrix basis = Matrix::from_columns(q.field(), 4, {to_vector(q.one()), to_vector(x), to_vector(y), to_vector(xy)});
  if (rank(basis) != 4) return std::nullopt;
  const bool relation = q.characteristic_two() ? q.equal(q.mul(y, x), q.add(xy, y))
                                               : q.equal(q.mul(y, x), q.neg(xy));
  if (!relation) return std::nullopt;
  return FPresentation{QuaternionAlgebra(ext.base(), *a, *b), basis, x, y};
}

}  // namespace

Quaternion FPresentation::map(const QuaternionAlgebra& q, const Quaternion& c) const {
  (void)q;
  return from_vector(basis * to_vector(c));
}

Quaternion FPresentation::pull(const QuaternionAlgebra& q, const Quaternion& u) const {
  (void)q;
  auto c = solve(basis, to_vector(u));
  if (!c) throw std::logic_error("FPresentation::pull: basis is singular");
  return from_vector(*c);
}

CorSplitReport cor_split_test(const QuaternionAlgebra& q, const QuaternionOptions& o) {
  const auto& ext = extension_of(q.field());
  CorSplitReport r;
  r.characteristic_two = q.characteristic_two();
  if (ext.base()->is_finite()) {
    r.verdict = Decision::yes;
    r.method = "finite-base";
    return r;
  }
  auto a = ext.to_base(q.a());
  auto b = ext.to_base(q.b());
  std::optional<std::pair<Element, Element>> cls;
  if (a) {
    cls = {*a, ext.norm(q.b())};
    r.method = "projection-formula";
  } else if (b) {
    if (q.characteristic_two())
      cls = {ext.trace(q.a()), *b};
    else
      cls = {*b, ext.norm(q.a())};
    r.method = "projection-formula";
  } else if (auto x = find_first_slot(q, o.seed, o.budget)) {
    if (auto y = find_partner(q, *x, false, o.seed + 1, o.budget)) {
      const Element y2 = *q.as_scalar(q.mul(*y, *y));
      Element first = q.characteristic_two() ? *q.as_scalar(q.add(q.mul(*x, *x), *x)) : *q.as_scalar(q.mul(*x, *x));
      cls = {*ext.to_base(first), ext.norm(y2)};
      r.method = "slot-reduction+projection";
    }
  }
  if (!cls) {
    r.method = "search-exhausted";
    return r;
  }
  r.witness_class = cls;
  r.witness_split = split_report(QuaternionAlgebra(ext.base(), cls->first, cls->second), o);
  r.verdict = r.witness_split.split;
  return r;
}

AlgDescentResult alg_descent(const QuaternionAlgebra& q, const InvolutionSpec& sigma, const QuaternionOptions& o) {
  const auto& ext = extension_of(q.field());
  AlgDescentResult r;
  r.type = involution_type(q, sigma);
  r.cor = cor_split_test(q, o);
  std::optional<Quaternion> first;
  if (r.type.symplectic) {
    r.route = "corestriction-split";
    r.decision = r.cor.verdict;
  } else {
    r.route = "corestriction-split-and-symd-line";
    auto line = symd_basis(q, sigma, -1);
    if (line.size() != 1) throw std::logic_error("Symd_{-1} of an orthogonal involution is not a line");
    auto sq = q.as_scalar(q.mul(line[0], line[0]));
    if (!sq) throw std::logic_error("square of the Symd_{-1} generator is not central");
    std::optional<Element> c;
    if (!sq->is_zero()) c = line_descent_scale(*sq);
    if (c) {
      r.u = q.scale(*c, line[0]);
      first = r.u;
    }
    r.decision = r.cor.verdict && from_bool(c.has_value());
  }
  switch (r.decision) {
    case Decision::no:
      r.summary = r.cor.verdict == Decision::no ? "corestriction does not split"
                                                : "no u in Symd_{-1} with u^2 in F";
      return r;
    case Decision::undecided: r.summary = "corestriction split test undecided"; return r;
    case Decision::yes: r.summary = "algebra with involution descends"; break;
  }

  // Trivial case: both constants already in F.
  if (ext.to_base(q.a()) && ext.to_base(q.b())) {
    std::optional<InvolutionSpec> inv;
    if (r.type.symplectic) {
      inv = InvolutionSpec::canonical();
    } else {
      const Quaternion& u = *r.u;
      std::size_t k = 0;
      while (u[k].is_zero()) ++k;
      if (auto ub = restrict_to_base(q.scale(u[k].inverse(), u))) inv = InvolutionSpec::inner(*ub);
    }
    if (inv) {
      r.presentation = FPresentation{QuaternionAlgebra(ext.base(), *ext.to_base(q.a()), *ext.to_base(q.b())),
                                     Matrix::identity(q.field(), 4), q.basis(1), q.basis(2)};
      r.descended_involution = inv;
      return r;
    }
  }
  if (!first && r.type.symplectic) first = find_first_slot(q, o.seed, o.budget);
  // Characteristic 2 orthogonal descents are only produced in the trivial case.
  if (!first || (q.characteristic_two() && !r.type.symplectic)) {
    r.summary += "; no F-presentation found within budget";
    return r;
  }
  auto y = find_partner(q, *first, true, o.seed + 2, o.budget);
  if (!y) {
    r.summary += "; no F-presentation found within budget";
    return r;
  }
  r.presentation = make_presentation(q, *first, *y);
  if (!r.presentation) {
    r.summary += "; no F-presentation found within budget";
    return r;
  }
  if (r.type.symplectic) {
    r.descended_involution = InvolutionSpec::canonical();
  } else {
    const auto& F = r.presentation->descended;
    r.descended_involution = InvolutionSpec::inner(F.basis(1));
  }
  return r;
}

nlohmann::json to_json(const SplitReport& r) {
  return {{"split", to_string(r.split)}, {"method", r.method}, {"ramified_places", r.ramified}};
}

nlohmann::json to_json(const CorSplitReport& r) {
  nlohmann::json j{{"verdict", to_string(r.verdict)}, {"method", r.method}};
  if (r.witness_class) {
    const auto& [a, b] = *r.witness_class;
    j["witness_class"] = (r.characteristic_two ? "[" : "(") + a.str() + "," + b.str() + ")";
    j["witness_split"] = to_json(r.witness_split);
  }
  return j;
}

nlohmann::json to_json(const QuaternionAlgebra& q) {
  return {{"field", q.field()->descriptor()}, {"presentation", q.presentation()}};
}

}  // namespace witt
