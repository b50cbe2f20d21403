#include "witt/witt.hpp"

#include <stdexcept>

#include "witt/hilbert.hpp"
#include "witt/search.hpp"

namespace witt {

namespace {

// Absolute trace of an element of a finite field of characteristic 2.
Element binary_trace(const Element& a) {
  const std::uint64_t q = *a.field()->order();
  Element s = a.field()->zero(), x = a;
  for (std::uint64_t k = 1; k < q; k *= 2) {
    s += x;
    x = x * x;
  }
  return s;
}

// Local-global invariants of a regular diagonal form over Q.
struct QInvariants {
  std::size_t n = 0;
  Rational d = 1;
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::vector<Integer> primes;
  std::vector<int> eps;
};

QInvariants q_invariants(const std::vector<Rational>& a, std::vector<Integer> primes) {
  QInvariants inv;
  inv.n = a.size();
  inv.primes = std::move(primes);
  for (const auto& x : a) {
    inv.d *= x;
    (x > 0 ? inv.pos : inv.neg)++;
  }
  for (const auto& p : inv.primes) {
    int e = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) e *= hilbert_symbol(a[i], a[j], Place{p});
    inv.eps.push_back(e);
  }
  return inv;
}

bool is_rational_square(const Rational& r) {
  return r > 0 && mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t());
}

bool q_isotropic(const QInvariants& inv) {
  if (inv.n < 2 || inv.pos == 0 || inv.neg == 0) return false;
  if (inv.n == 2) return is_rational_square(-inv.d);
  if (inv.n >= 5) return true;
  for (std::size_t k = 0; k < inv.primes.size(); ++k) {
    const Place p{inv.primes[k]};
    if (inv.n == 3 && hilbert_symbol(-1, -inv.d, p) != inv.eps[k]) return false;
    if (inv.n == 4 && is_local_square(inv.d, p) && inv.eps[k] != hilbert_symbol(-1, -1, p))
      return false;
  }
  return true;
}

void q_strip_hyperbolic(QInvariants& inv) {
  inv.n -= 2;
  inv.pos -= 1;
  inv.neg -= 1;
  inv.d = -inv.d;
  for (std::size_t k = 0; k < inv.primes.size(); ++k)
    inv.eps[k] *= hilbert_symbol(inv.d, -1, Place{inv.primes[k]});
}

void set_exact(WittReport& r, std::size_t index) {
  r.status = Decision::yes;
  r.witt_index = index;
  r.index_lower_bound = index;
  r.kernel.dim = r.dim - 2 * index;
  r.hyperbolic = from_bool(r.kernel.dim == 0);
}

WittReport decompose_rationals(const QuadraticForm& q, const NormalForm& nf, const WittOptions& o) {
  WittReport r;
  r.dim = q.dim();
  r.method = "local-global invariants";
  std::vector<Rational> a;
  for (const auto& e : nf.diagonal) a.push_back(RationalField::value(e));
  auto primes = relevant_primes(a, o.factor_budget);
  if (!primes) {
    r.method = "factorisation budget exhausted";
    return r;
  }
  QInvariants inv = q_invariants(a, *primes);
  std::size_t k = 0;
  while (q_isotropic(inv)) {
    q_strip_hyperbolic(inv);
    ++k;
  }
  set_exact(r, k);
  r.kernel.signature = std::make_pair(inv.pos, inv.neg);
  r.kernel.discriminant = q.field()->from_integer(inv.d.get_num()) / q.field()->from_integer(inv.d.get_den());
  for (std::size_t i = 0; i < inv.primes.size(); ++i)
    if (inv.eps[i] == -1) r.kernel.hasse_primes.push_back(inv.primes[i]);
  return r;
}

WittReport decompose_finite(const QuadraticForm& q, const NormalForm& nf) {
  WittReport r;
  r.dim = q.dim();
  FieldRef f = q.field();
  if (f->characteristic() == 2) {
    r.method = "Arf invariant";
    Element arf = f->zero();
    for (const auto& [a, b] : nf.pair_values) arf += a * b;
    r.kernel.arf = arf;
    set_exact(r, binary_trace(arf).is_zero() ? q.dim() / 2 : q.dim() / 2 - 1);
    return r;
  }
  r.method = "dimension and discriminant";
  const std::size_t n = q.dim();
  Element d = f->one();
  for (const auto& e : nf.diagonal) d *= e;
  const Element minus_one = f->from_int(-1);
  if (n % 2 == 1) {
    const std::size_t k = (n - 1) / 2;
    set_exact(r, k);
    r.kernel.discriminant = k % 2 ? -d : d;
    return r;
  }
  const Element x = (n / 2) % 2 ? -d : d;
  if (f->sqrt(x)) {
    set_exact(r, n / 2);
  } else {
    const std::size_t k = n / 2 - 1;
    set_exact(r, k);
    r.kernel.discriminant = k % 2 ? -d : d;
  }
  return r;
}

// Exact isotropy of a regular binary form, when the field can decide it.
Decision binary_isotropic(const QuadraticForm& q) {
  const Element a = q.coefficient(0, 0), c = q.coefficient(0, 1), b = q.coefficient(1, 1);
  if (a.is_zero() || b.is_zero()) return Decision::yes;
  if (q.field()->characteristic() != 2)
    return from_bool(q.field()->sqrt(c * c - q.field()->from_int(4) * a * b).has_value());
  const auto wp = wp_membership(a * b / (c * c));
  return wp.decision;
}

WittReport decompose_by_search(const QuadraticForm& q0, const WittOptions& o) {
  WittReport r;
  r.dim = q0.dim();
  r.method = "isotropic vector search";
  QuadraticForm q = q0;
  std::size_t k = 0;
  std::uint64_t seed = o.seed;
  for (;;) {
    r.index_lower_bound = k;
    if (q.dim() == 0 || (q.dim() == 1 && q.field()->characteristic() != 2)) {
      set_exact(r, k);
      return r;
    }
    if (q.dim() == 2) {
      Decision iso = binary_isotropic(q);
      if (iso != Decision::undecided) {
        set_exact(r, k + (iso == Decision::yes ? 1 : 0));
        return r;
      }
    }
    FieldRef f = q.field();
    const Matrix b = q.polar_matrix();
    VectorSearch search(f, q.dim(), seed++, o.search_budget);
    std::optional<Vector> iso;
    while (auto v = search.next())
      if (q(*v).is_zero()) {
        iso = v;
        break;
      }
    if (!iso) {
      if (search.exhausted_space()) {
        set_exact(r, k);
        return r;
      }
      r.hyperbolic = Decision::undecided;
      return r;
    }
    const Vector bv = b * *iso;
    std::size_t i = 0;
    while (bv[i].is_zero()) ++i;
    Vector w = bv[i].inverse() * unit_vector(f, q.dim(), i);
    w = w - q(w) * *iso;
    Matrix constraints = Matrix::from_rows(f, {bv, b * w});
    auto rest = nullspace(constraints);
    q = rest.empty() ? QuadraticForm::zero(f, 0) : q.compose(Matrix::from_columns(f, q.dim(), rest));
    ++k;
  }
}

}  // namespace

WittReport witt_decompose(const QuadraticForm& q, const WittOptions& options) {
  if (!is_regular(q)) throw std::invalid_argument("witt_decompose: the form is not regular");
  FieldRef f = q.field();
  if (q.dim() == 0) {
    WittReport r;
    r.method = "empty form";
    set_exact(r, 0);
    return r;
  }
  if (f->is_finite()) return decompose_finite(q, normal_form(q));
  if (f->is_rationals()) return decompose_rationals(q, normal_form(q), options);
  return decompose_by_search(q, options);
}

Decision is_hyperbolic(const QuadraticForm& q, const WittOptions& options) {
  return witt_decompose(q, options).hyperbolic;
}

Decision is_isotropic(const QuadraticForm& q, const WittOptions& options) {
  auto r = witt_decompose(q, options);
  if (r.index_lower_bound > 0) return Decision::yes;
  if (r.witt_index) return Decision::no;
  return Decision::undecided;
}

std::optional<std::size_t> max_isotropic_dimension(const QuadraticForm& q, const WittOptions& options) {
  FieldRef f = q.field();
  if (f->characteristic() == 2) return std::nullopt;
  NormalForm nf = normal_form(q);
  Vector regular;
  std::size_t rad = 0;
  for (const auto& e : nf.diagonal) {
    if (e.is_zero())
      ++rad;
    else
      regular.push_back(e);
  }
  if (regular.empty()) return rad;
  auto r = witt_decompose(QuadraticForm::diagonal(f, regular), options);
  if (!r.witt_index) return std::nullopt;
  return rad + *r.witt_index;
}

nlohmann::json to_json(const WittReport& r) {
  nlohmann::json j;
  j["status"] = to_string(r.status);
  j["dim"] = r.dim;
  j["witt_index"] = r.witt_index ? nlohmann::json(*r.witt_index) : nlohmann::json(nullptr);
  j["index_lower_bound"] = r.index_lower_bound;
  j["hyperbolic"] = to_string(r.hyperbolic);
  j["method"] = r.method;
  nlohmann::json k;
  k["dim"] = r.kernel.dim;
  if (r.kernel.discriminant) k["discriminant"] = r.kernel.discriminant->str();
  if (r.kernel.arf) k["arf"] = r.kernel.arf->str();
  if (r.kernel.signature)
    k["signature"] = {r.kernel.signature->first, r.kernel.signature->second};
  if (r.status == Decision::yes && r.kernel.signature) {
    nlohmann::json primes = nlohmann::json::array();
    for (const auto& p : r.kernel.hasse_primes) primes.push_back(p.get_str());
    k["hasse_primes"] = primes;
  }
  j["anisotropic_kernel"] = k;
  return j;
}

}  // namespace witt
