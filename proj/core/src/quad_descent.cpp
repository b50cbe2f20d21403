#include "witt/quad_descent.hpp"

#include <stdexcept>

#include "witt/metabolic.hpp"
#include "witt/search.hpp"
#include "witt/transfer.hpp"
#include "witt/witt.hpp"

namespace witt {

namespace {

bool in_base(const QuadraticExtension& ext, const Element& e) { return ext.to_base(e).has_value(); }

Functional functional_for(const QuadraticExtension& ext, const DescentOptions& o) {
  if (o.functional_scale) return Functional(ext, *o.functional_scale);
  return Functional(ext);
}

Matrix columns(FieldRef f, std::size_t rows, const std::vector<Vector>& cols) {
  return cols.empty() ? Matrix(f, rows, 0) : Matrix::from_columns(f, rows, cols);
}

// mu in F with mu + a mu^2 = y (characteristic 2).
std::optional<Element> solve_artin_schreier_linear(const Element& a, const Element& y) {
  if (a.is_zero()) return y;
  auto wp = wp_membership(a * y);
  if (wp.decision != Decision::yes) return std::nullopt;
  return *wp.witness / a;
}

// Extends v (with q(v) in F) by a partner w: b(v, w) = 1 and q(w) in F.
std::optional<Vector> find_partner(const QuadraticForm& q, const QuadraticExtension& ext, const Vector& v,
                                   std::uint64_t seed, std::uint64_t budget) {
  FieldRef K = q.field();
  const std::size_t d = q.dim();
  const Matrix b = q.polar_matrix();
  const Vector bv = b * v;
  std::size_t i = 0;
  while (i < d && bv[i].is_zero()) ++i;
  if (i == d) return std::nullopt;
  const Vector w0 = bv[i].inverse() * unit_vector(K, d, i);
  const Element a = q(v);
  auto adjust = [&](const Vector& w) -> std::optional<Vector> {
    const Element qw = q(w);
    if (K->characteristic() != 2) {
      // Only reached with q(v) = 0.
      return w - qw * v;
    }
    auto mu = solve_artin_schreier_linear(*ext.to_base(a), ext.functional_s(qw));
    if (!mu) return std::nullopt;
    Vector out = w + (ext.embed(*mu) * ext.generator()) * v;
    if (!in_base(ext, q(out))) return std::nullopt;
    return out;
  };
  if (auto w = adjust(w0)) return w;
  auto perp = nullspace(Matrix::from_rows(K, {bv}));
  if (perp.empty()) return std::nullopt;
  const Matrix pm = Matrix::from_columns(K, d, perp);
  VectorSearch s(K, perp.size(), seed, budget);
  while (auto u = s.next())
    if (auto w = adjust(w0 + pm * *u)) return w;
  return std::nullopt;
}

std::optional<std::vector<Vector>> construct_attempt(const QuadraticForm& q, const QuadraticExtension& ext,
                                                     std::uint64_t seed, std::uint64_t budget) {
  FieldRef K = q.field();
  const std::size_t n = q.dim();
  const bool char2 = K->characteristic() == 2;
  std::vector<Vector> result;
  Matrix w_basis = Matrix::identity(K, n);
  std::uint64_t step = 0;
  while (w_basis.cols() > 0) {
    const QuadraticForm qw = q.compose(w_basis);
    const std::size_t d = qw.dim();
    const Matrix b = qw.polar_matrix();
    if (!char2 && d == 1) {
      auto c = line_descent_scale(qw.coefficient(0, 0));
      if (!c) return std::nullopt;
      result.push_back(w_basis * Vector{*c});
      break;
    }
    bool progressed = false;
    VectorSearch s(K, d, seed * 1'000'003 + step, budget);
    ++step;
    while (auto v = s.next()) {
      const Element val = qw(*v);
      Vector vv = *v;
      if (!val.is_zero()) {
        auto c = line_descent_scale(val);
        if (!c) continue;
        vv = *c * vv;
      }
      if (!char2 && !val.is_zero()) {
        result.push_back(w_basis * vv);
        w_basis = w_basis * columns(K, d, nullspace(Matrix::from_rows(K, {b * vv})));
        progressed = true;
        break;
      }
      auto w = find_partner(qw, ext, vv, seed + 7 * step, budget);
      if (!w) continue;
      result.push_back(w_basis * vv);
      result.push_back(w_basis * *w);
      w_basis = w_basis * columns(K, d, nullspace(Matrix::from_rows(K, {b * vv, b * *w})));
      progressed = true;
      break;
    }
    if (!progressed) return std::nullopt;
  }
  return result;
}

nlohmann::json matrix_json(const Matrix& m) { return m.to_strings(); }

}  // namespace

nlohmann::json form_to_json(const QuadraticForm& q) {
  return {{"field", q.field()->descriptor()}, {"dim", q.dim()}, {"coefficients", matrix_json(q.coefficients())}};
}

std::optional<Element> line_descent_scale(const Element& a) {
  const auto& ext = extension_of(a.field());
  if (a.is_zero()) throw std::invalid_argument("line_descent_scale of zero");
  if (in_base(ext, a)) return ext.one();
  const Element r = a / ext.conjugate(a);
  auto w = ext.sqrt(r);
  if (!w || !ext.norm(*w).is_one()) return std::nullopt;
  Element c;
  if (w->is_one()) {
    c = ext.one();
  } else if (!(ext.one() + ext.conjugate(*w)).is_zero()) {
    c = ext.one() + ext.conjugate(*w);
  } else {
    c = ext.generator() - ext.conjugate(ext.generator());
  }
  if (!in_base(ext, c * c * a)) throw std::logic_error("line_descent_scale: internal inconsistency");
  return c;
}

DescentVerdict quad_descent_decide(const QuadraticForm& q, const DescentOptions& o) {
  const auto& ext = extension_of(q.field());
  if (!is_regular(q)) throw std::invalid_argument("quadratic descent needs a regular form");
  DescentVerdict v;
  v.route = "transfer-hyperbolicity";
  const QuadraticForm t = transfer_form(q, functional_for(ext, o));
  WittOptions wo;
  wo.factor_budget = o.factor_budget;
  wo.seed = o.seed;
  wo.search_budget = o.budget;
  const WittReport report = witt_decompose(t, wo);
  v.decision = report.hyperbolic;
  v.details["transfer"] = form_to_json(t);
  v.details["transfer_witt"] = to_json(report);
  switch (v.decision) {
    case Decision::yes: v.summary = "transfer is hyperbolic"; break;
    case Decision::no:
      v.summary = "transfer is not hyperbolic";
      v.obstruction = to_json(report);
      break;
    case Decision::undecided: v.summary = "hyperbolicity of the transfer is undecided"; break;
  }
  return v;
}

std::optional<FStructure> quad_descent_construct(const QuadraticForm& q, const DescentOptions& o) {
  const auto& ext = extension_of(q.field());
  if (!is_regular(q)) throw std::invalid_argument("quadratic descent needs a regular form");
  if (q.dim() == 0) return FStructure{Matrix(q.field(), 0, 0), QuadraticForm::zero(ext.base(), 0)};
  for (std::uint64_t r = 0; r < o.restarts; ++r) {
    auto cols = construct_attempt(q, ext, o.seed + r, o.budget);
    if (!cols) continue;
    Matrix p = Matrix::from_columns(q.field(), q.dim(), *cols);
    if (rank(p) != q.dim()) continue;
    auto rho = restrict_to_base(q.compose(p));
    if (!rho) continue;
    return FStructure{p, *rho};
  }
  return std::nullopt;
}

DescentVerdict quad_descent(const QuadraticForm& q, const DescentOptions& o) {
  DescentVerdict v = quad_descent_decide(q, o);
  if (v.decision == Decision::no) return v;
  auto fs = quad_descent_construct(q, o);
  if (!fs) {
    if (v.decision == Decision::yes) v.summary += "; no descended form found within budget";
    return v;
  }
  const bool ok = q.compose(fs->basis) == extend_scalars(fs->descended, q.field());
  v.verified = ok;
  v.certificate = {{"basis", matrix_json(fs->basis)}, {"descended", form_to_json(fs->descended)}};
  if (v.decision == Decision::undecided && ok) {
    v.decision = Decision::yes;
    v.route = "explicit-f-structure";
    v.summary = "explicit F-rational basis found";
  }
  return v;
}

namespace {

bool rational_against(const QuadraticSystem& q, const QuadraticExtension& ext, const std::vector<Vector>& chosen,
                      const Vector& v) {
  for (const auto& c : q.components()) {
    if (!in_base(ext, c(v))) return false;
    for (const auto& u : chosen)
      if (!in_base(ext, c.polar(u, v))) return false;
  }
  return true;
}

bool independent(FieldRef f, std::vector<Vector> chosen, const Vector& v) {
  chosen.push_back(v);
  return rank(Matrix::from_rows(f, chosen)) == chosen.size();
}

struct SystemSearch {
  const QuadraticSystem& q;
  const QuadraticExtension& ext;
  std::uint64_t budget;
  std::uint64_t work = 0;
  bool aborted = false;

  bool exhaustive(std::vector<Vector>& chosen, std::uint64_t start) {
    const std::size_t n = q.dim();
    if (chosen.size() == n) return true;
    const std::uint64_t total = capped_power(*ext.order(), n, ~std::uint64_t{0} - 1);
    for (std::uint64_t idx = start; idx < total; ++idx) {
      if (++work > budget) {
        aborted = true;
        return false;
      }
      Vector v(n);
      std::uint64_t w = idx;
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = ext.element_at(w % *ext.order());
        w /= *ext.order();
      }
      if (!rational_against(q, ext, chosen, v) || !independent(&ext, chosen, v)) continue;
      chosen.push_back(v);
      if (exhaustive(chosen, idx + 1)) return true;
      chosen.pop_back();
      if (aborted) return false;
    }
    return false;
  }

  std::vector<Element> scales(const std::vector<Vector>& chosen, const Vector& v) {
    for (const auto& c : q.components()) {
      Element val = c(v);
      if (val.is_zero()) continue;
      auto s = line_descent_scale(val);
      if (!s) return {};
      return {*s, *s * ext.generator()};
    }
    for (const auto& c : q.components())
      for (const auto& u : chosen) {
        Element b = c.polar(u, v);
        if (!b.is_zero()) return {b.inverse()};
      }
    return {ext.one()};
  }

  bool bounded(std::vector<Vector>& chosen, std::uint64_t seed) {
    const std::size_t n = q.dim();
    if (chosen.size() == n) return true;
    VectorSearch s(&ext, n, seed, budget);
    int branches = 0;
    while (auto v = s.next()) {
      ++work;
      for (const Element& c : scales(chosen, *v)) {
        Vector cv = c * *v;
        if (!rational_against(q, ext, chosen, cv) || !independent(&ext, chosen, cv)) continue;
        chosen.push_back(cv);
        if (bounded(chosen, seed * 17 + 3)) return true;
        chosen.pop_back();
        if (++branches >= 4) return false;
      }
    }
    return false;
  }
};

}  // namespace

Decision find_system_f_structure(const QuadraticSystem& q, std::uint64_t budget, std::uint64_t seed,
                                 std::optional<SystemFStructure>& out) {
  const auto& ext = extension_of(q.field());
  SystemSearch s{q, ext, budget};
  std::vector<Vector> chosen;
  bool found;
  if (ext.is_finite()) {
    found = s.exhaustive(chosen, 1);
  } else {
    found = s.bounded(chosen, seed);
    s.aborted = true;
  }
  if (!found) return s.aborted ? Decision::undecided : Decision::no;
  SystemFStructure fs{columns(q.field(), q.dim(), chosen), {}};
  for (const auto& c : q.components()) {
    auto r = restrict_to_base(c.compose(fs.basis));
    if (!r) throw std::logic_error("F-structure search returned a non-rational basis");
    fs.descended.push_back(*r);
  }
  out = std::move(fs);
  return Decision::yes;
}

DescentVerdict system_descent_search(const QuadraticSystem& q, const DescentOptions& o) {
  const auto& ext = extension_of(q.field());
  DescentVerdict v;
  nlohmann::json comp = nlohmann::json::array();
  for (const auto& c : q.components()) {
    if (!is_regular(c)) {
      comp.push_back({{"decision", "n/a"}, {"reason", "component is not regular"}});
      continue;
    }
    auto cv = quad_descent_decide(c, o);
    comp.push_back({{"decision", to_string(cv.decision)}, {"route", cv.route}});
  }
  v.details["componentwise"] = comp;

  const QuadraticSystem t = system_transfer(q, functional_for(ext, o));
  MetabolicOptions mo;
  mo.seed = o.seed;
  const MetabolicResult met = system_is_metabolic(t, mo);
  v.details["transfer_metabolic"] = {{"decision", to_string(met.decision)}, {"method", met.method}};
  if (met.decision == Decision::no) {
    v.decision = Decision::no;
    v.route = "transfer-not-metabolic";
    v.summary = "the transferred system is not metabolic";
    v.obstruction = {{"method", met.method}, {"certificate", met.obstruction}};
    return v;
  }
  std::optional<SystemFStructure> fs;
  const std::uint64_t budget = ext.is_finite() ? 2'000'000 : o.budget;
  const Decision d = find_system_f_structure(q, budget, o.seed, fs);
  if (d == Decision::yes) {
    v.decision = Decision::yes;
    v.route = "explicit-f-structure";
    v.summary = "explicit F-rational basis for the whole system";
    nlohmann::json forms = nlohmann::json::array();
    bool ok = true;
    for (std::size_t i = 0; i < q.size(); ++i) {
      forms.push_back(form_to_json(fs->descended[i]));
      ok = ok && q[i].compose(fs->basis) == extend_scalars(fs->descended[i], q.field());
    }
    v.certificate = {{"basis", matrix_json(fs->basis)}, {"descended", forms}};
    v.verified = ok;
  } else if (d == Decision::no) {
    v.decision = Decision::no;
    v.route = "exhaustive-f-structure-search";
    v.summary = "no F-rational basis exists (exhaustive enumeration)";
    v.obstruction = {{"method", "exhaustive enumeration of F-rational bases"}};
  } else {
    v.route = "bounded-f-structure-search";
    v.summary = "no F-rational basis found within budget";
  }
  return v;
}

}  // namespace witt
