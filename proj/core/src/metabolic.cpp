#include "witt/metabolic.hpp"

#include <algorithm>
#include <stdexcept>

#include "witt/search.hpp"
#include "witt/witt.hpp"

namespace witt {

namespace {

bool vanishes(const QuadraticSystem& q, const Vector& v) {
  for (const auto& c : q.components())
    if (!c(v).is_zero()) return false;
  return true;
}

// Basis of {w : b_i(v, w) = 0 for all i} with v itself removed: a complement
// of v inside its orthogonal.  The induced system on it is the system on
// v^perp / <v>.
std::vector<Vector> orthogonal_complement_of_line(const QuadraticSystem& q, const Vector& v) {
  FieldRef f = q.field();
  std::vector<Vector> rows;
  for (const auto& c : q.components()) rows.push_back(c.polar_matrix() * v);
  std::vector<Vector> perp =
      rows.empty() ? std::vector<Vector>{} : nullspace(Matrix::from_rows(f, rows));
  if (rows.empty())
    for (std::size_t i = 0; i < q.dim(); ++i) perp.push_back(unit_vector(f, q.dim(), i));
  std::vector<Vector> family{v}, complement;
  for (const auto& w : perp) {
    family.push_back(w);
    if (rank(Matrix::from_rows(f, family)) < family.size())
      family.pop_back();
    else
      complement.push_back(w);
  }
  return complement;
}

struct Walker {
  std::uint64_t budget;
  std::uint64_t work = 0;
  bool aborted = false;

  // Exact: every totally isotropic L of dim m contains an isotropic line.
  bool exact(const QuadraticSystem& q, std::size_t m, const Matrix& lift, std::vector<Vector>& out) {
    if (m == 0) return true;
    if (q.dim() < m) return false;
    bool found = false;
    for_each_line(q.field(), q.dim(), [&](const Vector& v) {
      if (++work > budget) {
        aborted = true;
        return false;
      }
      if (!vanishes(q, v)) return true;
      auto comp = orthogonal_complement_of_line(q, v);
      if (comp.size() + 1 < m) return true;
      Matrix c = comp.empty() ? Matrix(q.field(), q.dim(), 0) : Matrix::from_columns(q.field(), q.dim(), comp);
      if (exact(q.compose(c), m - 1, lift * c, out)) {
        out.push_back(lift * v);
        found = true;
        return false;
      }
      return !aborted;
    });
    return found;
  }

  // Bounded: a few candidate lines per level from the small-height sweep.
  bool search(const QuadraticSystem& q, std::size_t m, const Matrix& lift, std::vector<Vector>& out,
              std::uint64_t seed) {
    if (m == 0) return true;
    if (q.dim() < m) return false;
    VectorSearch s(q.field(), q.dim(), seed, budget);
    int tries = 0;
    while (auto v = s.next()) {
      ++work;
      if (!vanishes(q, *v)) continue;
      auto comp = orthogonal_complement_of_line(q, *v);
      if (comp.size() + 1 < m) continue;
      if (m == 1) {
        out.push_back(lift * *v);
        return true;
      }
      Matrix c = Matrix::from_columns(q.field(), q.dim(), comp);
      if (search(q.compose(c), m - 1, lift * c, out, seed * 31 + 7)) {
        out.push_back(lift * *v);
        return true;
      }
      if (++tries >= 3) return false;
    }
    return false;
  }
};

}  // namespace

Decision has_totally_isotropic(const QuadraticSystem& q, std::size_t m, std::uint64_t budget,
                               std::vector<Vector>* witness) {
  if (!q.field()->is_finite()) throw std::invalid_argument("exhaustive isotropy needs a finite field");
  Walker w{budget};
  std::vector<Vector> out;
  bool ok = w.exact(q, m, Matrix::identity(q.field(), q.dim()), out);
  if (ok) {
    if (witness) *witness = out;
    return Decision::yes;
  }
  return w.aborted ? Decision::undecided : Decision::no;
}

MetabolicResult system_is_metabolic(const QuadraticSystem& q, const MetabolicOptions& o) {
  MetabolicResult r;
  FieldRef f = q.field();
  const std::size_t n = q.dim();
  const std::size_t m = (n + 1) / 2;
  bool all_zero = true;
  for (const auto& c : q.components()) all_zero = all_zero && c.is_zero();
  if (all_zero) {
    r.decision = Decision::yes;
    r.method = "zero system";
    for (std::size_t i = 0; i < n; ++i) r.witness.push_back(unit_vector(f, n, i));
    return r;
  }
  if (f->is_finite()) {
    r.method = "exhaustive isotropic flag enumeration";
    r.decision = has_totally_isotropic(q, m, o.budget, &r.witness);
    if (r.decision == Decision::undecided) r.method = "enumeration budget exhausted";
    return r;
  }
  // A combination sum c_i q_i whose totally isotropic subspaces are all too
  // small proves the system is not metabolic.
  if (f->characteristic() != 2 && f->is_rationals()) {
    const std::size_t k = q.size();
    std::size_t side = 2;
    while (capped_power(side, k, o.pencil_combinations) < o.pencil_combinations &&
           side < o.pencil_combinations)
      ++side;
    auto pool = small_elements(f, side);
    std::vector<std::size_t> digits(k, 0);
    std::size_t checked = 0;
    for (std::size_t h = 1; h < pool.size() && checked < o.pencil_combinations; ++h) {
      std::fill(digits.begin(), digits.end(), 0);
      for (;;) {
        std::size_t i = 0;
        while (i < k && ++digits[i] > h) digits[i++] = 0;
        if (i == k) break;
        if (*std::max_element(digits.begin(), digits.end()) != h) continue;
        if (++checked > o.pencil_combinations) break;
        Matrix sum(f, n, n);
        Vector coeffs;
        for (std::size_t j = 0; j < k; ++j) {
          coeffs.push_back(pool[digits[j]]);
          sum = sum + q[j].coefficients() * pool[digits[j]];
        }
        QuadraticForm combo(sum);
        auto mid = max_isotropic_dimension(combo);
        if (mid && *mid < m) {
          r.decision = Decision::no;
          r.method = "anisotropic combination";
          nlohmann::json c = nlohmann::json::array();
          for (const auto& e : coeffs) c.push_back(e.str());
          r.obstruction = {{"combination", c},
                           {"form", combo.coefficients().to_strings()},
                           {"max_isotropic_dim", *mid},
                           {"required_dim", m}};
          return r;
        }
      }
    }
  }
  Walker w{o.search_budget};
  std::vector<Vector> out;
  if (w.search(q, m, Matrix::identity(f, n), out, o.seed)) {
    r.decision = Decision::yes;
    r.method = "isotropic subspace search";
    r.witness = out;
    return r;
  }
  r.method = "search budget exhausted";
  return r;
}

}  // namespace witt
