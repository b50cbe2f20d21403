#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace witt::oracle {

int Gf9::add(int a, int b) { return (a % 3 + b % 3) % 3 + 3 * ((a / 3 + b / 3) % 3); }

int Gf9::mul(int a, int b) {
  const int x1 = a % 3, y1 = a / 3, x2 = b % 3, y2 = b / 3;
  const int x = (x1 * x2 + 2 * y1 * y2) % 3;
  const int y = (x1 * y2 + x2 * y1) % 3;
  return x + 3 * y;
}

int Gf9::neg(int a) { return (3 - a % 3) % 3 + 3 * ((3 - a / 3) % 3); }

namespace {

int gf9_inv(int a) {
  for (int b = 1; b < 9; ++b)
    if (Gf9::mul(a, b) == 1) return b;
  throw std::domain_error("gf9_inv(0)");
}

int q_eval(const std::vector<std::vector<int>>& u, const std::vector<int>& v) {
  int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j) s = Gf9::add(s, Gf9::mul(u[i][j], Gf9::mul(v[i], v[j])));
  return s;
}

int b_eval(const std::vector<std::vector<int>>& u, const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> sum(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sum[i] = Gf9::add(x[i], y[i]);
  return Gf9::add(q_eval(u, sum), Gf9::neg(Gf9::add(q_eval(u, x), q_eval(u, y))));
}

std::size_t gf9_rank(std::vector<std::vector<int>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const int inv = gf9_inv(rows[rank][c]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const int f = Gf9::neg(Gf9::mul(rows[r][c], inv));
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = Gf9::add(rows[r][k], Gf9::mul(f, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::vector<int>> gf9_coefficients(const QuadraticForm& q) {
  const auto* ext = q.field()->as_extension();
  if (!ext || ext->base()->order() != 3u) throw std::invalid_argument("form is not over GF(3)(sqrt(2))");
  std::vector<std::vector<int>> out(q.dim(), std::vector<int>(q.dim(), 0));
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = 0; j < q.dim(); ++j) {
      const auto [x, y] = ext->coordinates(q.coefficient(i, j));
      out[i][j] = static_cast<int>(FiniteField::word(x) + 3 * FiniteField::word(y));
    }
  return out;
}

bool gf9_has_f_structure(const std::vector<std::vector<int>>& upper) {
  const std::size_t n = upper.size();
  std::vector<std::vector<int>> candidates;  // q(v) in F
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 9;
  for (std::size_t idx = 1; idx < total; ++idx) {
    std::vector<int> v(n);
    std::size_t r = idx;
    for (std::size_t i = 0; i < n; ++i, r /= 9) v[i] = static_cast<int>(r % 9);
    if (Gf9::in_base(q_eval(upper, v))) candidates.push_back(std::move(v));
  }
  std::vector<std::vector<int>> chosen;
  std::function<bool()> extend = [&]() -> bool {
    if (chosen.size() == n) return true;
    for (const auto& v : candidates) {
      bool ok = true;
      for (const auto& w : chosen)
        if (!Gf9::in_base(b_eval(upper, v, w))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(v);
      if (gf9_rank(chosen) == chosen.size() && extend()) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend();
}

namespace {

Element eval(const std::vector<std::vector<Element>>& u, const std::vector<Element>& v, FieldRef f) {
  Element s = f->zero();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j) s += u[i][j] * v[i] * v[j];
  return s;
}

Element polar_eval(const std::vector<std::vector<Element>>& u, const std::vector<Element>& x,
                   const std::vector<Element>& y, FieldRef f) {
  std::vector<Element> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  return eval(u, s, f) - eval(u, x, f) - eval(u, y, f);
}

// Basis of {x : rows * x = 0} by plain Gaussian elimination.
std::vector<std::vector<Element>> kernel(std::vector<std::vector<Element>> rows, std::size_t n, FieldRef f) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Element inv = rows[rank][c].inverse();
    for (auto& e : rows[rank]) e *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Element factor = rows[r][c];
      for (std::size_t k = 0; k < n; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<std::vector<Element>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Element> v(n, f->zero());
    v[free] = f->one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::size_t witt_index_by_stripping(const QuadraticForm& q) {
  FieldRef f = q.field();
  const std::uint64_t order = f->order().value();
  std::vector<std::vector<Element>> u(q.dim(), std::vector<Element>(q.dim()));
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = 0; j < q.dim(); ++j) u[i][j] = j >= i ? q.coefficient(i, j) : f->zero();
  std::size_t index = 0;
  while (u.size() >= 2) {
    const std::size_t n = u.size();
    std::optional<std::vector<Element>> iso;
    std::vector<std::uint64_t> digits(n, 0);
    while (true) {
      std::size_t k = 0;
      while (k < n && ++digits[k] == order) digits[k++] = 0;
      if (k == n) break;
      std::vector<Element> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = f->element_at(digits[i]);
      if (eval(u, v, f).is_zero()) {
        iso = std::move(v);
        break;
      }
    }
    if (!iso) break;
    // w with b(v, w) = 1, then w - q(w) v is isotropic as well.
    std::vector<Element> w;
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      std::vector<Element> e(n, f->zero());
      e[i] = f->one();
      const Element c = polar_eval(u, *iso, e, f);
      if (!c.is_zero()) {
        e[i] = c.inverse();
        w = e;
      }
    }
    if (w.empty()) throw std::invalid_argument("oracle: isotropic vector in the radical");
    const Element qw = eval(u, w, f);
    for (std::size_t i = 0; i < n; ++i) w[i] -= qw * (*iso)[i];
    std::vector<std::vector<Element>> rows(2, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Element> e(n, f->zero());
      e[i] = f->one();
      rows[0][i] = polar_eval(u, *iso, e, f);
      rows[1][i] = polar_eval(u, w, e, f);
    }
    const auto c = kernel(rows, n, f);
    std::vector<std::vector<Element>> next(c.size(), std::vector<Element>(c.size(), f->zero()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i][i] = eval(u, c[i], f);
      for (std::size_t j = i + 1; j < c.size(); ++j) next[i][j] = polar_eval(u, c[i], c[j], f);
    }
    u = std::move(next);
    ++index;
  }
  return index;
}

int hilbert_symbol_brute(long a, long b, long p) {
  long m = 1;
  for (int i = 0; i < (p == 2 ? 6 : 3); ++i) m *= p;
  auto mod = [m](long x) { return ((x % m) + m) % m; };
  std::vector<char> square(static_cast<std::size_t>(m), 0);
  for (long z = 0; z < m; ++z) square[static_cast<std::size_t>(z * z % m)] = 1;
  std::vector<char> unit_square(static_cast<std::size_t>(m), 0);
  for (long z = 0; z < m; ++z)
    if (z % p) unit_square[static_cast<std::size_t>(z * z % m)] = 1;
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y) {
      const long r = mod(mod(a) * (x * x % m) + mod(b) * (y * y % m));
      if (x % p || y % p) {
        if (square[static_cast<std::size_t>(r)]) return 1;
      } else if (unit_square[static_cast<std::size_t>(r)]) {
        return 1;
      }
    }
  return -1;
}

bool gf2_poly_is_square(const std::vector<int>& coefficients) {
  for (std::size_t i = 1; i < coefficients.size(); i += 2)
    if (coefficients[i] % 2) return false;
  return true;
}

}  // namespace witt::oracle
