#include "generators.hpp"

namespace witt::gen {

Element nonzero(FieldRef f, Rng& rng) {
  while (true) {
    Element e = f->random(rng);
    if (!e.is_zero()) return e;
  }
}

QuadraticForm random_form(FieldRef f, std::size_t n, Rng& rng) {
  Matrix u(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) u(i, j) = f->random(rng);
  return QuadraticForm(u);
}

QuadraticForm random_regular_form(FieldRef f, std::size_t n, Rng& rng) {
  while (true) {
    QuadraticForm q = random_form(f, n, rng);
    if (is_regular(q)) return q;
  }
}

HermitianForm random_hermitian(AlgebraRef alg, std::size_t n, Rng& rng) {
  FieldRef f = alg->center();
  while (true) {
    DMatrix g(*alg, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      // Sym_1 of theta is the centre for the canonical involution and D = F.
      g(i, i) = alg->scalar(f->random(rng));
      for (std::size_t j = i + 1; j < n; ++j) {
        DElement x = alg->zero();
        for (std::size_t k = 0; k < alg->degree(); ++k) x[k] = f->random(rng);
        g(i, j) = x;
        g(j, i) = alg->theta(x);
      }
    }
    HermitianForm h(alg, 1, std::move(g));
    if (is_regular(h)) return h;
  }
}

}  // namespace witt::gen
