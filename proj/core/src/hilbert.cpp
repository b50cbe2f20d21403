#include "witt/hilbert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace witt {

namespace {

// a = p^alpha * u with u a p-adic unit.
std::pair<unsigned, Integer> split_valuation(Integer a, const Integer& p) {
  unsigned v = 0;
  while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return {v, a};
}

int mod_small(const Integer& a, unsigned long m) {
  return static_cast<int>(mpz_fdiv_ui(a.get_mpz_t(), m));
}

// epsilon(u) = (u-1)/2 and omega(u) = (u^2-1)/8 modulo 2, u odd.
int eps2(const Integer& u) { return mod_small(u, 4) == 3 ? 1 : 0; }
int omega2(const Integer& u) {
  const int r = mod_small(u, 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

int hilbert_integers(const Integer& a, const Integer& b, const Place& v) {
  if (a == 0 || b == 0) throw std::domain_error("Hilbert symbol of zero");
  if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const Integer& p = v.prime;
  auto [alpha, u] = split_valuation(a, p);
  auto [beta, w] = split_valuation(b, p);
  if (p == 2) {
    int e = eps2(u) * eps2(w) + static_cast<int>(alpha % 2) * omega2(w) +
            static_cast<int>(beta % 2) * omega2(u);
    return e % 2 ? -1 : 1;
  }
  int sign = 1;
  if ((alpha % 2) && (beta % 2) && mod_small(p, 4) == 3) sign = -sign;
  if (beta % 2) sign *= legendre(u, p);
  if (alpha % 2) sign *= legendre(w, p);
  return sign;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw std::domain_error("Hilbert symbol of zero");
  return hilbert_integers(square_class_representative(a), square_class_representative(b), v);
}

bool is_local_square(const Rational& a, const Place& v) {
  if (a == 0) return true;
  const Integer n = square_class_representative(a);
  if (v.is_infinite()) return n > 0;
  auto [alpha, u] = split_valuation(n, v.prime);
  if (alpha % 2) return false;
  if (v.prime == 2) return mod_small(u, 8) == 1;
  return legendre(u, v.prime) == 1;
}

std::optional<std::vector<Integer>> relevant_primes(const std::vector<Rational>& values,
                                                    std::uint64_t budget) {
  std::set<Integer> primes{Integer(2)};
  for (const auto& r : values) {
    if (r == 0) continue;
    for (const Integer& part : {Integer(r.get_num()), Integer(r.get_den())}) {
      auto f = factor(part, budget);
      if (!f) return std::nullopt;
      for (const auto& [p, e] : *f) primes.insert(p);
    }
  }
  return std::vector<Integer>(primes.begin(), primes.end());
}

}  // namespace witt
