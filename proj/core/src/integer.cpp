#include "witt/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace witt {

namespace {

constexpr unsigned long kTrialLimit = 50'000;

// Brent's variant of Pollard rho.  Returns a nontrivial factor or nullopt when
// the iteration budget is exhausted.
std::optional<Integer> rho(const Integer& n, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  for (unsigned long c = 1; budget > 0; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer d = abs(x - y);
          q = (q * d) % n;
        }
        g = gcd(q, n);
        k += m;
        budget = budget > m ? budget - m : 0;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(Integer(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return std::nullopt;
}

bool split_into(const Integer& n, std::map<Integer, unsigned>& out, std::uint64_t& budget) {
  if (n == 1) return true;
  if (is_probable_prime(n)) {
    ++out[n];
    return true;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<Integer, unsigned> sub;
    if (!split_into(root, sub, budget)) return false;
    for (auto& [p, e] : sub) out[p] += 2 * e;
    return true;
  }
  auto d = rho(n, budget);
  if (!d) return false;
  Integer other = n / *d;
  return split_into(*d, out, budget) && split_into(other, out, budget);
}

}  // namespace

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::optional<std::vector<std::pair<Integer, unsigned>>> factor(const Integer& n,
                                                                std::uint64_t budget) {
  if (n == 0) throw std::domain_error("factor: zero has no factorisation");
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++found[Integer(p)];
    }
  }
  if (m > 1 && !split_into(m, found, budget)) return std::nullopt;
  return std::vector<std::pair<Integer, unsigned>>(found.begin(), found.end());
}

Integer SquareClass::squarefree() const {
  Integer r = sign;
  for (const auto& p : odd_primes) r *= p;
  return r;
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
  SquareClass out;
  out.sign = sign * other.sign;
  std::set_symmetric_difference(odd_primes.begin(), odd_primes.end(), other.odd_primes.begin(),
                                other.odd_primes.end(), std::back_inserter(out.odd_primes));
  return out;
}

Integer square_class_representative(const Rational& r) {
  return Integer(r.get_num() * r.get_den());
}

std::optional<SquareClass> square_class(const Rational& r, std::uint64_t budget) {
  if (r == 0) throw std::domain_error("square_class: zero");
  Integer rep = square_class_representative(r);
  auto fac = factor(rep, budget);
  if (!fac) return std::nullopt;
  SquareClass out;
  out.sign = sgn(rep) < 0 ? -1 : 1;
  for (const auto& [p, e] : *fac)
    if (e % 2 == 1) out.odd_primes.push_back(p);
  return out;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

}  // namespace witt
