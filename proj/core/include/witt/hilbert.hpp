#pragma once

// Hilbert symbols and local square tests over Q.

#include <optional>
#include <string>
#include <vector>

#include "witt/integer.hpp"

namespace witt {

/// A place of Q: a prime, or the real place when `prime` is zero.
struct Place {
  Integer prime;

  static Place infinity() { return Place{Integer(0)}; }
  static Place at(long p) { return Place{Integer(p)}; }
  bool is_infinite() const { return prime == 0; }
  std::string str() const { return is_infinite() ? "inf" : prime.get_str(); }
  bool operator==(const Place&) const = default;
};

/// (a, b)_v for nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);
bool is_local_square(const Rational& a, const Place& v);

/// 2 together with every prime dividing a numerator or denominator; nullopt
/// when factorisation exceeds the budget.
std::optional<std::vector<Integer>> relevant_primes(const std::vector<Rational>& values,
                                                    std::uint64_t budget = kDefaultFactorBudget);

}  // namespace witt
