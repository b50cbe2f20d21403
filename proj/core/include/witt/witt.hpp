#pragma once

// Witt decomposition q = q_an + k H: exact over finite fields and Q, bounded
// search elsewhere.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "witt/decision.hpp"
#include "witt/quadratic_form.hpp"

namespace witt {

struct AnisotropicKernel {
  std::size_t dim = 0;
  /// Odd characteristic: product of a diagonalisation of q_an.
  std::optional<Element> discriminant;
  /// Characteristic 2: Arf invariant of the whole form (a representative).
  std::optional<Element> arf;
  /// Over Q: (positive, negative) counts of q_an.
  std::optional<std::pair<std::size_t, std::size_t>> signature;
  /// Over Q: primes where the Hasse invariant of q_an is -1.
  std::vector<Integer> hasse_primes;
};

struct WittReport {
  Decision status = Decision::undecided;  // yes when the index below is exact
  std::size_t dim = 0;
  std::optional<std::size_t> witt_index;
  std::size_t index_lower_bound = 0;
  Decision hyperbolic = Decision::undecided;
  AnisotropicKernel kernel;
  std::string method;
};

struct WittOptions {
  std::uint64_t factor_budget = kDefaultFactorBudget;
  std::uint64_t search_budget = 20'000;
  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument for non-regular q.
WittReport witt_decompose(const QuadraticForm& q, const WittOptions& options = {});
Decision is_hyperbolic(const QuadraticForm& q, const WittOptions& options = {});
Decision is_isotropic(const QuadraticForm& q, const WittOptions& options = {});

/// Largest dimension of a totally isotropic subspace; singular forms allowed.
/// Characteristic != 2 only (nullopt otherwise or when undecided).
std::optional<std::size_t> max_isotropic_dimension(const QuadraticForm& q,
                                                   const WittOptions& options = {});

nlohmann::json to_json(const WittReport& report);

}  // namespace witt
