#pragma once

// Metabolic systems: is there a subspace L with dim L >= dim V / 2 on which
// every component vanishes identically?

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "witt/decision.hpp"
#include "witt/quadratic_form.hpp"

namespace witt {

struct MetabolicOptions {
  std::uint64_t budget = 2'000'000;  // line visits for the exact enumeration
  std::uint64_t search_budget = 4'000;
  std::size_t pencil_combinations = 400;
  std::uint64_t seed = 1;
};

struct MetabolicResult {
  Decision decision = Decision::undecided;
  std::vector<Vector> witness;  // basis of L when yes
  std::string method;
  nlohmann::json obstruction;
};

MetabolicResult system_is_metabolic(const QuadraticSystem& q, const MetabolicOptions& options = {});

/// Exhaustive check: does L with dim L = m and q|_L = 0 exist (finite field)?
Decision has_totally_isotropic(const QuadraticSystem& q, std::size_t m, std::uint64_t budget,
                               std::vector<Vector>* witness = nullptr);

}  // namespace witt
