#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "witt/decision.hpp"

namespace witt {

/// Outcome of a descent question.  `route` names the criterion that settled
/// it; `obstruction` explains a "no"; `certificate` carries the witness of a
/// "yes"; `verified` records whether that witness was re-checked exactly.
struct DescentVerdict {
  Decision decision = Decision::undecided;
  std::string route;
  std::string summary;
  nlohmann::json obstruction;
  nlohmann::json certificate;
  std::optional<bool> verified;
  nlohmann::json details = nlohmann::json::object();
};

nlohmann::json to_json(const DescentVerdict& v);

}  // namespace witt
