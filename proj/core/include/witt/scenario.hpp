#pragma once

// Scenario files: line-oriented `key = value` with [section] headers.  See
// docs/scenario-grammar.md for the grammar.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace witt {

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class Task { descend, cor_split, witt, metabolic, reproduce_remark, reproduce_erratum };

std::string_view to_string(Task t);
std::optional<Task> parse_task(std::string_view s);

/// One [form] section.  Entries are element literals; `rows` holds the
/// coefficient matrix (upper triangle used, lower folded in), `diagonal` a
/// single row of diagonal coefficients.
struct FormSpec {
  bool diagonal = false;
  std::vector<std::vector<std::string>> rows;
  bool operator==(const FormSpec&) const = default;
};

struct AlgebraSpec {
  std::string quaternion;        // "(a,b)" or "[a,b)"
  bool over_base = true;         // given over F and extended, or given over K
  std::string involution = "canonical";
  std::optional<std::string> u;  // "w,x,y,z" for int(u)*gamma
  bool operator==(const AlgebraSpec&) const = default;
};

/// Hermitian Gram rows; entries are D-elements ("w,x,y,z" for quaternions).
struct HermitianSpec {
  int lambda = 1;
  bool diagonal = false;
  std::vector<std::vector<std::string>> rows;
  bool operator==(const HermitianSpec&) const = default;
};

struct Scenario {
  std::string name;
  Task task = Task::descend;
  std::string field;
  std::optional<std::string> ext;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> scale;  // functional c*s
  std::vector<FormSpec> forms;
  std::optional<AlgebraSpec> algebra;
  std::optional<HermitianSpec> hermitian;
  bool operator==(const Scenario&) const = default;
};

/// Throws ScenarioError with 1-based line and column.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);
/// Canonical text; parse_scenario(print_scenario(s)) == s.
std::string print_scenario(const Scenario& s);

}  // namespace witt
