#include "witt/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "witt/descent.hpp"
#include "witt/metabolic.hpp"
#include "witt/quad_descent.hpp"
#include "witt/witt.hpp"

namespace witt {

namespace {

constexpr std::uint64_t kDefaultBudget = 4'000;

struct Outcome {
  Decision decision = Decision::undecided;
  bool decided = false;  // exit code 0 vs 2
  std::string verdict;
  std::string route;
  nlohmann::json result = nlohmann::json::object();
  nlohmann::json details = nlohmann::json::object();
};

struct Context {
  FieldRef base;
  FieldRef top;
  std::uint64_t seed;
  std::uint64_t budget;
  bool budget_given = false;
  std::optional<Element> scale;
};

Vector parse_entries(FieldRef f, const std::vector<std::string>& row) {
  Vector out;
  out.reserve(row.size());
  for (const auto& e : row) out.push_back(parse_element(f, e));
  return out;
}

QuadraticForm build_form(FieldRef f, const FormSpec& spec) {
  if (spec.diagonal) return QuadraticForm::diagonal(f, parse_entries(f, spec.rows.front()));
  std::vector<Vector> rows;
  for (const auto& r : spec.rows) {
    if (r.size() != spec.rows.size()) throw std::invalid_argument("[form] coefficient matrix is not square");
    rows.push_back(parse_entries(f, r));
  }
  return QuadraticForm(Matrix::from_rows(f, rows));
}

QuadraticSystem build_system(FieldRef f, const std::vector<FormSpec>& specs) {
  std::vector<QuadraticForm> forms;
  for (const auto& s : specs) forms.push_back(build_form(f, s));
  const std::size_t n = forms.front().dim();
  for (const auto& q : forms)
    if (q.dim() != n) throw std::invalid_argument("system components have different dimensions");
  return QuadraticSystem(f, n, std::move(forms));
}

// The quaternion algebra as declared (over F or over K) and its involution.
std::pair<QuaternionAlgebra, InvolutionSpec> declared_quaternion(const Context& c, const AlgebraSpec& a) {
  FieldRef f = a.over_base ? c.base : c.top;
  QuaternionAlgebra q = parse_quaternion_algebra(f, a.quaternion);
  InvolutionSpec sigma = a.u ? InvolutionSpec::inner(parse_quaternion(q, *a.u)) : InvolutionSpec::canonical();
  validate_involution(q, sigma);
  return {std::move(q), std::move(sigma)};
}

// The algebra over K the hermitian form lives on.
AlgebraRef build_algebra(const Context& c, const std::optional<AlgebraSpec>& a) {
  AlgebraRef alg;
  if (!a) {
    alg = AlgebraWithInvolution::commutative(c.base);
  } else {
    auto [q, sigma] = declared_quaternion(c, *a);
    alg = AlgebraWithInvolution::quaternion(std::move(q), std::move(sigma));
    if (!a->over_base) return alg;
  }
  return c.top == c.base ? alg : alg->extend_scalars(c.top);
}

HermitianForm build_hermitian(AlgebraRef alg, const HermitianSpec& spec) {
  auto parse_row = [&](const std::vector<std::string>& r) {
    DVector out;
    for (const auto& e : r) out.push_back(alg->parse(e));
    return out;
  };
  if (spec.diagonal) return HermitianForm::diagonal(alg, spec.lambda, parse_row(spec.rows.front()));
  const std::size_t n = spec.rows.size();
  DMatrix g(*alg, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.rows[i].size() != n) throw std::invalid_argument("[hermitian] Gram matrix is not square");
    const DVector row = parse_row(spec.rows[i]);
    for (std::size_t j = 0; j < n; ++j) g(i, j) = row[j];
  }
  return HermitianForm(alg, spec.lambda, std::move(g));
}

QuaternionOptions quaternion_options(const Context& c) {
  QuaternionOptions o;
  o.seed = c.seed;
  if (c.budget_given) o.budget = c.budget;
  return o;
}

Outcome from_verdict(const DescentVerdict& v) {
  Outcome o;
  o.decision = v.decision;
  o.decided = v.decision != Decision::undecided;
  o.verdict = v.summary;
  o.route = v.route;
  o.result["decision"] = to_string(v.decision);
  o.result["summary"] = v.summary;
  if (!v.obstruction.is_null()) o.result["obstruction"] = v.obstruction;
  if (!v.certificate.is_null()) o.result["certificate"] = v.certificate;
  if (v.verified) o.result["verified"] = *v.verified;
  o.details = v.details;
  return o;
}

nlohmann::json vector_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

Outcome run_descend(const Scenario& s, const Context& c) {
  if (!s.forms.empty()) {
    DescentOptions o;
    o.seed = c.seed;
    o.budget = c.budget;
    o.functional_scale = c.scale;
    if (s.forms.size() == 1) return from_verdict(quad_descent(build_form(c.top, s.forms.front()), o));
    const QuadraticSystem sys = build_system(c.top, s.forms);
    std::string componentwise;
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& q : sys.components()) {
      const DescentVerdict v = quad_descent_decide(q, o);
      componentwise += (componentwise.empty() ? "" : ",") + std::string(to_string(v.decision));
      parts.push_back(to_json(v));
    }
    const DescentVerdict v = system_descent_search(sys, o);
    Outcome out = from_verdict(v);
    out.verdict = "componentwise: " + componentwise + "; system: " + std::string(to_string(v.decision));
    out.result["componentwise"] = componentwise;
    out.details["components"] = parts;
    return out;
  }
  if (s.hermitian) {
    const HermitianForm h = build_hermitian(build_algebra(c, s.algebra), *s.hermitian);
    HermitianDescentOptions o;
    o.seed = c.seed;
    o.budget = c.budget;
    o.functional_scale = c.scale;
    if (h.algebra().base()) return from_verdict(hermitian_descent(h, o));
    return from_verdict(quaternionic_descent_to_F(h, o));
  }
  // Algebra with involution alone.
  auto [q, sigma] = declared_quaternion(c, *s.algebra);
  if (s.algebra->over_base) {
    q = extend_scalars(q, c.top);
    sigma = extend_scalars(sigma, c.top);
  }
  const AlgDescentResult r = alg_descent(q, sigma, quaternion_options(c));
  Outcome o;
  o.decision = r.decision;
  o.decided = r.decision != Decision::undecided;
  o.verdict = r.summary;
  o.route = r.route;
  o.result["decision"] = to_string(r.decision);
  o.result["summary"] = r.summary;
  o.result["involution_type"] = r.type.symplectic ? "symplectic" : "orthogonal";
  if (r.decision == Decision::no) o.result["obstruction"] = to_json(r.cor);
  if (r.presentation) {
    nlohmann::json cert = {{"presentation", r.presentation->descended.presentation()},
                           {"x", q.format(r.presentation->x)},
                           {"y", q.format(r.presentation->y)}};
    if (r.descended_involution) cert["involution"] = r.descended_involution->describe(r.presentation->descended);
    o.result["certificate"] = cert;
  }
  if (r.u) o.details["u"] = q.format(*r.u);
  o.details["corestriction"] = to_json(r.cor);
  return o;
}

Outcome run_cor_split(const Scenario& s, const Context& c) {
  auto [q, sigma] = declared_quaternion(c, *s.algebra);
  if (s.algebra->over_base) q = extend_scalars(q, c.top);
  const CorSplitReport r = cor_split_test(q, quaternion_options(c));
  Outcome o;
  o.decision = r.verdict;
  o.decided = r.verdict != Decision::undecided;
  o.verdict = r.verdict == Decision::yes  ? "corestriction splits"
              : r.verdict == Decision::no ? "corestriction does not split"
                                          : "corestriction split test undecided";
  o.route = r.method;
  o.result = to_json(r);
  o.result["decision"] = to_string(r.verdict);
  return o;
}

Outcome run_witt(const Scenario& s, const Context& c) {
  WittOptions w;
  w.seed = c.seed;
  w.search_budget = std::max<std::uint64_t>(c.budget, 1000);
  const WittReport r = witt_decompose(build_form(c.top, s.forms.front()), w);
  Outcome o;
  o.decision = r.hyperbolic;
  o.decided = r.status == Decision::yes;
  o.verdict = r.witt_index ? "witt index " + std::to_string(*r.witt_index) + (r.hyperbolic == Decision::yes ? ", hyperbolic" : "")
                           : "witt index at least " + std::to_string(r.index_lower_bound);
  o.route = r.method;
  o.result = to_json(r);
  o.result["decision"] = to_string(r.hyperbolic);
  return o;
}

Outcome run_metabolic(const Scenario& s, const Context& c) {
  MetabolicOptions m;
  m.seed = c.seed;
  m.search_budget = c.budget;
  const MetabolicResult r = system_is_metabolic(build_system(c.top, s.forms), m);
  Outcome o;
  o.decision = r.decision;
  o.decided = r.decision != Decision::undecided;
  o.verdict = r.decision == Decision::yes ? "metabolic" : r.decision == Decision::no ? "not metabolic" : "undecided";
  o.route = r.method;
  o.result["decision"] = to_string(r.decision);
  if (r.decision == Decision::yes) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& v : r.witness) w.push_back(vector_json(v));
    o.result["witness"] = w;
  }
  if (!r.obstruction.is_null()) o.result["obstruction"] = r.obstruction;
  return o;
}

Outcome run_task(const Scenario& s, const Context& c) {
  switch (s.task) {
    case Task::descend: return run_descend(s, c);
    case Task::cor_split: return run_cor_split(s, c);
    case Task::witt: return run_witt(s, c);
    case Task::metabolic: return run_metabolic(s, c);
    case Task::reproduce_remark: {
      const RemarkReport r = remark_counterexample_check();
      Outcome o;
      o.decision = from_bool(r.passed);
      o.decided = r.passed;
      o.result = r.to_json();
      o.verdict = o.result["verdict"].get<std::string>();
      o.route = "explicit-f-basis-and-determinant-norm";
      return o;
    }
    case Task::reproduce_erratum: {
      const ErratumReport r = erratum_counterexample_check(c.seed);
      Outcome o;
      o.decision = from_bool(r.passed);
      o.decided = r.passed;
      o.result = r.to_json();
      o.verdict = o.result["verdict"].get<std::string>();
      o.route = r.system.route;
      return o;
    }
  }
  throw std::logic_error("unhandled task");
}

nlohmann::json header(const std::string& source) {
  return {{"schema", kReportSchema},
          {"schema_version", kReportSchemaVersion},
          {"tool", {{"name", "witt-descent"}, {"version", WITT_VERSION}}},
          {"source", source}};
}

std::string render_human(const nlohmann::json& doc, const Outcome& o, bool explain) {
  std::ostringstream h;
  h << "scenario: " << doc["input"]["name"].get<std::string>() << "\n";
  h << "task: " << doc["task"].get<std::string>() << "\n";
  h << "decision: " << to_string(o.decision) << "\n";
  h << "verdict: " << o.verdict << "\n";
  if (o.result.contains("verified")) h << "certificate verified: " << (o.result["verified"].get<bool>() ? "yes" : "no") << "\n";
  if (o.result.contains("certificate")) h << "certificate: " << o.result["certificate"].dump() << "\n";
  if (o.result.contains("obstruction")) h << "obstruction: " << o.result["obstruction"].dump() << "\n";
  if (explain) {
    h << "route: " << o.route << "\n";
    if (!o.details.empty()) h << "details: " << o.details.dump(2) << "\n";
  }
  return h.str();
}

}  // namespace

RunResult input_error(const std::string& source, const std::string& message) {
  RunResult r;
  r.exit_code = 1;
  r.document = header(source);
  r.document["error"] = message;
  r.human = "error: " + (source.empty() ? "" : source + ": ") + message + "\n";
  return r;
}

RunResult run_scenario(const Scenario& s, const RunOptions& options, const std::string& source) {
  const auto start = std::chrono::steady_clock::now();
  Context c;
  c.seed = options.seed.value_or(s.seed.value_or(1));
  c.budget = options.budget.value_or(s.budget.value_or(kDefaultBudget));
  c.budget_given = options.budget || s.budget;
  Outcome o;
  try {
    if (!s.field.empty()) {
      c.base = parse_field(s.field);
      c.top = s.ext ? parse_extension(c.base, *s.ext) : c.base;
      if (s.scale) c.scale = parse_element(c.base, *s.scale);
    }
    o = run_task(s, c);
  } catch (const std::exception& e) {
    return input_error(source, e.what());
  }
  RunResult r;
  r.decision = o.decision;
  r.exit_code = o.decided ? 0 : 2;
  nlohmann::json& d = r.document;
  d = header(source);
  d["input"] = {{"name", s.name.empty() ? source : s.name},
                {"scenario", print_scenario(s)},
                {"seed", c.seed},
                {"budget", c.budget},
                {"explain", options.explain}};
  d["task"] = to_string(s.task);
  d["decision"] = to_string(o.decision);
  d["verdict"] = o.verdict;
  d["result"] = o.result;
  if (options.explain) {
    d["route"] = o.route;
    d["details"] = o.details;
  }
  r.human = render_human(d, o, options.explain);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  d["timing"] = {{"elapsed_ms", ms}};
  return r;
}

RunResult run_scenario_text(const std::string& text, const RunOptions& options, const std::string& source) {
  Scenario s;
  try {
    s = parse_scenario(text);
  } catch (const ScenarioError& e) {
    return input_error(source, e.what());
  }
  return run_scenario(s, options, source);
}

RunResult run_scenario_file(const std::string& path, const RunOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return input_error(path, "cannot open scenario file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return run_scenario_text(ss.str(), options, path);
}

nlohmann::json strip_timing(nlohmann::json document) {
  document.erase("timing");
  return document;
}

}  // namespace witt
