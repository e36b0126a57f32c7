#pragma once

#include <string>
#include <vector>

#include "chromakac/chromatic.hpp"
#include "chromakac/graph.hpp"
#include "chromakac/polynomial.hpp"

namespace chromakac {

/// Names of the chromatic-polynomial routes, in report order.
const std::vector<std::string>& chromatic_method_names();

/// True for names accepted by `compute` (the routes plus "kostant").
bool is_compute_method(const std::string& name);

/// Dispatches a single method by name; throws std::invalid_argument for
/// unknown names.
Polynomial compute_method(const Graph& g, const std::string& name, const Limits& limits = {});

struct MethodResult {
  std::string name;
  Polynomial polynomial;
  double milliseconds = 0.0;
};

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Everything `verify` establishes for one graph: each route's polynomial,
/// whether they all agree, and the identity checks.
struct RunReport {
  int vertex_count = 0;
  int edge_count = 0;
  bool connected = false;
  std::vector<std::pair<int, int>> edges;

  std::vector<MethodResult> methods;
  Polynomial kostant;
  double kostant_milliseconds = 0.0;

  bool agreement = false;
  std::string first_disagreement;  // "method-a vs method-b at q^k" when !agreement

  std::vector<CheckResult> checks;

  bool all_ok() const;
};

/// Runs every route and every identity check. Pure; deterministic apart from
/// the timing fields.
RunReport run_verify(const Graph& g, const Limits& limits = {});

}  // namespace chromakac
