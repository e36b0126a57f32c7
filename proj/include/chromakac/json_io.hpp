#pragma once

#include <json.hpp>

#include <string>

#include "chromakac/bond_lattice.hpp"
#include "chromakac/graph.hpp"
#include "chromakac/polynomial.hpp"
#include "chromakac/report.hpp"

namespace chromakac {

using ordered_json = nlohmann::ordered_json;

// All big integers are rendered as decimal strings so consumers never lose
// precision; key order is fixed so identical inputs give identical bytes.

ordered_json polynomial_to_json(const Polynomial& p);
ordered_json graph_to_json(const Graph& g);

/// Elements in extension order with blocks, rank, Moebius value and the
/// indices of covered elements.
ordered_json lattice_to_json(const BondLattice& lat);

/// Root multiplicity of every connected vertex subset, keyed by the sorted
/// vertex list, plus "beta_Pi_mult" when the graph is connected.
ordered_json mult_table_to_json(const Graph& g);

ordered_json report_to_json(const RunReport& report, bool include_timings);

std::string report_to_text(const RunReport& report);

}  // namespace chromakac
