#include "chromakac/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "chromakac/multiplicity.hpp"

namespace chromakac {

ordered_json polynomial_to_json(const Polynomial& p) {
  ordered_json coeffs = ordered_json::array();
  for (const mpz_class& c : p.coeffs()) coeffs.push_back(c.get_str());
  return ordered_json{{"coeffs", std::move(coeffs)}};
}

ordered_json graph_to_json(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
  return ordered_json{{"vertices", g.vertex_count()},
                      {"edge_count", g.edge_count()},
                      {"connected", g.is_connected()},
                      {"edges", std::move(edges)}};
}

ordered_json lattice_to_json(const BondLattice& lat) {
  std::vector<mpz_class> mu = lat.mobius();
  ordered_json elements = ordered_json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    ordered_json blocks = ordered_json::array();
    for (VertexSet b : lat.element(i).blocks) {
      ordered_json block = ordered_json::array();
      for (int v : b.to_vector()) block.push_back(v);
      blocks.push_back(std::move(block));
    }
    ordered_json covers = ordered_json::array();
    for (const Cover& c : lat.covers_of(i)) covers.push_back(c.target);
    elements.push_back(ordered_json{{"blocks", std::move(blocks)},
                                    {"rank", lat.rank(i)},
                                    {"mobius", mu[i].get_str()},
                                    {"covers", std::move(covers)}});
  }
  return elements;
}

namespace {

std::string subset_key(VertexSet s) {
  std::string key = "[";
  bool first = true;
  for (int v : s.to_vector()) {
    if (!first) key += ',';
    key += std::to_string(v);
    first = false;
  }
  key += ']';
  return key;
}

}  // namespace

ordered_json mult_table_to_json(const Graph& g) {
  std::vector<VertexSet> connected_subsets;
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet allowed = VertexSet::first_n(g.vertex_count()) - VertexSet::first_n(v);
    for_each_connected_subset_from_min(g, allowed,
                                       [&](VertexSet s) { connected_subsets.push_back(s); });
  }
  std::sort(connected_subsets.begin(), connected_subsets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });

  MultTable table(g);
  ordered_json out = ordered_json::object();
  for (VertexSet s : connected_subsets)
    out[subset_key(s)] = table.root_multiplicity(s).get_str();
  if (g.is_connected())
    out["beta_Pi_mult"] = table.root_multiplicity(g.vertices()).get_str();
  return out;
}

ordered_json report_to_json(const RunReport& report, bool include_timings) {
  ordered_json methods = ordered_json::object();
  for (const MethodResult& m : report.methods)
    methods[m.name] = polynomial_to_json(m.polynomial);

  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back(ordered_json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});

  ordered_json out;
  out["graph"] = ordered_json{{"vertices", report.vertex_count},
                              {"edge_count", report.edge_count},
                              {"connected", report.connected}};
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : report.edges) edges.push_back(ordered_json::array({u, v}));
  out["graph"]["edges"] = std::move(edges);
  out["methods"] = std::move(methods);
  out["kostant"] = polynomial_to_json(report.kostant);
  out["agreement"] = report.agreement;
  if (!report.agreement) out["first_disagreement"] = report.first_disagreement;
  out["checks"] = std::move(checks);
  out["polynomial"] = polynomial_to_json(report.methods.front().polynomial);
  out["rendered"] = report.methods.front().polynomial.to_string();
  out["all_ok"] = report.all_ok();
  if (include_timings) {
    ordered_json timings = ordered_json::object();
    for (const MethodResult& m : report.methods) timings[m.name] = m.milliseconds;
    timings["kostant"] = report.kostant_milliseconds;
    out["timings_ms"] = std::move(timings);
  }
  return out;
}

std::string report_to_text(const RunReport& report) {
  std::ostringstream out;
  out << "graph: " << report.vertex_count << " vertices, " << report.edge_count << " edges, "
      << (report.connected ? "connected" : "disconnected") << '\n';
  for (const MethodResult& m : report.methods) {
    out << "  " << m.name;
    for (std::size_t pad = m.name.size(); pad < 24; ++pad) out << ' ';
    out << m.polynomial.to_string() << "   (" << m.milliseconds << " ms)\n";
  }
  out << "  kostant";
  for (std::size_t pad = 7; pad < 24; ++pad) out << ' ';
  out << report.kostant.to_string() << "   (" << report.kostant_milliseconds << " ms)\n";
  out << "agreement: " << (report.agreement ? "yes" : "no");
  if (!report.agreement) out << " (" << report.first_disagreement << ")";
  out << '\n';
  for (const CheckResult& c : report.checks)
    out << "  check " << c.name << ": " << (c.ok ? "ok" : "FAILED") << " - " << c.detail << '\n';
  out << "verdict: " << (report.all_ok() ? "OK" : "FAILED") << '\n';
  return out.str();
}

}  // namespace chromakac
