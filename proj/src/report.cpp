#include "chromakac/report.hpp"

#include <algorithm>
#include <chrono>

namespace chromakac {

const std::vector<std::string>& chromatic_method_names() {
  static const std::vector<std::string> names = {
      "bond-lattice", "mobius",      "path-sum",               "matrix",
      "deletion-contraction", "interpolate", "independent-partitions"};
  return names;
}

bool is_compute_method(const std::string& name) {
  if (name == "kostant") return true;
  const auto& names = chromatic_method_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Polynomial compute_method(const Graph& g, const std::string& name, const Limits& limits) {
  if (name == "bond-lattice") return chromatic_bond_lattice(g, limits);
  if (name == "mobius") return chromatic_mobius(g, limits);
  if (name == "path-sum") return chromatic_path_sum(g, limits);
  if (name == "matrix") return chromatic_matrix_power(g, limits);
  if (name == "deletion-contraction") return chromatic_deletion_contraction(g);
  if (name == "interpolate") return chromatic_interpolated(g, limits);
  if (name == "independent-partitions") return chromatic_independent_partitions(g, limits);
  if (name == "kostant") return q_kostant_at_beta(g, limits);
  throw std::invalid_argument("unknown method: " + name);
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// First coefficient where two polynomials differ, for pinpointing reports.
int first_differing_power(const Polynomial& a, const Polynomial& b) {
  int top = std::max(a.degree(), b.degree());
  for (int k = 0; k <= top; ++k)
    if (a.coeff(k) != b.coeff(k)) return k;
  return -1;
}

}  // namespace

bool RunReport::all_ok() const {
  if (!agreement) return false;
  for (const CheckResult& c : checks)
    if (!c.ok) return false;
  return true;
}

RunReport run_verify(const Graph& g, const Limits& limits) {
  RunReport report;
  report.vertex_count = g.vertex_count();
  report.edge_count = g.edge_count();
  report.connected = g.is_connected();
  report.edges = g.edges();

  const int l = g.vertex_count();

  // Shared structures; every lattice-based route below reuses them.
  BondLattice lat = BondLattice::enumerate(g, limits);
  MultTable table(g);

  for (const std::string& name : chromatic_method_names()) {
    auto start = std::chrono::steady_clock::now();
    Polynomial p;
    if (name == "bond-lattice")
      p = chromatic_bond_lattice(lat, table);
    else if (name == "mobius")
      p = chromatic_mobius(lat);
    else if (name == "path-sum")
      p = chromatic_path_sum(lat);
    else if (name == "matrix")
      p = chromatic_matrix_power(lat);
    else
      p = compute_method(g, name, limits);
    report.methods.push_back({name, std::move(p), elapsed_ms(start)});
  }

  {
    auto start = std::chrono::steady_clock::now();
    report.kostant = q_kostant_at_beta(lat, table);
    report.kostant_milliseconds = elapsed_ms(start);
  }

  report.agreement = true;
  const Polynomial& reference = report.methods.front().polynomial;
  for (std::size_t i = 1; i < report.methods.size(); ++i) {
    if (report.methods[i].polynomial != reference) {
      report.agreement = false;
      int k = first_differing_power(reference, report.methods[i].polynomial);
      report.first_disagreement = report.methods.front().name + " vs " +
                                  report.methods[i].name + " at q^" + std::to_string(k);
      break;
    }
  }

  auto add_check = [&](const std::string& name, bool ok, std::string detail) {
    report.checks.push_back({name, ok, std::move(detail)});
  };

  // Shape: monic of degree l, zero constant term, alternating signs.
  {
    bool ok = reference.degree() == l && reference.coeff(l) == 1 && reference.coeff(0) == 0;
    for (int k = 0; ok && k <= l; ++k) {
      const mpz_class& c = reference.coeff(k);
      if (c == 0) continue;
      bool negative = (l - k) % 2 != 0;
      ok = negative ? c < 0 : c > 0;
    }
    add_check("shape", ok, "monic degree " + std::to_string(l) + ", alternating signs");
  }

  // Path sums are integers and match the multiplicity products.
  {
    std::vector<mpq_class> sums = path_sums(lat);
    bool integral = true;
    bool matches = true;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (sums[i].get_den() != 1) integral = false;
      if (sums[i] != table.partition_multiplicity(lat.element(i))) matches = false;
    }
    add_check("path-sum-integrality", integral, "all path sums reduce to integers");
    add_check("path-sum-equals-multiplicity", matches,
              "path sums equal partition multiplicities");
  }

  // Moebius values against signed multiplicities.
  {
    std::vector<mpz_class> mu = lat.mobius();
    bool ok = true;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      mpz_class expected = table.partition_multiplicity(lat.element(i));
      if ((l - lat.element(i).block_count()) % 2 != 0) expected = -expected;
      if (mu[i] != expected) ok = false;
    }
    add_check("mobius-multiplicity", ok, "mu equals signed multiplicity product");
  }

  // Sign-flip identity against the Kostant generating function.
  add_check("kostant-sign-flip", report.kostant == sign_flipped(reference, l),
            "kostant polynomial equals (-1)^l P(-q)");

  // Acyclic orientations against the flipped polynomial at 1.
  if (g.edge_count() <= limits.max_orientation_edges) {
    mpz_class oriented = acyclic_orientation_count(g, limits);
    mpz_class predicted = sign_flipped(reference, l)(1);
    add_check("acyclic-orientations", oriented == predicted,
              "brute-force count " + oriented.get_str() + " equals flipped value at 1");
  }

  // Linear coefficient of the flipped polynomial counts Coxeter classes.
  if (report.connected) {
    mpz_class classes = coxeter_class_count(g);
    add_check("coxeter-classes", classes == sign_flipped(reference, l).coeff(1),
              "root multiplicity " + classes.get_str() + " equals the q coefficient");
  }

  // Exact evaluation against the coloring oracle at small q.
  {
    bool ok = true;
    int top = std::min(5, limits.max_coloring_colors);
    if (l <= limits.max_coloring_vertices) {
      for (int q = 0; q <= top; ++q)
        if (reference(q) != coloring_count(g, q, limits)) ok = false;
      add_check("evaluation-consistency", ok,
                "P(q) matches the coloring count for q in [0," + std::to_string(top) + "]");
    }
  }

  return report;
}

}  // namespace chromakac
