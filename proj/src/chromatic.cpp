#include "chromakac/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "chromakac/errors.hpp"

namespace chromakac {

RationalPolynomial WeightMatrix::entry(std::size_t row, std::size_t col) const {
  for (const auto& [c, p] : rows[row])
    if (c == col) return p;
  return RationalPolynomial();
}

WeightMatrix build_weight_matrix(const BondLattice& lat) {
  WeightMatrix w;
  w.order = lat.size();
  w.rows.resize(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    for (const Cover& c : lat.covers_of(i)) {
      mpq_class weight = edge_weight(lat.graph(), lat.element(i), c.half_a, c.half_b);
      w.rows[i].emplace_back(c.target, RationalPolynomial::constant(-weight));
    }
  }
  // q on the bottom diagonal; covers are already sorted by target and the
  // bottom is the last column, so rows stay sorted.
  w.rows[lat.bottom_index()].emplace_back(lat.bottom_index(),
                                          RationalPolynomial({mpq_class(0), mpq_class(1)}));
  return w;
}

Polynomial chromatic_bond_lattice(const BondLattice& lat, MultTable& table) {
  const int l = lat.graph().vertex_count();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(l) + 1, 0);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const ConnectedPartition& pi = lat.element(i);
    const int k = pi.block_count();
    mpz_class term = table.partition_multiplicity(pi);
    if ((l - k) % 2 != 0) term = -term;
    coeffs[static_cast<std::size_t>(k)] += term;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial chromatic_bond_lattice(const Graph& g, const Limits& limits) {
  BondLattice lat = BondLattice::enumerate(g, limits);
  MultTable table(g);
  return chromatic_bond_lattice(lat, table);
}

Polynomial chromatic_interval(const BondLattice& lat, MultTable& table, std::size_t sigma) {
  const int l = lat.graph().vertex_count();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(l) + 1, 0);
  for (std::size_t i : lat.interval_indices(sigma)) {
    const ConnectedPartition& pi = lat.element(i);
    const int k = pi.block_count();
    mpz_class term = table.partition_multiplicity(pi);
    if ((l - k) % 2 != 0) term = -term;
    coeffs[static_cast<std::size_t>(k)] += term;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial chromatic_interval(const Graph& g, const ConnectedPartition& sigma,
                              const Limits& limits) {
  BondLattice lat = BondLattice::enumerate(g, limits);
  MultTable table(g);
  return chromatic_interval(lat, table, lat.index_of(sigma));
}

Polynomial chromatic_mobius(const BondLattice& lat) {
  const int l = lat.graph().vertex_count();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(l) + 1, 0);
  std::vector<mpz_class> mu = lat.mobius();
  for (std::size_t i = 0; i < lat.size(); ++i)
    coeffs[static_cast<std::size_t>(lat.element(i).block_count())] += mu[i];
  return Polynomial(std::move(coeffs));
}

Polynomial chromatic_mobius(const Graph& g, const Limits& limits) {
  return chromatic_mobius(BondLattice::enumerate(g, limits));
}

Polynomial chromatic_path_sum(const BondLattice& lat) {
  const int l = lat.graph().vertex_count();
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(l) + 1, 0);
  std::vector<mpq_class> sums = path_sums(lat);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const int k = lat.element(i).block_count();
    if ((l - k) % 2 != 0)
      coeffs[static_cast<std::size_t>(k)] -= sums[i];
    else
      coeffs[static_cast<std::size_t>(k)] += sums[i];
  }
  return RationalPolynomial(std::move(coeffs)).to_integer_polynomial("path-sum route");
}

Polynomial chromatic_path_sum(const Graph& g, const Limits& limits) {
  return chromatic_path_sum(BondLattice::enumerate(g, limits));
}

namespace {

using SparseRows = std::vector<std::vector<std::pair<std::size_t, RationalPolynomial>>>;

SparseRows multiply(const SparseRows& a, const SparseRows& b, std::size_t order) {
  SparseRows out(order);
  std::vector<RationalPolynomial> scratch(order);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < order; ++i) {
    touched.clear();
    for (const auto& [k, aik] : a[i]) {
      for (const auto& [j, wkj] : b[k]) {
        if (scratch[j].is_zero()) touched.push_back(j);
        scratch[j] += aik * wkj;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t j : touched) {
      if (!scratch[j].is_zero()) out[i].emplace_back(j, std::move(scratch[j]));
      scratch[j] = RationalPolynomial();
    }
  }
  return out;
}

}  // namespace

Polynomial chromatic_matrix_power(const BondLattice& lat) {
  const int l = lat.graph().vertex_count();
  WeightMatrix w = build_weight_matrix(lat);
  SparseRows power = w.rows;
  for (int step = 1; step < l; ++step) power = multiply(power, w.rows, w.order);

  RationalPolynomial total;  // all-ones vector on both sides: sum every entry
  for (const auto& row : power)
    for (const auto& cell : row) total += cell.second;
  return total.to_integer_polynomial("matrix-power route");
}

Polynomial chromatic_matrix_power(const Graph& g, const Limits& limits) {
  return chromatic_matrix_power(BondLattice::enumerate(g, limits));
}

namespace {

std::string graph_key(const Graph& g) {
  std::string key = std::to_string(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    key += ':';
    key += std::to_string(u);
    key += '-';
    key += std::to_string(v);
  }
  return key;
}

Graph contract_smallest_edge(const Graph& g, int u, int v) {
  // Merge v into u, relabel everything above v down by one.
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) {
    if (a == u && b == v) continue;
    int x = a == v ? u : a;
    int y = b == v ? u : b;
    if (x == y) continue;
    if (x > v) --x;
    if (y > v) --y;
    edges.emplace_back(x, y);
  }
  return Graph(g.vertex_count() - 1, edges);
}

Polynomial deletion_contraction_memo(const Graph& g,
                                     std::map<std::string, Polynomial>& memo) {
  if (g.edge_count() == 0) return Polynomial::q_power(g.vertex_count());
  std::string key = graph_key(g);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  auto [u, v] = g.edges().front();  // lexicographically smallest edge
  std::vector<std::pair<int, int>> without;
  without.assign(g.edges().begin() + 1, g.edges().end());
  Polynomial deleted = deletion_contraction_memo(Graph(g.vertex_count(), without), memo);
  Polynomial contracted = deletion_contraction_memo(contract_smallest_edge(g, u, v), memo);
  Polynomial result = deleted - contracted;
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

Polynomial chromatic_deletion_contraction(const Graph& g) {
  std::map<std::string, Polynomial> memo;
  return deletion_contraction_memo(g, memo);
}

mpz_class coloring_count(const Graph& g, int colors, const Limits& limits) {
  if (colors < 0) throw std::invalid_argument("color count must be non-negative");
  if (colors > limits.max_coloring_colors)
    throw size_limit_error("color count exceeds the brute-force guard",
                           static_cast<std::uint64_t>(colors),
                           static_cast<std::uint64_t>(limits.max_coloring_colors));
  if (g.vertex_count() > limits.max_coloring_vertices)
    throw size_limit_error("vertex count exceeds the brute-force guard",
                           static_cast<std::uint64_t>(g.vertex_count()),
                           static_cast<std::uint64_t>(limits.max_coloring_vertices));
  const int l = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(l), -1);
  mpz_class total = 0;
  auto assign = [&](auto&& self, int v) -> void {
    if (v == l) {
      ++total;
      return;
    }
    for (int c = 0; c < colors; ++c) {
      bool clash = false;
      for (VertexMask m = g.neighbors(v) & (VertexSet::first_n(v)).bits(); m != 0; m &= m - 1)
        if (color[static_cast<std::size_t>(std::countr_zero(m))] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      self(self, v + 1);
    }
    color[static_cast<std::size_t>(v)] = -1;
  };
  assign(assign, 0);
  return total;
}

Polynomial chromatic_interpolated(const Graph& g, const Limits& limits) {
  const int l = g.vertex_count();
  std::vector<mpz_class> values;
  values.reserve(static_cast<std::size_t>(l) + 1);
  for (int q = 0; q <= l; ++q) values.push_back(coloring_count(g, q, limits));

  RationalPolynomial acc;
  for (int i = 0; i <= l; ++i) {
    if (values[static_cast<std::size_t>(i)] == 0) continue;
    RationalPolynomial basis = RationalPolynomial::constant(1);
    mpz_class denom = 1;
    for (int j = 0; j <= l; ++j) {
      if (j == i) continue;
      basis = basis * RationalPolynomial({mpq_class(-j), mpq_class(1)});  // (q - j)
      denom *= mpz_class(i - j);
    }
    mpq_class scale(values[static_cast<std::size_t>(i)], denom);
    scale.canonicalize();
    acc += scale * basis;
  }
  return acc.to_integer_polynomial("interpolation oracle");
}

std::vector<mpz_class> ordered_independent_partition_counts(const Graph& g,
                                                            const Limits& limits) {
  const int l = g.vertex_count();
  if (l > limits.max_coloring_vertices)
    throw size_limit_error("vertex count exceeds the brute-force guard",
                           static_cast<std::uint64_t>(l),
                           static_cast<std::uint64_t>(limits.max_coloring_vertices));
  // Unordered counts first: vertices join an existing independent block or
  // open a new one, which generates each partition once.
  std::vector<mpz_class> unordered(static_cast<std::size_t>(l) + 1, 0);
  std::vector<VertexMask> blocks;
  auto place = [&](auto&& self, int v) -> void {
    if (v == l) {
      ++unordered[blocks.size()];
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if ((g.neighbors(v) & blocks[b]) != 0) continue;
      blocks[b] |= VertexMask{1} << v;
      self(self, v + 1);
      blocks[b] &= ~(VertexMask{1} << v);
    }
    blocks.push_back(VertexMask{1} << v);
    self(self, v + 1);
    blocks.pop_back();
  };
  place(place, 0);

  std::vector<mpz_class> ordered(static_cast<std::size_t>(l) + 1, 0);
  mpz_class factorial = 1;
  for (int k = 1; k <= l; ++k) {
    factorial *= k;
    ordered[static_cast<std::size_t>(k)] = factorial * unordered[static_cast<std::size_t>(k)];
  }
  return ordered;
}

Polynomial chromatic_independent_partitions(const Graph& g, const Limits& limits) {
  std::vector<mpz_class> ordered = ordered_independent_partition_counts(g, limits);
  // c_k * binomial(q, k) = (c_k / k!) * q(q-1)...(q-k+1), and c_k / k! is the
  // unordered count, an integer.
  Polynomial result;
  mpz_class factorial = 1;
  for (int k = 1; k < static_cast<int>(ordered.size()); ++k) {
    factorial *= k;
    mpz_class unordered = ordered[static_cast<std::size_t>(k)] / factorial;
    if (unordered != 0) result += unordered * Polynomial::falling_factorial(k);
  }
  return result;
}

Polynomial q_kostant_at_beta(const BondLattice& lat, MultTable& table) {
  const int l = lat.graph().vertex_count();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(l) + 1, 0);
  for (std::size_t i = 0; i < lat.size(); ++i)
    coeffs[static_cast<std::size_t>(lat.element(i).block_count())] +=
        table.partition_multiplicity(lat.element(i));
  return Polynomial(std::move(coeffs));
}

Polynomial q_kostant_at_beta(const Graph& g, const Limits& limits) {
  BondLattice lat = BondLattice::enumerate(g, limits);
  MultTable table(g);
  return q_kostant_at_beta(lat, table);
}

Polynomial sign_flipped(const Polynomial& p, int vertex_count) {
  std::vector<mpz_class> coeffs(p.coeffs());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if ((vertex_count - static_cast<int>(k)) % 2 != 0) coeffs[k] = -coeffs[k];
  return Polynomial(std::move(coeffs));
}

mpz_class acyclic_orientation_count(const Graph& g, const Limits& limits) {
  const int m = g.edge_count();
  if (m > limits.max_orientation_edges)
    throw size_limit_error("edge count exceeds the orientation guard",
                           static_cast<std::uint64_t>(m),
                           static_cast<std::uint64_t>(limits.max_orientation_edges));
  const int l = g.vertex_count();
  mpz_class count = 0;
  std::vector<int> indegree(static_cast<std::size_t>(l));
  std::vector<VertexMask> out(static_cast<std::size_t>(l));
  for (std::uint64_t orientation = 0; orientation < (std::uint64_t{1} << m); ++orientation) {
    std::fill(indegree.begin(), indegree.end(), 0);
    std::fill(out.begin(), out.end(), 0);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
      int from = (orientation >> e) & 1 ? v : u;
      int to = (orientation >> e) & 1 ? u : v;
      out[static_cast<std::size_t>(from)] |= VertexMask{1} << to;
      ++indegree[static_cast<std::size_t>(to)];
    }
    // Kahn peeling: acyclic iff every vertex gets removed.
    VertexMask ready = 0;
    for (int v = 0; v < l; ++v)
      if (indegree[static_cast<std::size_t>(v)] == 0) ready |= VertexMask{1} << v;
    int removed = 0;
    while (ready != 0) {
      int v = std::countr_zero(ready);
      ready &= ready - 1;
      ++removed;
      for (VertexMask succ = out[static_cast<std::size_t>(v)]; succ != 0; succ &= succ - 1) {
        int w = std::countr_zero(succ);
        if (--indegree[static_cast<std::size_t>(w)] == 0) ready |= VertexMask{1} << w;
      }
    }
    if (removed == l) ++count;
  }
  return count;
}

mpz_class coxeter_class_count(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("Coxeter class count requires a connected graph");
  MultTable table(g);
  return table.root_multiplicity(g.vertices());
}

}  // namespace chromakac
