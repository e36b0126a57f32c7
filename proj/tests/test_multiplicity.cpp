#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chromakac/chromatic.hpp"
#include "chromakac/multiplicity.hpp"

using namespace chromakac;

namespace {

std::vector<Graph> corpus_l7() {
  std::vector<Graph> out;
  for (int n = 1; n <= 7; ++n) out.push_back(Graph::generate(GraphFamily::path, n));
  for (int n = 3; n <= 7; ++n) out.push_back(Graph::generate(GraphFamily::cycle, n));
  for (int n = 2; n <= 6; ++n) out.push_back(Graph::generate(GraphFamily::complete, n));
  for (int n = 2; n <= 6; ++n) out.push_back(Graph::generate(GraphFamily::star, n));
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    out.push_back(Graph::generate(GraphFamily::random, 7, seed, 0.5));
  out.push_back(Graph::parse("5\n0 1\n2 3\n2 4\n3 4"));  // K2 + K3
  return out;
}

}  // namespace

TEST_CASE("base multiplicities") {
  Graph k2 = Graph::generate(GraphFamily::complete, 2);
  MultTable table(k2);
  CHECK(table.root_multiplicity(VertexSet::of({0})) == 1);
  CHECK(table.root_multiplicity(k2.vertices()) == 1);
}

TEST_CASE("triangle root has multiplicity two") {
  Graph k3 = Graph::generate(GraphFamily::complete, 3);
  MultTable table(k3);
  CHECK(table.root_multiplicity(k3.vertices()) == 2);

  // Independent route: the linear coefficient of the sign-flipped chromatic
  // polynomial from the coloring-count oracle.
  Polynomial p = chromatic_interpolated(k3);
  CHECK(sign_flipped(p, 3).coeff(1) == 2);
}

TEST_CASE("three-vertex path root has multiplicity one") {
  Graph path3 = Graph::generate(GraphFamily::path, 3);
  MultTable table(path3);
  CHECK(table.root_multiplicity(path3.vertices()) == 1);
  // coloring oracle: q(q+1)^2 flipped has linear coefficient 1
  CHECK(sign_flipped(chromatic_interpolated(path3), 3).coeff(1) == 1);
}

TEST_CASE("multiplicity rejects bad supports") {
  Graph path3 = Graph::generate(GraphFamily::path, 3);
  MultTable table(path3);
  CHECK_THROWS_AS(table.root_multiplicity(VertexSet()), std::invalid_argument);
  CHECK_THROWS_AS(table.root_multiplicity(VertexSet::of({0, 2})), std::invalid_argument);
}

TEST_CASE("partition multiplicities multiply over blocks") {
  Graph k3 = Graph::generate(GraphFamily::complete, 3);
  MultTable table(k3);
  CHECK(table.partition_multiplicity(ConnectedPartition::bottom(3)) == 1);
  CHECK(table.partition_multiplicity(ConnectedPartition::checked(k3, {k3.vertices()})) == 2);

  Graph k4 = Graph::generate(GraphFamily::complete, 4);
  MultTable table4(k4);
  ConnectedPartition pairs =
      ConnectedPartition::checked(k4, {VertexSet::of({0, 1}), VertexSet::of({2, 3})});
  CHECK(table4.partition_multiplicity(pairs) == 1);
}

TEST_CASE("edge weights") {
  Graph k3 = Graph::generate(GraphFamily::complete, 3);
  ConnectedPartition k3top = ConnectedPartition::checked(k3, {k3.vertices()});
  CHECK(edge_weight(k3, k3top, VertexSet::of({0}), VertexSet::of({1, 2})) == mpq_class(2, 3));

  Graph k2 = Graph::generate(GraphFamily::complete, 2);
  ConnectedPartition k2top = ConnectedPartition::checked(k2, {k2.vertices()});
  CHECK(edge_weight(k2, k2top, VertexSet::of({0}), VertexSet::of({1})) == 1);

  Graph path4 = Graph::generate(GraphFamily::path, 4);
  ConnectedPartition halves =
      ConnectedPartition::checked(path4, {VertexSet::of({0, 1}), VertexSet::of({2, 3})});
  CHECK(edge_weight(path4, halves, VertexSet::of({0}), VertexSet::of({1})) == mpq_class(1, 2));

  CHECK_THROWS_AS(edge_weight(path4, halves, VertexSet::of({0}), VertexSet::of({2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      edge_weight(path4, ConnectedPartition::bottom(4), VertexSet::of({0}), VertexSet()),
      std::invalid_argument);
}

TEST_CASE("weights lie in (0,1], hitting 1 exactly on covers into the bottom") {
  for (const Graph& g : corpus_l7()) {
    BondLattice lat = BondLattice::enumerate(g);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      for (const Cover& c : lat.covers_of(i)) {
        mpq_class w = edge_weight(g, lat.element(i), c.half_a, c.half_b);
        CHECK(w > 0);
        CHECK(w <= 1);
        CHECK((w == 1) == (c.target == lat.bottom_index()));
      }
    }
  }
}

TEST_CASE("weights agree with the Lie-form expression") {
  for (const Graph& g : corpus_l7()) {
    BondLattice lat = BondLattice::enumerate(g);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const ConnectedPartition& pi = lat.element(i);
      for (const Cover& c : lat.covers_of(i)) {
        // <beta', beta''> = -cross_edges; <beta, beta - 2 rho> via the graph
        int numerator_form = -g.cross_edge_count(c.half_a, c.half_b);
        int denominator_form = g.form_beta_beta_minus_2rho(c.half_a | c.half_b);
        mpq_class lie(2 * numerator_form, pi.nonsingleton_count() * denominator_form);
        lie.canonicalize();
        CHECK(edge_weight(g, pi, c.half_a, c.half_b) == lie);
      }
    }
  }
}

TEST_CASE("path sums on the spot examples") {
  Graph k3 = Graph::generate(GraphFamily::complete, 3);
  BondLattice lat = BondLattice::enumerate(k3);
  CHECK(path_sum(lat, lat.bottom_index()) == 1);
  CHECK(path_sum(lat, lat.index_of(ConnectedPartition::checked(k3, {k3.vertices()}))) == 2);

  Graph path3 = Graph::generate(GraphFamily::path, 3);
  BondLattice plat = BondLattice::enumerate(path3);
  CHECK(path_sum(plat, plat.index_of(ConnectedPartition::checked(path3, {path3.vertices()}))) ==
        1);

  CHECK_THROWS_AS(path_sum(lat, lat.size()), std::out_of_range);
}

TEST_CASE("path sums are integers and equal the multiplicity products") {
  for (const Graph& g : corpus_l7()) {
    BondLattice lat = BondLattice::enumerate(g);
    MultTable table(g);
    std::vector<mpq_class> sums = path_sums(lat);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      CHECK(sums[i].get_den() == 1);
      CHECK(sums[i] == table.partition_multiplicity(lat.element(i)));
    }
  }
}

TEST_CASE("Moebius values are signed multiplicity products") {
  for (const Graph& g : corpus_l7()) {
    BondLattice lat = BondLattice::enumerate(g);
    MultTable table(g);
    std::vector<mpz_class> mu = lat.mobius();
    const int l = g.vertex_count();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      mpz_class expected = table.partition_multiplicity(lat.element(i));
      if ((l - lat.element(i).block_count()) % 2 != 0) expected = -expected;
      CHECK(mu[i] == expected);
    }
  }
}

TEST_CASE("multiplicity only depends on the induced subgraph") {
  for (const Graph& g : {Graph::generate(GraphFamily::cycle, 6),
                         Graph::generate(GraphFamily::complete, 5),
                         Graph::generate(GraphFamily::random, 6, 11, 0.6)}) {
    MultTable ambient(g);
    const int l = g.vertex_count();
    for (VertexMask m = 1; m < (VertexMask{1} << l); ++m) {
      VertexSet s(m);
      if (!g.is_connected(s)) continue;
      Graph standalone = g.induced(s);
      MultTable local(standalone);
      CHECK(ambient.root_multiplicity(s) ==
            local.root_multiplicity(standalone.vertices()));
    }
  }
}

TEST_CASE("trees are multiplicity-free") {
  for (const Graph& g : {Graph::generate(GraphFamily::path, 7),
                         Graph::generate(GraphFamily::star, 7)}) {
    MultTable table(g);
    const int l = g.vertex_count();
    for (VertexMask m = 1; m < (VertexMask{1} << l); ++m) {
      VertexSet s(m);
      if (!g.is_connected(s)) continue;
      CHECK(g.edge_count(s) == s.size() - 1);
      CHECK(table.root_multiplicity(s) == 1);
    }
    // the recurrence reproduces the same thing through path sums
    BondLattice lat = BondLattice::enumerate(g);
    for (const mpq_class& f : path_sums(lat)) CHECK(f == 1);
  }
}

TEST_CASE("the dynamic program matches literal path enumeration") {
  for (const Graph& g : {Graph::generate(GraphFamily::complete, 4),
                         Graph::generate(GraphFamily::cycle, 4),
                         Graph::generate(GraphFamily::path, 4),
                         Graph::generate(GraphFamily::star, 4)}) {
    BondLattice lat = BondLattice::enumerate(g);
    std::vector<mpq_class> sums = path_sums(lat);
    for (std::size_t i = 0; i < lat.size(); ++i)
      CHECK(sums[i] == path_sum_enumerated(lat, i));
  }
}

TEST_CASE("memoized table returns identical values on repeat queries") {
  Graph g = Graph::generate(GraphFamily::random, 7, 3, 0.6);
  MultTable table(g);
  mpz_class first = table.root_multiplicity(g.vertices());
  CHECK(table.root_multiplicity(g.vertices()) == first);
  MultTable fresh(g);
  CHECK(fresh.root_multiplicity(g.vertices()) == first);
}
