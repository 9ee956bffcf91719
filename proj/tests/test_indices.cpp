#include <doctest.h>

#include <cmath>

#include "alphaspec/graph.hpp"
#include "alphaspec/indices.hpp"

using namespace alphaspec;

namespace {

// Independent brute-force oracles, summed directly over vertices / edges.
double brute_general_zagreb(const Graph& g, double p) {
  double s = 0;
  for (int d : g.degrees()) s += std::pow(d, p);
  return s;
}

double brute_randic(const Graph& g, double a) {
  double s = 0;
  for (const auto& [u, v] : g.edges())
    s += std::pow(static_cast<double>(g.degree(u)) * g.degree(v), a);
  return s;
}

}  // namespace

TEST_CASE("worked values on small graphs") {
  const Graph p4 = path_graph(4);  // degrees 1,2,2,1
  CHECK(zagreb1(p4).value == doctest::Approx(10.0));
  CHECK(zagreb2(p4).value == doctest::Approx(8.0));  // 1*2 + 2*2 + 2*1
  CHECK(forgotten(p4).value == doctest::Approx(18.0));

  const Graph k4 = complete_graph(4);
  CHECK(zagreb1(k4).value == doctest::Approx(36.0));
  CHECK(zagreb2(k4).value == doctest::Approx(54.0));
  CHECK(forgotten(k4).value == doctest::Approx(108.0));
  CHECK(randic(k4, -0.5).value == doctest::Approx(2.0));  // 6 / 3

  const Graph s5 = star_graph(5);  // K_{1,4}
  CHECK(zagreb1(s5).value == doctest::Approx(20.0));
  CHECK(zagreb2(s5).value == doctest::Approx(16.0));
  CHECK(randic(s5, -0.5).value == doctest::Approx(2.0));
}

TEST_CASE("cross identities between the indices") {
  const std::vector<Graph> corpus = {path_graph(6),   cycle_graph(7),
                                     complete_graph(5), star_graph(8),
                                     wheel_graph(6),  petersen_graph(),
                                     pineapple_graph(5, 2), helm_graph(4)};
  for (const auto& g : corpus) {
    CHECK(general_zagreb(g, 2).value == doctest::Approx(zagreb1(g).value));
    CHECK(general_zagreb(g, 3).value == doctest::Approx(forgotten(g).value));
    CHECK(randic(g, 1).value == doctest::Approx(zagreb2(g).value));
    // First Zagreb equals the sum over edges of endpoint degrees.
    double edge_sum = 0;
    for (const auto& [u, v] : g.edges()) edge_sum += g.degree(u) + g.degree(v);
    CHECK(zagreb1(g).value == doctest::Approx(edge_sum));
  }
}

TEST_CASE("agreement with the brute-force oracles") {
  const std::vector<Graph> corpus = {path_graph(9), complete_bipartite_graph(3, 4),
                                     windmill_graph(3, 3), binomial_tree(4)};
  for (const auto& g : corpus) {
    for (double p : {-2.0, -1.0, 0.5, 2.0, 3.0, 4.0})
      CHECK(general_zagreb(g, p).value ==
            doctest::Approx(brute_general_zagreb(g, p)).epsilon(1e-12));
    for (double a : {-1.0, -0.5, 0.5, 1.0, 2.0})
      CHECK(randic(g, a).value ==
            doctest::Approx(brute_randic(g, a)).epsilon(1e-12));
  }
}

TEST_CASE("metadata and validation") {
  const Graph g = cycle_graph(5);
  CHECK(zagreb1(g).kind == IndexKind::Z1);
  CHECK(general_zagreb(g, 4).kind == IndexKind::Zp);
  CHECK(general_zagreb(g, 4).parameter == doctest::Approx(4.0));
  CHECK(randic(g, -0.5).parameter == doctest::Approx(-0.5));

  CHECK_THROWS_AS(general_zagreb(g, 0), std::invalid_argument);
  CHECK_THROWS_AS(general_zagreb(g, 1), std::invalid_argument);
  CHECK_THROWS_AS(randic(g, 0), std::invalid_argument);

  // Negative exponents reject isolated vertices rather than dividing by zero.
  const Graph iso(3, {{0, 1}});
  CHECK_THROWS_AS(general_zagreb(iso, -1), std::invalid_argument);
  CHECK(general_zagreb(iso, 2).value == doctest::Approx(2.0));
  CHECK_THROWS_AS(randic(iso, -0.5), std::invalid_argument);
  CHECK(randic(iso, 0.5).value == doctest::Approx(1.0));
}
