#include <doctest.h>

#include <cmath>
#include <random>

#include "alphaspec/bounds.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/linalg.hpp"

using namespace alphaspec;

namespace {

std::vector<Graph> bound_corpus() {
  std::vector<Graph> out = {path_graph(6),  cycle_graph(7), complete_graph(5),
                            star_graph(7),  wheel_graph(6), petersen_graph(),
                            helm_graph(5),  pineapple_graph(5, 2),
                            complete_bipartite_graph(3, 4), binomial_tree(4)};
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 10; ++rep)
    out.push_back(random_connected_graph(5 + rep % 7, 0.45, rng));
  return out;
}

const std::vector<double> kAlphas = {0.0, 0.1, 0.25, 0.5, 0.75, 0.9};

}  // namespace

TEST_CASE("closed-form spot values") {
  // Star K_{1,3}: Delta = 3, so the first lower bound at alpha = 0 is
  // (0 + sqrt(12))/2 = sqrt(3), and lambda1(A(K_{1,3})) = sqrt(3) exactly.
  CHECK(lower_nikiforov(3, 0.0) == doctest::Approx(std::sqrt(3.0)));
  // r-regular at alpha: both degree bounds collapse to
  // (2*alpha*r + sqrt(4*(1-alpha)^2*r))/2 = alpha*r + (1-alpha)*sqrt(r).
  CHECK(lower_degree_based(4, 4, 0.5) ==
        doctest::Approx(0.5 * 4 + 0.5 * std::sqrt(4.0)));
  CHECK_THROWS_AS(lower_nikiforov(0, 0.3), std::invalid_argument);
  CHECK(lower_nikiforov(1, 0.5) == doctest::Approx(1.0));
  // pn_upper at alpha = 0 is the exact path spectral radius.
  for (int n : {3, 8, 20})
    CHECK(pn_upper(n, 0.0) ==
          doctest::Approx(2 * std::cos(M_PI / (n + 1))));
}

TEST_CASE("lower and upper bounds sandwich lambda1") {
  for (const auto& g : bound_corpus()) {
    const int n = g.vertex_count();
    for (double alpha : kAlphas) {
      const double l1 = eigenvalues(a_alpha(g, alpha)).lambda1();
      CHECK(lower_nikiforov(g.max_degree(), alpha) <= l1 + 1e-9);
      CHECK(lower_degree_based(g, alpha) <= l1 + 1e-9);
      if (n >= 3) CHECK(lower_zagreb_randic(g, alpha) <= l1 + 1e-9);
      try {
        CHECK(l1 <= upper_degree_based(g, alpha) + 1e-9);
      } catch (const BoundDomainError&) {
        // negative radicand: bound not applicable, nothing to check
      }
      const auto [lo, hi] = rowsum_bounds(g, alpha);
      CHECK(lo <= l1 + 1e-9);
      CHECK(l1 <= hi + 1e-9);
      CHECK(kolotilina_lower(a_alpha(g, alpha)) <= l1 + 1e-9);
    }
  }
}

TEST_CASE("rowsum bounds are tight on regular graphs") {
  for (const Graph& g : {cycle_graph(8), complete_graph(6), petersen_graph()}) {
    const int r = g.degree(0);
    for (double alpha : kAlphas) {
      const auto [lo, hi] = rowsum_bounds(g, alpha);
      CHECK(lo == doctest::Approx(hi));
      CHECK(lo == doctest::Approx(std::sqrt(alpha * r * r + (1 - alpha) * r * r)));
      CHECK(lo == doctest::Approx(static_cast<double>(r)));
    }
  }
}

TEST_CASE("path upper bound") {
  for (int n : {3, 5, 10, 40}) {
    for (double alpha : kAlphas) {
      const double l1 = eigenvalues(a_alpha(path_graph(n), alpha)).lambda1();
      CHECK(l1 <= pn_upper(n, alpha) + 1e-9);
    }
  }
  // The two branches meet at alpha = 1/2 only in the n -> inf limit; check
  // the piecewise switch is where it should be.
  CHECK(pn_upper(6, 0.49) == doctest::Approx(2 * 0.49 + 2 * 0.51 * std::cos(M_PI / 7)));
  CHECK(pn_upper(6, 0.5) == doctest::Approx(1.0 + std::cos(M_PI / 6)));
}

TEST_CASE("kolotilina on explicit matrices") {
  // For A(K_n): zero diagonal, row off-diagonal product sum n-1, so the
  // bound is sqrt(n-1).
  const SymMatrix a = adjacency(complete_graph(5));
  CHECK(kolotilina_lower(a) == doctest::Approx(2.0));
  // Q(K_5): diagonal 4, theta 4, row product sum 4, so 4 + sqrt(4) = 6.
  CHECK(kolotilina_lower(signless_laplacian(complete_graph(5))) ==
        doctest::Approx(6.0));
  SymMatrix neg(2);
  neg.set(0, 1, -1.0);
  CHECK_THROWS_AS(kolotilina_lower(neg), std::invalid_argument);
  CHECK_THROWS_AS(kolotilina_lower(SymMatrix(1)), std::invalid_argument);
}

TEST_CASE("line graph eigenvalue bounds") {
  for (const auto& g : bound_corpus()) {
    const Graph lg = line_graph(g).graph;
    const int n = g.vertex_count();
    for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
      const auto spec = eigenvalues(a_alpha(lg, alpha));
      CHECK(line_smallest_lower(g, alpha) <= spec.lambda_min() + 1e-9);
      const auto [lo, hi] = line_largest_sandwich(g, alpha);
      CHECK(lo <= spec.lambda1() + 1e-9);
      CHECK(spec.lambda1() <= hi + 1e-9);
      CHECK(spec.lambda1() <= line_eigen_cap(n, alpha, 1) + 1e-9);
      if (spec.eigenvalues.size() >= 2) {
        CHECK(spec.lambda(2) <= line_eigen_cap(n, alpha, 2) + 1e-9);
        const auto [l2lo, l2hi] = line_second_bounds(n, alpha);
        CHECK(l2lo <= spec.lambda(2) + 1e-9);
        CHECK(spec.lambda(2) <= l2hi + 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(line_smallest_lower(cycle_graph(4), 1.0),
                  std::invalid_argument);
}

TEST_CASE("line floor is tight on even cycles and regular sandwich collapses") {
  for (int k : {2, 3, 5}) {
    const Graph c = cycle_graph(2 * k);
    for (double alpha : {0.0, 0.3, 0.6}) {
      const double floor = line_smallest_lower(c, alpha);
      const double lm =
          eigenvalues(a_alpha(line_graph(c).graph, alpha)).lambda_min();
      CHECK(lm == doctest::Approx(floor).epsilon(1e-10));
    }
  }
  for (const Graph& g : {complete_graph(5), petersen_graph()}) {
    const int r = g.degree(0);
    for (double alpha : {0.0, 0.4, 0.9}) {
      const auto [lo, hi] = line_largest_sandwich(g, alpha);
      CHECK(lo == doctest::Approx(hi).epsilon(1e-9));
      CHECK(lo == doctest::Approx(2.0 * r - 2.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("bound orderings") {
  for (int r = 1; r <= 20; ++r)
    for (double alpha : kAlphas) {
      const auto w = compare_lower_bounds_regular(r, alpha);
      CHECK(w.holds);
      CHECK(w.lhs <= w.rhs + 1e-9);
    }
  for (const auto& g : bound_corpus())
    for (double alpha : kAlphas) {
      const auto w = upper_bounds_ordering(g, alpha);
      if (!w.holds) continue;  // domain failures are reported, not asserted
      CHECK(w.lhs <= w.rhs + 1e-9);
      CHECK(w.witness_vertex >= 0);
      if (w.witness_has_max_degree)
        CHECK(g.degree(w.witness_vertex) == g.max_degree());
    }
}

TEST_CASE("line path threshold") {
  for (double alpha : {0.0, 0.3, 0.6, 0.9}) {
    for (int n : {2, 3, 5, 9}) {
      const auto t = line_path_threshold(path_graph(n), alpha);
      CHECK(t.is_path);
      CHECK(t.below_two);
      CHECK(t.lambda1_line < 2.0);
    }
    for (const Graph& g : {cycle_graph(5), star_graph(4), complete_graph(4),
                           wheel_graph(5)}) {
      const auto t = line_path_threshold(g, alpha);
      CHECK_FALSE(t.is_path);
      CHECK_FALSE(t.below_two);
      CHECK(t.lambda1_line >= 2.0 - 1e-12);
    }
  }
  CHECK_THROWS_AS(line_path_threshold(Graph(4, {{0, 1}, {2, 3}}), 0.5),
                  std::invalid_argument);
}

TEST_CASE("star equality for the first lower bound") {
  for (int n : {3, 10, 25, 50}) {
    const Graph s = star_graph(n);
    for (double alpha : kAlphas) {
      const double l1 = eigenvalues(a_alpha(s, alpha)).lambda1();
      CHECK(std::abs(l1 - lower_nikiforov(n - 1, alpha)) < 1e-8);
    }
  }
}

TEST_CASE("bound report structure") {
  const auto rep = bound_report(wheel_graph(6), "wheel_6", 0.4);
  CHECK(rep.graph_id == "wheel_6");
  CHECK(rep.alpha == doctest::Approx(0.4));
  CHECK(rep.lambda1 > rep.lambda_min);
  REQUIRE(!rep.entries.empty());
  bool saw_eq9 = false, saw_line = false;
  for (const auto& e : rep.entries) {
    if (e.id == "eq9") {
      saw_eq9 = true;
      CHECK(e.side == BoundSide::lower);
      CHECK(e.value <= rep.lambda1 + 1e-9);
      CHECK(e.gap == doctest::Approx(rep.lambda1 - e.value).epsilon(1e-12));
    }
    if (e.target == "line_graph") saw_line = true;
  }
  CHECK(saw_eq9);
  CHECK(saw_line);
}
