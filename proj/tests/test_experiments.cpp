#include <doctest.h>

#include <atomic>
#include <cmath>
#include <set>
#include <sstream>

#include "alphaspec/bounds.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/experiments.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/linalg.hpp"

using namespace alphaspec;

TEST_CASE("alpha grids") {
  const auto g = make_alpha_grid(0.0, 1.0, 0.1);
  REQUIRE(g.size() == 10);
  CHECK(g.front() == doctest::Approx(0.0));
  CHECK(g.back() == doctest::Approx(0.9));

  const auto single = parse_alpha_spec("0.35");
  REQUIRE(single.size() == 1);
  CHECK(single[0] == doctest::Approx(0.35));

  const auto ranged = parse_alpha_spec("0.2:0.8:0.2");
  REQUIRE(ranged.size() == 3);
  CHECK(ranged[2] == doctest::Approx(0.6));

  CHECK_THROWS_AS(parse_alpha_spec("0:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_alpha_spec("abc"), std::invalid_argument);
}

TEST_CASE("round5 is half-even at the fifth decimal") {
  CHECK(round5(1.234565) == doctest::Approx(1.23456).epsilon(1e-12));
  CHECK(round5(1.234575) == doctest::Approx(1.23458).epsilon(1e-12));
  CHECK(round5(1.234561) == doctest::Approx(1.23456).epsilon(1e-12));
  CHECK(round5(-2.000005) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("enumeration counts match the published sequences") {
  // Graphs on n nodes up to isomorphism: 1, 2, 4, 11, 34, 156, 1044.
  const std::vector<size_t> all = {1, 2, 4, 11, 34, 156, 1044};
  // Connected graphs: 1, 1, 2, 6, 21, 112, 853.
  const std::vector<size_t> conn = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(all_graphs(n).size() == all[n - 1]);
    CHECK(connected_graphs(n).size() == conn[n - 1]);
  }
  CHECK_THROWS_AS(all_graphs(11), std::invalid_argument);
}

TEST_CASE("canonical mask identifies isomorphs") {
  // P_4 labeled two different ways.
  const Graph a = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph b = from_edge_list(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(canonical_mask(a) == canonical_mask(b));
  // P_4 vs the star K_{1,3}: same size, different graphs.
  CHECK(canonical_mask(a) != canonical_mask(star_graph(4)));
}

TEST_CASE("random connected graphs are connected and reproducible") {
  std::mt19937_64 rng1(7), rng2(7);
  for (int i = 0; i < 20; ++i) {
    const Graph g1 = random_connected_graph(8, 0.3, rng1);
    const Graph g2 = random_connected_graph(8, 0.3, rng2);
    CHECK(structure_flags(g1).connected);
    CHECK(g1.edges() == g2.edges());
  }
}

TEST_CASE("sweep_compare slack signs certify the bounds") {
  const Graph g = wheel_graph(7);
  const auto grid = make_alpha_grid(0.0, 1.0, 0.25);
  const auto table = sweep_compare(g, "wheel", 7, {"eq9", "eq13", "rowsum_hi"},
                                   grid, "lambda1");
  std::set<std::string> quantities;
  for (const auto& cell : table) {
    quantities.insert(cell.quantity);
    if (cell.quantity == "lambda1") continue;
    if (cell.failed) continue;
    CHECK(cell.value >= -1e-9);  // slack >= 0 means the bound held
  }
  CHECK(quantities.count("lambda1") == 1);
  CHECK(quantities.count("eq9") == 1);
  CHECK(quantities.count("eq13") == 1);
  // Reference rows carry the actual eigenvalue.
  for (const auto& cell : table)
    if (cell.quantity == "lambda1" && std::abs(cell.alpha) < 1e-12)
      CHECK(cell.value ==
            doctest::Approx(eigenvalues(a_alpha(g, 0.0)).lambda1()).epsilon(1e-9));
}

TEST_CASE("table csv format and determinism") {
  const Graph g = cycle_graph(6);
  const auto grid = make_alpha_grid(0.0, 0.5, 0.25);
  const auto t1 = sweep_compare(g, "cycle", 6, {"eq10"}, grid, "lambda1");
  const auto t2 = sweep_compare(g, "cycle", 6, {"eq10"}, grid, "lambda1");
  const std::string csv = table_csv(t1);
  CHECK(csv == table_csv(t2));
  std::istringstream is(csv);
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "family,param,quantity,alpha,value");
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 4);
    CHECK(line.rfind("cycle,6,", 0) == 0);
  }
  CHECK(rows == static_cast<int>(t1.size()));
}

TEST_CASE("reproduced table has the right shape") {
  const auto t = reproduce_table(1);
  // 3 sizes x 3 quantities x 10 alphas
  CHECK(t.size() == 90);
  std::set<long> params;
  for (const auto& c : t) {
    params.insert(c.param);
    CHECK(c.family == "path");
    CHECK_FALSE(c.failed);
    CHECK(c.value == doctest::Approx(round5(c.value)));
  }
  CHECK(params == std::set<long>{100, 500, 1000});
  // Sorted by (family, param, quantity, alpha).
  for (size_t i = 1; i < t.size(); ++i) {
    const auto key = [](const TableCell& c) {
      return std::make_tuple(c.family, c.param, c.quantity, c.alpha);
    };
    CHECK(key(t[i - 1]) < key(t[i]));
  }
  CHECK_THROWS_AS(reproduce_table(4), std::invalid_argument);
}

TEST_CASE("search finds no counterexamples to the regular-bound ordering") {
  SearchTask task;
  task.predicate = "bound10_ge_bound9";
  task.n_max = 5;
  task.alpha_grid = make_alpha_grid(0.0, 1.0, 0.2);
  const auto res = run_search(task);
  CHECK(res.exhausted);
  CHECK(res.graphs_examined > 0);
  // The ordering eq9 <= eq10 is only guaranteed for regular graphs;
  // irregular witnesses where eq9 exceeds eq10 do exist and are exactly
  // what the search reports.
  for (const auto& w : res.witnesses) {
    const Graph g = from_edge_list(w.n, [&] {
      std::vector<Edge> edges;
      std::istringstream is(w.edge_list);
      std::string tok;
      while (std::getline(is, tok, ';')) {
        const auto dash = tok.find('-');
        edges.push_back({std::stoi(tok.substr(0, dash)),
                         std::stoi(tok.substr(dash + 1))});
      }
      return edges;
    }());
    CHECK_FALSE(structure_flags(g).regular);
    // The recorded violation must be real.
    CHECK(w.lhs < w.rhs - 1e-9);
  }
}

TEST_CASE("search csv schema and budget truncation") {
  SearchTask task;
  task.predicate = "upper_ordering";
  task.n_max = 5;
  task.alpha_grid = {0.0, 0.5};
  task.budget = 3;
  const auto res = run_search(task);
  CHECK_FALSE(res.exhausted);
  CHECK(res.graphs_examined <= 3);

  const std::string csv = search_csv(res);
  std::istringstream is(csv);
  std::string header;
  REQUIRE(std::getline(is, header));
  CHECK(header == "predicate,graph_id,n,m,alpha,lhs,rhs,edge_list");
}

TEST_CASE("random search mode is seed-deterministic") {
  SearchTask task;
  task.predicate = "bound12_vs_bound10";
  task.exhaustive = false;
  task.seed = 99;
  task.budget = 40;
  task.alpha_grid = {0.1, 0.6};
  const auto r1 = run_search(task);
  const auto r2 = run_search(task);
  CHECK(search_csv(r1) == search_csv(r2));
  CHECK(r1.graphs_examined == 40);
}

TEST_CASE("timing csv") {
  const std::vector<TimingSpec> specs = {{Family::star, {20}},
                                         {Family::complete, {12}}};
  const auto recs = timing_compare(specs, 3);
  CHECK(recs.size() == 4);  // 2 specs x 2 bounds
  for (const auto& r : recs) {
    CHECK(r.reps == 3);
    CHECK(r.mean_seconds >= 0.0);
    CHECK(std::isfinite(r.stddev_seconds));
  }
  const std::string csv = timing_csv(recs);
  std::istringstream is(csv);
  std::string header;
  REQUIRE(std::getline(is, header));
  CHECK(header == "family,n,bound,reps,mean_seconds,stddev_seconds");
  int rows = 0;
  std::string line;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<std::atomic<int>> hits(257);
  parallel_for(257, [&](long i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK(worker_count() >= 1);
}
