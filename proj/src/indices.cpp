#include "alphaspec/indices.hpp"

#include <cmath>
#include <vector>

namespace alphaspec {

namespace {

// Pairwise summation keeps the error logarithmic in the term count.
double pairwise_sum(const std::vector<double>& terms, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    double s = 0;
    for (size_t i = lo; i < hi; ++i) s += terms[i];
    return s;
  }
  size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

double pairwise_sum(const std::vector<double>& terms) {
  return terms.empty() ? 0.0 : pairwise_sum(terms, 0, terms.size());
}

void reject_isolated(const Graph& g, const char* op) {
  if (g.min_degree() == 0)
    throw std::invalid_argument(std::string(op) +
                                " with negative exponent rejects graphs with "
                                "isolated vertices");
}

}  // namespace

IndexValue zagreb1(const Graph& g) {
  std::vector<double> t;
  t.reserve(g.vertex_count());
  for (int d : g.degrees()) t.push_back(static_cast<double>(d) * d);
  return {pairwise_sum(t), IndexKind::Z1, 0};
}

IndexValue zagreb2(const Graph& g) {
  std::vector<double> t;
  t.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges())
    t.push_back(static_cast<double>(g.degree(u)) * g.degree(v));
  return {pairwise_sum(t), IndexKind::Z2, 0};
}

IndexValue general_zagreb(const Graph& g, double p) {
  if (p == 0 || p == 1)
    throw std::invalid_argument("general Zagreb index excludes p in {0, 1}");
  if (p < 0) reject_isolated(g, "general_zagreb");
  std::vector<double> t;
  t.reserve(g.vertex_count());
  for (int d : g.degrees()) t.push_back(std::pow(static_cast<double>(d), p));
  return {pairwise_sum(t), IndexKind::Zp, p};
}

IndexValue forgotten(const Graph& g) {
  std::vector<double> t;
  t.reserve(g.vertex_count());
  for (int d : g.degrees()) t.push_back(static_cast<double>(d) * d * d);
  return {pairwise_sum(t), IndexKind::F, 0};
}

IndexValue randic(const Graph& g, double a) {
  if (a == 0) throw std::invalid_argument("Randic index excludes a = 0");
  if (a < 0) reject_isolated(g, "randic");
  std::vector<double> t;
  t.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges())
    t.push_back(std::pow(static_cast<double>(g.degree(u)) * g.degree(v), a));
  return {pairwise_sum(t), IndexKind::Ra, a};
}

}  // namespace alphaspec
