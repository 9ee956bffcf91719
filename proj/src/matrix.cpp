#include <algorithm>
#include <cmath>

#include "alphaspec/linalg.hpp"

namespace alphaspec {

double SymMatrix::trace() const {
  double t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::inf_norm() const {
  double best = 0;
  for (int i = 0; i < n_; ++i) {
    double row = 0;
    for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

SymMatrix adjacency(const Graph& g) {
  SymMatrix m(g.vertex_count());
  for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

SymMatrix degree_matrix(const Graph& g) {
  SymMatrix m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m.set(v, v, g.degree(v));
  return m;
}

SymMatrix laplacian(const Graph& g) {
  SymMatrix m = degree_matrix(g);
  for (const auto& [u, v] : g.edges()) m.set(u, v, -1.0);
  return m;
}

SymMatrix signless_laplacian(const Graph& g) {
  SymMatrix m = degree_matrix(g);
  for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

RectMatrix incidence(const Graph& g) {
  if (g.edge_count() < 1)
    throw std::invalid_argument("incidence matrix requires m >= 1");
  RectMatrix b;
  b.rows = g.vertex_count();
  b.cols = g.edge_count();
  b.a.assign(static_cast<size_t>(b.rows) * b.cols, 0.0);
  for (int j = 0; j < b.cols; ++j) {
    const auto& [u, v] = g.edges()[j];
    b.a[static_cast<size_t>(u) * b.cols + j] = 1.0;
    b.a[static_cast<size_t>(v) * b.cols + j] = 1.0;
  }
  return b;
}

SymMatrix a_alpha(const Graph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0,1]");
  SymMatrix m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m.set(v, v, alpha * g.degree(v));
  for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0 - alpha);
  return m;
}

double rayleigh(const SymMatrix& m, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != m.order())
    throw std::invalid_argument("vector length does not match matrix order");
  double xx = 0;
  for (double v : x) xx += v * v;
  if (xx == 0) throw std::invalid_argument("Rayleigh quotient of zero vector");
  double xmx = 0;
  for (int i = 0; i < m.order(); ++i) {
    double row = 0;
    for (int j = 0; j < m.order(); ++j) row += m(i, j) * x[j];
    xmx += x[i] * row;
  }
  return xmx / xx;
}

std::vector<double> row_sums_of_power(const SymMatrix& m, int k) {
  if (k != 1 && k != 2)
    throw std::invalid_argument("row_sums_of_power supports k in {1,2}");
  const int n = m.order();
  std::vector<double> s1(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s1[i] += m(i, j);
  if (k == 1) return s1;
  // row sums of M^2: (M^2 * 1)_i = (M * s1)_i
  std::vector<double> s2(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s2[i] += m(i, j) * s1[j];
  return s2;
}

IncidenceResidual incidence_identity_residual(const Graph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0,1]");
  const RectMatrix b = incidence(g);
  const auto lg = line_graph(g);
  const SymMatrix al = adjacency(lg.graph);
  const SymMatrix q = signless_laplacian(g);
  const SymMatrix al_alpha = a_alpha(lg.graph, alpha);
  const int n = b.rows, m = b.cols;

  IncidenceResidual res;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double btb = 0;
      for (int k = 0; k < n; ++k) btb += b(k, i) * b(k, j);
      double expected = (i == j ? 2.0 : 0.0) + al(i, j);
      res.r1 = std::max(res.r1, std::abs(btb - expected));
      // Remark decomposition: (1-alpha) B^T B = A_alpha(l(G)) + U with
      // u_kk = 2 - alpha*(d(v_i) + d(v_j)) for edge e_k = v_i v_j.
      double u = 0;
      if (i == j) {
        const auto& [vi, vj] = lg.vertex_edges[i];
        u = 2.0 - alpha * (g.degree(vi) + g.degree(vj));
      }
      res.u_residual = std::max(
          res.u_residual, std::abs((1.0 - alpha) * btb - (al_alpha(i, j) + u)));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double bbt = 0;
      for (int k = 0; k < m; ++k) bbt += b(i, k) * b(j, k);
      res.r2 = std::max(res.r2, std::abs(bbt - q(i, j)));
    }
  }
  return res;
}

}  // namespace alphaspec
