#include "alphaspec/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace alphaspec {

namespace {

void check_alpha(double alpha, bool allow_one = true) {
  if (!(alpha >= 0.0 && (allow_one ? alpha <= 1.0 : alpha < 1.0)))
    throw std::invalid_argument(allow_one ? "alpha must lie in [0,1]"
                                          : "alpha must lie in [0,1)");
}

}  // namespace

double lower_nikiforov(int Delta, double alpha) {
  if (Delta < 1) throw std::invalid_argument("lower_nikiforov requires Delta >= 1");
  check_alpha(alpha);
  const double dp1 = Delta + 1.0;
  const double disc = alpha * alpha * dp1 * dp1 + 4.0 * Delta * (1.0 - 2.0 * alpha);
  // disc = (alpha*(Delta-1))^2 + 4*Delta*(1-alpha)^2 >= 0, asserted anyway
  if (disc < 0) throw std::logic_error("negative discriminant in lower_nikiforov");
  return 0.5 * (alpha * dp1 + std::sqrt(disc));
}

double lower_degree_based(int Delta, int delta, double alpha) {
  check_alpha(alpha);
  const double diff = static_cast<double>(Delta) - delta;
  const double oma = 1.0 - alpha;
  return 0.5 * (alpha * (Delta + delta) +
                std::sqrt(alpha * alpha * diff * diff + 4.0 * oma * oma * Delta));
}

double lower_degree_based(const Graph& g, double alpha) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("lower_degree_based requires n >= 2");
  return lower_degree_based(g.max_degree(), g.min_degree(), alpha);
}

double lower_zagreb_randic(const Graph& g, double alpha) {
  check_alpha(alpha);
  const int n = g.vertex_count();
  const double m = g.edge_count();
  if (n < 3) throw std::invalid_argument("lower_zagreb_randic requires n >= 3");
  if (m < 1) throw std::invalid_argument("lower_zagreb_randic requires m >= 1");
  const double D = g.max_degree();
  const double d = g.min_degree();
  const double zagreb_part =
      ((D * D + d * d) * (n - 2) + (2.0 * m - D - d) * (2.0 * m - D - d)) /
      (2.0 * m * (n - 2));
  const double randic_part =
      8.0 * m * m * m /
      (static_cast<double>(n) * n * (2.0 * d * m + (n - 1.0) * (2.0 * m - n * d)));
  return alpha * zagreb_part + (1.0 - alpha) * randic_part;
}

double upper_degree_based(const Graph& g, double alpha) {
  check_alpha(alpha);
  if (g.edge_count() < 1)
    throw std::invalid_argument("upper_degree_based requires m >= 1");
  const double n = g.vertex_count();
  const double m = g.edge_count();
  const double D = g.max_degree();
  const double d = g.min_degree();
  const double radicand =
      alpha * D * D + (1.0 - alpha) * (D * (d - 1.0) - d * (n - 1.0) + 2.0 * m);
  if (radicand < 0)
    throw BoundDomainError("upper_degree_based radicand is negative");
  return std::sqrt(radicand);
}

namespace {

double rowsum_radical(const Graph& g, int v, double alpha) {
  double neighbor_sum = 0;
  for (int u : g.neighbors(v)) neighbor_sum += g.degree(u);
  const double dv = g.degree(v);
  return std::sqrt(alpha * dv * dv + (1.0 - alpha) * neighbor_sum);
}

}  // namespace

std::pair<double, double> rowsum_bounds(const Graph& g, double alpha) {
  check_alpha(alpha);
  if (g.edge_count() < 1)
    throw std::invalid_argument("rowsum_bounds requires m >= 1");
  double lo = rowsum_radical(g, 0, alpha), hi = lo;
  for (int v = 1; v < g.vertex_count(); ++v) {
    const double r = rowsum_radical(g, v, alpha);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi};
}

double kolotilina_lower(const SymMatrix& m) {
  const int n = m.order();
  if (n < 2) throw std::invalid_argument("kolotilina_lower requires order >= 2");
  double theta = m(0, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (m(i, j) < 0)
        throw std::invalid_argument("kolotilina_lower requires a non-negative matrix");
    theta = std::min(theta, m(i, i));
  }
  double best = -1e300;
  for (int i = 0; i < n; ++i) {
    double offsq = 0;
    for (int j = 0; j < n; ++j)
      if (j != i) offsq += m(i, j) * m(j, i);
    const double bii = m(i, i);
    best = std::max(best, 0.5 * (bii + theta) +
                              std::sqrt(0.25 * (bii - theta) * (bii - theta) +
                                        offsq));
  }
  return best;
}

double pn_upper(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("pn_upper requires n >= 2");
  check_alpha(alpha);
  const double pi = std::acos(-1.0);
  const double c = alpha < 0.5 ? std::cos(pi / (n + 1)) : std::cos(pi / n);
  return 2.0 * alpha + 2.0 * (1.0 - alpha) * c;
}

double line_smallest_lower(const Graph& g, double alpha) {
  check_alpha(alpha, /*allow_one=*/false);
  if (g.edge_count() < 1)
    throw std::invalid_argument("line_smallest_lower requires m >= 1");
  return 2.0 * alpha * g.min_degree() - 2.0;
}

std::pair<double, double> line_largest_sandwich(const Graph& g, double alpha) {
  check_alpha(alpha);
  if (g.edge_count() < 1)
    throw std::invalid_argument("line_largest_sandwich requires m >= 1");
  const double l1 = lambda1_a_alpha(g, alpha);
  double corr_min = 1e300, corr_max = -1e300;
  for (const auto& [u, v] : g.edges()) {
    const double corr = 2.0 - alpha * (g.degree(u) + g.degree(v));
    corr_min = std::min(corr_min, corr);
    corr_max = std::max(corr_max, corr);
  }
  // The factor (1-2*alpha) changes sign at 1/2, so the extremal degree that
  // keeps each inequality valid swaps with it.
  const double c = 1.0 - 2.0 * alpha;
  const double lo = l1 + c * (c >= 0 ? g.min_degree() : g.max_degree()) - corr_max;
  const double hi = l1 + c * (c >= 0 ? g.max_degree() : g.min_degree()) - corr_min;
  return {lo, hi};
}

double line_eigen_cap(int n, double alpha, int i) {
  if (n < 2) throw std::invalid_argument("line_eigen_cap requires n >= 2");
  if (i < 1) throw std::invalid_argument("eigenvalue index must be >= 1");
  check_alpha(alpha);
  return i == 1 ? 2.0 * n - 4.0 : n * (alpha + 1.0) - 4.0;
}

std::pair<double, double> line_second_bounds(int n, double alpha) {
  if (n < 3) throw std::invalid_argument("line_second_bounds requires n >= 3");
  check_alpha(alpha);
  return {2.0 * alpha - 1.0, n * (alpha + 1.0) - 4.0};
}

OrderingWitness compare_lower_bounds_regular(int r, double alpha) {
  if (r < 1) throw std::invalid_argument("regular degree must be >= 1");
  check_alpha(alpha);
  OrderingWitness w;
  w.lhs = lower_nikiforov(r, alpha);
  w.rhs = lower_degree_based(r, r, alpha);
  w.holds = w.lhs <= w.rhs + 1e-9;
  return w;
}

OrderingWitness upper_bounds_ordering(const Graph& g, double alpha) {
  check_alpha(alpha);
  OrderingWitness w;
  double hi = -1e300;
  int arg = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const double r = rowsum_radical(g, v, alpha);
    if (r > hi) {  // ties broken by lowest index
      hi = r;
      arg = v;
    }
  }
  w.lhs = hi;
  w.rhs = upper_degree_based(g, alpha);
  const double tol = std::abs(w.rhs) <= 1e3 ? 1e-9 : 1e-12 * std::abs(w.rhs);
  w.holds = w.lhs <= w.rhs + tol;
  w.witness_vertex = arg;
  w.witness_has_max_degree = g.degree(arg) == g.max_degree();
  return w;
}

PathThreshold line_path_threshold(const Graph& g, double alpha) {
  check_alpha(alpha, /*allow_one=*/false);
  if (g.edge_count() < 1)
    throw std::invalid_argument("line_path_threshold requires m >= 1");
  if (!structure_flags(g).connected)
    throw std::invalid_argument("line_path_threshold requires a connected graph");
  PathThreshold t;
  const auto lg = line_graph(g);
  t.lambda1_line = lambda1_a_alpha(lg.graph, alpha);
  // Non-paths can attain lambda1 = 2 exactly (cycles); guard the strict
  // comparison against solver rounding.
  t.below_two = t.lambda1_line < 2.0 - 1e-9;
  // A connected graph is a path iff it is a tree with maximum degree <= 2.
  t.is_path = g.edge_count() == g.vertex_count() - 1 && g.max_degree() <= 2;
  return t;
}

BoundReport bound_report(const Graph& g, const std::string& graph_id,
                         double alpha) {
  check_alpha(alpha);
  BoundReport rep;
  rep.graph_id = graph_id;
  rep.alpha = alpha;
  const Spectrum spec = eigenvalues(a_alpha(g, alpha));
  rep.lambda1 = spec.lambda1();
  rep.lambda_min = spec.lambda_min();

  auto add = [&](const std::string& id, double value, BoundSide side,
                 const std::string& target, double eigen) {
    rep.entries.push_back({id, value, side, target, std::abs(eigen - value)});
  };

  add("eq9", lower_nikiforov(g.max_degree(), alpha), BoundSide::lower, "graph",
      rep.lambda1);
  add("eq10", lower_degree_based(g, alpha), BoundSide::lower, "graph",
      rep.lambda1);
  if (g.vertex_count() >= 3)
    add("eq12", lower_zagreb_randic(g, alpha), BoundSide::lower, "graph",
        rep.lambda1);
  add("eq13", upper_degree_based(g, alpha), BoundSide::upper, "graph",
      rep.lambda1);
  const auto [rs_lo, rs_hi] = rowsum_bounds(g, alpha);
  add("rowsum_lo", rs_lo, BoundSide::lower, "graph", rep.lambda1);
  add("rowsum_hi", rs_hi, BoundSide::upper, "graph", rep.lambda1);

  const auto lg = line_graph(g);
  const Spectrum lspec = eigenvalues(a_alpha(lg.graph, alpha));
  rep.line_lambda1 = lspec.lambda1();
  rep.line_lambda_min = lspec.lambda_min();
  if (alpha < 1.0)
    add("line_floor", line_smallest_lower(g, alpha), BoundSide::lower,
        "line_graph", rep.line_lambda_min);
  const auto [ls_lo, ls_hi] = line_largest_sandwich(g, alpha);
  add("line_lo", ls_lo, BoundSide::lower, "line_graph", rep.line_lambda1);
  add("line_hi", ls_hi, BoundSide::upper, "line_graph", rep.line_lambda1);
  return rep;
}

}  // namespace alphaspec
