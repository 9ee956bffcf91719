#include <algorithm>
#include <cmath>
#include <numeric>

#include "alphaspec/linalg.hpp"

namespace alphaspec {

namespace {

constexpr int kJacobiCrossover = 128;

double hypot2(double a, double b) { return std::hypot(a, b); }

// Householder reduction of a full symmetric matrix to tridiagonal form,
// eigenvalues-only variant. d receives the diagonal, e the subdiagonal
// (e[0] unused).
void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                         std::vector<double>& e) {
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<size_t>(i) * n + j];
  };
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0, scale = 0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = (f >= 0.0 ? -std::sqrt(h) : std::sqrt(h));
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          const double g2 = e[j] - hh * f;
          e[j] = g2;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g2 * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
  }
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
}

// Implicit-shift QL on a symmetric tridiagonal matrix; d in, eigenvalues out.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, int n) {
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) + dd == dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw ConvergenceError("tridiagonal QL exceeded iteration budget",
                                 std::abs(e[l]));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

double off_diag_frobenius(const std::vector<double>& a, int n) {
  double s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[static_cast<size_t>(i) * n + j] *
                       a[static_cast<size_t>(i) * n + j];
  return std::sqrt(s);
}

}  // namespace

Spectrum group_spectrum(std::vector<double> values, double inf_norm) {
  std::sort(values.begin(), values.end(), std::greater<double>());
  Spectrum s;
  s.eigenvalues = std::move(values);
  const double tol = 1e-6 * std::max(1.0, inf_norm);
  for (double v : s.eigenvalues) {
    if (!s.groups.empty() && std::abs(s.groups.back().first - v) <= tol)
      ++s.groups.back().second;
    else
      s.groups.push_back({v, 1});
  }
  return s;
}

std::vector<double> jacobi_eigenvalues(SymMatrix m, double tol,
                                       int max_sweeps) {
  const int n = m.order();
  std::vector<double> a = m.data();
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<size_t>(i) * n + j];
  };
  double fro = 0;
  for (double v : a) fro += v * v;
  fro = std::sqrt(fro);
  const double target = tol * std::max(fro, 1e-300);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diag_frobenius(a, n) <= target) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = at(p, k) = akp - s * (akq + tau * akp);
          at(k, q) = at(q, k) = akq + s * (akp - tau * akq);
        }
      }
    }
  }
  const double residual = off_diag_frobenius(a, n);
  if (residual > target)
    throw ConvergenceError("Jacobi sweeps did not reach tolerance", residual);
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
  return d;
}

std::vector<double> tridiagonal_ql_eigenvalues(SymMatrix m) {
  const int n = m.order();
  std::vector<double> a = m.data();
  std::vector<double> d, e;
  if (n == 1) return {a[0]};
  householder_tridiag(a, n, d, e);
  tridiag_ql(d, e, n);
  return d;
}

Spectrum eigenvalues(const SymMatrix& m, double tol) {
  std::vector<double> vals = m.order() <= kJacobiCrossover
                                 ? jacobi_eigenvalues(m, tol)
                                 : tridiagonal_ql_eigenvalues(m);
  Spectrum s = group_spectrum(std::move(vals), m.inf_norm());
  const double sum =
      std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
  const double tr = m.trace();
  const double slack = 1e-8 * m.order() * std::max(1.0, std::abs(tr));
  if (std::abs(sum - tr) > slack)
    throw ConvergenceError("eigenvalue sum disagrees with trace",
                           std::abs(sum - tr));
  return s;
}

double lambda1_power(const Graph& g, double alpha, double tol,
                     long max_iters) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0,1]");
  const int n = g.vertex_count();
  // Shift keeps the spectrum positive so the top eigenvalue dominates in
  // magnitude even for bipartite graphs.
  const double shift = (1.0 - alpha) * g.max_degree() + 1.0;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  double rho_prev = 0;
  int stable = 0;
  for (long it = 0; it < max_iters; ++it) {
    for (int v = 0; v < n; ++v) {
      double s = (alpha * g.degree(v) + shift) * x[v];
      for (int u : g.neighbors(v)) s += (1.0 - alpha) * x[u];
      y[v] = s;
    }
    double rho = 0, norm = 0;
    for (int v = 0; v < n; ++v) {
      rho += x[v] * y[v];
      norm += y[v] * y[v];
    }
    norm = std::sqrt(norm);
    for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
    if (std::abs(rho - rho_prev) <= tol * std::max(1.0, std::abs(rho))) {
      if (++stable >= 3) return rho - shift;
    } else {
      stable = 0;
    }
    rho_prev = rho;
  }
  throw ConvergenceError("power iteration exceeded iteration budget",
                         std::abs(rho_prev));
}

double lambda1_a_alpha(const Graph& g, double alpha) {
  if (g.vertex_count() <= 1000)
    return eigenvalues(a_alpha(g, alpha)).lambda1();
  return lambda1_power(g, alpha);
}

double SignLog::value() const {
  return sign == 0 ? 0.0 : sign * std::exp(log_abs);
}

SignLog SignLog::operator*(const SignLog& o) const {
  if (sign == 0 || o.sign == 0) return {0, 0};
  return {sign * o.sign, log_abs + o.log_abs};
}

SignLog pow_signlog(double base, int exp) {
  if (exp == 0) return {1, 0.0};
  if (base == 0.0) return {0, 0.0};
  const int sign = (base < 0 && (exp % 2 != 0)) ? -1 : 1;
  return {sign, exp * std::log(std::abs(base))};
}

SignLog char_poly_eval_log(const SymMatrix& m, double lambda) {
  const int n = m.order();
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<size_t>(i) * n + j] = (i == j ? lambda : 0.0) - m(i, j);
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<size_t>(i) * n + j];
  };
  int sign = 1;
  double log_abs = 0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(at(i, k)) > std::abs(at(piv, k))) piv = i;
    if (at(piv, k) == 0.0) return {0, 0.0};
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(at(piv, j), at(k, j));
      sign = -sign;
    }
    const double pivot = at(k, k);
    if (pivot < 0) sign = -sign;
    log_abs += std::log(std::abs(pivot));
    for (int i = k + 1; i < n; ++i) {
      const double f = at(i, k) / pivot;
      if (f == 0.0) continue;
      for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  return {sign, log_abs};
}

double char_poly_eval(const SymMatrix& m, double lambda) {
  return char_poly_eval_log(m, lambda).value();
}

namespace {

Spectrum spectrum_from_groups(
    const std::vector<std::pair<double, int>>& groups) {
  std::vector<double> vals;
  double maxabs = 0;
  for (const auto& [v, mult] : groups) {
    for (int i = 0; i < mult; ++i) vals.push_back(v);
    maxabs = std::max(maxabs, std::abs(v));
  }
  return group_spectrum(std::move(vals), maxabs);
}

}  // namespace

Spectrum closed_form_spectrum(ClosedForm kind, int n, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0,1]");
  const double a = alpha;
  switch (kind) {
    case ClosedForm::complete:
      if (n < 2) throw std::invalid_argument("complete spectrum needs n >= 2");
      return spectrum_from_groups({{n - 1.0, 1}, {a * n - 1.0, n - 1}});
    case ClosedForm::line_of_complete:
      if (n < 3)
        throw std::invalid_argument("line of complete spectrum needs n >= 3");
      return spectrum_from_groups({{2.0 * n - 4.0, 1},
                                   {n * (a + 1.0) - 4.0, n - 1},
                                   {2.0 * a * (n - 1.0) - 2.0, n * (n - 3) / 2}});
    case ClosedForm::line_of_balanced_bipartite:
      if (n < 2)
        throw std::invalid_argument(
            "line of balanced bipartite spectrum needs n >= 2");
      return spectrum_from_groups({{2.0 * n - 2.0, 1},
                                   {n * (a + 1.0) - 2.0, 2 * n - 2},
                                   {2.0 * a * n - 2.0, n * n - 2 * n + 1}});
    case ClosedForm::line_of_star:
      if (n < 3)
        throw std::invalid_argument("line of star spectrum needs n >= 3");
      return spectrum_from_groups(
          {{n - 2.0, 1}, {(n - 1.0) * a - 1.0, n - 2}});
  }
  throw std::logic_error("unreachable");
}

Spectrum regular_line_spectrum_from_q(const std::vector<double>& q_spec, int r,
                                      int n, int m, double alpha) {
  if (static_cast<int>(q_spec.size()) != n)
    throw std::invalid_argument("Q-spectrum length must equal n");
  if (m < n)
    throw std::invalid_argument(
        "regular line spectrum from Q requires m >= n");
  std::vector<std::pair<double, int>> groups;
  for (double q : q_spec)
    groups.push_back({alpha * (2.0 * r - q) + q - 2.0, 1});
  if (m > n) groups.push_back({2.0 * r * alpha - 2.0, m - n});
  return spectrum_from_groups(groups);
}

std::vector<double> default_sample_points(const Graph& g) {
  const double scale = 1.0 + g.max_degree();
  return {-3.0 * scale, -1.0 * scale, 0.0, 1.0 * scale, 3.0 * scale};
}

namespace {

double residual_signlog(const SignLog& lhs, const SignLog& rhs) {
  // |LHS - RHS| / max(1, |RHS|), computed with the common magnitude factored
  // out so large orders stay finite.
  const double d = rhs.sign == 0 ? 0.0 : std::max(0.0, rhs.log_abs);
  const double l = lhs.sign == 0 ? 0.0 : lhs.sign * std::exp(lhs.log_abs - d);
  const double r = rhs.sign == 0 ? 0.0 : rhs.sign * std::exp(rhs.log_abs - d);
  return std::abs(l - r);
}

}  // namespace

double linegraph_charpoly_residual(const Graph& g, double alpha,
                                   const std::vector<double>& sample_points) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("char-poly identities require alpha in [0,1)");
  const auto flags = structure_flags(g);
  if (!flags.regular || flags.r < 2)
    throw std::invalid_argument(
        "char-poly identities require an r-regular graph with r >= 2");
  const int r = flags.r;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const auto lg = line_graph(g);
  const SymMatrix ml = a_alpha(lg.graph, alpha);
  const SymMatrix mg = a_alpha(g, alpha);
  const SymMatrix q = signless_laplacian(g);

  double worst = 0;
  for (double lam : sample_points) {
    const SignLog lhs = char_poly_eval_log(ml, lam);
    const SignLog factor = pow_signlog(lam - 2.0 * r * alpha + 2.0, m - n);
    const SignLog rhs1 = factor * char_poly_eval_log(mg, lam - r + 2.0);
    const SignLog rhs2 =
        factor * pow_signlog(1.0 - alpha, n) *
        char_poly_eval_log(q, (lam - 2.0 * r * alpha + 2.0) / (1.0 - alpha));
    worst = std::max(worst, residual_signlog(lhs, rhs1));
    worst = std::max(worst, residual_signlog(lhs, rhs2));
  }
  return worst;
}

}  // namespace alphaspec
