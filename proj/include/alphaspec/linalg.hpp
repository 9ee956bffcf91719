#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alphaspec/graph.hpp"

namespace alphaspec {

/// Dense real symmetric matrix, row-major. Built symmetric by construction.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
    if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
  }

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  /// Sets both (i,j) and (j,i).
  void set(int i, int j, double v) {
    a_[static_cast<size_t>(i) * n_ + j] = v;
    a_[static_cast<size_t>(j) * n_ + i] = v;
  }

  double trace() const;
  double inf_norm() const;

  const std::vector<double>& data() const { return a_; }

 private:
  int n_;
  std::vector<double> a_;
};

/// 0/1 incidence matrix carrier (n x m).
struct RectMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // row-major

  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

SymMatrix adjacency(const Graph& g);
SymMatrix degree_matrix(const Graph& g);
SymMatrix laplacian(const Graph& g);
SymMatrix signless_laplacian(const Graph& g);
RectMatrix incidence(const Graph& g);  // requires m >= 1

/// alpha*D + (1-alpha)*A, alpha in [0,1].
SymMatrix a_alpha(const Graph& g, double alpha);

struct Spectrum {
  std::vector<double> eigenvalues;              // non-increasing
  std::vector<std::pair<double, int>> groups;   // (representative, multiplicity)

  double lambda1() const { return eigenvalues.front(); }
  double lambda_min() const { return eigenvalues.back(); }
  double lambda(int i) const { return eigenvalues.at(i - 1); }  // 1-based
};

/// Thrown when an iterative solve exceeds its budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual(residual) {}
  double residual;
};

/// Sorts non-increasingly and groups multiplicities at 1e-6*max(1, norm).
Spectrum group_spectrum(std::vector<double> values, double inf_norm);

/// All eigenvalues of a symmetric matrix, sorted non-increasing with
/// multiplicity groups. Cyclic Jacobi sweeps for small orders; Householder
/// tridiagonalization + implicit-shift QL above the crossover (the two
/// agree to ~1e-12 and are cross-checked in the test suite).
Spectrum eigenvalues(const SymMatrix& m, double tol = 1e-10);

/// Cyclic Jacobi, terminating when the off-diagonal Frobenius norm drops
/// below tol * ||M||_F. Throws ConvergenceError after max_sweeps.
std::vector<double> jacobi_eigenvalues(SymMatrix m, double tol = 1e-10,
                                       int max_sweeps = 100);

/// Householder reduction to tridiagonal form + implicit-shift QL,
/// eigenvalues only.
std::vector<double> tridiagonal_ql_eigenvalues(SymMatrix m);

/// Largest eigenvalue of A_alpha(G) by shifted power iteration on the
/// adjacency structure (no dense matrix). Intended for orders above the
/// dense solver's comfort zone; requires a connected graph.
double lambda1_power(const Graph& g, double alpha, double tol = 1e-10,
                     long max_iters = 100000);

/// Largest eigenvalue of A_alpha(G): dense solve up to order 1000,
/// power-iteration fallback above.
double lambda1_a_alpha(const Graph& g, double alpha);

/// det(lambda*I - M) via partial-pivot elimination with sign tracking.
double char_poly_eval(const SymMatrix& m, double lambda);

/// Sign and log-magnitude representation, for orders where the determinant
/// overflows double.
struct SignLog {
  int sign = 0;        // -1, 0, +1
  double log_abs = 0;  // meaningful only when sign != 0

  double value() const;
  SignLog operator*(const SignLog& o) const;
};

SignLog char_poly_eval_log(const SymMatrix& m, double lambda);
SignLog pow_signlog(double base, int exp);

/// x^T M x / x^T x; rejects the zero vector.
double rayleigh(const SymMatrix& m, const std::vector<double>& x);

/// Per-vertex row sums of M (k=1) or M^2 (k=2).
std::vector<double> row_sums_of_power(const SymMatrix& m, int k);

enum class ClosedForm {
  complete,                    // K_n
  line_of_complete,            // l(K_n)
  line_of_balanced_bipartite,  // l(K_{n,n})
  line_of_star,                // l(K_{1,n-1})
};

/// Exact spectra with multiplicities, as closed formulas in n and alpha.
Spectrum closed_form_spectrum(ClosedForm kind, int n, double alpha);

/// Spectrum of A_alpha(l(G)) for an r-regular G with Q-spectrum q_spec:
/// eigenvalues alpha*(2r - q_i) + q_i - 2, plus (2*r*alpha - 2) with
/// multiplicity m - n.
Spectrum regular_line_spectrum_from_q(const std::vector<double>& q_spec, int r,
                                      int n, int m, double alpha);

/// Default sample points {-3,-1,0,1,3} scaled by (1 + max degree).
std::vector<double> default_sample_points(const Graph& g);

/// Max relative residual, over the sample points, of both characteristic
/// polynomial identities relating P_{A_alpha(l(G))} to P_{A_alpha(G)} and to
/// P_{Q(G)} for an r-regular G (r >= 2, alpha in [0,1)). Evaluation is done
/// in sign + log-magnitude form so large orders do not overflow.
double linegraph_charpoly_residual(const Graph& g, double alpha,
                                   const std::vector<double>& sample_points);

struct IncidenceResidual {
  double r1 = 0;  // max-entry deviation of B^T B from 2I + A(l(G))
  double r2 = 0;  // max-entry deviation of B B^T from Q(G)
  double u_residual = 0;  // (1-alpha) B^T B vs A_alpha(l(G)) + U, entrywise
};

IncidenceResidual incidence_identity_residual(const Graph& g, double alpha);

}  // namespace alphaspec
