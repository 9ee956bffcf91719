#pragma once

#include <string>
#include <utility>
#include <vector>

#include "alphaspec/graph.hpp"
#include "alphaspec/linalg.hpp"

namespace alphaspec {

/// Thrown when a bound formula leaves its proven domain (e.g. a negative
/// radicand), rather than clamping silently.
class BoundDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (alpha*(Delta+1) + sqrt(alpha^2*(Delta+1)^2 + 4*Delta*(1-2*alpha)))/2.
/// Lower bound on lambda1; tight exactly on stars among connected graphs.
double lower_nikiforov(int Delta, double alpha);

/// (alpha*(Delta+delta) + sqrt(alpha^2*(Delta-delta)^2 + 4*(1-alpha)^2*Delta))/2.
double lower_degree_based(int Delta, int delta, double alpha);
double lower_degree_based(const Graph& g, double alpha);

/// Zagreb/Randic-based lower bound; requires n >= 3.
double lower_zagreb_randic(const Graph& g, double alpha);

/// sqrt(alpha*Delta^2 + (1-alpha)*(Delta*(delta-1) - delta*(n-1) + 2m)).
/// Upper bound on lambda1; throws BoundDomainError on a negative radicand.
double upper_degree_based(const Graph& g, double alpha);

/// (min, max) over vertices of sqrt(alpha*d(v)^2 + (1-alpha)*sum of
/// neighbor degrees); brackets lambda1.
std::pair<double, double> rowsum_bounds(const Graph& g, double alpha);

/// Kolotilina lower bound on the spectral radius of an entrywise
/// non-negative symmetric matrix of order >= 2.
double kolotilina_lower(const SymMatrix& m);

/// Piecewise upper bound on lambda1(A_alpha(P_n)):
/// 2*alpha + 2*(1-alpha)*cos(pi/(n+1)) for alpha < 1/2, cos(pi/n) branch
/// for alpha >= 1/2.
double pn_upper(int n, double alpha);

/// 2*alpha*delta(G) - 2 <= lambda_m(A_alpha(l(G))), alpha in [0,1).
double line_smallest_lower(const Graph& g, double alpha);

/// Bracket for lambda1(A_alpha(l(G))) built from lambda1(A_alpha(G)) and the
/// extreme edge diagonal corrections; collapses to (2r-2, 2r-2) on
/// r-regular graphs.
std::pair<double, double> line_largest_sandwich(const Graph& g, double alpha);

/// 2n-4 for i = 1, n*(alpha+1) - 4 for i >= 2.
double line_eigen_cap(int n, double alpha, int i);

/// (2*alpha - 1, n*(alpha+1) - 4) bracketing lambda2(A_alpha(l(G))),
/// connected G with n >= 3.
std::pair<double, double> line_second_bounds(int n, double alpha);

struct OrderingWitness {
  double lhs = 0;  // the side asserted smaller
  double rhs = 0;
  bool holds = false;
  int witness_vertex = -1;       // maximizer on the lhs, where applicable
  bool witness_has_max_degree = false;
};

/// Both lower bounds on an r-regular degree profile; asserts the
/// degree-based bound dominates Nikiforov's.
OrderingWitness compare_lower_bounds_regular(int r, double alpha);

/// rowsum upper <= degree-based upper, with the maximizing vertex reported.
OrderingWitness upper_bounds_ordering(const Graph& g, double alpha);

struct PathThreshold {
  bool below_two = false;
  bool is_path = false;
  double lambda1_line = 0;
};

/// lambda1(A_alpha(l(G))) < 2 iff G is a path; connected G, alpha in [0,1).
PathThreshold line_path_threshold(const Graph& g, double alpha);

enum class BoundSide { lower, upper };

struct BoundEntry {
  std::string id;
  double value = 0;
  BoundSide side = BoundSide::lower;
  std::string target;  // "graph" or "line_graph"
  double gap = 0;      // |target eigenvalue - value|
};

struct BoundReport {
  std::string graph_id;
  double alpha = 0;
  double lambda1 = 0;
  double lambda_min = 0;
  double line_lambda1 = 0;
  double line_lambda_min = 0;
  std::vector<BoundEntry> entries;
};

/// Evaluates every applicable bound for G and l(G) at the given alpha.
BoundReport bound_report(const Graph& g, const std::string& graph_id,
                         double alpha);

}  // namespace alphaspec
