#pragma once

#include <string>

#include "alphaspec/graph.hpp"

namespace alphaspec {

enum class IndexKind { Z1, Z2, Zp, F, Ra };

struct IndexValue {
  double value = 0;
  IndexKind kind = IndexKind::Z1;
  double parameter = 0;  // exponent p or a, where applicable
};

/// First Zagreb index: sum of squared degrees.
IndexValue zagreb1(const Graph& g);

/// Second Zagreb index: sum over edges of d(u)*d(v).
IndexValue zagreb2(const Graph& g);

/// First general Zagreb index: sum of d(v)^p, p not in {0, 1}.
/// Graphs with isolated vertices are rejected for p < 0.
IndexValue general_zagreb(const Graph& g, double p);

/// Forgotten index F = Z^(3): sum of cubed degrees.
IndexValue forgotten(const Graph& g);

/// General Randic index: sum over edges of (d(u)*d(v))^a, a != 0.
/// Graphs with isolated vertices are rejected for a < 0.
IndexValue randic(const Graph& g, double a);

}  // namespace alphaspec
