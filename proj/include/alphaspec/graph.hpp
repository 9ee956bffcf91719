#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alphaspec {

/// Unordered vertex pair, normalized so that first < second.
using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  /// Builds a graph from (possibly unnormalized, possibly duplicated) pairs.
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  Graph(int n, std::vector<Edge> pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges sorted lexicographically, each with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  bool has_edge(int u, int v) const;

  int min_degree() const;
  int max_degree() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> degrees_;
};

Graph from_edge_list(int n, const std::vector<Edge>& pairs);

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  wheel,
  pineapple,
  binomial_tree,
  helm,
  windmill,
};

Family family_from_name(const std::string& name);
std::string family_name(Family kind);

/// Parametric families. Vertex labeling conventions:
///   wheel:     hub = vertex 0, rim cycle = 1..n-1
///   star:      center = vertex 0
///   pineapple: clique = 0..p-1, pendants attached at vertex 0
///   binomial_tree(k): n = 2^k, root = vertex 0; the root of the second copy
///                     (vertex 2^(k-1)) becomes a child of vertex 0
///   helm(n):   wheel W_n on 0..n-1 plus pendant n-1+i attached to rim vertex i
///   windmill(nu, k): nu copies of K_k sharing only the common vertex 0
Graph make_family(Family kind, const std::vector<int>& params);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int n1, int n2);
Graph star_graph(int n);  // K_{1,n-1} on n vertices
Graph wheel_graph(int n);
Graph pineapple_graph(int p, int q);
Graph binomial_tree(int k);
Graph helm_graph(int n);
Graph windmill_graph(int nu, int k);
Graph petersen_graph();

/// Line graph together with the map from l(G)'s vertices back to G's edges:
/// vertex i of the line graph corresponds to vertex_edges[i].
struct LineGraphResult {
  Graph graph;
  std::vector<Edge> vertex_edges;
};

/// Requires m >= 1.
LineGraphResult line_graph(const Graph& g);

struct DegreeProfile {
  std::vector<int> degrees;
  int delta = 0;
  int Delta = 0;
  /// m_i = average degree over neighbors; disengaged for isolated vertices.
  std::vector<std::optional<double>> avg_neighbor_degrees;
};

DegreeProfile degree_profile(const Graph& g);

/// Requires e to be present.
Graph delete_edge(const Graph& g, Edge e);

struct StructureFlags {
  bool connected = false;
  bool regular = false;
  int r = 0;  // common degree when regular
  bool bipartite = false;
};

StructureFlags structure_flags(const Graph& g);

/// Edge-list file format: "n m" on the first line, then m lines "u v"
/// (0-indexed). Lines starting with '#' are comments. The writer emits
/// edges sorted lexicographically.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace alphaspec
