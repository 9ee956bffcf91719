#include "alphaspec/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace alphaspec {

Graph::Graph(int n, std::vector<Edge> pairs) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : pairs) {
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    if (u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  edges_ = std::move(pairs);
  adj_.resize(n_);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  degrees_.resize(n_);
  for (int v = 0; v < n_; ++v) degrees_[v] = static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int Graph::min_degree() const {
  return *std::min_element(degrees_.begin(), degrees_.end());
}

int Graph::max_degree() const {
  return *std::max_element(degrees_.begin(), degrees_.end());
}

Graph from_edge_list(int n, const std::vector<Edge>& pairs) {
  return Graph(n, pairs);
}

Family family_from_name(const std::string& name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "star") return Family::star;
  if (name == "wheel") return Family::wheel;
  if (name == "pineapple") return Family::pineapple;
  if (name == "binomial_tree") return Family::binomial_tree;
  if (name == "helm") return Family::helm;
  if (name == "windmill") return Family::windmill;
  throw std::invalid_argument("unknown graph family: " + name);
}

std::string family_name(Family kind) {
  switch (kind) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::pineapple: return "pineapple";
    case Family::binomial_tree: return "binomial_tree";
    case Family::helm: return "helm";
    case Family::windmill: return "windmill";
  }
  throw std::logic_error("unreachable");
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
  require(n >= 1, "complete requires n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(int n1, int n2) {
  require(n1 >= 1 && n2 >= 1, "complete bipartite requires n1, n2 >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) e.push_back({i, n1 + j});
  return Graph(n1 + n2, std::move(e));
}

Graph star_graph(int n) {
  require(n >= 2, "star requires n >= 2");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  return Graph(n, std::move(e));
}

Graph wheel_graph(int n) {
  require(n >= 4, "wheel requires n >= 4");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) {
    e.push_back({0, i});
    e.push_back({i, i == n - 1 ? 1 : i + 1});
  }
  return Graph(n, std::move(e));
}

Graph pineapple_graph(int p, int q) {
  require(p >= 3, "pineapple requires p >= 3");
  require(q >= 1, "pineapple requires q >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) e.push_back({i, j});
  for (int j = 0; j < q; ++j) e.push_back({0, p + j});
  return Graph(p + q, std::move(e));
}

Graph binomial_tree(int k) {
  require(k >= 0 && k <= 24, "binomial tree requires 0 <= k <= 24");
  std::vector<Edge> e;
  // BT_k = two copies of BT_{k-1} with the second root hung off the first.
  for (int level = 0; level < k; ++level) {
    int half = 1 << level;
    int count = static_cast<int>(e.size());
    for (int i = 0; i < count; ++i)
      e.push_back({e[i].first + half, e[i].second + half});
    e.push_back({0, half});
  }
  return Graph(1 << k, std::move(e));
}

Graph helm_graph(int n) {
  require(n >= 4, "helm requires n >= 4");
  Graph w = wheel_graph(n);
  std::vector<Edge> e = w.edges();
  for (int i = 1; i < n; ++i) e.push_back({i, n - 1 + i});
  return Graph(2 * n - 1, std::move(e));
}

Graph windmill_graph(int nu, int k) {
  require(nu >= 2, "windmill requires nu >= 2");
  require(k >= 2, "windmill requires k >= 2");
  std::vector<Edge> e;
  int next = 1;
  for (int c = 0; c < nu; ++c) {
    std::vector<int> blade{0};
    for (int i = 1; i < k; ++i) blade.push_back(next++);
    for (size_t i = 0; i < blade.size(); ++i)
      for (size_t j = i + 1; j < blade.size(); ++j)
        e.push_back({blade[i], blade[j]});
  }
  return Graph(nu * (k - 1) + 1, std::move(e));
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});      // outer pentagon
    e.push_back({i, i + 5});            // spokes
    e.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
  }
  return Graph(10, std::move(e));
}

Graph make_family(Family kind, const std::vector<int>& params) {
  auto p = [&](size_t i) {
    if (i >= params.size())
      throw std::invalid_argument("missing parameter for family " +
                                  family_name(kind));
    return params[i];
  };
  switch (kind) {
    case Family::path: return path_graph(p(0));
    case Family::cycle: return cycle_graph(p(0));
    case Family::complete: return complete_graph(p(0));
    case Family::complete_bipartite:
      return complete_bipartite_graph(p(0), p(1));
    case Family::star: return star_graph(p(0));
    case Family::wheel: return wheel_graph(p(0));
    case Family::pineapple: return pineapple_graph(p(0), p(1));
    case Family::binomial_tree: return binomial_tree(p(0));
    case Family::helm: return helm_graph(p(0));
    case Family::windmill: return windmill_graph(p(0), p(1));
  }
  throw std::logic_error("unreachable");
}

LineGraphResult line_graph(const Graph& g) {
  const int m = g.edge_count();
  if (m < 1) throw std::invalid_argument("line graph requires at least one edge");
  // Edge index = position in the sorted edge list.
  std::vector<std::vector<int>> incident(g.vertex_count());
  for (int idx = 0; idx < m; ++idx) {
    const auto& [u, v] = g.edges()[idx];
    incident[u].push_back(idx);
    incident[v].push_back(idx);
  }
  std::vector<Edge> le;
  for (const auto& inc : incident)
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j)
        le.push_back({inc[i], inc[j]});
  return LineGraphResult{Graph(m, std::move(le)), g.edges()};
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees = g.degrees();
  p.delta = g.min_degree();
  p.Delta = g.max_degree();
  p.avg_neighbor_degrees.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;  // m_i undefined for isolated vertices
    double sum = 0;
    for (int u : g.neighbors(v)) sum += g.degree(u);
    p.avg_neighbor_degrees[v] = sum / g.degree(v);
  }
  return p;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  if (!g.has_edge(e.first, e.second))
    throw std::invalid_argument("edge (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ") not in graph");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (const auto& f : g.edges())
    if (f != e) edges.push_back(f);
  return Graph(g.vertex_count(), std::move(edges));
}

StructureFlags structure_flags(const Graph& g) {
  StructureFlags f;
  const int n = g.vertex_count();
  // connectivity + bipartiteness in one BFS 2-coloring pass
  std::vector<int> color(n, -1);
  color[0] = 0;
  int seen = 1;
  f.bipartite = true;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.neighbors(v)) {
      if (color[u] == -1) {
        color[u] = 1 - color[v];
        ++seen;
        q.push(u);
      } else if (color[u] == color[v]) {
        f.bipartite = false;
      }
    }
  }
  f.connected = (seen == n);
  if (!f.connected) {
    // 2-color the remaining components
    for (int s = 0; s < n && f.bipartite; ++s) {
      if (color[s] != -1) continue;
      color[s] = 0;
      q.push(s);
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
          if (color[u] == -1) {
            color[u] = 1 - color[v];
            q.push(u);
          } else if (color[u] == color[v]) {
            f.bipartite = false;
          }
        }
      }
    }
  }
  f.regular = (g.min_degree() == g.max_degree());
  f.r = f.regular ? g.min_degree() : 0;
  return f;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m)) throw std::invalid_argument("malformed header line");
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) throw std::invalid_argument("malformed edge line: " + line);
    edges.push_back({u, v});
  }
  if (n < 0) throw std::invalid_argument("empty edge-list file");
  if (static_cast<int>(edges.size()) != m)
    throw std::invalid_argument("edge count mismatch: header says " +
                                std::to_string(m) + ", found " +
                                std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open edge-list file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace alphaspec
