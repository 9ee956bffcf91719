#include "alphaspec/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

namespace alphaspec {

namespace {

constexpr int kMaxEnumN = 10;  // 45 vertex pairs fit a 64-bit mask

int pair_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t to_mask(const Graph& g) {
  std::uint64_t mask = 0;
  for (const auto& [u, v] : g.edges())
    mask |= std::uint64_t{1} << pair_index(u, v, g.vertex_count());
  return mask;
}

Graph from_mask(std::uint64_t mask, int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask >> pair_index(i, j, n) & 1) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

// Minimum edge bitmask over all relabelings that sort the degree sequence
// non-increasingly. Restricting to degree-sorting permutations is sound:
// the set of such relabelings is an isomorphism invariant and the minimum
// over it separates isomorphism classes.
std::uint64_t canonical_mask_impl(std::uint64_t mask, int n,
                                  const std::vector<int>& degrees) {
  // Vertices grouped by degree, high degree first; positions are filled
  // class by class.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return degrees[a] != degrees[b] ? degrees[a] > degrees[b] : a < b;
  });
  std::vector<std::pair<int, int>> classes;  // [start, end) in `order`
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && degrees[order[j]] == degrees[order[i]]) ++j;
    classes.push_back({i, j});
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> pos_to_vertex(n);
  // Iterate the cartesian product of within-class permutations.
  std::vector<std::vector<int>> perms;
  for (const auto& [s, e] : classes)
    perms.emplace_back(order.begin() + s, order.begin() + e);

  auto emit = [&]() {
    std::vector<int> vertex_to_pos(n);
    for (int p = 0; p < n; ++p) vertex_to_pos[pos_to_vertex[p]] = p;
    std::uint64_t relabeled = 0;
    std::uint64_t rest = mask;
    while (rest) {
      const int idx = __builtin_ctzll(rest);
      rest &= rest - 1;
      // invert the pair index
      int i = 0, base = 0;
      while (base + (n - 1 - i) <= idx) {
        base += n - 1 - i;
        ++i;
      }
      const int j = i + 1 + (idx - base);
      relabeled |= std::uint64_t{1}
                   << pair_index(vertex_to_pos[i], vertex_to_pos[j], n);
      if (relabeled >= best) return;  // can only grow
    }
    best = std::min(best, relabeled);
  };

  // depth-first over classes, permuting each in lexicographic order
  std::vector<std::vector<int>> work = perms;
  auto rec = [&](auto&& self, size_t ci) -> void {
    if (ci == work.size()) {
      int p = 0;
      for (const auto& cls : work)
        for (int v : cls) pos_to_vertex[p++] = v;
      emit();
      return;
    }
    std::vector<int>& cls = work[ci];
    std::sort(cls.begin(), cls.end());
    do {
      self(self, ci + 1);
    } while (std::next_permutation(cls.begin(), cls.end()));
  };
  rec(rec, 0);
  return best;
}

std::uint64_t canonical_from_mask(std::uint64_t mask, int n) {
  std::vector<int> degrees(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask >> pair_index(i, j, n) & 1) {
        ++degrees[i];
        ++degrees[j];
      }
  return canonical_mask_impl(mask, n, degrees);
}

std::vector<std::uint64_t> compute_canonical_masks(
    int n, const std::vector<std::uint64_t>& parents) {
  if (n == 1) return {0};
  std::vector<std::uint64_t> out;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t parent : parents) {
    // Re-embed the parent's pairs into the n-vertex pair indexing.
    std::uint64_t base = 0;
    for (int i = 0; i < n - 1; ++i)
      for (int j = i + 1; j < n - 1; ++j)
        if (parent >> pair_index(i, j, n - 1) & 1)
          base |= std::uint64_t{1} << pair_index(i, j, n);
    // Attach vertex n-1 to every subset of the existing vertices.
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (n - 1));
         ++subset) {
      std::uint64_t mask = base;
      for (int v = 0; v < n - 1; ++v)
        if (subset >> v & 1)
          mask |= std::uint64_t{1} << pair_index(v, n - 1, n);
      const std::uint64_t canon = canonical_from_mask(mask, n);
      if (seen.insert(canon).second) out.push_back(canon);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> canonical_masks(int n) {
  if (n < 1 || n > kMaxEnumN)
    throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= 10");
  static std::mutex mu;
  static std::vector<std::vector<std::uint64_t>> cache(kMaxEnumN + 1);
  std::lock_guard<std::mutex> lock(mu);
  for (int k = 1; k <= n; ++k)
    if (cache[k].empty()) cache[k] = compute_canonical_masks(k, cache[k - 1]);
  return cache[n];
}

}  // namespace

std::uint64_t canonical_mask(const Graph& g) {
  return canonical_mask_impl(to_mask(g), g.vertex_count(), g.degrees());
}

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  for (std::uint64_t mask : canonical_masks(n)) out.push_back(from_mask(mask, n));
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (structure_flags(g).connected) out.push_back(std::move(g));
  return out;
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < p) edges.push_back({i, j});
    Graph g(n, std::move(edges));
    if (structure_flags(g).connected) return g;
  }
  throw std::runtime_error("failed to sample a connected graph");
}

}  // namespace alphaspec
