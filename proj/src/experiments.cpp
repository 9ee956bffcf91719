#include "alphaspec/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "alphaspec/enumerate.hpp"
#include "alphaspec/linalg.hpp"

namespace alphaspec {

int worker_count() {
  const char* env = std::getenv("ALPHASPEC_THREADS");
  long v = env ? std::strtol(env, nullptr, 10) : 0;
  if (v <= 0) v = static_cast<long>(std::thread::hardware_concurrency());
  if (v <= 0) v = 1;
  return static_cast<int>(v);
}

void parallel_for(long count, const std::function<void(long)>& fn) {
  const int workers = std::min<long>(worker_count(), count);
  if (workers <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

double round5(double v) { return std::nearbyint(v * 1e5) / 1e5; }

std::vector<double> make_alpha_grid(double start, double stop, double step) {
  if (step <= 0) throw std::invalid_argument("grid step must be positive");
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double v = start + k * step;
    if (v >= stop - step * 1e-9) break;
    grid.push_back(v);
  }
  if (grid.empty()) throw std::invalid_argument("empty alpha grid");
  for (double a : grid)
    if (!(a >= 0.0 && a <= 1.0))
      throw std::invalid_argument("alpha grid leaves [0,1]");
  return grid;
}

std::vector<double> parse_alpha_spec(const std::string& spec) {
  const auto c1 = spec.find(':');
  if (c1 == std::string::npos) {
    const double a = std::stod(spec);
    if (!(a >= 0.0 && a <= 1.0))
      throw std::invalid_argument("alpha must lie in [0,1]");
    return {a};
  }
  const auto c2 = spec.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw std::invalid_argument("alpha grid must be start:stop:step");
  return make_alpha_grid(std::stod(spec.substr(0, c1)),
                         std::stod(spec.substr(c1 + 1, c2 - c1 - 1)),
                         std::stod(spec.substr(c2 + 1)));
}

namespace {

std::string format_value(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  os << buf;
  return os.str();
}

void sort_table(SweepTable& t) {
  std::sort(t.begin(), t.end(), [](const TableCell& a, const TableCell& b) {
    return std::tie(a.family, a.param, a.quantity, a.alpha) <
           std::tie(b.family, b.param, b.quantity, b.alpha);
  });
}

/// Bound value by id, or nullopt when the id is unknown / inapplicable.
std::optional<double> evaluate_bound(const Graph& g, const std::string& id,
                                     double alpha) {
  try {
    if (id == "eq9") return lower_nikiforov(g.max_degree(), alpha);
    if (id == "eq10") return lower_degree_based(g, alpha);
    if (id == "eq12") return lower_zagreb_randic(g, alpha);
    if (id == "eq13") return upper_degree_based(g, alpha);
    if (id == "rowsum_lo") return rowsum_bounds(g, alpha).first;
    if (id == "rowsum_hi") return rowsum_bounds(g, alpha).second;
    if (id == "line_floor") return line_smallest_lower(g, alpha);
    if (id == "line_lo") return line_largest_sandwich(g, alpha).first;
    if (id == "line_hi") return line_largest_sandwich(g, alpha).second;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

bool is_upper_bound(const std::string& id) {
  return id == "eq13" || id == "rowsum_hi" || id == "line_hi";
}

bool targets_line_graph(const std::string& id) {
  return id == "line_floor" || id == "line_lo" || id == "line_hi";
}

std::string edge_list_string(const Graph& g) {
  std::string s;
  for (const auto& [u, v] : g.edges()) {
    if (!s.empty()) s += ';';
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

}  // namespace

SweepTable reproduce_table(int which) {
  std::string family;
  std::vector<long> params;
  switch (which) {
    case 1: family = "path"; params = {100, 500, 1000}; break;
    case 2: family = "binomial_tree"; params = {7, 9, 10}; break;
    case 3: family = "pineapple"; params = {99, 499, 999}; break;
    default: throw std::invalid_argument("table selector must be 1, 2 or 3");
  }
  const std::vector<double> grid = make_alpha_grid(0.0, 1.0, 0.1);
  struct Item {
    long param;
    double alpha;
  };
  std::vector<Item> items;
  for (long p : params)
    for (double a : grid) items.push_back({p, a});

  SweepTable table(items.size() * 3);
  parallel_for(static_cast<long>(items.size()), [&](long i) {
    const auto [param, alpha] = items[i];
    Graph g = which == 1   ? path_graph(static_cast<int>(param))
              : which == 2 ? binomial_tree(static_cast<int>(param))
                           : pineapple_graph(static_cast<int>(param), 1);
    TableCell l1{family, param, "lambda1", alpha, 0, false};
    try {
      l1.value = round5(lambda1_a_alpha(g, alpha));
    } catch (const ConvergenceError&) {
      l1.failed = true;
    }
    table[i * 3] = l1;
    table[i * 3 + 1] = {family, param, "eq10", alpha,
                        round5(lower_degree_based(g, alpha)), false};
    table[i * 3 + 2] = {family, param, "eq12", alpha,
                        round5(lower_zagreb_randic(g, alpha)), false};
  });
  sort_table(table);
  return table;
}

SweepTable sweep_compare(const Graph& g, const std::string& family, long param,
                         const std::vector<std::string>& bound_ids,
                         const std::vector<double>& alpha_grid,
                         const std::string& reference) {
  const bool line = reference == "line_lambda1" || reference == "line_lambda_m";
  const bool want_min = reference == "lambda_m" || reference == "line_lambda_m";
  bool need_line = line;
  for (const auto& id : bound_ids) need_line = need_line || targets_line_graph(id);
  SweepTable table;
  for (double alpha : alpha_grid) {
    const Spectrum spec = eigenvalues(a_alpha(g, alpha));
    const double ref_graph = want_min ? spec.lambda_min() : spec.lambda1();
    double line_top = 0, line_bottom = 0;
    if (need_line) {
      const Spectrum lspec = eigenvalues(a_alpha(line_graph(g).graph, alpha));
      line_top = lspec.lambda1();
      line_bottom = lspec.lambda_min();
    }
    const double ref = line ? (want_min ? line_bottom : line_top) : ref_graph;
    table.push_back({family, param, reference, alpha, ref, false});
    for (const auto& id : bound_ids) {
      const double target = targets_line_graph(id)
                                ? (id == "line_floor" ? line_bottom : line_top)
                                : ref_graph;
      TableCell cell{family, param, id, alpha, 0, false};
      const auto v = evaluate_bound(g, id, alpha);
      if (!v) {
        cell.failed = true;
      } else {
        // signed slack; >= 0 means the bound holds
        cell.value = is_upper_bound(id) ? *v - target : target - *v;
      }
      table.push_back(cell);
    }
  }
  sort_table(table);
  return table;
}

std::string table_csv(const SweepTable& table) {
  std::string out = "family,param,quantity,alpha,value\n";
  for (const auto& c : table) {
    out += c.family + ',' + std::to_string(c.param) + ',' + c.quantity + ',' +
           format_value(c.alpha) + ',' +
           (c.failed ? std::string("error") : format_value(c.value)) + '\n';
  }
  return out;
}

namespace {

void check_predicate(const SearchTask& task, const Graph& g,
                     const std::string& graph_id,
                     std::vector<Witness>& witnesses) {
  for (double alpha : task.alpha_grid) {
    if (task.predicate == "bound10_ge_bound9") {
      const double b10 = lower_degree_based(g, alpha);
      const double b9 = lower_nikiforov(g.max_degree(), alpha);
      if (b10 < b9 - 1e-9)
        witnesses.push_back({task.predicate, graph_id, g.vertex_count(),
                             g.edge_count(), alpha, b10, b9,
                             edge_list_string(g)});
    } else if (task.predicate == "bound12_vs_bound10") {
      if (g.vertex_count() < 3) continue;
      const double b10 = lower_degree_based(g, alpha);
      const double b12 = lower_zagreb_randic(g, alpha);
      if (b10 > b12 + 1e-9)
        witnesses.push_back({"bound10_gt_bound12", graph_id, g.vertex_count(),
                             g.edge_count(), alpha, b10, b12,
                             edge_list_string(g)});
      else if (b12 > b10 + 1e-9)
        witnesses.push_back({"bound12_gt_bound10", graph_id, g.vertex_count(),
                             g.edge_count(), alpha, b12, b10,
                             edge_list_string(g)});
    } else if (task.predicate == "upper_ordering") {
      const auto w = upper_bounds_ordering(g, alpha);
      if (!w.holds)
        witnesses.push_back({task.predicate, graph_id, g.vertex_count(),
                             g.edge_count(), alpha, w.lhs, w.rhs,
                             edge_list_string(g)});
    } else {
      throw std::invalid_argument("unknown search predicate: " +
                                  task.predicate);
    }
  }
}

}  // namespace

SearchResult run_search(const SearchTask& task) {
  if (task.alpha_grid.empty())
    throw std::invalid_argument("search task needs an alpha grid");
  SearchResult result;
  result.task = task;
  if (task.exhaustive) {
    if (task.n_max > 10)
      throw std::invalid_argument("exhaustive search capped at n_max = 10");
    long examined = 0;
    bool truncated = false;
    for (int n = 2; n <= task.n_max && !truncated; ++n) {
      long index = 0;
      for (const auto& g : connected_graphs(n)) {
        if (examined >= task.budget) {
          truncated = true;
          break;
        }
        check_predicate(task, g,
                        "n" + std::to_string(n) + "_g" + std::to_string(index),
                        result.witnesses);
        ++examined;
        ++index;
      }
    }
    result.graphs_examined = examined;
    result.exhausted = !truncated;
  } else {
    std::mt19937_64 rng(task.seed);
    const double ps[] = {0.2, 0.5, 0.8};
    std::uniform_int_distribution<int> pick_n(3, 12);
    for (long i = 0; i < task.budget; ++i) {
      const Graph g =
          random_connected_graph(pick_n(rng), ps[i % 3], rng);
      check_predicate(task, g,
                      "rand_s" + std::to_string(task.seed) + "_i" +
                          std::to_string(i),
                      result.witnesses);
    }
    result.graphs_examined = task.budget;
    result.exhausted = false;  // a random stream never certifies exhaustion
  }
  return result;
}

std::string search_csv(const SearchResult& result) {
  std::string out = "predicate,graph_id,n,m,alpha,lhs,rhs,edge_list\n";
  for (const auto& w : result.witnesses) {
    out += w.predicate + ',' + w.graph_id + ',' + std::to_string(w.n) + ',' +
           std::to_string(w.m) + ',' + format_value(w.alpha) + ',' +
           format_value(w.lhs) + ',' + format_value(w.rhs) + ',' +
           w.edge_list + '\n';
  }
  return out;
}

std::vector<TimingRecord> timing_compare(const std::vector<TimingSpec>& specs,
                                         int reps) {
  if (reps < 1) throw std::invalid_argument("repetitions must be >= 1");
  using clock = std::chrono::steady_clock;
  std::vector<TimingRecord> records;
  for (const auto& spec : specs) {
    for (int size : spec.sizes) {
      std::vector<int> params{size};
      if (spec.family == Family::pineapple ||
          spec.family == Family::complete_bipartite)
        params.push_back(1);
      const Graph g = make_family(spec.family, params);
      for (const std::string& bound : {"rowsum_upper", "jcl_upper"}) {
        auto run = [&]() {
          volatile double sink =
              bound == "rowsum_upper" ? rowsum_bounds(g, 0.5).second
                                      : upper_degree_based(g, 0.5);
          (void)sink;
        };
        for (int w = 0; w < 5; ++w) run();  // warm-up, excluded
        std::vector<double> times;
        times.reserve(reps);
        for (int r = 0; r < reps; ++r) {
          const auto t0 = clock::now();
          run();
          const auto t1 = clock::now();
          times.push_back(std::chrono::duration<double>(t1 - t0).count());
        }
        double mean = 0;
        for (double t : times) mean += t;
        mean /= reps;
        double var = 0;
        for (double t : times) var += (t - mean) * (t - mean);
        var = reps > 1 ? var / (reps - 1) : 0.0;
        records.push_back({family_name(spec.family), g.vertex_count(), bound,
                           reps, mean, std::sqrt(var)});
      }
    }
  }
  return records;
}

std::string timing_csv(const std::vector<TimingRecord>& records) {
  std::string out = "family,n,bound,reps,mean_seconds,stddev_seconds\n";
  for (const auto& r : records) {
    out += r.family + ',' + std::to_string(r.n) + ',' + r.bound + ',' +
           std::to_string(r.reps) + ',' + format_value(r.mean_seconds) + ',' +
           format_value(r.stddev_seconds) + '\n';
  }
  return out;
}

}  // namespace alphaspec
