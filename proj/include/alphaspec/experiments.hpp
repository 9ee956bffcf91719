#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alphaspec/bounds.hpp"
#include "alphaspec/graph.hpp"

namespace alphaspec {

/// One cell of a sweep/reproduction table.
struct TableCell {
  std::string family;
  long param = 0;
  std::string quantity;  // lambda1, eq9, eq10, eq12, eq13, rowsum_lo, ...
  double alpha = 0;
  double value = 0;
  bool failed = false;
};

using SweepTable = std::vector<TableCell>;

/// Inclusive-start, exclusive-stop (plus epsilon) grid; "0:1:0.1" gives the
/// ten points 0.0..0.9.
std::vector<double> make_alpha_grid(double start, double stop, double step);

/// Parses "start:stop:step" or a single value.
std::vector<double> parse_alpha_spec(const std::string& spec);

/// Reproduces the lower-bound comparison tables: 1 = paths
/// (n in {100,500,1000}), 2 = binomial trees (k in {7,9,10}),
/// 3 = pineapples K_p^1 (p in {99,499,999}). Quantities lambda1/eq10/eq12
/// over alpha in {0.0,...,0.9}, values rounded half-even to 5 decimals.
SweepTable reproduce_table(int which);

/// Per grid point: the reference eigenvalue (quantity "lambda1" or
/// "lambda_m", possibly of the line graph) and each bound's signed slack
/// from it (>= 0 means the bound holds). Invalid (bound, graph)
/// combinations produce rows flagged failed.
SweepTable sweep_compare(const Graph& g, const std::string& family, long param,
                         const std::vector<std::string>& bound_ids,
                         const std::vector<double>& alpha_grid,
                         const std::string& reference);

std::string table_csv(const SweepTable& table);

struct SearchTask {
  std::string predicate;  // bound10_ge_bound9 | bound12_vs_bound10 | upper_ordering
  int n_max = 7;          // exhaustive mode bound (<= 10)
  bool exhaustive = true;
  std::uint64_t seed = 0;   // random mode
  long budget = 100000;     // max graphs examined
  std::vector<double> alpha_grid;
};

struct Witness {
  std::string predicate;
  std::string graph_id;
  int n = 0;
  int m = 0;
  double alpha = 0;
  double lhs = 0;
  double rhs = 0;
  std::string edge_list;  // "u-v;u-v;..."
};

struct SearchResult {
  SearchTask task;
  std::vector<Witness> witnesses;
  long graphs_examined = 0;
  bool exhausted = false;  // full corpus covered within budget
};

SearchResult run_search(const SearchTask& task);
std::string search_csv(const SearchResult& result);

struct TimingRecord {
  std::string family;
  int n = 0;
  std::string bound;  // rowsum_upper | jcl_upper
  int reps = 0;
  double mean_seconds = 0;
  double stddev_seconds = 0;
};

struct TimingSpec {
  Family family;
  std::vector<int> sizes;  // family parameter per record
};

/// Wall-clock means per (family, size, bound) over `reps` repetitions after
/// 5 warm-ups; descriptive only.
std::vector<TimingRecord> timing_compare(const std::vector<TimingSpec>& specs,
                                         int reps);
std::string timing_csv(const std::vector<TimingRecord>& records);

/// Worker cap from ALPHASPEC_THREADS (0 or unset = hardware concurrency).
int worker_count();

/// Runs fn(i) for i in [0, count) across workers; each item must be pure.
void parallel_for(long count, const std::function<void(long)>& fn);

/// Round half to even at 5 decimals (the tables' print precision).
double round5(double v);

}  // namespace alphaspec
