// alphaspec: spectra, bounds and experiment sweeps for the A_alpha matrix
// of graphs and their line graphs.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "alphaspec/bounds.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/experiments.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/indices.hpp"
#include "alphaspec/linalg.hpp"

namespace {

using namespace alphaspec;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct GraphSource {
  std::string family;
  std::vector<int> params;
  std::string edges_file;

  bool specified() const { return !family.empty() || !edges_file.empty(); }

  Graph build() const {
    if (!family.empty() && !edges_file.empty())
      throw std::invalid_argument(
          "give either --family or --edges, not both");
    if (!edges_file.empty()) return read_edge_list_file(edges_file);
    if (family.empty())
      throw std::invalid_argument("a graph source is required "
                                  "(--family or --edges)");
    return make_family(family_from_name(family), params);
  }

  std::string id() const {
    if (!edges_file.empty()) return "file:" + edges_file;
    std::string s = family;
    for (int p : params) s += "_" + std::to_string(p);
    return s;
  }
};

void add_graph_flags(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--family", src.family,
                  "family: path|cycle|complete|complete_bipartite|star|wheel|"
                  "pineapple|binomial_tree|helm|windmill");
  cmd->add_option("--n,--p1", src.params,
                  "family parameters (e.g. --n 10, or --n 5 3 for "
                  "two-parameter families)")
      ->expected(-1);
  cmd->add_option("--edges", src.edges_file, "edge-list file");
}

std::string format_eig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string spectrum_text(const Spectrum& s) {
  std::string out;
  for (const auto& [value, mult] : s.groups) {
    if (!out.empty()) out += ", ";
    out += format_eig(value);
    if (mult > 1) out += " (x" + std::to_string(mult) + ")";
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

int run_verify(const Graph& g, double alpha) {
  struct Check {
    std::string name;
    bool pass;
  };
  std::vector<Check> checks;
  auto add = [&](const std::string& name, bool pass) {
    checks.push_back({name, pass});
  };

  long degsum = 0;
  for (int d : g.degrees()) degsum += d;
  add("handshake", degsum == 2L * g.edge_count());

  const Spectrum spec = eigenvalues(a_alpha(g, alpha));
  double sum = 0;
  for (double v : spec.eigenvalues) sum += v;
  add("trace_law", std::abs(sum - alpha * 2.0 * g.edge_count()) <=
                       1e-7 * std::max(1.0, 2.0 * g.edge_count()));

  const auto flags = structure_flags(g);
  if (flags.regular) {
    const Spectrum adj = eigenvalues(adjacency(g));
    bool ok = true;
    for (size_t i = 0; i < spec.eigenvalues.size(); ++i)
      ok = ok && std::abs(spec.eigenvalues[i] -
                          (alpha * flags.r +
                           (1 - alpha) * adj.eigenvalues[i])) <= 1e-7;
    add("regular_correspondence", ok);
  }

  if (g.edge_count() >= 1) {
    long line_edges = 0;
    for (int d : g.degrees()) line_edges += static_cast<long>(d) * d;
    line_edges = line_edges / 2 - g.edge_count();
    const auto lg = line_graph(g);
    add("line_size_law", lg.graph.vertex_count() == g.edge_count() &&
                             lg.graph.edge_count() == line_edges);
    bool deg_ok = true;
    for (int i = 0; i < lg.graph.vertex_count(); ++i) {
      const auto& [u, v] = lg.vertex_edges[i];
      deg_ok = deg_ok && lg.graph.degree(i) == g.degree(u) + g.degree(v) - 2;
    }
    add("line_degree_law", deg_ok);

    const auto inc = incidence_identity_residual(g, alpha);
    add("incidence_btb", inc.r1 == 0.0);
    add("incidence_bbt", inc.r2 == 0.0);
    add("incidence_u_matrix", inc.u_residual <= 1e-12);

    const Spectrum lspec = eigenvalues(a_alpha(lg.graph, alpha));
    const Spectrum ladj = eigenvalues(adjacency(lg.graph));
    add("line_adjacency_floor", ladj.lambda_min() >= -2.0 - 1e-8);
    if (alpha < 1.0)
      add("line_alpha_floor",
          lspec.lambda_min() >= line_smallest_lower(g, alpha) - 1e-7);
    const auto [lo, hi] = line_largest_sandwich(g, alpha);
    add("line_largest_sandwich",
        lspec.lambda1() >= lo - 1e-7 && lspec.lambda1() <= hi + 1e-7);
    add("line_eigen_cap_1",
        lspec.lambda1() <=
            line_eigen_cap(g.vertex_count(), alpha, 1) + 1e-7);

    add("bound_sandwich_lower",
        lower_nikiforov(g.max_degree(), alpha) <= spec.lambda1() + 1e-7 &&
            lower_degree_based(g, alpha) <= spec.lambda1() + 1e-7 &&
            rowsum_bounds(g, alpha).first <= spec.lambda1() + 1e-7);
    add("bound_sandwich_upper",
        upper_degree_based(g, alpha) >= spec.lambda1() - 1e-7 &&
            rowsum_bounds(g, alpha).second >= spec.lambda1() - 1e-7);
    if (g.vertex_count() >= 3)
      add("bound_sandwich_zagreb",
          lower_zagreb_randic(g, alpha) <= spec.lambda1() + 1e-7);
  }

  bool is_complete =
      g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2;
  if (!is_complete && g.vertex_count() >= 2)
    add("lambda2_nonnegative", spec.lambda(2) >= -1e-8);

  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << '\n';
    all = all && c.pass;
  }
  return all ? kExitOk : kExitNumerical;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"A_alpha spectra, eigenvalue bounds and experiment harness"};
  app.require_subcommand(1);

  GraphSource src;
  std::string alpha_spec = "0";
  std::string output;
  std::string format = "csv";
  std::uint64_t seed = 0;

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "eigenvalues of A_alpha(G)");
  add_graph_flags(spectrum_cmd, src);
  spectrum_cmd->add_option("--alpha", alpha_spec, "alpha value");
  spectrum_cmd->add_option("--output", output, "output path (default stdout)");

  auto* linegraph_cmd =
      app.add_subcommand("linegraph", "edge list of the line graph l(G)");
  add_graph_flags(linegraph_cmd, src);
  linegraph_cmd->add_option("--output", output, "output path");

  auto* bounds_cmd = app.add_subcommand(
      "bounds", "bound report rows for G and l(G)");
  add_graph_flags(bounds_cmd, src);
  bounds_cmd->add_option("--alpha", alpha_spec, "alpha value or grid a:b:s");
  bounds_cmd->add_option("--output", output, "output path");
  bounds_cmd->add_option("--format", format, "csv|text");

  int which = 1;
  auto* table_cmd =
      app.add_subcommand("table", "reproduce a lower-bound comparison table");
  table_cmd->add_option("--which", which, "table number 1|2|3")->required();
  table_cmd->add_option("--output", output, "output path");

  std::vector<std::string> bound_ids{"eq9", "eq10"};
  std::string reference = "lambda1";
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "bound-vs-eigenvalue differences over an alpha grid");
  add_graph_flags(sweep_cmd, src);
  sweep_cmd->add_option("--alpha", alpha_spec, "alpha grid start:stop:step");
  sweep_cmd->add_option("--bounds", bound_ids, "bound ids")->expected(-1);
  sweep_cmd->add_option("--reference", reference,
                        "lambda1|lambda_m|line_lambda1|line_lambda_m");
  sweep_cmd->add_option("--output", output, "output path");

  std::string predicate = "bound10_ge_bound9";
  int n_max = 7;
  long budget = 100000;
  bool random_source = false;
  auto* search_cmd =
      app.add_subcommand("search", "counterexample/witness search");
  search_cmd->add_option("--predicate", predicate,
                         "bound10_ge_bound9|bound12_vs_bound10|upper_ordering");
  search_cmd->add_option("--n-max", n_max, "exhaustive vertex cap (<= 10)");
  search_cmd->add_option("--budget", budget, "max graphs examined");
  search_cmd->add_flag("--random", random_source,
                       "random G(n,p) stream instead of exhaustive");
  search_cmd->add_option("--seed", seed, "random stream seed");
  search_cmd->add_option("--alpha", alpha_spec, "alpha value or grid");
  search_cmd->add_option("--output", output, "output path");

  int reps = 100;
  std::vector<std::string> timing_families{"star", "complete", "helm"};
  std::vector<int> timing_sizes{100, 200, 400, 800};
  auto* timing_cmd =
      app.add_subcommand("timing", "upper-bound timing comparison");
  timing_cmd->add_option("--families", timing_families, "family names")
      ->expected(-1);
  timing_cmd->add_option("--sizes", timing_sizes, "family size parameters")
      ->expected(-1);
  timing_cmd->add_option("--reps", reps, "repetitions per record");
  timing_cmd->add_option("--output", output, "output path");

  auto* verify_cmd = app.add_subcommand(
      "verify", "run named identity/invariant checks on a graph");
  add_graph_flags(verify_cmd, src);
  verify_cmd->add_option("--alpha", alpha_spec, "alpha value");

  CLI11_PARSE(app, argc, argv);

  if (spectrum_cmd->parsed()) {
    const Graph g = src.build();
    const double alpha = parse_alpha_spec(alpha_spec).at(0);
    emit(spectrum_text(eigenvalues(a_alpha(g, alpha))) + "\n", output);
  } else if (linegraph_cmd->parsed()) {
    const Graph g = src.build();
    std::ostringstream os;
    write_edge_list(os, line_graph(g).graph);
    emit(os.str(), output);
  } else if (bounds_cmd->parsed()) {
    std::string out;
    const Graph g = src.build();
    if (format == "csv")
      out = "graph_id,alpha,bound,side,target,value,eigenvalue,gap\n";
    for (double alpha : parse_alpha_spec(alpha_spec)) {
      const BoundReport rep = bound_report(g, src.id(), alpha);
      for (const auto& e : rep.entries) {
        const double eig = e.target == "line_graph"
                               ? (e.side == BoundSide::lower &&
                                          e.id == "line_floor"
                                      ? rep.line_lambda_min
                                      : rep.line_lambda1)
                               : rep.lambda1;
        char buf[256];
        if (format == "csv")
          std::snprintf(buf, sizeof(buf), "%s,%g,%s,%s,%s,%.12g,%.12g,%.3g\n",
                        rep.graph_id.c_str(), alpha, e.id.c_str(),
                        e.side == BoundSide::lower ? "lower" : "upper",
                        e.target.c_str(), e.value, eig, e.gap);
        else
          std::snprintf(buf, sizeof(buf),
                        "alpha=%-5g %-10s %-5s %-10s value=%-14.8g "
                        "eigenvalue=%-14.8g gap=%.3g\n",
                        alpha, e.id.c_str(),
                        e.side == BoundSide::lower ? "lower" : "upper",
                        e.target.c_str(), e.value, eig, e.gap);
        out += buf;
      }
    }
    emit(out, output);
  } else if (table_cmd->parsed()) {
    emit(table_csv(reproduce_table(which)), output);
  } else if (sweep_cmd->parsed()) {
    const Graph g = src.build();
    // accept both "--bounds eq9 eq10" and "--bounds eq9,eq10"
    std::vector<std::string> ids;
    for (const auto& tok : bound_ids) {
      std::istringstream is(tok);
      std::string id;
      while (std::getline(is, id, ','))
        if (!id.empty()) ids.push_back(id);
    }
    const std::string fam = src.family.empty() ? src.id() : src.family;
    const long param = src.params.empty() ? 0 : src.params.front();
    emit(table_csv(sweep_compare(g, fam, param, ids,
                                 parse_alpha_spec(alpha_spec), reference)),
         output);
  } else if (search_cmd->parsed()) {
    SearchTask task;
    task.predicate = predicate;
    task.n_max = n_max;
    task.exhaustive = !random_source;
    task.seed = seed;
    task.budget = budget;
    task.alpha_grid = parse_alpha_spec(alpha_spec);
    const SearchResult result = run_search(task);
    emit(search_csv(result), output);
    std::cerr << "examined " << result.graphs_examined << " graphs; "
              << result.witnesses.size() << " witnesses; "
              << (result.exhausted ? "corpus exhausted" : "budget truncated")
              << '\n';
  } else if (timing_cmd->parsed()) {
    std::vector<TimingSpec> specs;
    for (const auto& f : timing_families)
      specs.push_back({family_from_name(f), timing_sizes});
    emit(timing_csv(timing_compare(specs, reps)), output);
  } else if (verify_cmd->parsed()) {
    return run_verify(src.build(), parse_alpha_spec(alpha_spec).at(0));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const alphaspec::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what()
              << " (residual " << e.residual << ")\n";
    return kExitNumerical;
  } catch (const alphaspec::BoundDomainError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
