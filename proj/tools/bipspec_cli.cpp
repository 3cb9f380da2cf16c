// Command-line front end: graph construction, spectral radius, tridiagonal
// eigenvalue checks, bound reports, extremal search, the limit table, and
// structural certificates.
//
// Exit codes: 0 success, 1 numeric check failure, 2 usage error.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "bipspec/bounds.hpp"
#include "bipspec/enumerate.hpp"
#include "bipspec/families.hpp"
#include "bipspec/graph.hpp"
#include "bipspec/graph6.hpp"
#include "bipspec/spectral.hpp"
#include "bipspec/tridiag.hpp"

namespace {

using bipspec::Graph;

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct GraphInput {
  std::string graph6;
  std::string edges_path;
  std::string family;
  int n = 0;
  int delta = 0;
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("--graph6", in.graph6, "input graph as a graph6 line");
  cmd->add_option("--edges", in.edges_path, "input graph as an 'n m' edge-list file");
  cmd->add_option("--family", in.family, "graph family: path|K|B|H");
  cmd->add_option("--n", in.n, "order (family input)");
  cmd->add_option("--delta", in.delta, "family degree parameter / second part size");
}

Graph family_graph(const std::string& family, int n, int delta) {
  if (family == "path") return bipspec::path_graph(n);
  if (family == "K") return bipspec::complete_bipartite(n, delta);
  if (family == "B") return bipspec::b_graph(n);
  if (family == "H") return bipspec::h_graph(n, delta);
  throw std::invalid_argument("unknown family '" + family + "' (want path|K|B|H)");
}

Graph load_graph(const GraphInput& in) {
  int sources = !in.graph6.empty() + !in.edges_path.empty() + !in.family.empty();
  if (sources != 1) {
    throw std::invalid_argument("provide exactly one of --graph6, --edges, --family");
  }
  if (!in.graph6.empty()) return bipspec::graph6_decode(in.graph6);
  if (!in.edges_path.empty()) {
    std::ifstream f(in.edges_path);
    if (!f) throw std::invalid_argument("cannot open edge-list file: " + in.edges_path);
    return bipspec::edge_list_decode(f);
  }
  return family_graph(in.family, in.n, in.delta);
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

int run_construct(const std::string& family, int n, int delta, const std::string& format,
                  const std::string& out_path) {
  Graph g = family_graph(family, n, delta);
  if (format == "graph6") {
    write_output(out_path, bipspec::graph6_encode(g));
  } else if (format == "edges") {
    write_output(out_path, bipspec::edge_list_encode(g));
  } else {
    throw std::invalid_argument("construct: format must be graph6 or edges");
  }
  return 0;
}

int run_spectral(const GraphInput& in, double tol, const std::string& format,
                 const std::string& out_path) {
  Graph g = load_graph(in);
  bipspec::SpectralResult r = bipspec::spectral_radius(g, tol);
  std::ostringstream out;
  if (format == "json") {
    nlohmann::json j;
    j["rho"] = r.rho;
    j["w_hat"] = r.w_hat;
    j["w_check"] = r.w_check;
    j["iterations"] = r.iterations;
    j["residual"] = r.residual;
    j["x"] = r.x;
    out << j.dump(2);
  } else {
    out << "rho " << fmt10(r.rho) << "\n"
        << "w_hat " << r.w_hat << "\n"
        << "w_check " << r.w_check << "\n"
        << "iterations " << r.iterations << "\n"
        << "residual " << fmt10(r.residual) << "\n";
  }
  write_output(out_path, out.str());
  return 0;
}

int run_tridiag(int n, std::optional<double> b, std::optional<double> d, double tol,
                const std::string& out_path) {
  bipspec::TridiagSpec spec;
  bool is_m = !b && !d;
  if (is_m) {
    spec = bipspec::m_matrix(n);
  } else {
    if (!b || !d) throw std::invalid_argument("tridiag: provide both --b and --d or neither");
    spec.n = n;
    spec.b = *b;
    spec.d = *d;
    spec.alpha = *d;
    spec.beta = 0.0;
    spec.sub.assign(static_cast<size_t>(n - 1), *d);
    spec.super.assign(static_cast<size_t>(n - 1), *d);
  }
  std::vector<double> closed = bipspec::willms_eigenvalues(spec);
  std::vector<double> numeric = bipspec::tridiag_eigenvalues_numeric(spec, tol);
  double worst = 0.0;
  for (size_t i = 0; i < closed.size(); ++i) {
    worst = std::max(worst, std::abs(closed[i] - numeric[i]));
  }
  std::ostringstream out;
  out << "n " << n << "\n";
  for (size_t i = 0; i < closed.size(); ++i) {
    out << "lambda_" << i + 1 << " closed " << fmt10(closed[i]) << " numeric "
        << fmt10(numeric[i]) << "\n";
  }
  out << "max_abs_diff " << fmt10(worst) << "\n";
  if (is_m) {
    out << "least_closed " << fmt10(bipspec::m_least_eigenvalue_closed(n)) << "\n";
  }
  bool ok = worst <= 100.0 * tol;
  out << (ok ? "OK" : "MISMATCH") << "\n";
  write_output(out_path, out.str());
  return ok ? 0 : 1;
}

int run_bounds(const GraphInput& in, double tol, const std::string& format,
               const std::string& out_path) {
  Graph g = load_graph(in);
  bipspec::BoundReport r = bipspec::bound_report(g, tol);
  std::ostringstream out;
  if (format == "csv") {
    out << bipspec::bound_report_csv_header() << "\n" << bipspec::bound_report_csv_row(r) << "\n";
  } else if (format == "json") {
    out << bipspec::bound_report_json(r);
  } else {
    out << "n " << r.n << " delta " << r.delta << " m " << r.m << " diam " << r.diam << "\n"
        << "rho " << fmt10(r.rho) << "\n"
        << "gap " << fmt10(r.gap) << "\n"
        << "stevanovic " << fmt10(r.stevanovic) << (r.stevanovic_ok ? " ok" : " VIOLATED")
        << "\n"
        << "cioaba " << fmt10(r.cioaba) << (r.cioaba_ok ? " ok" : " VIOLATED") << "\n";
    if (r.new_bound) {
      out << "new_bound " << fmt10(*r.new_bound) << (r.new_bound_ok ? " ok" : " VIOLATED")
          << "\n";
    }
    out << "sqrt_m " << fmt10(r.sqrt_m) << (r.sqrt_m_ok ? " ok" : " VIOLATED") << "\n";
    if (r.lemma5_lower) {
      out << "lemma5 [" << fmt10(*r.lemma5_lower) << ", " << fmt10(*r.lemma5_upper) << "]"
          << (r.lemma5_ok ? " ok" : " VIOLATED") << "\n";
    }
    out << (r.all_ok ? "OK" : "CHECK FAILED") << "\n";
  }
  write_output(out_path, out.str());
  return r.all_ok ? 0 : 1;
}

int run_search(int n, int delta, const std::string& objective, std::optional<int> regular,
               const std::string& out_path) {
  bipspec::SearchSpec spec;
  spec.n = n;
  spec.delta_max = delta;
  if (objective == "max-rho") {
    spec.objective = bipspec::Objective::kMaxSpectralRadius;
  } else if (objective == "min-fiedler") {
    spec.objective = bipspec::Objective::kMinAlgebraicConnectivity;
  } else {
    throw std::invalid_argument("search: objective must be max-rho or min-fiedler");
  }
  if (regular) {
    spec.require_irregular = false;
    spec.regular_degree = *regular;
  }
  bipspec::ExtremalResult r = bipspec::extremal_search(spec);
  std::ostringstream out;
  out << "winner " << bipspec::graph6_encode(r.winner) << "\n"
      << "objective " << fmt10(r.objective_value) << "\n"
      << "runner_up " << (std::isnan(r.runner_up_value) ? "none" : fmt10(r.runner_up_value))
      << "\n"
      << "graphs_considered " << r.graphs_considered << "\n"
      << "ties " << r.tie_set.size() << "\n";
  for (const Graph& g : r.tie_set) out << "tie " << bipspec::graph6_encode(g) << "\n";
  bool certs_ok = true;
  for (size_t i = 0; i < r.certificates.size(); ++i) {
    out << "certificate " << i << " " << bipspec::certificate_json(r.certificates[i]) << "\n";
    certs_ok = certs_ok && r.certificates[i].all_ok;
  }
  write_output(out_path, out.str());
  return (r.tie_set.empty() && certs_ok) ? 0 : 1;
}

int run_limit_table(const std::vector<int>& ns, double tol, const std::string& out_path) {
  std::ostringstream out;
  out << "n rho n2_gap n2_lower n2_upper\n";
  bool ok = true;
  for (int n : ns) {
    if (n < 6) throw std::invalid_argument("limit-table: every n must be at least 6");
    double rho = bipspec::spectral_radius(bipspec::b_graph(n), tol).rho;
    double n2 = static_cast<double>(n) * n;
    double scaled = n2 * (3.0 - rho);
    out << n << " " << fmt10(rho) << " " << fmt10(scaled);
    if (n % 2 == 0) {
      bipspec::Lemma5Bounds l5 = bipspec::lemma5_bounds(n);
      out << " " << fmt10(n2 * l5.lower) << " " << fmt10(n2 * l5.upper);
      double slack = 100.0 * tol * n2;
      if (scaled < n2 * l5.lower - slack || scaled > n2 * l5.upper + slack) ok = false;
    } else {
      out << " - -";
    }
    out << "\n";
  }
  out << "pi^2 " << fmt10(std::numbers::pi * std::numbers::pi) << "\n";
  out << (ok ? "OK" : "BRACKET VIOLATED") << "\n";
  write_output(out_path, out.str());
  return ok ? 0 : 1;
}

int run_verify(const GraphInput& in, std::optional<int> delta, const std::string& out_path) {
  Graph g = load_graph(in);
  int d = delta ? *delta : g.max_degree();
  bipspec::StructureCertificate c = bipspec::verify_extremal_structure(g, d);
  write_output(out_path, bipspec::certificate_json(c));
  return c.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extremal bipartite graph families, spectral radii and bounds"};
  app.require_subcommand(1);
  double tol = 1e-12;
  int workers = 0;
  std::string out_path;
  app.add_option("--tol", tol, "numeric tolerance (default 1e-12)");
  app.add_option("--workers", workers, "worker threads (0 = available parallelism)");
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  auto* construct = app.add_subcommand("construct", "emit a family graph");
  std::string family;
  int cn = 0;
  int cdelta = 0;
  std::string cformat = "graph6";
  construct->add_option("family", family, "path|K|B|H")->required();
  construct->add_option("n", cn, "order (first part size for K)")->required();
  construct->add_option("delta", cdelta, "degree parameter (second part size for K)");
  construct->add_option("--format", cformat, "graph6|edges");

  auto* spectral = app.add_subcommand("spectral", "spectral radius and Perron data");
  GraphInput sin_;
  std::string sformat = "text";
  add_graph_input(spectral, sin_);
  spectral->add_option("--format", sformat, "text|json");

  auto* tridiag = app.add_subcommand("tridiag", "closed-form vs numeric eigenvalues");
  int tn = 1;
  std::optional<double> tb;
  std::optional<double> td;
  tridiag->add_option("--n", tn, "order")->required();
  tridiag->add_option("--b", tb, "diagonal constant (default: M_n)");
  tridiag->add_option("--d", td, "off-diagonal parameter (default: M_n)");

  auto* bounds = app.add_subcommand("bounds", "bound report for a graph");
  GraphInput bin_;
  std::string bformat = "text";
  add_graph_input(bounds, bin_);
  bounds->add_option("--format", bformat, "text|csv|json");

  auto* search = app.add_subcommand("search", "exhaustive extremal search");
  int qn = 0;
  int qdelta = 0;
  std::string objective = "max-rho";
  std::optional<int> regular;
  search->add_option("--n", qn, "order")->required();
  search->add_option("--delta", qdelta, "maximum degree")->required();
  search->add_option("--objective", objective, "max-rho|min-fiedler");
  search->add_option("--regular", regular, "restrict to k-regular graphs");

  auto* limit = app.add_subcommand("limit-table", "n^2 (3 - rho(B_n)) against the bracket");
  std::vector<int> ns;
  limit->add_option("--n", ns, "orders (repeatable)")->required();

  auto* verify = app.add_subcommand("verify", "structural certificate for a graph");
  GraphInput vin_;
  std::optional<int> vdelta;
  add_graph_input(verify, vin_);
  verify->add_option("--delta-check", vdelta, "maximum degree to verify against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!(tol > 0.0)) throw std::invalid_argument("--tol must be positive");
    if (workers < 0) throw std::invalid_argument("--workers must be nonnegative");
    if (workers > 0) omp_set_num_threads(workers);
    if (construct->parsed()) return run_construct(family, cn, cdelta, cformat, out_path);
    if (spectral->parsed()) return run_spectral(sin_, tol, sformat, out_path);
    if (tridiag->parsed()) return run_tridiag(tn, tb, td, tol, out_path);
    if (bounds->parsed()) return run_bounds(bin_, tol, bformat, out_path);
    if (search->parsed()) return run_search(qn, qdelta, objective, regular, out_path);
    if (limit->parsed()) return run_limit_table(ns, tol, out_path);
    if (verify->parsed()) return run_verify(vin_, vdelta, out_path);
    throw std::invalid_argument("no subcommand");
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  }
}
