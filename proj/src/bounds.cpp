#include "bipspec/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "bipspec/canonical.hpp"
#include "bipspec/families.hpp"
#include "bipspec/spectral.hpp"

namespace bipspec {

namespace {

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// All inequalities in the source results are strict; reports allow a sliver
// proportional to the eigenvalue tolerance so honest numerical equality
// (e.g. rho = sqrt(m) on complete bipartite graphs) is not flagged.
double allowance(double tol, double scale) { return 10.0 * tol * std::max(1.0, scale); }

bool is_b_family(const Graph& g) {
  int n = g.order();
  if (n < 6 || n % 2 != 0) return false;
  Graph b = b_graph(n);
  if (g == b) return true;
  return n <= kCanonicalMaxOrder && isomorphic(g, b);
}

}  // namespace

double stevanovic_bound(int n, int delta) {
  if (n < 2 || delta < 1) {
    throw std::invalid_argument("stevanovic_bound: requires n >= 2, delta >= 1");
  }
  return 1.0 / (2.0 * n * (static_cast<double>(n) * delta - 1.0) * delta * delta);
}

double cioaba_bound(int n, int diam) {
  if (n < 1 || diam < 1) {
    throw std::invalid_argument("cioaba_bound: requires n >= 1, diam >= 1");
  }
  return 1.0 / (static_cast<double>(n) * diam);
}

double new_bipartite_bound(int n, int delta) {
  if (n < 2 || delta < 2) {
    throw std::invalid_argument("new_bipartite_bound: requires n >= 2, delta >= 2");
  }
  return 2.0 * delta / (static_cast<double>(n) * (4.0 * n + delta - 4.0));
}

double sqrt_size_bound(int m) {
  if (m < 0) throw std::invalid_argument("sqrt_size_bound: m must be nonnegative");
  return std::sqrt(static_cast<double>(m));
}

Lemma5Bounds lemma5_bounds(int n_even) {
  if (n_even < 6 || n_even % 2 != 0) {
    throw std::invalid_argument("lemma5_bounds: requires even n >= 6");
  }
  double n = n_even;
  double sl = std::sin(std::numbers::pi / (2.0 * n + 2.0));
  double su = std::sin(std::numbers::pi / (2.0 * n));
  return {4.0 * sl * sl, (4.0 * n + 48.0) / (n - 2.0) * su * su};
}

BoundReport bound_report(const Graph& g, double tol) {
  if (g.is_regular()) {
    throw std::invalid_argument("bound_report: graph must be irregular");
  }
  SpectralResult sr = spectral_radius(g, tol);
  BoundReport r;
  r.n = g.order();
  r.delta = g.max_degree();
  r.m = g.size();
  r.diam = g.diameter();
  r.rho = sr.rho;
  r.gap = r.delta - sr.rho;
  r.stevanovic = stevanovic_bound(r.n, r.delta);
  r.cioaba = cioaba_bound(r.n, r.diam);
  r.sqrt_m = sqrt_size_bound(r.m);
  if (r.delta >= 2 && bipartition(g).has_value()) {
    r.new_bound = new_bipartite_bound(r.n, r.delta);
  }
  if (is_b_family(g)) {
    Lemma5Bounds l5 = lemma5_bounds(r.n);
    r.lemma5_lower = l5.lower;
    r.lemma5_upper = l5.upper;
  }
  double eps = allowance(tol, r.rho);
  r.stevanovic_ok = r.gap > r.stevanovic;
  r.cioaba_ok = r.gap > r.cioaba;
  r.new_bound_ok = !r.new_bound || r.gap > *r.new_bound;
  r.sqrt_m_ok = r.rho <= r.sqrt_m + eps;
  r.lemma5_ok = !r.lemma5_lower ||
                (*r.lemma5_lower <= 3.0 - r.rho + eps && 3.0 - r.rho <= *r.lemma5_upper + eps);
  r.all_ok = r.stevanovic_ok && r.cioaba_ok && r.new_bound_ok && r.sqrt_m_ok && r.lemma5_ok;
  return r;
}

std::string bound_report_csv_header() {
  return "n,delta,m,diam,rho,gap,stevanovic,cioaba,new_bound,sqrt_m,"
         "lemma5_lower,lemma5_upper,stevanovic_ok,cioaba_ok,new_bound_ok,"
         "sqrt_m_ok,lemma5_ok,all_ok";
}

std::string bound_report_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.delta << ',' << r.m << ',' << r.diam << ',' << fmt10(r.rho) << ','
      << fmt10(r.gap) << ',' << fmt10(r.stevanovic) << ',' << fmt10(r.cioaba) << ','
      << (r.new_bound ? fmt10(*r.new_bound) : "") << ',' << fmt10(r.sqrt_m) << ','
      << (r.lemma5_lower ? fmt10(*r.lemma5_lower) : "") << ','
      << (r.lemma5_upper ? fmt10(*r.lemma5_upper) : "");
  for (bool b : {r.stevanovic_ok, r.cioaba_ok, r.new_bound_ok, r.sqrt_m_ok, r.lemma5_ok,
                 r.all_ok}) {
    out << ',' << (b ? "true" : "false");
  }
  return out.str();
}

std::string bound_report_json(const BoundReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["m"] = r.m;
  j["diam"] = r.diam;
  j["rho"] = r.rho;
  j["gap"] = r.gap;
  j["stevanovic"] = r.stevanovic;
  j["cioaba"] = r.cioaba;
  j["new_bound"] = r.new_bound ? nlohmann::json(*r.new_bound) : nlohmann::json(nullptr);
  j["sqrt_m"] = r.sqrt_m;
  j["lemma5_lower"] = r.lemma5_lower ? nlohmann::json(*r.lemma5_lower) : nlohmann::json(nullptr);
  j["lemma5_upper"] = r.lemma5_upper ? nlohmann::json(*r.lemma5_upper) : nlohmann::json(nullptr);
  j["stevanovic_ok"] = r.stevanovic_ok;
  j["cioaba_ok"] = r.cioaba_ok;
  j["new_bound_ok"] = r.new_bound_ok;
  j["sqrt_m_ok"] = r.sqrt_m_ok;
  j["lemma5_ok"] = r.lemma5_ok;
  j["all_ok"] = r.all_ok;
  return j.dump(2);
}

BoundReport bound_report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  BoundReport r;
  r.n = j.at("n").get<int>();
  r.delta = j.at("delta").get<int>();
  r.m = j.at("m").get<int>();
  r.diam = j.at("diam").get<int>();
  r.rho = j.at("rho").get<double>();
  r.gap = j.at("gap").get<double>();
  r.stevanovic = j.at("stevanovic").get<double>();
  r.cioaba = j.at("cioaba").get<double>();
  if (!j.at("new_bound").is_null()) r.new_bound = j.at("new_bound").get<double>();
  r.sqrt_m = j.at("sqrt_m").get<double>();
  if (!j.at("lemma5_lower").is_null()) r.lemma5_lower = j.at("lemma5_lower").get<double>();
  if (!j.at("lemma5_upper").is_null()) r.lemma5_upper = j.at("lemma5_upper").get<double>();
  r.stevanovic_ok = j.at("stevanovic_ok").get<bool>();
  r.cioaba_ok = j.at("cioaba_ok").get<bool>();
  r.new_bound_ok = j.at("new_bound_ok").get<bool>();
  r.sqrt_m_ok = j.at("sqrt_m_ok").get<bool>();
  r.lemma5_ok = j.at("lemma5_ok").get<bool>();
  r.all_ok = j.at("all_ok").get<bool>();
  return r;
}

}  // namespace bipspec
