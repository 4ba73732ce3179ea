#include "cli.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "signlap/analysis.hpp"
#include "signlap/dynamics.hpp"
#include "signlap/error.hpp"
#include "signlap/graph.hpp"
#include "signlap/graph_io.hpp"
#include "signlap/multiport.hpp"
#include "signlap/random_graph.hpp"
#include "signlap/reduction.hpp"

namespace signlap::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  double rel_zero = 1e-9;
  double abs_floor = 1e-12;
  std::uint64_t seed = 0;
  std::string out;
  bool strict = false;

  TolerancePolicy tol() const {
    TolerancePolicy t{rel_zero, abs_floor};
    t.validate();
    return t;
  }
};

// FNV-1a, 64 bit.
struct Digest {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  void add(const std::string& bytes) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  std::string hex() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json matrix_json(const Matrix& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r).transpose()));
  return a;
}

json inertia_json(const Inertia& in) { return {{"minus", in.minus}, {"zero", in.zero}, {"plus", in.plus}}; }

json edge_json(const SignedGraph& g, std::size_t k) {
  const Edge& e = g.edge(k);
  return {{"index", k + 1}, {"i", e.u + 1}, {"j", e.v + 1}, {"weight", e.weight}};
}

json edges_json(const SignedGraph& g) {
  json a = json::array();
  for (std::size_t k = 0; k < g.edge_count(); ++k) a.push_back(edge_json(g, k));
  return a;
}

json certificate_json(const Certificate& c, const SignedGraph& g) {
  json j;
  j["route"] = std::string(to_string(c.route));
  j["verdict"] = std::string(to_string(c.verdict));
  j["marginal"] = c.marginal;
  j["reason"] = c.reason;
  j["margin"] = c.margin ? json(*c.margin) : json(nullptr);
  if (c.z_margin) j["z_margin"] = *c.z_margin;
  j["expected_zeros"] = c.witness.expected_zeros;
  j["decisive_inertia"] = inertia_json(c.witness.decisive_inertia);
  if (c.witness.decisive) j["decisive_matrix"] = matrix_json(c.witness.decisive->dense());
  if (c.witness.violating_eigenvalue) j["violating_eigenvalue"] = *c.witness.violating_eigenvalue;
  if (c.witness.violating_vector) j["violating_vector"] = vector_json(*c.witness.violating_vector);
  if (c.witness.failing_edge) j["failing_edge"] = edge_json(g, *c.witness.failing_edge);
  return j;
}

json error_json(const std::string& route, const Error& e) {
  return {{"route", route}, {"error", std::string(to_string(e.code()))}, {"message", e.detail()}};
}

json inertia_report_json(const std::string& route, const InertiaReport& r) {
  json j{{"route", route},
         {"inertia", inertia_json(r.inertia)},
         {"decisive_inertia", inertia_json(r.decisive_inertia)},
         {"offset", inertia_json(r.offset)},
         {"marginal", r.marginal}};
  j["decisive_matrix"] = matrix_json(r.decisive.dense());
  return j;
}

json bounds_json(const InertiaBounds& b) {
  return {{"minus", {b.minus.lo, b.minus.hi}}, {"zero", {b.zero.lo, b.zero.hi}}, {"plus", {b.plus.lo, b.plus.hi}}};
}

struct Session {
  Globals globals;
  std::vector<std::string> argv;
  std::ostream& out;
  std::ostream& err;
  Digest digest;
  json warnings = json::array();

  std::string read_input(const std::string& path) {
    std::string bytes = slurp(path);
    digest.add(bytes);
    return bytes;
  }

  SignedGraph graph(const std::string& path) {
    std::istringstream in(read_input(path));
    try {
      return read_edge_list(in);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.detail());
    }
  }

  std::vector<double> vector(const std::string& path, std::size_t expected) {
    std::istringstream in(read_input(path));
    try {
      return read_vector(in, expected);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.detail());
    }
  }

  json report(const std::string& command, json results) const {
    const TolerancePolicy t = globals.tol();
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["argv"] = argv;
    j["input_digest"] = digest.hex();
    j["tolerance"] = {{"rel_zero", t.rel_zero}, {"abs_floor", t.abs_floor}};
    j["results"] = std::move(results);
    j["warnings"] = warnings;
    return j;
  }

  void emit(const std::string& text) {
    if (globals.out.empty()) {
      out << text;
      return;
    }
    std::ofstream f(globals.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + globals.out + "'");
    f << text;
  }

  void emit(const json& j) { emit(j.dump(2) + "\n"); }
};

const std::vector<std::string> kCertifyRoutes{"kron", "multiport", "split", "cyclefree", "sequential", "oracle"};

Route route_from_name(const std::string& name) {
  if (name == "kron") return Route::Kron;
  if (name == "multiport") return Route::MultiportZ;
  if (name == "split") return Route::SplitY;
  if (name == "cyclefree") return Route::CycleFree;
  if (name == "sequential") return Route::Sequential;
  return Route::Oracle;
}

bool optional_route_error(ErrorCode c) {
  return c == ErrorCode::NotApplicable || c == ErrorCode::PositivePartDisconnected;
}

struct Agreement {
  json certificates = json::array();
  bool agree = true;
  bool marginal = false;
  std::optional<Verdict> oracle;
};

Agreement certify_all(const SignedGraph& g, const TolerancePolicy& tol) {
  Agreement a;
  std::optional<Verdict> first;
  for (const auto& name : kCertifyRoutes) {
    try {
      const Certificate c = certify(g, route_from_name(name), tol);
      a.certificates.push_back(certificate_json(c, g));
      a.marginal = a.marginal || c.marginal;
      if (!first) first = c.verdict;
      if (c.verdict != *first) a.agree = false;
      if (c.route == Route::Oracle) a.oracle = c.verdict;
    } catch (const Error& e) {
      if (!optional_route_error(e.code())) throw;
      a.certificates.push_back(error_json(name, e));
    }
  }
  return a;
}

int cmd_certify(Session& s, const std::string& path, const std::string& route) {
  const auto tol = s.globals.tol();
  const SignedGraph g = s.graph(path);
  json results;
  results["nodes"] = g.node_count();
  results["edges"] = g.edge_count();
  results["negative_edges"] = g.negative_edge_count();
  int code = kOk;
  bool positive = false;
  if (route == "all") {
    Agreement a = certify_all(g, tol);
    results["verdict"] = std::string(to_string(*a.oracle));
    results["agreement"] = a.agree;
    results["certificates"] = a.certificates;
    positive = *a.oracle == Verdict::PsdCorank1;
    if (!a.agree) {
      if (a.marginal) {
        s.warnings.push_back("routes disagree on a marginal instance");
      } else {
        s.err << "error: RouteDisagreement: certification routes returned different verdicts\n";
        code = kDisagreement;
      }
    } else if (a.marginal) {
      s.warnings.push_back("at least one decisive spectrum is near the zero threshold");
    }
  } else {
    const Certificate c = certify(g, route_from_name(route), tol);
    results["verdict"] = std::string(to_string(c.verdict));
    results["certificates"] = json::array({certificate_json(c, g)});
    positive = c.psd_corank1();
    if (c.marginal) s.warnings.push_back("decisive spectrum is near the zero threshold");
  }
  s.emit(s.report("certify", results));
  if (code == kOk && s.globals.strict && !positive) code = kStrictFailure;
  return code;
}

int cmd_inertia(Session& s, const std::string& path, const std::string& route) {
  const auto tol = s.globals.tol();
  const SignedGraph g = s.graph(path);
  json results;
  json routes = json::array();
  const Inertia oracle = oracle_inertia(g, tol);
  std::vector<Inertia> found;
  bool marginal = false;
  auto run_route = [&](const std::string& name, const std::function<InertiaReport()>& fn) {
    try {
      const InertiaReport r = fn();
      routes.push_back(inertia_report_json(name, r));
      found.push_back(r.inertia);
      marginal = marginal || r.marginal;
    } catch (const Error& e) {
      if (route != "all" || e.code() != ErrorCode::DisconnectedGraph) throw;
      routes.push_back(error_json(name, e));
    }
  };
  if (route == "kron" || route == "all") run_route("KRON", [&] { return inertia_via_kron(g, tol); });
  if (route == "conductance" || route == "all") {
    run_route("CONDUCTANCE", [&] { return inertia_via_conductance(g, tol); });
  }
  if (route == "oracle" || route == "all") {
    const auto eig = eigh(laplacian(g));
    const auto sc = classify_spectrum(eig.eigenvalues, tol);
    routes.push_back({{"route", "ORACLE"},
                      {"inertia", inertia_json(oracle)},
                      {"eigenvalues", vector_json(eig.eigenvalues)},
                      {"marginal", sc.near_threshold}});
    found.push_back(oracle);
    marginal = marginal || sc.near_threshold;
  }
  const InertiaBounds b = inertia_bounds(g);
  results["inertia"] = inertia_json(found.empty() ? oracle : found.front());
  results["routes"] = routes;
  results["bounds"] = bounds_json(b);
  results["bounds_contain_oracle"] = b.contains(oracle);
  int code = kOk;
  bool agree = true;
  for (const auto& in : found) agree = agree && in == found.front();
  results["agreement"] = agree;
  if (!agree) {
    if (marginal) {
      s.warnings.push_back("inertia routes disagree on a marginal instance");
    } else {
      s.err << "error: RouteDisagreement: inertia routes returned different triples\n";
      code = kDisagreement;
    }
  }
  if (marginal) s.warnings.push_back("a spectrum is near the zero threshold");
  s.emit(s.report("inertia", results));
  const bool positive = oracle.minus == 0 && oracle.zero == 1;
  if (code == kOk && s.globals.strict && !positive) code = kStrictFailure;
  return code;
}

int cmd_kron(Session& s, const std::string& path, const std::vector<std::size_t>& alpha_1based,
             const std::string& reduced_path) {
  const auto tol = s.globals.tol();
  const SignedGraph g = s.graph(path);
  std::vector<NodeId> alpha;
  if (alpha_1based.empty()) {
    alpha = external_terminals(g);
  } else {
    for (std::size_t a : alpha_1based) {
      if (a < 1 || a > g.node_count()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "terminal " + std::to_string(a) + " outside 1.." + std::to_string(g.node_count()));
      }
      alpha.push_back(a - 1);
    }
  }
  const KronResult k = kron_reduce(laplacian(g), alpha, tol);
  json results;
  json a = json::array(), b = json::array();
  for (NodeId v : k.alpha) a.push_back(v + 1);
  for (NodeId v : k.beta) b.push_back(v + 1);
  results["alpha"] = a;
  results["beta"] = b;
  results["reduced_laplacian"] = matrix_json(k.reduced.dense());
  results["reduced_edges"] = edges_json(k.reduced_graph);
  results["reduced_connected"] = is_connected(k.reduced_graph);
  results["reduced_negative_edges"] = k.reduced_graph.negative_edge_count();
  results["disconnected_input"] = k.disconnected_input;
  if (k.disconnected_input) s.warnings.push_back("interior block is singular; pseudoinverse used");
  if (!reduced_path.empty()) {
    std::ofstream f(reduced_path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + reduced_path + "'");
    f << "# Kron-reduced network; node k is original node";
    for (NodeId v : k.alpha) f << ' ' << v + 1;
    f << " in order\n";
    write_edge_list(f, k.reduced_graph);
    results["reduced_file"] = reduced_path;
  }
  s.emit(s.report("kron", results));
  return kOk;
}

int cmd_region(Session& s, const std::string& path, const RegionGrid& grid, bool verify,
               const std::string& summary_path) {
  const auto tol = s.globals.tol();
  const SignedGraph templ = s.graph(path);
  const RegionResult r = negative_weight_region(templ, grid, tol);
  std::string csv = verify ? "a1,a2,admissible,marginal,oracle\n" : "a1,a2,admissible,marginal\n";
  std::size_t mismatches = 0, marginal_mismatches = 0, admissible = 0;
  for (const auto& p : r.samples) {
    csv += csv_number(p.a1) + "," + csv_number(p.a2) + "," + (p.admissible ? "1" : "0") + "," +
           (p.marginal ? "1" : "0");
    if (verify) {
      const Certificate c = certify_psd_oracle(instantiate_region_sample(templ, r, p.a1, p.a2), tol);
      csv += c.psd_corank1() ? ",1" : ",0";
      if (c.psd_corank1() != p.admissible) {
        if (p.marginal || c.marginal) {
          ++marginal_mismatches;
        } else {
          ++mismatches;
        }
      }
    }
    csv += "\n";
    if (p.admissible) ++admissible;
  }
  s.emit(csv);
  if (!summary_path.empty()) {
    json results;
    results["edge1"] = edge_json(templ, r.edge1);
    results["edge2"] = edge_json(templ, r.edge2);
    results["boundary_matrix"] = matrix_json(r.boundary.dense());
    results["samples"] = r.samples.size();
    results["admissible"] = admissible;
    if (verify) {
      results["mismatches"] = mismatches;
      results["marginal_mismatches"] = marginal_mismatches;
    }
    std::ofstream f(summary_path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + summary_path + "'");
    f << s.report("region", results).dump(2) << "\n";
  }
  if (mismatches > 0) {
    s.err << "error: RouteDisagreement: " << mismatches << " region samples disagree with the oracle\n";
    return kDisagreement;
  }
  return kOk;
}

struct TimeSpec {
  double t_end = 5.0;
  std::size_t samples = 2001;
  std::string times_path;
};

int cmd_simulate(Session& s, const std::string& graph_path, const std::string& x0_path, const TimeSpec& ts,
                 const std::string& csv_path) {
  const auto tol = s.globals.tol();
  const SignedGraph g = s.graph(graph_path);
  const std::vector<double> x0 = s.vector(x0_path, g.node_count());
  std::vector<double> times;
  if (!ts.times_path.empty()) {
    times = s.vector(ts.times_path, 0);
  } else {
    if (ts.samples < 2 || !(ts.t_end > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "need --samples >= 2 and --t-end > 0");
    }
    for (std::size_t k = 0; k < ts.samples; ++k) {
      times.push_back(ts.t_end * static_cast<double>(k) / static_cast<double>(ts.samples - 1));
    }
  }
  const Trajectory tr = simulate_consensus(g, x0, times, tol);

  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + csv_path + "'");
    f << "t";
    for (std::size_t i = 0; i < g.node_count(); ++i) f << ",x" << i + 1;
    f << "\n";
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
      f << csv_number(tr.times[k]);
      for (Eigen::Index i = 0; i < tr.states[k].size(); ++i) f << "," << csv_number(tr.states[k](i));
      f << "\n";
    }
  }

  json results;
  results["samples"] = tr.times.size();
  results["consensus_value"] = tr.consensus_value;
  results["certificate"] = certificate_json(tr.certificate, g);
  results["final_state"] = tr.states.empty() ? json::array() : vector_json(tr.states.back());
  json events = json::array();
  try {
    for (const auto& e : orthant_exit_events(tr, tol)) {
      events.push_back({{"agent", e.agent + 1},
                        {"exit_time", e.exit_time},
                        {"return_time", e.return_time ? json(*e.return_time) : json(nullptr)},
                        {"minimum", e.minimum}});
    }
    results["events"] = events;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NegativeInitialCondition) throw;
    results["events"] = nullptr;
    s.warnings.push_back(std::string("orthant events skipped: ") + e.what());
  }
  if (!csv_path.empty()) results["trajectory_file"] = csv_path;
  if (tr.certificate.marginal) s.warnings.push_back("spectrum is near the zero threshold");
  s.emit(s.report("simulate", results));
  if (s.globals.strict && !tr.certificate.psd_corank1()) return kStrictFailure;
  return kOk;
}

int cmd_dcflow(Session& s, const std::string& graph_path, const std::string& p_path) {
  const auto tol = s.globals.tol();
  const SignedGraph g = s.graph(graph_path);
  const std::vector<double> p = s.vector(p_path, g.node_count());
  const PowerFlowCase pf = dc_power_flow(g, p, tol);
  json results;
  results["feasible"] = pf.feasible;
  results["reason"] = pf.reason;
  results["angles"] = vector_json(pf.angles);
  results["injections"] = vector_json(pf.injections);
  results["residual"] = pf.residual;
  results["inertia"] = inertia_json(pf.inertia);
  json kernel = json::array();
  for (Eigen::Index c = 0; c < pf.kernel_basis.cols(); ++c) kernel.push_back(vector_json(pf.kernel_basis.col(c)));
  results["kernel_basis"] = kernel;
  if (!pf.feasible) s.warnings.push_back("power flow infeasible: " + pf.reason);
  s.emit(s.report("dcflow", results));
  return s.globals.strict && !pf.feasible ? kStrictFailure : kOk;
}

int cmd_eventual(Session& s, const std::string& path, std::size_t k_max) {
  const auto tol = s.globals.tol();
  const SignedGraph g = s.graph(path);
  EventualPositivityOptions opts;
  opts.k_max = k_max;
  const EventualPositivityReport r = eventual_positivity(g, tol, opts);
  json results;
  results["is_eep"] = r.is_eep;
  results["shift"] = r.shift;
  results["k0"] = r.k0 ? json(*r.k0) : json(nullptr);
  results["k_max"] = r.k_max;
  results["t0"] = r.t0 ? json(*r.t0) : json(nullptr);
  results["pf_check"] = {{"spectral_radius", r.pf_check.spectral_radius},
                         {"radius_is_shift", r.pf_check.radius_is_shift},
                         {"simple", r.pf_check.simple},
                         {"strictly_dominant", r.pf_check.strictly_dominant},
                         {"positive_eigenvector", r.pf_check.positive_eigenvector},
                         {"passed", r.pf_check.passed()},
                         {"failures", r.pf_check.failures}};
  const Matrix B = r.shift * Matrix::Identity(static_cast<Eigen::Index>(g.node_count()),
                                              static_cast<Eigen::Index>(g.node_count())) -
                   laplacian(g).dense();
  results["B"] = matrix_json(B);
  results["marginal"] = r.marginal;
  if (r.marginal) s.warnings.push_back("spectrum is near the zero threshold");
  if (r.is_eep && !r.k0) s.warnings.push_back("no positive power of B found up to k_max");
  s.emit(s.report("eventual", results));
  return s.globals.strict && !r.is_eep ? kStrictFailure : kOk;
}

int cmd_corpus(Session& s, std::size_t count, const std::string& dir) {
  const auto tol = s.globals.tol();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  std::size_t marginal = 0, positive = 0, cycle_free = 0, eep_mismatch = 0, bounds_miss = 0;
  json disagreements = json::array();
  for (std::size_t k = 0; k < count; ++k) {
    const SignedGraph g = random_signed_graph(s.globals.seed, k);
    if (!dir.empty()) {
      char name[32];
      std::snprintf(name, sizeof name, "graph_%05zu.txt", k);
      std::ofstream f(std::filesystem::path(dir) / name);
      f << "# corpus seed " << s.globals.seed << " instance " << k << "\n";
      write_edge_list(f, g);
    }
    const Agreement a = certify_all(g, tol);
    if (cycle_free_applicable(g)) ++cycle_free;
    if (a.marginal) {
      ++marginal;
      continue;
    }
    if (*a.oracle == Verdict::PsdCorank1) ++positive;
    if (!a.agree) disagreements.push_back(k);
    if (eventual_positivity(g, tol).is_eep != (*a.oracle == Verdict::PsdCorank1)) ++eep_mismatch;
    if (!inertia_bounds(g).contains(oracle_inertia(g, tol))) ++bounds_miss;
  }
  json results{{"seed", s.globals.seed},
               {"count", count},
               {"marginal", marginal},
               {"psd_corank1", positive},
               {"cycle_free_applicable", cycle_free},
               {"route_disagreements", disagreements},
               {"eventual_mismatches", eep_mismatch},
               {"bounds_misses", bounds_miss}};
  s.digest.add(std::to_string(s.globals.seed) + ":" + std::to_string(count));
  s.emit(s.report("corpus", results));
  if (!disagreements.empty() || eep_mismatch > 0 || bounds_miss > 0) {
    s.err << "error: RouteDisagreement: corpus checks failed\n";
    return kDisagreement;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s{{}, args, out, err, {}, json::array()};
  Globals& g = s.globals;

  CLI::App app{"Signed graph Laplacian analysis: PSD certification, inertia, eventual positivity, dynamics."};
  app.name("signlap");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--rel-zero", g.rel_zero, "Relative zero threshold for eigenvalues")->capture_default_str();
  app.add_option("--abs-floor", g.abs_floor, "Absolute zero threshold floor")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for random corpora")->capture_default_str();
  app.add_option("--out", g.out, "Write the primary output here instead of stdout");
  app.add_flag("--strict", g.strict, "Exit 4 on a negative verdict or infeasible case");

  std::string graph_path, second_path, route = "all";

  auto* certify_cmd = app.add_subcommand("certify", "Certify PSD with a simple zero eigenvalue");
  certify_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  certify_cmd->add_option("--route", route)
      ->check(CLI::IsMember({"kron", "multiport", "split", "cyclefree", "sequential", "oracle", "all"}))
      ->capture_default_str();

  auto* inertia_cmd = app.add_subcommand("inertia", "Inertia by reduction routes, with topological bounds");
  inertia_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  inertia_cmd->add_option("--route", route)
      ->check(CLI::IsMember({"kron", "conductance", "oracle", "all"}))
      ->capture_default_str();

  std::vector<std::size_t> alpha;
  std::string reduced_path;
  auto* kron_cmd = app.add_subcommand("kron", "Kron-reduce onto terminals (default: nodes on negative edges)");
  kron_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  kron_cmd->add_option("--alpha", alpha, "Comma-separated 1-based terminals")->delimiter(',');
  kron_cmd->add_option("--reduced", reduced_path, "Write the reduced edge list here");

  RegionGrid grid;
  bool verify = false;
  std::string summary_path;
  auto* region_cmd = app.add_subcommand("region", "Admissible weights of the two negative edges, as CSV");
  region_cmd->add_option("graph", graph_path, "Template edge-list file with exactly two negative edges")->required();
  region_cmd->add_option("--a1-min", grid.a1_min)->capture_default_str();
  region_cmd->add_option("--a1-max", grid.a1_max)->capture_default_str();
  region_cmd->add_option("--a1-count", grid.a1_count)->capture_default_str();
  region_cmd->add_option("--a2-min", grid.a2_min)->capture_default_str();
  region_cmd->add_option("--a2-max", grid.a2_max)->capture_default_str();
  region_cmd->add_option("--a2-count", grid.a2_count)->capture_default_str();
  region_cmd->add_flag("--verify", verify, "Re-check every sample with the eigendecomposition oracle");
  region_cmd->add_option("--summary", summary_path, "Write a JSON summary here");

  TimeSpec ts;
  std::string csv_path;
  auto* simulate_cmd = app.add_subcommand("simulate", "Consensus trajectory x' = -Lx and orthant exits");
  simulate_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  simulate_cmd->add_option("state", second_path, "Initial state file, one value per line")->required();
  simulate_cmd->add_option("--t-end", ts.t_end, "End of the uniform time grid")->capture_default_str();
  simulate_cmd->add_option("--samples", ts.samples, "Points in the uniform time grid")->capture_default_str();
  simulate_cmd->add_option("--times", ts.times_path, "File of sample times (overrides the uniform grid)");
  simulate_cmd->add_option("--csv", csv_path, "Write the trajectory CSV here");

  auto* dcflow_cmd = app.add_subcommand("dcflow", "DC power flow p = L theta");
  dcflow_cmd->add_option("graph", graph_path, "Edge-list file of line susceptances")->required();
  dcflow_cmd->add_option("injections", second_path, "Injection file, one value per line")->required();

  std::size_t k_max = 0;
  auto* eventual_cmd = app.add_subcommand("eventual", "Eventual exponential positivity of -L");
  eventual_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  eventual_cmd->add_option("--k-max", k_max, "Power search bound (0: 64 n)")->capture_default_str();

  std::size_t count = 1000;
  std::string corpus_dir;
  auto* corpus_cmd = app.add_subcommand("corpus", "Cross-check all routes on a seeded random corpus");
  corpus_cmd->add_option("--count", count)->capture_default_str();
  corpus_cmd->add_option("--write", corpus_dir, "Also write each instance as an edge-list file here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*certify_cmd) return cmd_certify(s, graph_path, route);
    if (*inertia_cmd) return cmd_inertia(s, graph_path, route);
    if (*kron_cmd) return cmd_kron(s, graph_path, alpha, reduced_path);
    if (*region_cmd) return cmd_region(s, graph_path, grid, verify, summary_path);
    if (*simulate_cmd) return cmd_simulate(s, graph_path, second_path, ts, csv_path);
    if (*dcflow_cmd) return cmd_dcflow(s, graph_path, second_path);
    if (*eventual_cmd) return cmd_eventual(s, graph_path, k_max);
    if (*corpus_cmd) return cmd_corpus(s, count, corpus_dir);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidTolerance ? kUsage : kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsage;
}

}  // namespace signlap::cli
