// kpz: command-line front end. Runs simulations, computes the solvable
// distributions and identities, and emits plot-ready CSV/JSON together with
// a run manifest. Exit codes: 0 success, 1 usage error, 2 numeric
// non-convergence or failed verification.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kpz/dynamics.hpp"
#include "kpz/fredholm.hpp"
#include "kpz/grsk.hpp"
#include "kpz/lpp.hpp"
#include "kpz/rsk.hpp"
#include "kpz/verify.hpp"
#include "kpz/whittaker.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "kpz 0.1.0";

int log_level() {
  const char* env = std::getenv("KPZ_LOG");
  return env ? std::atoi(env) : 0;
}

void logv(const std::string& msg) {
  if (log_level() > 0) std::cerr << "[kpz] " << msg << "\n";
}

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

// Exact decimal-to-rational parse so the Schur route stays exact.
kpz::Rat parse_decimal_rat(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return kpz::rat(std::stol(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  long den = 1;
  for (std::size_t i = 0; i < s.size() - dot - 1; ++i) den *= 10;
  return kpz::rat(std::stol(digits), den);
}

struct Manifest {
  std::string subcommand;
  json parameters;
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;
  double total_ms = 0;

  json to_json() const {
    return json{{"subcommand", subcommand}, {"parameters", parameters},
                {"seed", seed},             {"version", kVersion},
                {"timings_ms", {{"total", total_ms}}},
                {"outputs", outputs}};
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

void emit_manifest(const Manifest& m) {
  if (m.outputs.empty()) return;
  write_file(m.outputs.front() + ".manifest.json", m.to_json().dump(2) + "\n");
}

kpz::IntGrid parse_matrix(const std::string& spec) {
  if (spec == "3x3-ones") return kpz::IntGrid(3, 3, 1);
  if (spec.rfind("perm:", 0) == 0) {
    std::vector<long> sigma;
    std::stringstream ss(spec.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ',')) sigma.push_back(std::stol(tok));
    return kpz::permutation_matrix(sigma);
  }
  if (spec.rfind("rows:", 0) == 0) {
    std::vector<std::vector<long>> rows;
    std::stringstream ss(spec.substr(5));
    std::string row;
    while (std::getline(ss, row, ';')) {
      rows.emplace_back();
      std::stringstream rs(row);
      std::string tok;
      while (std::getline(rs, tok, ',')) rows.back().push_back(std::stol(tok));
    }
    if (rows.empty() || rows[0].empty()) throw CLI::ValidationError("--matrix", "empty matrix");
    kpz::IntGrid w(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows[0].size())
        throw CLI::ValidationError("--matrix", "ragged rows");
      for (std::size_t j = 0; j < rows[i].size(); ++j) w(i, j) = rows[i][j];
    }
    return w;
  }
  throw CLI::ValidationError("--matrix", "expected 3x3-ones, perm:..., or rows:...");
}

json pattern_json(const kpz::IntGt& z) {
  json rows = json::array();
  for (std::size_t i = 1; i <= z.depth(); ++i) {
    json row = json::array();
    for (std::size_t j = 1; j <= z.row_width(i); ++j) row.push_back(z.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic machinery of KPZ integrable probability: RSK and its geometric "
               "lifting, solvable LPP/polymer laws, Fredholm determinants, Tracy-Widom "
               "numerics, and Markov dynamics on Gelfand-Tsetlin patterns."};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out_path, format = "csv";
  app.add_option("--seed", seed, "master RNG seed (echoed in the manifest)");
  app.add_option("--threads", threads, "cap for caller-level parallelism");

  // ---- rsk ----
  auto* rsk_cmd = app.add_subcommand("rsk", "run RSK on an integer matrix");
  std::string matrix_spec;
  bool round_trip = false;
  rsk_cmd->add_option("--matrix", matrix_spec, "3x3-ones | perm:a,b,... | rows:a,b;c,d")
      ->required();
  rsk_cmd->add_flag("--round-trip", round_trip, "invert the output and check identity");
  rsk_cmd->add_option("--out", out_path, "write the report to a file");

  // ---- grsk ----
  auto* grsk_cmd = app.add_subcommand("grsk", "run geometric RSK on a positive matrix");
  std::string gmatrix_spec;
  grsk_cmd->add_option("--matrix", gmatrix_spec, "rows:a,b;c,d (positive integers)")
      ->required();
  grsk_cmd->add_option("--out", out_path, "write the report to a file");

  // ---- lpp-dist ----
  auto* lpp_cmd = app.add_subcommand(
      "lpp-dist", "law of geometric-weight last passage percolation, three routes");
  std::vector<std::string> p_strs, q_strs;
  long u_max = 12;
  std::size_t mc_samples = 1000000;
  lpp_cmd->add_option("--p", p_strs, "row parameters, e.g. --p 0.3 --p 0.4")->required();
  lpp_cmd->add_option("--q", q_strs, "column parameters")->required();
  lpp_cmd->add_option("--u-max", u_max, "tabulate P(tau <= u) for u = 0..u_max");
  lpp_cmd->add_option("--mc-samples", mc_samples, "Monte Carlo sample count");
  lpp_cmd->add_option("--out", out_path, "CSV output path")->required();

  // ---- polymer-laplace ----
  auto* laplace_cmd = app.add_subcommand(
      "polymer-laplace", "log-gamma polymer Laplace transform: contour vs Monte Carlo");
  std::vector<double> s_values, alpha_values, beta_values;
  std::size_t replicas = 1000000;
  laplace_cmd->add_option("--s", s_values, "Laplace arguments")->required();
  laplace_cmd->add_option("--alpha", alpha_values, "alpha parameters")->required();
  laplace_cmd->add_option("--beta", beta_values, "beta parameters")->required();
  laplace_cmd->add_option("--replicas", replicas, "Monte Carlo replicas");
  laplace_cmd->add_option("--out", out_path, "CSV output path")->required();

  // ---- tw-cdf ----
  auto* tw_cmd = app.add_subcommand("tw-cdf", "Tracy-Widom GUE distribution function");
  std::vector<double> tw_xs;
  std::size_t tw_nodes = 96;
  tw_cmd->add_option("--x", tw_xs, "evaluation points (repeatable)")->required();
  tw_cmd->add_option("--nodes", tw_nodes, "Nystrom nodes");
  tw_cmd->add_option("--out", out_path, "CSV output path")->required();

  // ---- airy ----
  auto* airy_cmd = app.add_subcommand("airy", "Airy function values");
  std::vector<double> airy_xs;
  airy_cmd->add_option("--x", airy_xs, "evaluation points (repeatable)")->required();
  airy_cmd->add_option("--out", out_path, "CSV output path")->required();

  // ---- simulate ----
  auto* sim_cmd =
      app.add_subcommand("simulate", "continuous-time dynamics on Gelfand-Tsetlin patterns");
  std::string model = "poisson-rsk";
  std::size_t depth = 2;
  std::vector<double> rates;
  double qparam = 0.5, horizon = 1.0;
  sim_cmd->add_option("--model", model, "poisson-rsk | q-rsk | q-whittaker");
  sim_cmd->add_option("--depth", depth, "pattern depth n");
  sim_cmd->add_option("--rates", rates, "jump rates x_1..x_n");
  sim_cmd->add_option("--q", qparam, "q parameter for the q-models");
  sim_cmd->add_option("--horizon", horizon, "time horizon T");
  sim_cmd->add_option("--out", out_path, "JSON output path")->required();
  sim_cmd->add_option("--format", format, "csv|json (trajectories are json)");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  std::string suite = "fast", only_filter;
  verify_cmd->add_option("--suite", suite, "fast | full");
  verify_cmd->add_option("--only", only_filter, "run only checks whose name contains this");
  verify_cmd->add_option("--out", out_path, "machine-readable JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return 1;
  }

  auto t0 = std::chrono::steady_clock::now();
  Manifest manifest;
  manifest.seed = seed;
  if (!out_path.empty()) manifest.outputs.push_back(out_path);

  try {
    if (rsk_cmd->parsed() || grsk_cmd->parsed()) {
      std::ostringstream report;
      if (rsk_cmd->parsed()) {
        manifest.subcommand = "rsk";
        manifest.parameters = {{"matrix", matrix_spec}, {"round_trip", round_trip}};
        auto w = parse_matrix(matrix_spec);
        auto out = kpz::rsk_forward(w);
        // shape by the Greene ensemble oracle when the instance is small
        kpz::Partition shape = kpz::shape_of(out.Z);
        if (w.rows() * w.cols() <= 30) {
          std::vector<long> greene;
          long prev = 0;
          for (std::size_t r = 1; r <= std::min(w.rows(), w.cols()); ++r) {
            long s = kpz::brute_force_paths(
                w, kpz::greene_query(w.rows(), w.cols(), r, kpz::Semiring::MaxPlus));
            greene.push_back(s - prev);
            prev = s;
          }
          shape = kpz::Partition(std::move(greene));
        }
        report << "shape: " << shape.str() << "\n";
        report << "Z:\n" << out.Z.str() << "\nZ':\n" << out.Zprime.str() << "\n";
        if (round_trip) {
          bool identity = kpz::rsk_inverse(out) == w;
          report << "identity: " << (identity ? "true" : "false") << "\n";
          if (!identity) throw std::runtime_error("round trip failed");
        }
      } else {
        manifest.subcommand = "grsk";
        manifest.parameters = {{"matrix", gmatrix_spec}};
        auto wi = parse_matrix(gmatrix_spec);
        kpz::RealGrid w = wi.map<double>([](long v) { return static_cast<double>(v); });
        auto out = kpz::grsk_forward(w);
        report << "Z:\n" << out.Z.str() << "\nZ':\n" << out.Zprime.str() << "\n";
        if (w.rows() == w.cols()) {
          auto rep = kpz::energy_report(w);
          report << "energy identity residual: " << fmt15(rep.residual) << "\n";
        }
      }
      std::cout << report.str();
      if (!out_path.empty()) write_file(out_path, report.str());
    } else if (lpp_cmd->parsed()) {
      manifest.subcommand = "lpp-dist";
      manifest.parameters = {{"p", p_strs}, {"q", q_strs},
                             {"u_max", u_max}, {"mc_samples", mc_samples}};
      std::vector<kpz::Rat> pr, qr;
      std::vector<double> p, q;
      for (const auto& s : p_strs) {
        pr.push_back(parse_decimal_rat(s));
        p.push_back(kpz::to_double(pr.back()));
      }
      for (const auto& s : q_strs) {
        qr.push_back(parse_decimal_rat(s));
        q.push_back(kpz::to_double(qr.back()));
      }
      std::vector<long> us;
      for (long u = 0; u <= u_max; ++u) us.push_back(u);
      logv("running Monte Carlo with " + std::to_string(mc_samples) + " samples");
      auto mc = kpz::lpp_cdf_mc(us, p, q, mc_samples, seed);
      std::ostringstream csv;
      csv << "u,P_schur,P_fredholm,P_mc,mc_stderr\n";
      for (std::size_t i = 0; i < us.size(); ++i) {
        double schur = kpz::to_double(kpz::lpp_cdf_schur(us[i], pr, qr));
        double fred = kpz::lpp_cdf_fredholm(us[i], p, q, 64);
        csv << us[i] << "," << fmt15(schur) << "," << fmt15(fred) << "," << fmt15(mc[i].mean)
            << "," << fmt15(mc[i].stderr_) << "\n";
      }
      write_file(out_path, csv.str());
    } else if (laplace_cmd->parsed()) {
      manifest.subcommand = "polymer-laplace";
      manifest.parameters = {{"s", s_values}, {"alpha", alpha_values},
                             {"beta", beta_values}, {"replicas", replicas}};
      std::ostringstream csv;
      csv << "s,laplace_contour,laplace_mc,mc_stderr\n";
      for (double s : s_values) {
        double contour = s == 0 ? 1.0
                                : kpz::loggamma_laplace_contour(s, alpha_values, beta_values);
        auto mc = kpz::loggamma_laplace_mc(alpha_values.size(), s, alpha_values, beta_values,
                                           replicas, seed, threads);
        csv << fmt15(s) << "," << fmt15(contour) << "," << fmt15(mc.mean) << ","
            << fmt15(mc.stderr_) << "\n";
      }
      write_file(out_path, csv.str());
    } else if (tw_cmd->parsed()) {
      manifest.subcommand = "tw-cdf";
      manifest.parameters = {{"x", tw_xs}, {"nodes", tw_nodes}};
      std::ostringstream csv;
      csv << "x,F,self_delta,converged\n";
      bool all_converged = true;
      for (double x : tw_xs) {
        auto r = kpz::tw_gue_cdf_result(x, tw_nodes);
        all_converged &= r.converged;
        csv << fmt15(x) << "," << fmt15(r.value) << "," << fmt15(r.self_delta) << ","
            << (r.converged ? 1 : 0) << "\n";
      }
      write_file(out_path, csv.str());
      if (!all_converged) {
        emit_manifest(manifest);
        std::cerr << "tw-cdf: non-convergence flagged\n";
        return 2;
      }
    } else if (airy_cmd->parsed()) {
      manifest.subcommand = "airy";
      manifest.parameters = {{"x", airy_xs}};
      std::ostringstream csv;
      csv << "x,Ai\n";
      for (double x : airy_xs) csv << fmt15(x) << "," << fmt15(kpz::airy_ai(x)) << "\n";
      write_file(out_path, csv.str());
    } else if (sim_cmd->parsed()) {
      manifest.subcommand = "simulate";
      kpz::DynamicsConfig cfg;
      if (model == "poisson-rsk")
        cfg.model = kpz::DynModel::PoissonRsk;
      else if (model == "q-rsk")
        cfg.model = kpz::DynModel::QRsk;
      else if (model == "q-whittaker")
        cfg.model = kpz::DynModel::QWhittaker;
      else
        throw CLI::ValidationError("--model", "unknown model " + model);
      cfg.depth = depth;
      cfg.rates = rates.empty() ? std::vector<double>(depth, 1.0) : rates;
      cfg.q = qparam;
      cfg.horizon = horizon;
      cfg.seed = seed;
      manifest.parameters = {{"model", model}, {"depth", depth}, {"rates", cfg.rates},
                             {"q", qparam},    {"horizon", horizon}};
      auto traj = kpz::simulate(cfg);
      json events = json::array();
      for (const auto& ev : traj.events)
        events.push_back(json{{"t", ev.time}, {"site", {ev.i, ev.j}},
                              {"state", pattern_json(ev.state)}});
      json payload{{"model", model},
                   {"parameters", manifest.parameters},
                   {"seed", seed},
                   {"events", events},
                   {"final", pattern_json(traj.final_state)},
                   {"qtasep", kpz::qtasep_marginal(traj.final_state)}};
      write_file(out_path, payload.dump(2) + "\n");
    } else if (verify_cmd->parsed()) {
      manifest.subcommand = "verify";
      manifest.parameters = {{"suite", suite}};
      if (suite != "fast" && suite != "full")
        throw CLI::ValidationError("--suite", "fast or full");
      if (const char* mut = std::getenv("KPZ_MUTATE"); mut && std::string(mut) == "local-move")
        kpz::testing::mutate_local_move() = true;
      auto checks = kpz::verify::all_checks(suite == "fast");
      json results = json::array();
      bool all_pass = true;
      std::string first_failure;
      for (const auto& c : checks) {
        if (suite == "fast" && !c.fast) continue;
        if (!only_filter.empty() && c.name.find(only_filter) == std::string::npos) continue;
        auto r = kpz::verify::run_check(c);
        all_pass &= r.pass;
        if (!r.pass && first_failure.empty()) first_failure = r.name;
        std::printf("%-34s %s (%s) [%.0f ms]\n", r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.detail.c_str(), r.wall_ms);
        std::fflush(stdout);
        results.push_back(json{{"name", r.name}, {"pass", r.pass},
                               {"criterion", c.criterion}, {"detail", r.detail},
                               {"wall_ms", r.wall_ms}});
      }
      manifest.total_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
      json report{{"suite", suite}, {"pass", all_pass}, {"results", results},
                  {"total_ms", manifest.total_ms}};
      if (!out_path.empty()) write_file(out_path, report.dump(2) + "\n");
      if (!all_pass) {
        std::cerr << "verify: failed criterion check: " << first_failure << "\n";
        emit_manifest(manifest);
        return 2;
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  manifest.total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit_manifest(manifest);
  return 0;
}
