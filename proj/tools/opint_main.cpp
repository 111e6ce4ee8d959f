// Copyright 2026 The opint authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  All numerical work goes through the C API in
// opint.h; this file only parses flags, moves files around and maps verdicts
// to exit codes (0 = success and all verdicts pass, 1 = a verdict failed,
// 2 = usage error).

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opint.h"

namespace {

struct BufferGuard {
  opint_buffer* b = nullptr;
  ~BufferGuard() { opint_buffer_free(b); }
};

struct MatrixGuard {
  opint_matrix* m = nullptr;
  ~MatrixGuard() { opint_matrix_free(m); }
};

int fail(opint_status status) {
  std::cerr << "error (" << opint_status_name(status) << "): " << opint_last_error() << "\n";
  return 2;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_file,
                  const std::string& out_dir, const std::string& default_name) {
  std::string path = out_file;
  if (path.empty() && !out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    path = (std::filesystem::path(out_dir) / default_name).string();
  }
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<double> parse_p_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "inf") {
      out.push_back(std::numeric_limits<double>::infinity());
    } else {
      out.push_back(std::stod(item));
    }
  }
  if (out.empty()) throw std::runtime_error("empty p list");
  return out;
}

std::vector<int> parse_n_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::runtime_error("empty N list");
  return out;
}

std::vector<double> parse_eps_list(const std::string& csv) {
  std::vector<double> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"opint: double/triple operator integrals, divided differences, "
               "Schatten-norm experiments"};
  app.require_subcommand(0, 1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  app.add_option("--config", config_path, "JSON config mirroring the command flags");

  uint64_t seed = 0x5EED;
  std::string out_file, out_dir;
  app.add_option("--seed", seed, "PRNG seed (default 0x5EED)");
  app.add_option("--out", out_file, "output file ('-' for stdout)");
  app.add_option("--outdir", out_dir, "output directory with default file names");

  // decompose
  auto* dec = app.add_subcommand("decompose", "spectral decomposition of a matrix");
  std::string dec_in, dec_kind = "hermitian";
  double dec_tol = -1.0;
  dec->add_option("--in", dec_in, "matrix JSON file")->required();
  dec->add_option("--kind", dec_kind, "hermitian|unitary");
  dec->add_option("--tol", dec_tol, "kind-check tolerance (default 1e-10 scaled)");

  // apply
  auto* appf = app.add_subcommand("apply", "f(A,B) or f(U,V) from files");
  std::string ap_f, ap_a, ap_b;
  bool ap_unitary = false;
  appf->add_option("--f", ap_f, "trig polynomial JSON file")->required();
  appf->add_option("--A", ap_a, "first matrix JSON file")->required();
  appf->add_option("--B", ap_b, "second matrix JSON file")->required();
  appf->add_flag("--unitary", ap_unitary, "treat the pair as unitary");

  // verify
  auto* ver = app.add_subcommand("verify", "perturbation-identity residuals");
  std::string ver_id;
  int ver_dims = 8, ver_trials = 200;
  double ver_tol = 1e-8;
  ver->add_option("identity", ver_id, "7.1 | 12.1 | 10.2")->required();
  ver->add_option("--dims", ver_dims, "max dimension (default 8)");
  ver->add_option("--trials", ver_trials, "trial count (default 200)");
  ver->add_option("--tol", ver_tol, "residual tolerance (default 1e-8)");

  // counterexample
  auto* ce = app.add_subcommand("counterexample", "growth-law scan of the DFT family");
  std::string ce_n = "4,16,64,256", ce_p = "1,2,4,inf", ce_eps;
  ce->add_option("--N", ce_n, "comma list of sizes");
  ce->add_option("--p", ce_p, "comma list of exponents ('inf' allowed)");
  ce->add_option("--eps", ce_eps, "optional comma list of scales");

  // scan
  auto* sc = app.add_subcommand("scan", "Lipschitz-ratio scan over a family");
  std::string sc_family = "counterexample", sc_n = "4,8,16", sc_p = "1,2,4";
  int sc_trials = 10;
  sc->add_option("--family", sc_family, "counterexample|random-trigpoly|class-C");
  sc->add_option("--N", sc_n, "comma list of sizes");
  sc->add_option("--p", sc_p, "comma list of exponents");
  sc->add_option("--trials", sc_trials, "trials per (N, p) cell");

  // besov
  auto* be = app.add_subcommand("besov", "Besov norm of a trig polynomial");
  std::string be_f;
  be->add_option("--trigpoly", be_f, "trig polynomial JSON file")->required();

  // audit
  auto* au = app.add_subcommand("audit", "randomized Schatten-bound audits");
  std::string au_thm = "all";
  int au_trials = 100, au_dims = 8;
  au->add_option("--theorem", au_thm, "4.1|4.3i|4.3ii|4.3iii|5.1|5.2|all");
  au->add_option("--trials", au_trials, "trials per theorem (default 100)");
  au->add_option("--dims", au_dims, "max dimension (default 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    // A config file can stand in for a subcommand; flags on the command line
    // win where both are given.
    std::string config_command;
    if (!config_path.empty()) {
      nlohmann::json cfg = nlohmann::json::parse(read_file(config_path));
      if (cfg.contains("seed")) seed = cfg["seed"].get<uint64_t>();
      if (cfg.contains("out")) out_file = cfg["out"].get<std::string>();
      if (cfg.contains("outdir")) out_dir = cfg["outdir"].get<std::string>();
      auto list_to_csv = [](const nlohmann::json& arr) {
        std::string s;
        for (const auto& v : arr) {
          if (!s.empty()) s += ',';
          if (v.is_string()) {
            s += v.get<std::string>();
          } else if (v.is_number_integer()) {
            s += std::to_string(v.get<long long>());
          } else {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
            s += buf;
          }
        }
        return s;
      };
      config_command = cfg.value("command", "");
      if (config_command == "counterexample") {
        if (cfg.contains("N")) ce_n = list_to_csv(cfg["N"]);
        if (cfg.contains("p")) ce_p = list_to_csv(cfg["p"]);
        if (cfg.contains("eps")) ce_eps = list_to_csv(cfg["eps"]);
      } else if (config_command == "scan") {
        if (cfg.contains("family")) sc_family = cfg["family"].get<std::string>();
        if (cfg.contains("N")) sc_n = list_to_csv(cfg["N"]);
        if (cfg.contains("p")) sc_p = list_to_csv(cfg["p"]);
        if (cfg.contains("trials")) sc_trials = cfg["trials"].get<int>();
      } else if (config_command == "verify") {
        ver_id = cfg.value("identity", "7.1");
        if (cfg.contains("dims")) ver_dims = cfg["dims"].get<int>();
        if (cfg.contains("trials")) ver_trials = cfg["trials"].get<int>();
        if (cfg.contains("tol")) ver_tol = cfg["tol"].get<double>();
      } else if (config_command == "audit") {
        if (cfg.contains("theorem")) au_thm = cfg["theorem"].get<std::string>();
        if (cfg.contains("trials")) au_trials = cfg["trials"].get<int>();
        if (cfg.contains("dims")) au_dims = cfg["dims"].get<int>();
      } else if (config_command == "besov") {
        if (cfg.contains("trigpoly")) be_f = cfg["trigpoly"].get<std::string>();
      } else if (config_command == "decompose") {
        if (cfg.contains("in")) dec_in = cfg["in"].get<std::string>();
        if (cfg.contains("kind")) dec_kind = cfg["kind"].get<std::string>();
        if (cfg.contains("tol")) dec_tol = cfg["tol"].get<double>();
      } else if (!config_command.empty()) {
        std::cerr << "error: unknown command in config: " << config_command << "\n";
        return 2;
      }
    }

    if (dec->parsed() || config_command == "decompose") {
      MatrixGuard m;
      opint_status st = opint_matrix_from_json(read_file(dec_in).c_str(), &m.m);
      if (st != OPINT_OK) return fail(st);
      BufferGuard out;
      st = opint_decompose(m.m, dec_kind.c_str(), dec_tol, &out.b);
      if (st != OPINT_OK) return fail(st);
      write_output(opint_buffer_data(out.b), out_file, out_dir, "decompose.json");
      return 0;
    }

    if (appf->parsed() || config_command == "apply") {
      MatrixGuard a, b, result;
      opint_status st = opint_matrix_from_json(read_file(ap_a).c_str(), &a.m);
      if (st != OPINT_OK) return fail(st);
      st = opint_matrix_from_json(read_file(ap_b).c_str(), &b.m);
      if (st != OPINT_OK) return fail(st);
      std::string fjson = read_file(ap_f);
      st = ap_unitary ? opint_apply_fuv(fjson.c_str(), a.m, b.m, &result.m)
                      : opint_apply_fab(fjson.c_str(), a.m, b.m, &result.m);
      if (st != OPINT_OK) return fail(st);
      BufferGuard out;
      st = opint_matrix_to_json(result.m, &out.b);
      if (st != OPINT_OK) return fail(st);
      write_output(opint_buffer_data(out.b), out_file, out_dir, "apply.json");
      return 0;
    }

    if (ver->parsed() || config_command == "verify") {
      BufferGuard out;
      double max_residual = 0.0;
      opint_status st = opint_verify(ver_id.c_str(), ver_dims, ver_trials, seed, ver_tol,
                                     &out.b, &max_residual);
      if (st != OPINT_OK) return fail(st);
      write_output(opint_buffer_data(out.b), out_file, out_dir, "verify.csv");
      std::cerr << "max residual " << max_residual << " (tol " << ver_tol << ")\n";
      return max_residual <= ver_tol ? 0 : 1;
    }

    if (ce->parsed() || config_command == "counterexample") {
      std::vector<int> ns = parse_n_list(ce_n);
      std::vector<double> ps = parse_p_list(ce_p);
      std::vector<double> eps = parse_eps_list(ce_eps);
      BufferGuard out;
      int failures = 0;
      opint_status st = opint_counterexample(ns.data(), ns.size(), ps.data(), ps.size(),
                                             eps.empty() ? nullptr : eps.data(), eps.size(),
                                             &out.b, &failures);
      if (st != OPINT_OK) return fail(st);
      write_output(opint_buffer_data(out.b), out_file, out_dir, "counterexample.csv");
      return failures == 0 ? 0 : 1;
    }

    if (sc->parsed() || config_command == "scan") {
      std::vector<int> ns = parse_n_list(sc_n);
      std::vector<double> ps = parse_p_list(sc_p);
      BufferGuard out;
      int failures = 0;
      opint_status st = opint_scan(sc_family.c_str(), ns.data(), ns.size(), ps.data(),
                                   ps.size(), sc_trials, seed, &out.b, &failures);
      if (st != OPINT_OK) return fail(st);
      write_output(opint_buffer_data(out.b), out_file, out_dir, "scan.csv");
      return failures == 0 ? 0 : 1;
    }

    if (be->parsed() || config_command == "besov") {
      double norm = 0.0;
      opint_status st = opint_besov_norm(read_file(be_f).c_str(), &norm);
      if (st != OPINT_OK) return fail(st);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g\n", norm);
      write_output(buf, out_file, out_dir, "besov.txt");
      return 0;
    }

    if (au->parsed() || config_command == "audit") {
      BufferGuard out;
      int failures = 0;
      opint_status st =
          opint_audit(au_thm.c_str(), au_trials, au_dims, seed, &out.b, &failures);
      if (st != OPINT_OK) return fail(st);
      write_output(opint_buffer_data(out.b), out_file, out_dir, "audit.csv");
      return failures == 0 ? 0 : 1;
    }

    std::cerr << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
