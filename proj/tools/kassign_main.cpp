// Copyright 2026 The kassign Authors
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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kassign/report.hpp"

namespace {

using namespace kassign;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

InstanceSpec load_spec(const std::string& path, bool force_min) {
  InstanceSpec spec = parse_instance(read_input(path));
  if (force_min) spec.objective = Objective::kMin;
  return spec;
}

Rational parse_rational_arg(const std::string& text, const char* what) {
  auto r = Rational::parse(text);
  if (!r) throw std::invalid_argument(std::string("invalid ") + what + " '" + text + "'");
  return *r;
}

struct CommonFlags {
  std::string format = "text";
  std::string algo = "auto";
  bool force_min = false;
  std::string trace_path;
  uint64_t seed = 1;
};

int cmd_solve(const std::string& path, const CommonFlags& flags, bool with_matchings) {
  SolveOptions opt;
  opt.algo = parse_algo(flags.algo);
  opt.want_matchings = with_matchings;
  opt.want_trace = !flags.trace_path.empty();
  RunReport rep = solve_instance(load_spec(path, flags.force_min), opt, path);
  if (!flags.trace_path.empty()) write_output(flags.trace_path, render_trace(rep));
  write_output("", flags.format == "json" ? render_json(rep, with_matchings)
                                          : render_text(rep, with_matchings));
  return kExitOk;
}

int cmd_verify(const std::string& path, const CommonFlags& flags,
               std::string algos_arg) {
  InstanceSpec spec = load_spec(path, flags.force_min);
  auto [w, transform] = normalize(spec);

  std::vector<AlgoChoice> algos;
  if (algos_arg.empty())
    algos_arg = w.size() <= kBruteForceBound ? "brute,ssp,gk,gk-fill" : "ssp,gk,gk-fill";
  std::stringstream ss(algos_arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) algos.push_back(parse_algo(tok));
  }
  if (algos.empty()) throw std::invalid_argument("no algorithms to verify");

  std::vector<AssignmentSequence> seqs;
  for (AlgoChoice a : algos) {
    switch (resolve_algo(a, w.size())) {
      case SolverKind::kBruteForce:
        seqs.push_back(solve_sequence_brute(w));
        break;
      case SolverKind::kSuccessivePaths:
        seqs.push_back(solve_sequence_ssp(w));
        break;
      case SolverKind::kParametric:
        seqs.push_back(solve_parametric(w).sequence());
        break;
      case SolverKind::kParametricFill:
        seqs.push_back(complete_sequence(w, solve_parametric(w)));
        break;
    }
  }
  VerifyOutcome out = verify_sequences(w, seqs);
  if (flags.format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["instance"] = path;
    j["ok"] = out.ok;
    j["notes"] = out.notes;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (out.ok ? "verify: PASS" : "verify: FAIL") << " (" << path << ", "
              << seqs.size() << " solvers)\n";
    for (const std::string& note : out.notes) std::cout << "  " << note << "\n";
  }
  return out.ok ? kExitOk : kExitMismatch;
}

int cmd_bench(const std::vector<int>& sizes, const CommonFlags& flags,
              long long lo, long long hi, const std::string& density_arg) {
  using Clock = std::chrono::steady_clock;
  Rational density = parse_rational_arg(density_arg, "density");
  nlohmann::json rows = nlohmann::json::array();
  for (int n : sizes) {
    WeightMatrix w =
        generate_instance(n, lo, hi, density, flags.seed ^ static_cast<uint64_t>(n));
    AlgoChoice choice = parse_algo(flags.algo);
    SolverKind kind = resolve_algo(choice, n);
    double solve_s = 0, fill_s = 0;
    int reported = -1;
    auto t0 = Clock::now();
    switch (kind) {
      case SolverKind::kBruteForce:
        solve_sequence_brute(w, false);
        solve_s = std::chrono::duration<double>(Clock::now() - t0).count();
        break;
      case SolverKind::kSuccessivePaths:
        solve_sequence_ssp(w, false);
        solve_s = std::chrono::duration<double>(Clock::now() - t0).count();
        break;
      case SolverKind::kParametric:
      case SolverKind::kParametricFill: {
        GkResult gk = solve_parametric(w);
        solve_s = std::chrono::duration<double>(Clock::now() - t0).count();
        reported = static_cast<int>(gk.reports.size());
        if (kind == SolverKind::kParametricFill) {
          auto t1 = Clock::now();
          complete_sequence(w, gk);
          fill_s = std::chrono::duration<double>(Clock::now() - t1).count();
        }
        break;
      }
    }
    if (flags.format == "json") {
      nlohmann::json row = {{"n", n},
                            {"algo", to_string(kind)},
                            {"seed", flags.seed ^ static_cast<uint64_t>(n)},
                            {"solve_s", solve_s},
                            {"fill_s", fill_s}};
      if (reported >= 0) row["reported"] = reported;
      rows.push_back(std::move(row));
    } else {
      std::printf("n=%-6d algo=%-8s solve=%.6fs", n, to_string(kind), solve_s);
      if (kind == SolverKind::kParametricFill) std::printf(" fill=%.6fs", fill_s);
      if (reported >= 0) std::printf(" reported=%d", reported);
      std::printf("\n");
    }
  }
  if (flags.format == "json") std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

int cmd_gen(int n, const CommonFlags& flags, long long lo, long long hi,
            const std::string& density_arg, const std::string& out_path) {
  Rational density = parse_rational_arg(density_arg, "density");
  WeightMatrix w = generate_instance(n, lo, hi, density, flags.seed);
  std::string comment = std::string("generator: ") + SplitMix64::kName +
                        " seed=" + std::to_string(flags.seed) +
                        " n=" + std::to_string(n) + " range=[" + std::to_string(lo) +
                        "," + std::to_string(hi) + "] density=" + density.str();
  write_output(out_path, serialize_instance(spec_from_matrix(w), {comment}));
  return kExitOk;
}

int cmd_poly(const std::string& path, const CommonFlags& flags,
             const std::string& eval_at) {
  SolveOptions opt;
  opt.algo = parse_algo(flags.algo);
  opt.want_matchings = false;
  RunReport rep = solve_instance(load_spec(path, flags.force_min), opt, path);
  RootList roots = rep.chi.roots();
  if (flags.format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["instance"] = path;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const ExtReal& c : rep.chi.descending()) coeffs.push_back(c.str());
    j["polynomial"] = {{"text", rep.chi.text()}, {"coeffs_desc", std::move(coeffs)}};
    nlohmann::json jr = nlohmann::json::array();
    for (const RootEntry& r : roots)
      jr.push_back(nlohmann::json::array({r.value.str(), r.multiplicity}));
    j["roots"] = std::move(jr);
    nlohmann::json jc = nlohmann::json::array();
    for (TermClass c : rep.classes) jc.push_back(to_string(c));
    j["classes"] = std::move(jc);
    if (!eval_at.empty()) {
      auto x = ExtReal::parse(eval_at);
      if (!x) throw std::invalid_argument("invalid evaluation point '" + eval_at + "'");
      j["eval"] = {{"x", x->str()}, {"value", rep.chi.eval(*x).str()}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "polynomial: " << rep.chi.text() << "\n";
    std::cout << "roots:";
    for (const RootEntry& r : roots)
      std::cout << " (" << r.value.str() << "," << r.multiplicity << ")";
    std::cout << "\nclasses:";
    for (TermClass c : rep.classes) std::cout << " " << to_string(c);
    std::cout << "\n";
    if (!eval_at.empty()) {
      auto x = ExtReal::parse(eval_at);
      if (!x) throw std::invalid_argument("invalid evaluation point '" + eval_at + "'");
      std::cout << "p(" << x->str() << ") = " << rep.chi.eval(*x).str() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequence of k-cardinality assignments over the max-plus semifield"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags flags;
  app.add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--algo", flags.algo, "solver: auto, brute, ssp, gk, gk-fill");
  app.add_option("--seed", flags.seed, "generator seed");
  app.add_flag("--min", flags.force_min, "treat the instance as a minimization problem");
  app.add_option("--trace", flags.trace_path,
                 "write the parametric pivot trace to this file ('-' for stdout)");

  std::string in_path, out_path, algos_arg, density = "0", eval_at;
  bool no_matchings = false;
  std::pair<long long, long long> range{-5, 5};
  int gen_n = 4;
  std::vector<int> sizes{100, 200, 400};

  CLI::App* solve = app.add_subcommand("solve", "solve the whole cardinality sequence");
  solve->add_option("instance", in_path, "instance file ('-' for stdin)")->required();
  solve->add_flag("--no-matchings", no_matchings, "omit witness matchings");

  CLI::App* verify = app.add_subcommand("verify", "cross-check several solvers");
  verify->add_option("instance", in_path, "instance file ('-' for stdin)")->required();
  verify->add_option("--algos", algos_arg, "comma-separated solver list");

  CLI::App* bench = app.add_subcommand("bench", "time solvers on generated instances");
  bench->add_option("--sizes", sizes, "instance sizes")->delimiter(',');
  bench->add_option("--range", range, "weight range: LO HI");
  bench->add_option("--density", density, "probability of an absent entry");

  CLI::App* gen = app.add_subcommand("gen", "write a random instance");
  gen->add_option("-n,--size", gen_n, "matrix side");
  gen->add_option("--range", range, "weight range: LO HI");
  gen->add_option("--density", density, "probability of an absent entry");
  gen->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* poly = app.add_subcommand("poly", "print the characteristic maxpolynomial");
  poly->add_option("instance", in_path, "instance file ('-' for stdin)")->required();
  poly->add_option("--at", eval_at, "also evaluate at this point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(in_path, flags, !no_matchings);
    if (verify->parsed()) return cmd_verify(in_path, flags, algos_arg);
    if (bench->parsed()) return cmd_bench(sizes, flags, range.first, range.second, density);
    if (gen->parsed()) return cmd_gen(gen_n, flags, range.first, range.second, density, out_path);
    if (poly->parsed()) return cmd_poly(in_path, flags, eval_at);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
