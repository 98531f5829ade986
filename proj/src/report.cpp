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

#include "kassign/report.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"

namespace kassign {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<SingularValue> singulars_from_chi(const MaxPolynomial& chi) {
  RootList asc = chi.roots();
  std::reverse(asc.begin(), asc.end());
  return asc;
}

}  // namespace

AlgoChoice parse_algo(const std::string& name) {
  if (name == "auto") return AlgoChoice::kAuto;
  if (name == "brute") return AlgoChoice::kBrute;
  if (name == "ssp") return AlgoChoice::kSsp;
  if (name == "gk") return AlgoChoice::kGk;
  if (name == "gk-fill") return AlgoChoice::kGkFill;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (want auto, brute, ssp, gk or gk-fill)");
}

SolverKind resolve_algo(AlgoChoice choice, int n) {
  switch (choice) {
    case AlgoChoice::kBrute: return SolverKind::kBruteForce;
    case AlgoChoice::kSsp: return SolverKind::kSuccessivePaths;
    case AlgoChoice::kGk: return SolverKind::kParametric;
    case AlgoChoice::kGkFill: return SolverKind::kParametricFill;
    case AlgoChoice::kAuto:
      return n <= kBruteForceBound ? SolverKind::kBruteForce
                                   : SolverKind::kParametricFill;
  }
  return SolverKind::kBruteForce;
}

RunReport solve_instance(const InstanceSpec& spec, const SolveOptions& opt,
                         const std::string& name) {
  auto [w, transform] = normalize(spec);
  RunReport rep;
  rep.instance_name = name;
  rep.transform = transform;
  rep.algo = resolve_algo(opt.algo, w.size());

  const auto t0 = Clock::now();
  switch (rep.algo) {
    case SolverKind::kBruteForce:
      rep.seq = solve_sequence_brute(w, opt.want_matchings);
      rep.solve_seconds = seconds_since(t0);
      rep.chi = rep.seq.fullchar();
      rep.singular_values = singulars_from_chi(rep.chi);
      break;
    case SolverKind::kSuccessivePaths:
      rep.seq = solve_sequence_ssp(w, opt.want_matchings);
      rep.solve_seconds = seconds_since(t0);
      rep.chi = rep.seq.fullchar();
      rep.singular_values = singulars_from_chi(rep.chi);
      break;
    case SolverKind::kParametric:
    case SolverKind::kParametricFill: {
      GkOptions gopt;
      gopt.trace = opt.want_trace;
      GkResult gk = solve_parametric(w, gopt);
      rep.solve_seconds = seconds_since(t0);
      if (rep.algo == SolverKind::kParametricFill) {
        const auto t1 = Clock::now();
        rep.seq = complete_sequence(w, gk);
        rep.fill_seconds = seconds_since(t1);
      } else {
        rep.seq = gk.sequence();
      }
      rep.chi = rep.seq.fullchar();
      rep.singular_values = gk.singular_values;
      rep.trace = std::move(gk.trace);
      break;
    }
  }
  rep.classes = rep.seq.classes_by_k();
  return rep;
}

std::string render_text(const RunReport& rep, bool with_matchings) {
  const Transform& tr = rep.transform;
  std::string out;
  out += "instance: " + (rep.instance_name.empty() ? "-" : rep.instance_name) + "\n";
  out += std::string("objective: ") +
         (tr.objective == Objective::kMax ? "max" : "min") + "\n";
  out += "size: " + std::to_string(tr.rows) + "x" + std::to_string(tr.cols) +
         " (n=" + std::to_string(tr.n) + ")\n";
  out += std::string("algorithm: ") + to_string(rep.algo) + "\n";
  out += "omegas:";
  for (int k = 1; k <= rep.seq.n; ++k)
    out += " " + tr.display_value(rep.seq.omegas[static_cast<size_t>(k)]);
  out += "\n";
  out += "polynomial: " + rep.chi.text() + "\n";
  out += "singular values:";
  for (const SingularValue& s : rep.singular_values)
    out += " (" + s.value.str() + "," + std::to_string(s.multiplicity) + ")";
  out += "\n";
  out += "classes:";
  for (TermClass c : rep.classes) out += " " + to_string(c);
  out += "\n";
  if (with_matchings) {
    out += "matchings:\n";
    for (int k = 1; k <= rep.seq.n; ++k) {
      const auto& m = rep.seq.matchings[static_cast<size_t>(k)];
      if (!m) continue;
      out += "  " + std::to_string(k) + ": " + m->str() + "\n";
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "time: solve=%.6fs fill=%.6fs", rep.solve_seconds,
                rep.fill_seconds);
  out += std::string(buf) + "\n";
  return out;
}

std::string render_json(const RunReport& rep, bool with_matchings) {
  using nlohmann::json;
  const Transform& tr = rep.transform;
  json j;
  j["schema"] = 1;
  j["instance"] = {{"name", rep.instance_name},
                   {"objective", tr.objective == Objective::kMax ? "max" : "min"},
                   {"rows", tr.rows},
                   {"cols", tr.cols},
                   {"n", tr.n}};
  j["algorithm"] = to_string(rep.algo);
  json omegas = json::array();
  for (int k = 1; k <= rep.seq.n; ++k)
    omegas.push_back(tr.display_value(rep.seq.omegas[static_cast<size_t>(k)]));
  j["omegas"] = std::move(omegas);
  json coeffs = json::array();
  for (const ExtReal& c : rep.chi.descending()) coeffs.push_back(c.str());
  j["polynomial"] = {{"text", rep.chi.text()}, {"coeffs_desc", std::move(coeffs)}};
  json sing = json::array();
  for (const SingularValue& s : rep.singular_values)
    sing.push_back(json::array({s.value.str(), s.multiplicity}));
  j["singular_values"] = std::move(sing);
  json classes = json::array();
  for (TermClass c : rep.classes) classes.push_back(to_string(c));
  j["classes"] = std::move(classes);
  if (with_matchings) {
    json ms = json::object();
    for (int k = 1; k <= rep.seq.n; ++k) {
      const auto& m = rep.seq.matchings[static_cast<size_t>(k)];
      if (!m) continue;
      json pairs = json::array();
      for (auto [r, c] : m->pairs()) pairs.push_back(json::array({r + 1, c + 1}));
      ms[std::to_string(k)] = std::move(pairs);
    }
    j["matchings"] = std::move(ms);
  }
  j["timing"] = {{"solve_s", rep.solve_seconds}, {"fill_s", rep.fill_seconds}};
  return j.dump(2) + "\n";
}

std::string render_trace(const RunReport& rep) {
  std::string out;
  for (const GkTraceEvent& ev : rep.trace) out += ev.str(rep.seq.n) + "\n";
  return out;
}

VerifyOutcome verify_sequences(const WeightMatrix& w,
                               const std::vector<AssignmentSequence>& seqs) {
  VerifyOutcome out;
  auto fail = [&](const std::string& note) {
    out.ok = false;
    out.notes.push_back(note);
  };
  if (seqs.empty()) {
    fail("nothing to verify");
    return out;
  }
  const int n = w.size();
  for (const AssignmentSequence& s : seqs) {
    const std::string who = to_string(s.source);
    if (s.n != n || static_cast<int>(s.omegas.size()) != n + 1) {
      fail(who + ": malformed sequence");
      continue;
    }
    if (!(s.omegas[0] == ExtReal(0))) fail(who + ": omega_0 is not 0");
    if (!s.is_concave()) fail(who + ": omega increments are not concave");
    for (int k = 0; k <= n; ++k) {
      const auto& m = s.matchings[static_cast<size_t>(k)];
      if (!m) continue;
      if (m->size() != k) fail(who + ": witness at k=" + std::to_string(k) +
                               " has wrong cardinality");
      else if (!m->is_valid(n))
        fail(who + ": witness at k=" + std::to_string(k) + " is not a matching");
      else if (!(m->weight(w) == s.omegas[static_cast<size_t>(k)]))
        fail(who + ": witness weight at k=" + std::to_string(k) +
             " is " + m->weight(w).str() + ", omega says " +
             s.omegas[static_cast<size_t>(k)].str());
    }
  }
  for (size_t t = 1; t < seqs.size(); ++t) {
    for (int k = 0; k <= n; ++k) {
      if (!(seqs[t].omegas[static_cast<size_t>(k)] ==
            seqs[0].omegas[static_cast<size_t>(k)])) {
        fail(std::string(to_string(seqs[t].source)) + " vs " +
             to_string(seqs[0].source) + ": omega_" + std::to_string(k) +
             " differs: " + seqs[t].omegas[static_cast<size_t>(k)].str() +
             " vs " + seqs[0].omegas[static_cast<size_t>(k)].str());
      }
    }
  }
  return out;
}

}  // namespace kassign
