// Copyright 2026 The Delivery Mechanisms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
// Exit codes: 0 success, 1 invalid input or unmet precondition, 2 cap
// exceeded, 3 an audit check that must hold failed.

#include <CLI11.hpp>

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "delivery/analysis.hpp"

namespace fs = std::filesystem;
using namespace delivery;
using delivery::io::Json;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitAudit = 3;

const std::vector<std::string> kAlgorithms = {"apos", "astar", "am", "am-improved", "ak-exact",
                                              "ak-approx", "single-opt", "single-lonely", "oracle",
                                              "oracle-noc"};

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    io::write_json_file(out, j);
  }
}

WeightVector weights_or_default(const std::string& path, const Instance& inst) {
  return path.empty() ? inst.weights() : io::weights_from_json(io::read_json_file(path));
}

SolveResult run_named(const std::string& algorithm, const Instance& inst, const DistanceOracle& dist,
                      const WeightVector& w, std::uint64_t cap) {
  if (algorithm == "apos") return make_result("apos", inst, dist, solve_apos(inst, dist), w);
  if (algorithm == "astar") return solve_astar(inst, dist, w).chosen;
  if (algorithm == "am") return solve_am_basic(inst, dist, w, cap);
  if (algorithm == "am-improved") return solve_am_improved(inst, dist, w, cap).best;
  if (algorithm == "ak-exact") return solve_ak(inst, dist, w, ScpMode::kExact, false, cap).chosen;
  if (algorithm == "ak-approx") return solve_ak(inst, dist, w, ScpMode::kApprox, false, cap).chosen;
  if (algorithm == "single-opt") return solve_single_optimal(inst, dist, w).result;
  if (algorithm == "single-lonely") return solve_single_lonely(inst, dist, w).result;
  if (algorithm == "oracle") return solve_oracle(inst, dist, w, Collaboration::kAllowed, cap);
  return solve_oracle(inst, dist, w, Collaboration::kForbidden, cap);
}

int cmd_solve(const std::string& instance_path, const std::string& algorithm, const std::string& weights_path,
              const std::string& out, int decimal) {
  const Instance inst = io::load_instance(instance_path);
  const DistanceOracle dist = all_pairs_distances(inst);
  const WeightVector w = weights_or_default(weights_path, inst);
  const std::uint64_t cap = cap_from_env(kDefaultEnumerationCap);
  const SolveResult r = run_named(algorithm, inst, dist, w, cap);
  const FeasibilityReport feasible = validate_solution(inst, r.solution);
  Json distances = Json::object();
  for (const auto& [id, d] : r.distance) distances[std::to_string(id)] = d.str();
  Json j = {{"algorithm", algorithm},
            {"solution_tag", r.tag},
            {"feasible", feasible.feasible},
            {"solution", io::solution_to_json(r.solution, inst)},
            {"distances", distances},
            {"cost", io::cost_to_json(r.cost, decimal)}};
  emit(j, out);
  return 0;
}

int cmd_mechanize(const std::string& instance_path, const std::string& mechanism, const std::string& reported_path,
                  const std::string& true_path, const std::string& out, int decimal) {
  const auto kind = parse_mechanism(mechanism);
  if (!kind) throw InputError("unknown mechanism '" + mechanism + "'");
  const Instance inst = io::load_instance(instance_path);
  const DistanceOracle dist = all_pairs_distances(inst);
  const WeightVector reported = weights_or_default(reported_path, inst);
  const WeightVector truth = weights_or_default(true_path, inst);
  const MechanismOutcome o = run_mechanism(*kind, inst, dist, reported, truth, cap_from_env(kDefaultEnumerationCap));
  emit(outcome_to_json(o, inst, decimal), out);
  return 0;
}

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct AuditOptions {
  std::uint64_t seed = 1;
  int count = 200;
  std::string mechanisms = "astar,am,ak-exact,ak-approx,single-opt,single-lonely";
  std::string checks = "truthfulness,vp";
  std::string out;
  int jobs = 1;
  std::string family = "random";
  analysis::RandomSpec spec;
};

int cmd_audit(const AuditOptions& opt) {
  std::vector<MechanismKind> kinds;
  for (const std::string& name : split(opt.mechanisms)) {
    const auto k = parse_mechanism(name);
    if (!k) throw InputError("unknown mechanism '" + name + "'");
    kinds.push_back(*k);
  }
  const std::vector<std::string> checks = split(opt.checks);
  for (const std::string& c : checks) {
    if (c != "truthfulness" && c != "vp" && c != "frugality" && c != "boc" && c != "ratios") {
      throw InputError("unknown check '" + c + "'");
    }
  }
  const std::uint64_t cap = cap_from_env(kDefaultEnumerationCap);
  const analysis::AuditCorpus corpus = opt.family == "relay" ? analysis::make_relay_corpus(opt.seed, opt.count)
                                                              : analysis::make_corpus(opt.seed, opt.count, opt.spec);

  // Each worker fills whole slots; the report is written in corpus order.
  std::vector<std::vector<analysis::AuditRecord>> slots(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        auto& recs = slots[i];
        for (const std::string& c : checks) {
          if (c == "truthfulness" || c == "vp") {
            for (MechanismKind k : kinds) {
              auto r = c == "truthfulness" ? analysis::audit_truthfulness(corpus[i], k, cap)
                                           : analysis::audit_vp(corpus[i], k, cap);
              recs.insert(recs.end(), r.begin(), r.end());
            }
          } else if (c == "frugality") {
            auto r = analysis::audit_frugality_records(corpus[i]);
            recs.insert(recs.end(), r.begin(), r.end());
          } else if (c == "boc") {
            auto r = analysis::audit_boc(corpus[i]);
            recs.insert(recs.end(), r.begin(), r.end());
          } else {
            auto r = analysis::audit_ratios(corpus[i], cap);
            recs.insert(recs.end(), r.begin(), r.end());
          }
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, opt.jobs); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::ofstream file;
  if (!opt.out.empty()) {
    if (fs::path(opt.out).has_parent_path()) fs::create_directories(fs::path(opt.out).parent_path());
    file.open(opt.out);
    if (!file) throw InputError("cannot write '" + opt.out + "'");
  }
  std::ostream& os = opt.out.empty() ? std::cout : file;
  std::size_t total = 0, failures = 0, witnesses = 0;
  for (const auto& recs : slots) {
    for (const auto& r : recs) {
      os << analysis::to_json(r).dump() << "\n";
      ++total;
      failures += analysis::is_failure(r) ? 1 : 0;
      witnesses += r.result == analysis::CheckResult::kWitness ? 1 : 0;
    }
  }
  std::cerr << "audit: " << corpus.size() << " instances, " << total << " records, " << failures << " failures, "
            << witnesses << " witnesses\n";
  return failures == 0 ? 0 : kExitAudit;
}

std::string path_in(const std::string& dir, const std::string& name) { return (fs::path(dir) / name).string(); }

struct GenOptions {
  std::string family;
  int k = 10;
  std::string eps = "1", L = "1000", D = "1";
  std::uint64_t seed = 1;
  int count = 1;
  std::string out = ".";
  analysis::RandomSpec spec;
};

int cmd_gen(const GenOptions& opt) {
  if (opt.family == "path") {
    io::save_instance(path_in(opt.out, "path-k" + std::to_string(opt.k) + ".json"), analysis::gen_path_family(opt.k));
  } else if (opt.family == "monopoly") {
    auto r = [](const std::string& s) { return io::rational_from_json(Json(s)); };
    io::save_instance(path_in(opt.out, "monopoly.json"), analysis::gen_monopoly_example(r(opt.eps), r(opt.L), r(opt.D)));
  } else if (opt.family == "random") {
    for (const auto& e : analysis::make_corpus(opt.seed, opt.count, opt.spec)) {
      io::save_instance(path_in(opt.out, "random-seed" + std::to_string(e.seed) + ".json"), e.instance);
    }
  } else if (opt.family == "figures") {
    for (const auto& f : analysis::figure_replicas()) io::save_instance(path_in(opt.out, f.name + ".json"), f.instance);
    const Instance fig2 = analysis::fig2_instance();
    io::write_json_file(path_in(opt.out, "fig2-collaborative-solution.json"),
                        io::solution_to_json(analysis::fig2_collaborative_solution(), fig2));
  } else {
    throw InputError("unknown family '" + opt.family + "'");
  }
  return 0;
}

int cmd_boc(const std::string& instance_path, const std::string& out) {
  const Instance inst = io::load_instance(instance_path);
  emit(analysis::to_json(analysis::measure_boc(inst, cap_from_env(kDefaultOracleStateCap))), out);
  return 0;
}

void add_spec_flags(CLI::App* cmd, analysis::RandomSpec& spec) {
  cmd->add_option("--n-min", spec.n_min, "Fewest nodes");
  cmd->add_option("--n-max", spec.n_max, "Most nodes");
  cmd->add_option("--k-min", spec.k_min, "Fewest agents");
  cmd->add_option("--k-max", spec.k_max, "Most agents");
  cmd->add_option("--m-min", spec.m_min, "Fewest packages");
  cmd->add_option("--m-max", spec.m_max, "Most packages");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-optimal package delivery by weighted agents, with truthful payments"};
  app.require_subcommand(1);

  std::string instance, algorithm, weights, out, mechanism, reported, truth;
  int decimal = -1;

  auto* solve = app.add_subcommand("solve", "Run one delivery algorithm");
  solve->add_option("--instance", instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  solve->add_option("--algorithm", algorithm, "Algorithm")->required()->check(CLI::IsMember(kAlgorithms));
  solve->add_option("--weights", weights, "Weights JSON (default: the instance weights)");
  solve->add_option("--out", out, "Output file (default: stdout)");
  solve->add_option("--decimal", decimal, "Also print the total with N decimal digits");

  auto* mech = app.add_subcommand("mechanize", "Run a mechanism: solution, payments, utilities");
  mech->add_option("--instance", instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  mech->add_option("--mechanism", mechanism, "astar|am|ak-exact|ak-approx|single-opt|single-lonely|apos-naive")
      ->required();
  mech->add_option("--reported", reported, "Reported weights JSON (default: instance weights)");
  mech->add_option("--true", truth, "True weights JSON (default: instance weights)");
  mech->add_option("--out", out, "Output file (default: stdout)");
  mech->add_option("--decimal", decimal, "Also print totals with N decimal digits");

  AuditOptions audit_opt;
  auto* audit = app.add_subcommand("audit", "Audit mechanisms over a seeded random corpus (JSON lines)");
  audit->add_option("--corpus-seed", audit_opt.seed, "First seed");
  audit->add_option("--count", audit_opt.count, "Number of instances");
  audit->add_option("--mechanisms", audit_opt.mechanisms, "Comma-separated mechanisms");
  audit->add_option("--checks", audit_opt.checks, "Comma-separated: truthfulness,vp,frugality,boc,ratios");
  audit->add_option("--out", audit_opt.out, "Output file (default: stdout)");
  audit->add_option("--jobs", audit_opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  audit->add_option("--family", audit_opt.family, "random|relay")->check(CLI::IsMember({"random", "relay"}));
  add_spec_flags(audit, audit_opt.spec);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Write instance files");
  gen->add_option("--family", gen_opt.family, "path|monopoly|random|figures")
      ->required()
      ->check(CLI::IsMember({"path", "monopoly", "random", "figures"}));
  gen->add_option("--k", gen_opt.k, "Path family size");
  gen->add_option("--eps", gen_opt.eps, "Monopoly: cheap weight");
  gen->add_option("--L", gen_opt.L, "Monopoly: expensive weight");
  gen->add_option("--D", gen_opt.D, "Monopoly: package distance");
  gen->add_option("--seed", gen_opt.seed, "Random: first seed");
  gen->add_option("--count", gen_opt.count, "Random: number of instances");
  gen->add_option("--out", gen_opt.out, "Output directory");
  add_spec_flags(gen, gen_opt.spec);

  auto* boc = app.add_subcommand("boc", "Benefit of collaboration of one instance");
  boc->add_option("--instance", instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  boc->add_option("--out", out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve) return cmd_solve(instance, algorithm, weights, out, decimal);
    if (*mech) return cmd_mechanize(instance, mechanism, reported, truth, out, decimal);
    if (*audit) return cmd_audit(audit_opt);
    if (*gen) return cmd_gen(gen_opt);
    if (*boc) return cmd_boc(instance, out);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
