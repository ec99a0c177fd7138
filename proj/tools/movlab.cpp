// movlab command line: generate tournaments, compute winner sets and
// margins of victory, run the experiment grid, and verify structural
// properties.
//
// Exit codes: 0 success, 1 invalid input or config, 2 size/search guard
// exceeded, 3 property-suite failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "movlab/movlab.hpp"

namespace {

using namespace movlab;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Accepts a TRN1 file path or "fixture:<name[:params]>".
Tournament load_tournament(const std::string& file) {
  constexpr const char* kPrefix = "fixture:";
  if (file.rfind(kPrefix, 0) == 0) return build_fixture(file.substr(std::string(kPrefix).size()));
  return parse_trn(read_file(file));
}

uint64_t resolve_seed(const CLI::App* cmd, const std::string& flag, uint64_t value) {
  if (cmd->count(flag) > 0) return value;
  if (const char* env = std::getenv("MOVLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError("MOVLAB_SEED is not an integer: '" + std::string(env) + "'");
    }
  }
  return value;
}

int run_gen(const CLI::App* cmd, const std::string& model, int n, uint64_t seed, int count,
            const std::string& out_dir, double p, int voters, double alpha_factor, double phi) {
  GeneratorConfig cfg;
  cfg.model = parse_model(model);
  cfg.n = n;
  cfg.p = p;
  cfg.voters = voters;
  cfg.alpha_factor = alpha_factor;
  cfg.phi = phi;
  const uint64_t master = resolve_seed(cmd, "--seed", seed);

  std::filesystem::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    cfg.seed = sample_seed(master, 0, n, i);
    const Tournament t = generate(cfg);
    char name[32];
    std::snprintf(name, sizeof(name), "t_%04d.trn", i);
    const auto path = std::filesystem::path(out_dir) / name;
    write_file(path.string(), serialize_trn(t));
    std::cout << path.string() << "\n";
  }
  return 0;
}

int run_solve(const std::string& file, const std::string& solution, int ba_guard) {
  const Tournament t = load_tournament(file);
  const SolutionId s = SolutionId::parse(solution);
  const WinnerSet result = winners(t, s, ba_guard);
  for (int x : result.members) std::cout << x << "\n";
  return 0;
}

int run_mov(const std::string& file, const std::string& solution, std::optional<int> alternative,
            bool with_witness, int ba_guard) {
  const Tournament t = load_tournament(file);
  const SolutionId s = SolutionId::parse(solution);
  auto print_one = [&](int x, const MovResult& r) {
    std::cout << x << "\t" << to_string(r.value);
    if (with_witness) {
      std::cout << "\t";
      const auto& edges = r.witness.edges();
      for (size_t i = 0; i < edges.size(); ++i) {
        if (i > 0) std::cout << " ";
        std::cout << to_string(edges[i]);
      }
    }
    std::cout << "\n";
  };
  if (alternative) {
    if (*alternative < 0 || *alternative >= t.size()) {
      throw ValidationError("alternative " + std::to_string(*alternative) + " out of range");
    }
    print_one(*alternative, mov_for(t, s, *alternative, ba_guard));
  } else {
    const MovProfile profile = mov_profile(t, s, ba_guard);
    for (int x = 0; x < t.size(); ++x) print_one(x, profile.results[x]);
  }
  return 0;
}

int run_experiment_cmd(const std::string& config_path, const std::string& out_path,
                       const std::string& summary_path, int jobs) {
  const ExperimentConfig cfg = parse_experiment_config(read_file(config_path));
  const auto rows = run_experiment(cfg, jobs);
  if (!out_path.empty()) write_file(out_path, rows_to_csv(rows));
  const auto aggregates = summarize(rows);
  if (!summary_path.empty()) write_file(summary_path, aggregates_to_csv(aggregates));
  std::cout << aggregates_to_table(aggregates);
  return 0;
}

int run_verify(const CLI::App* cmd, const std::string& suite, int trials, uint64_t seed,
               const std::string& dump_dir) {
  PropertyOptions opts;
  opts.trials = trials;
  opts.seed = resolve_seed(cmd, "--seed", seed);

  std::vector<std::string> names;
  if (suite == "all") {
    for (const auto& [name, fn] : property_catalog()) names.push_back(name);
  } else {
    if (property_catalog().find(suite) == property_catalog().end()) {
      throw ValidationError("unknown property '" + suite + "'");
    }
    names.push_back(suite);
  }

  bool all_passed = true;
  std::printf("%-26s %-6s %8s %10s\n", "property", "result", "trials", "violations");
  for (const std::string& name : names) {
    const PropertyReport report = run_property(name, opts);
    all_passed = all_passed && report.passed();
    std::printf("%-26s %-6s %8d %10zu\n", report.name.c_str(), report.passed() ? "PASS" : "FAIL", report.trials,
                report.violations.size());
    if (!report.note.empty()) std::printf("  %s\n", report.note.c_str());
    if (!report.violations.empty() && !dump_dir.empty()) {
      std::filesystem::create_directories(dump_dir);
      for (size_t i = 0; i < report.violations.size(); ++i) {
        const auto& violation = report.violations[i];
        char file[64];
        std::snprintf(file, sizeof(file), "violation_%s_%03zu.trn", report.name.c_str(), i);
        if (!violation.tournament_trn.empty()) {
          write_file((std::filesystem::path(dump_dir) / file).string(), violation.tournament_trn);
        }
      }
    }
    for (const auto& violation : report.violations) {
      std::printf("  violation: %s\n", violation.description.c_str());
    }
  }
  return all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tournament margins of victory: solutions, exact margins, generators, experiments"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Sample tournaments and write TRN1 files");
  std::string gen_model = "uniform";
  int gen_n = 10;
  uint64_t gen_seed = 0;
  int gen_count = 1;
  std::string gen_out = ".";
  double gen_p = 0.55;
  int gen_voters = 51;
  double gen_alpha = 0.2;
  double gen_phi = 0.95;
  gen->add_option("--model", gen_model, "uniform|cnoise|cnoise-voters|ic|urn|mallows")->capture_default_str();
  gen->add_option("--n", gen_n, "number of alternatives")->required();
  gen->add_option("--seed", gen_seed, "master seed (default 0; MOVLAB_SEED overrides when absent)");
  gen->add_option("--count", gen_count, "number of samples")->capture_default_str();
  gen->add_option("--out", gen_out, "output directory")->capture_default_str();
  gen->add_option("--p", gen_p, "agreement probability for Condorcet noise, in [1/2,1]")->capture_default_str();
  gen->add_option("--voters", gen_voters, "odd voter count for profile models")->capture_default_str();
  gen->add_option("--alpha-factor", gen_alpha, "urn reinforcement as a multiple of m!")->capture_default_str();
  gen->add_option("--phi", gen_phi, "Mallows dispersion in (0,1]")->capture_default_str();

  // solve
  auto* solve = app.add_subcommand("solve", "Print the winner set, one id per line");
  std::string solve_file, solve_solution;
  int solve_guard = kDefaultBanksGuard;
  solve->add_option("--file", solve_file, "TRN1 file or fixture:<name[:params]>")->required();
  solve->add_option("--solution", solve_solution, "co|tc|uc|kingsK|ba")->required();
  solve->add_option("--ba-guard", solve_guard, "raise the Banks-set size guard")->capture_default_str();

  // mov
  auto* mov = app.add_subcommand("mov", "Print margins of victory as id<TAB>value lines");
  std::string mov_file, mov_solution;
  int mov_alt = -1;
  bool mov_witness = false;
  int mov_guard = kDefaultBaGuard;
  mov->add_option("--file", mov_file, "TRN1 file or fixture:<name[:params]>")->required();
  mov->add_option("--solution", mov_solution, "co|tc|uc|kingsK|ba")->required();
  mov->add_option("--alternative", mov_alt, "restrict to one alternative");
  mov->add_flag("--witness", mov_witness, "append the reversal set as u->v pairs");
  mov->add_option("--ba-guard", mov_guard, "raise the brute-force size guard")->capture_default_str();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a sampling grid from a JSON config");
  std::string exp_config, exp_out, exp_summary;
  int exp_jobs = static_cast<int>(std::thread::hardware_concurrency());
  experiment->add_option("--config", exp_config, "JSON config file")->required();
  experiment->add_option("--out", exp_out, "per-sample metrics CSV path");
  experiment->add_option("--summary", exp_summary, "aggregate CSV path");
  experiment->add_option("--jobs", exp_jobs, "worker threads (default: available parallelism)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run property suites and print a PASS/FAIL table");
  std::string verify_suite = "all";
  int verify_trials = 0;
  uint64_t verify_seed = 1;
  std::string verify_dump;
  verify->add_option("--suite", verify_suite, "all or one property name")->capture_default_str();
  verify->add_option("--trials", verify_trials, "override trial count (0: per-property default)");
  verify->add_option("--seed", verify_seed, "suite seed (default 1; MOVLAB_SEED overrides when absent)");
  verify->add_option("--dump", verify_dump, "directory for violation TRN1 files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      return run_gen(gen, gen_model, gen_n, gen_seed, gen_count, gen_out, gen_p, gen_voters, gen_alpha, gen_phi);
    }
    if (solve->parsed()) return run_solve(solve_file, solve_solution, solve_guard);
    if (mov->parsed()) {
      std::optional<int> alt;
      if (mov->count("--alternative") > 0) alt = mov_alt;
      return run_mov(mov_file, mov_solution, alt, mov_witness, mov_guard);
    }
    if (experiment->parsed()) {
      return run_experiment_cmd(exp_config, exp_out, exp_summary, std::max(exp_jobs, 1));
    }
    if (verify->parsed()) return run_verify(verify, verify_suite, verify_trials, verify_seed, verify_dump);
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
