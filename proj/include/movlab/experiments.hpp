#pragma once

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "movlab/errors.hpp"
#include "movlab/generators.hpp"
#include "movlab/mov.hpp"
#include "movlab/rng.hpp"
#include "movlab/solutions.hpp"

#include "json.hpp"

namespace movlab {

struct ExperimentConfig {
  std::vector<GeneratorConfig> models;  // n is filled per size when running
  std::vector<int> sizes = {5, 10, 15, 20, 25, 30};
  int samples = 100;
  std::vector<SolutionId> solutions = {SolutionId::co(), SolutionId::uc(), SolutionId::kings(3), SolutionId::tc()};
  uint64_t master_seed = 0;

  void validate() const {
    if (models.empty()) throw ValidationError("experiment needs at least one model");
    if (sizes.empty()) throw ValidationError("experiment needs at least one size");
    if (samples < 1) throw ValidationError("experiment needs samples >= 1");
    if (solutions.empty()) throw ValidationError("experiment needs at least one solution");
    for (size_t i = 0; i < sizes.size(); ++i) {
      if (sizes[i] < 3) throw ValidationError("experiment sizes must be >= 3");
      for (size_t j = i + 1; j < sizes.size(); ++j) {
        if (sizes[i] == sizes[j]) throw ValidationError("duplicate size " + std::to_string(sizes[i]));
      }
    }
    const int max_size = *std::max_element(sizes.begin(), sizes.end());
    for (const SolutionId& s : solutions) {
      const bool fast = s.kind == SolutionId::Kind::CO || s.kind == SolutionId::Kind::TC ||
                        s.kind == SolutionId::Kind::UC || (s.kind == SolutionId::Kind::Kings && s.k == 3);
      if (!fast && max_size > kDefaultBaGuard) {
        throw ValidationError("solution '" + s.name() + "' not computable at n=" + std::to_string(max_size));
      }
    }
  }
};

struct ExperimentRow {
  std::string model;
  std::string params;
  int n = 0;
  int sample = 0;
  std::string solution;
  int winner_count = 0;
  int argmax_mov_size = 0;
  int unique_mov_count = 0;
  int unique_copeland_count = 0;
  int min_mov = 0;
  int max_mov = 0;
  bool singleton_argmax = false;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

namespace detail {

inline std::string format_number(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", v);
  std::string s(buffer);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace detail

// Model parameters rendered as key=value pairs joined by ';' in the fixed
// key order p, voters, alpha_factor, phi (only keys the model uses).
inline std::string params_string(const GeneratorConfig& cfg) {
  std::vector<std::string> parts;
  if (cfg.model == Model::CondorcetNoise || cfg.model == Model::CondorcetNoiseVoters) {
    parts.push_back("p=" + detail::format_number(cfg.p));
  }
  if (cfg.uses_voters()) parts.push_back("voters=" + std::to_string(cfg.voters));
  if (cfg.model == Model::Urn) parts.push_back("alpha_factor=" + detail::format_number(cfg.alpha_factor));
  if (cfg.model == Model::Mallows) parts.push_back("phi=" + detail::format_number(cfg.phi));
  std::string joined;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) joined += ';';
    joined += parts[i];
  }
  return joined;
}

// Metrics of one (tournament, solution) pair.
inline ExperimentRow metrics_for(const Tournament& t, const SolutionId& s) {
  ExperimentRow row;
  row.solution = s.name();
  row.n = t.size();
  row.winner_count = winners(t, s).size();

  const MovProfile profile = mov_profile(t, s);
  row.argmax_mov_size = static_cast<int>(profile.argmax.size());
  row.unique_mov_count = profile.unique_value_count;
  row.singleton_argmax = row.argmax_mov_size == 1;
  int min_v = std::numeric_limits<int>::max(), max_v = std::numeric_limits<int>::min();
  for (const MovResult& r : profile.results) {
    min_v = std::min(min_v, r.value.value());
    max_v = std::max(max_v, r.value.value());
  }
  row.min_mov = min_v;
  row.max_mov = max_v;

  const auto degs = t.out_degrees();
  std::vector<int> unique_degs(degs);
  std::sort(unique_degs.begin(), unique_degs.end());
  unique_degs.erase(std::unique(unique_degs.begin(), unique_degs.end()), unique_degs.end());
  row.unique_copeland_count = static_cast<int>(unique_degs.size());
  return row;
}

// Seed for one sample cell; pinned so any cell can be regenerated alone.
inline uint64_t sample_seed(uint64_t master, int model_index, int n, int sample_index) {
  return mix_seed(mix_seed(mix_seed(master, static_cast<uint64_t>(model_index)), static_cast<uint64_t>(n)),
                  static_cast<uint64_t>(sample_index));
}

// Runs the whole grid. Cells are independent; `jobs` worker threads pull
// cells from a shared counter, and rows come back in canonical
// (model, n, sample, solution) order no matter the schedule.
inline std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg, int jobs = 1) {
  cfg.validate();
  for (const GeneratorConfig& m : cfg.models) {
    GeneratorConfig probe = m;
    probe.n = 3;
    probe.validate();
  }

  std::vector<int> sizes = cfg.sizes;
  std::sort(sizes.begin(), sizes.end());

  struct Cell {
    int model_index;
    int n;
    int sample;
  };
  std::vector<Cell> cells;
  for (int mi = 0; mi < static_cast<int>(cfg.models.size()); ++mi) {
    for (int n : sizes) {
      for (int sample = 0; sample < cfg.samples; ++sample) cells.push_back({mi, n, sample});
    }
  }

  std::vector<std::vector<ExperimentRow>> per_cell(cells.size());
  std::vector<std::string> errors(cells.size());
  std::atomic<size_t> next_cell{0};

  auto worker = [&]() {
    while (true) {
      const size_t index = next_cell.fetch_add(1);
      if (index >= cells.size()) return;
      const Cell& cell = cells[index];
      try {
        GeneratorConfig gen_cfg = cfg.models[cell.model_index];
        gen_cfg.n = cell.n;
        gen_cfg.seed = sample_seed(cfg.master_seed, cell.model_index, cell.n, cell.sample);
        const Tournament t = generate(gen_cfg);
        for (const SolutionId& s : cfg.solutions) {
          ExperimentRow row = metrics_for(t, s);
          row.model = model_name(gen_cfg.model);
          row.params = params_string(gen_cfg);
          row.sample = cell.sample;
          per_cell[index].push_back(std::move(row));
        }
      } catch (const std::exception& e) {
        errors[index] = e.what();
      }
    }
  };

  jobs = std::max(jobs, 1);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  for (size_t i = 0; i < cells.size(); ++i) {
    if (!errors[i].empty()) {
      throw GuardError("cell model=" + model_name(cfg.models[cells[i].model_index].model) + " n=" +
                       std::to_string(cells[i].n) + " sample=" + std::to_string(cells[i].sample) + ": " + errors[i]);
    }
  }

  std::vector<ExperimentRow> rows;
  rows.reserve(cells.size() * cfg.solutions.size());
  for (auto& cell_rows : per_cell) {
    for (auto& row : cell_rows) rows.push_back(std::move(row));
  }
  return rows;
}

struct AggregateRow {
  std::string model;
  std::string params;
  int n = 0;
  std::string solution;
  int samples = 0;
  double mean_winner_count = 0;
  double mean_argmax_mov_size = 0;
  double mean_unique_mov_count = 0;
  double mean_unique_copeland_count = 0;
  double singleton_fraction = 0;
};

// Per-(model, n, solution) means, in first-appearance order of the rows.
inline std::vector<AggregateRow> summarize(const std::vector<ExperimentRow>& rows) {
  if (rows.empty()) throw ValidationError("summarize needs at least one row");
  std::vector<AggregateRow> aggregates;
  std::vector<int> counts;
  auto key_index = [&](const ExperimentRow& row) -> size_t {
    for (size_t i = 0; i < aggregates.size(); ++i) {
      if (aggregates[i].model == row.model && aggregates[i].n == row.n && aggregates[i].solution == row.solution) {
        return i;
      }
    }
    AggregateRow agg;
    agg.model = row.model;
    agg.params = row.params;
    agg.n = row.n;
    agg.solution = row.solution;
    aggregates.push_back(agg);
    counts.push_back(0);
    return aggregates.size() - 1;
  };
  for (const ExperimentRow& row : rows) {
    const size_t i = key_index(row);
    aggregates[i].samples += 1;
    aggregates[i].mean_winner_count += row.winner_count;
    aggregates[i].mean_argmax_mov_size += row.argmax_mov_size;
    aggregates[i].mean_unique_mov_count += row.unique_mov_count;
    aggregates[i].mean_unique_copeland_count += row.unique_copeland_count;
    aggregates[i].singleton_fraction += row.singleton_argmax ? 1 : 0;
  }
  for (AggregateRow& agg : aggregates) {
    agg.mean_winner_count /= agg.samples;
    agg.mean_argmax_mov_size /= agg.samples;
    agg.mean_unique_mov_count /= agg.samples;
    agg.mean_unique_copeland_count /= agg.samples;
    agg.singleton_fraction /= agg.samples;
  }
  return aggregates;
}

inline constexpr const char* kRowCsvHeader =
    "model,params,n,sample,solution,winner_count,argmax_mov_size,unique_mov_count,unique_copeland_count,min_mov,max_mov,singleton_argmax";

inline std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = std::string(kRowCsvHeader) + "\n";
  for (const ExperimentRow& r : rows) {
    out += r.model + ',' + r.params + ',' + std::to_string(r.n) + ',' + std::to_string(r.sample) + ',' + r.solution +
           ',' + std::to_string(r.winner_count) + ',' + std::to_string(r.argmax_mov_size) + ',' +
           std::to_string(r.unique_mov_count) + ',' + std::to_string(r.unique_copeland_count) + ',' +
           std::to_string(r.min_mov) + ',' + std::to_string(r.max_mov) + ',' + (r.singleton_argmax ? "1" : "0") + '\n';
  }
  return out;
}

inline std::vector<ExperimentRow> rows_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kRowCsvHeader) throw ValidationError("bad rows CSV header");
  std::vector<ExperimentRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 12) throw ValidationError("line " + std::to_string(line_no) + ": expected 12 fields");
    ExperimentRow r;
    r.model = fields[0];
    r.params = fields[1];
    r.n = std::stoi(fields[2]);
    r.sample = std::stoi(fields[3]);
    r.solution = fields[4];
    r.winner_count = std::stoi(fields[5]);
    r.argmax_mov_size = std::stoi(fields[6]);
    r.unique_mov_count = std::stoi(fields[7]);
    r.unique_copeland_count = std::stoi(fields[8]);
    r.min_mov = std::stoi(fields[9]);
    r.max_mov = std::stoi(fields[10]);
    r.singleton_argmax = fields[11] == "1";
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::string aggregates_to_csv(const std::vector<AggregateRow>& aggs) {
  std::string out =
      "model,params,n,solution,samples,mean_winner_count,mean_argmax_mov_size,mean_unique_mov_count,mean_unique_copeland_count,singleton_fraction\n";
  char buffer[160];
  for (const AggregateRow& a : aggs) {
    std::snprintf(buffer, sizeof(buffer), "%.4f,%.4f,%.4f,%.4f,%.4f", a.mean_winner_count, a.mean_argmax_mov_size,
                  a.mean_unique_mov_count, a.mean_unique_copeland_count, a.singleton_fraction);
    out += a.model + ',' + a.params + ',' + std::to_string(a.n) + ',' + a.solution + ',' + std::to_string(a.samples) +
           ',' + buffer + '\n';
  }
  return out;
}

inline std::string aggregates_to_table(const std::vector<AggregateRow>& aggs) {
  char buffer[256];
  std::string out;
  std::snprintf(buffer, sizeof(buffer), "%-14s %-28s %4s %-8s %8s %9s %9s %10s %11s %10s\n", "model", "params", "n",
                "solution", "samples", "winners", "argmax", "uniq_mov", "uniq_cope", "singleton");
  out += buffer;
  for (const AggregateRow& a : aggs) {
    std::snprintf(buffer, sizeof(buffer), "%-14s %-28s %4d %-8s %8d %9.3f %9.3f %10.3f %11.3f %10.3f\n",
                  a.model.c_str(), a.params.c_str(), a.n, a.solution.c_str(), a.samples, a.mean_winner_count,
                  a.mean_argmax_mov_size, a.mean_unique_mov_count, a.mean_unique_copeland_count, a.singleton_fraction);
    out += buffer;
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw ValidationError("write failed for '" + path + "'");
}

// Experiment config JSON: {"models": [{"name": ..., "p"?, "voters"?,
// "alpha_factor"?, "phi"?}, ...], "sizes"?, "samples"?, "solutions"?,
// "seed"?}. Unknown keys are rejected.
inline ExperimentConfig parse_experiment_config(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "models" && key != "sizes" && key != "samples" && key != "solutions" && key != "seed") {
      throw ValidationError("unknown config key '" + key + "'");
    }
  }

  ExperimentConfig cfg;
  if (!doc.contains("models") || !doc["models"].is_array() || doc["models"].empty()) {
    throw ValidationError("config needs a nonempty 'models' array");
  }
  cfg.models.clear();
  for (const auto& entry : doc["models"]) {
    if (!entry.is_object() || !entry.contains("name")) throw ValidationError("each model needs a 'name'");
    GeneratorConfig gen;
    gen.model = parse_model(entry["name"].get<std::string>());
    for (const auto& [key, value] : entry.items()) {
      if (key == "name") continue;
      if (key == "p") gen.p = value.get<double>();
      else if (key == "voters") gen.voters = value.get<int>();
      else if (key == "alpha_factor") gen.alpha_factor = value.get<double>();
      else if (key == "phi") gen.phi = value.get<double>();
      else throw ValidationError("unknown model key '" + key + "'");
    }
    cfg.models.push_back(gen);
  }
  if (doc.contains("sizes")) cfg.sizes = doc["sizes"].get<std::vector<int>>();
  if (doc.contains("samples")) cfg.samples = doc["samples"].get<int>();
  if (doc.contains("solutions")) {
    cfg.solutions.clear();
    for (const auto& name : doc["solutions"]) {
      cfg.solutions.push_back(SolutionId::parse(name.get<std::string>()));
    }
  }
  if (doc.contains("seed")) cfg.master_seed = doc["seed"].get<uint64_t>();
  cfg.validate();
  return cfg;
}

}  // namespace movlab
