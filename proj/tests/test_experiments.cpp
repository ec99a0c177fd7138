#include <catch2/catch.hpp>

#include "movlab/experiments.hpp"
#include "movlab/fixtures.hpp"

using namespace movlab;

namespace {

ExperimentConfig tiny_config() {
  ExperimentConfig cfg;
  GeneratorConfig uniform;
  uniform.model = Model::Uniform;
  cfg.models = {uniform};
  cfg.sizes = {6};
  cfg.samples = 2;
  cfg.solutions = {SolutionId::co(), SolutionId::tc()};
  cfg.master_seed = 5;
  return cfg;
}

}  // namespace

TEST_CASE("metrics of pinned tournaments", "[experiments]") {
  const ExperimentRow f2 = metrics_for(fig2(), SolutionId::co());
  CHECK(f2.winner_count == 1);
  CHECK(f2.argmax_mov_size == 1);
  CHECK(f2.unique_mov_count == 3);
  CHECK(f2.unique_copeland_count == 3);
  CHECK(f2.min_mov == -2);
  CHECK(f2.max_mov == 2);
  CHECK(f2.singleton_argmax);

  const ExperimentRow five = metrics_for(cyclone(5), SolutionId::tc());
  CHECK(five.winner_count == 5);
  CHECK(five.argmax_mov_size == 5);
  CHECK(five.unique_mov_count == 1);
  CHECK_FALSE(five.singleton_argmax);

  for (const SolutionId& s : {SolutionId::co(), SolutionId::tc(), SolutionId::uc(), SolutionId::kings(3)}) {
    const ExperimentRow chain = metrics_for(transitive_tournament(6), s);
    CHECK(chain.winner_count == 1);
    CHECK(chain.argmax_mov_size == 1);
  }
}

TEST_CASE("row counts and canonical order", "[experiments]") {
  ExperimentConfig cfg = tiny_config();
  const auto rows = run_experiment(cfg);
  REQUIRE(rows.size() == 4);  // 1 model x 1 size x 2 samples x 2 solutions
  CHECK(rows[0].sample == 0);
  CHECK(rows[0].solution == "co");
  CHECK(rows[1].solution == "tc");
  CHECK(rows[2].sample == 1);

  GeneratorConfig mallows;
  mallows.model = Model::Mallows;
  cfg.models.push_back(mallows);
  cfg.sizes = {8, 5};  // out of order on purpose
  const auto grid = run_experiment(cfg);
  REQUIRE(grid.size() == 2 * 2 * 2 * 2);
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    const auto key = [](const ExperimentRow& r) {
      return std::tuple<std::string, int, int>{r.model, r.n, r.sample};
    };
    // model blocks in config order, n ascending within a model
    CHECK((grid[i].model == grid[i + 1].model ? key(grid[i]) <= key(grid[i + 1]) : true));
  }
  CHECK(grid.front().model == "uniform");
  CHECK(grid.front().n == 5);
  CHECK(grid.back().model == "mallows");
  CHECK(grid.back().n == 8);
  CHECK(grid.back().params == "voters=51;phi=0.95");
}

TEST_CASE("experiments are deterministic and schedule-independent", "[experiments]") {
  const ExperimentConfig cfg = tiny_config();
  const auto once = run_experiment(cfg);
  const auto twice = run_experiment(cfg);
  CHECK(once == twice);
  const auto parallel = run_experiment(cfg, 4);
  CHECK(once == parallel);
}

TEST_CASE("argmax members are always winners", "[experiments]") {
  GeneratorConfig uniform;
  uniform.model = Model::Uniform;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    uniform.n = 5 + static_cast<int>(seed % 10);
    uniform.seed = 42000 + seed;
    const Tournament t = generate(uniform);
    for (const SolutionId& s : {SolutionId::co(), SolutionId::tc(), SolutionId::uc(), SolutionId::kings(3)}) {
      const MovProfile profile = mov_profile(t, s);
      const WinnerSet w = winners(t, s);
      for (AltId x : profile.argmax) {
        CHECK(profile.results[x].value.value() > 0);
        CHECK(w.contains(x));
      }
      const ExperimentRow row = metrics_for(t, s);
      CHECK(row.argmax_mov_size <= row.winner_count);
      CHECK(row.unique_mov_count >= 1);
      CHECK(row.singleton_argmax == (row.argmax_mov_size == 1));
    }
  }
}

TEST_CASE("sample seeds regenerate cells independently", "[experiments]") {
  const ExperimentConfig cfg = tiny_config();
  const auto rows = run_experiment(cfg);
  GeneratorConfig gen = cfg.models[0];
  gen.n = 6;
  gen.seed = sample_seed(cfg.master_seed, 0, 6, 1);
  ExperimentRow manual = metrics_for(generate(gen), SolutionId::tc());
  manual.model = "uniform";
  manual.params = "";
  manual.sample = 1;
  CHECK(manual == rows[3]);
}

TEST_CASE("csv round trip", "[experiments]") {
  const auto rows = run_experiment(tiny_config());
  const std::string csv = rows_to_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 rows
  CHECK(csv.rfind(kRowCsvHeader, 0) == 0);
  CHECK(rows_from_csv(csv) == rows);

  CHECK(rows_to_csv({}) == std::string(kRowCsvHeader) + "\n");
  CHECK_THROWS_AS(rows_from_csv("nonsense\n"), ValidationError);
}

TEST_CASE("summaries average per cell", "[experiments]") {
  std::vector<ExperimentRow> rows(3);
  for (int i = 0; i < 3; ++i) {
    rows[i].model = "uniform";
    rows[i].n = 9;
    rows[i].solution = "tc";
    rows[i].sample = i;
  }
  rows[0].argmax_mov_size = 1;
  rows[1].argmax_mov_size = 1;
  rows[2].argmax_mov_size = 3;
  rows[0].singleton_argmax = rows[1].singleton_argmax = true;
  const auto aggs = summarize(rows);
  REQUIRE(aggs.size() == 1);
  CHECK(aggs[0].samples == 3);
  CHECK(aggs[0].mean_argmax_mov_size == Approx(5.0 / 3.0));
  CHECK(aggs[0].singleton_fraction == Approx(2.0 / 3.0));
  CHECK_THROWS_AS(summarize({}), ValidationError);

  const std::string table = aggregates_to_table(aggs);
  CHECK(table.find("uniform") != std::string::npos);
  const std::string csv = aggregates_to_csv(aggs);
  CHECK(csv.find("uniform,,9,tc,3,") != std::string::npos);
}

TEST_CASE("config json parsing", "[experiments]") {
  const std::string good = R"({
    "models": [{"name": "uniform"}, {"name": "mallows", "phi": 0.8}],
    "sizes": [5, 7],
    "samples": 3,
    "solutions": ["co", "uc"],
    "seed": 11
  })";
  const ExperimentConfig cfg = parse_experiment_config(good);
  CHECK(cfg.models.size() == 2);
  CHECK(cfg.models[1].phi == Approx(0.8));
  CHECK(cfg.sizes == std::vector<int>{5, 7});
  CHECK(cfg.samples == 3);
  CHECK(cfg.solutions.size() == 2);
  CHECK(cfg.master_seed == 11);

  CHECK_THROWS_AS(parse_experiment_config(R"({"models":[{"name":"uniform"}],"extra":1})"), ValidationError);
  CHECK_THROWS_AS(parse_experiment_config(R"({"models":[{"name":"uniform","q":1}]})"), ValidationError);
  CHECK_THROWS_AS(parse_experiment_config(R"({"models":[]})"), ValidationError);
  CHECK_THROWS_AS(parse_experiment_config("not json"), ValidationError);
  CHECK_THROWS_AS(parse_experiment_config(R"({"models":[{"name":"uniform"}],"sizes":[2]})"), ValidationError);
  CHECK_THROWS_AS(parse_experiment_config(R"({"models":[{"name":"uniform"}],"solutions":["ba"]})"), ValidationError);
}

TEST_CASE("defaults match the documented parameterization", "[experiments]") {
  const ExperimentConfig cfg = parse_experiment_config(R"({"models":[{"name":"cnoise"},{"name":"urn"}]})");
  CHECK(cfg.sizes == std::vector<int>{5, 10, 15, 20, 25, 30});
  CHECK(cfg.samples == 100);
  CHECK(cfg.solutions.size() == 4);
  CHECK(cfg.models[0].p == Approx(0.55));
  CHECK(cfg.models[1].voters == 51);
  CHECK(cfg.models[1].alpha_factor == Approx(0.2));
  CHECK(params_string(cfg.models[0]) == "p=0.55");
  CHECK(params_string(cfg.models[1]) == "voters=51;alpha_factor=0.2");
}
