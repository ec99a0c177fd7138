#include <catch2/catch.hpp>

#include "movlab/fixtures.hpp"
#include "movlab/generators.hpp"
#include "movlab/solutions.hpp"

using namespace movlab;

namespace {

Tournament random_uniform(int n, uint64_t seed) {
  GeneratorConfig cfg;
  cfg.model = Model::Uniform;
  cfg.n = n;
  cfg.seed = seed;
  return generate(cfg);
}

bool subset(const WinnerSet& a, const WinnerSet& b) {
  for (int m : a.members) {
    if (!b.contains(m)) return false;
  }
  return true;
}

WinnerSet all_of(int n) {
  WinnerSet w;
  for (int i = 0; i < n; ++i) w.members.push_back(i);
  return w;
}

// Independent Banks oracle: enumerate every subset, keep the transitive ones,
// and check extendability directly.
WinnerSet banks_by_enumeration(const Tournament& t) {
  const int n = t.size();
  WinnerSet result;
  std::vector<bool> in_banks(n, false);
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) members.push_back(v);
    }
    bool transitive = true;
    for (size_t a = 0; a < members.size() && transitive; ++a) {
      for (size_t b = 0; b < members.size() && transitive; ++b) {
        for (size_t c = 0; c < members.size() && transitive; ++c) {
          if (a == b || b == c || a == c) continue;
          if (t.dominates(members[a], members[b]) && t.dominates(members[b], members[c]) &&
              !t.dominates(members[a], members[c])) {
            transitive = false;
          }
        }
      }
    }
    if (!transitive) continue;
    bool extendable = false;
    for (int v = 0; v < n && !extendable; ++v) {
      if ((mask >> v) & 1) continue;
      bool dominates_all = true;
      for (int m : members) {
        if (!t.dominates(v, m)) {
          dominates_all = false;
          break;
        }
      }
      extendable = dominates_all;
    }
    if (extendable) continue;
    int top = members[0];
    for (int m : members) {
      bool beats_rest = true;
      for (int other : members) {
        if (other != m && !t.dominates(m, other)) beats_rest = false;
      }
      if (beats_rest) top = m;
    }
    in_banks[top] = true;
  }
  for (int v = 0; v < n; ++v) {
    if (in_banks[v]) result.members.push_back(v);
  }
  return result;
}

}  // namespace

TEST_CASE("copeland set", "[solutions]") {
  CHECK(copeland_set(fig2()).members == std::vector<AltId>{1});
  CHECK(copeland_set(transitive_tournament(4)).members == std::vector<AltId>{0});
  CHECK(copeland_set(cyclone(5)).members == all_of(5).members);
}

TEST_CASE("top cycle", "[solutions]") {
  CHECK(top_cycle(transitive_tournament(5)).members == std::vector<AltId>{0});
  CHECK(top_cycle(cyclone(7)).members == all_of(7).members);
  CHECK(top_cycle(cyclone_chain(3, 9)).members == all_of(27).members);
}

TEST_CASE("top cycle dominates the outside", "[solutions]") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    GeneratorConfig cfg;
    cfg.model = Model::CondorcetNoise;
    cfg.p = 0.75;
    cfg.n = 3 + static_cast<int>(seed % 18);
    cfg.seed = seed;
    const Tournament t = generate(cfg);
    const WinnerSet tc = top_cycle(t);
    for (int inside : tc.members) {
      for (int outside = 0; outside < t.size(); ++outside) {
        if (!tc.contains(outside)) CHECK(t.dominates(inside, outside));
      }
    }
  }
}

TEST_CASE("uncovered set", "[solutions]") {
  CHECK(uncovered_set(fig4()).members == all_of(7).members);
  const WinnerSet f5 = uncovered_set(fig5());
  CHECK(f5.contains(0));  // x
  CHECK(f5.contains(5));  // y4
  CHECK(uncovered_set(transitive_tournament(4)).members == std::vector<AltId>{0});
}

TEST_CASE("uncovered set equals the 2-kings", "[solutions]") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const Tournament t = random_uniform(3 + static_cast<int>(seed % 18), 40 + seed);
    CHECK(uncovered_set(t) == k_kings(t, 2));
  }
}

TEST_CASE("k-kings", "[solutions]") {
  const Tournament f7 = fig7(3, 5, 4);
  const WinnerSet kings3 = k_kings(f7, 3);
  CHECK(kings3.contains(0));
  CHECK(kings3.contains(1));

  CHECK(k_kings(transitive_tournament(5), 3).members == std::vector<AltId>{0});
  CHECK_THROWS_AS(k_kings(transitive_tournament(5), 1), ValidationError);
  CHECK_THROWS_AS(k_kings(transitive_tournament(5), 5), ValidationError);
}

TEST_CASE("inclusion chain", "[solutions]") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const Tournament t = random_uniform(4 + static_cast<int>(seed % 15), 500 + seed);
    const WinnerSet co = copeland_set(t);
    const WinnerSet uc = uncovered_set(t);
    const WinnerSet tc = top_cycle(t);
    CHECK(subset(co, uc));
    WinnerSet previous = uc;
    for (int k = 3; k <= t.size() - 1; ++k) {
      const WinnerSet kings = k_kings(t, k);
      CHECK(subset(previous, kings));
      previous = kings;
    }
    CHECK(subset(previous, tc));
    if (t.size() <= 7) CHECK(subset(banks_set(t), uc));
  }
}

TEST_CASE("banks set on the pinned fixtures", "[solutions]") {
  const WinnerSet f4 = banks_set(fig4());
  CHECK(f4.contains(6));  // g
  CHECK(f4.contains(3));  // d
  const WinnerSet f5 = banks_set(fig5());
  CHECK(f5.contains(0));  // x
  CHECK(f5.contains(5));  // y4
  CHECK(banks_set(transitive_tournament(3)).members == std::vector<AltId>{0});
}

TEST_CASE("banks set matches subset enumeration", "[solutions]") {
  for (int n = 3; n <= 6; ++n) {
    for (uint64_t seed = 0; seed < 60; ++seed) {
      const Tournament t = random_uniform(n, 900 + 100 * n + seed);
      CHECK(banks_set(t) == banks_by_enumeration(t));
    }
  }
}

TEST_CASE("banks guard", "[solutions]") {
  const Tournament big = transitive_tournament(17);
  CHECK_THROWS_AS(banks_set(big), GuardError);
  CHECK(banks_set(big, 17).members == std::vector<AltId>{0});
}

TEST_CASE("condorcet consistency is exhaustive at small sizes", "[solutions]") {
  for (int n = 3; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (uint32_t code = 0; code < (uint32_t{1} << pairs); ++code) {
      Adjacency adj(n);
      int bit = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
          if ((code >> bit) & 1) {
            adj.set(i, j);
          } else {
            adj.set(j, i);
          }
        }
      }
      const Tournament t{std::move(adj)};
      int winner = -1;
      for (int x = 0; x < n; ++x) {
        if (t.out_degree(x) == n - 1) winner = x;
      }
      if (winner == -1) continue;
      const std::vector<AltId> expected = {winner};
      CHECK(copeland_set(t).members == expected);
      CHECK(top_cycle(t).members == expected);
      CHECK(uncovered_set(t).members == expected);
      if (n >= 4) CHECK(k_kings(t, 3).members == expected);
      CHECK(banks_set(t).members == expected);
    }
  }
}

TEST_CASE("condorcet consistency of all five solutions", "[solutions]") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    // Random tournament with alternative 0 strengthened into a Condorcet
    // winner.
    Tournament base = random_uniform(3 + static_cast<int>(seed % 5), 7000 + seed);
    Adjacency adj = base.adj();
    for (int v = 1; v < base.size(); ++v) {
      if (adj.dominates(v, 0)) adj.flip(v, 0);
    }
    const Tournament t{std::move(adj)};
    const std::vector<AltId> expected = {0};
    CHECK(copeland_set(t).members == expected);
    CHECK(top_cycle(t).members == expected);
    CHECK(uncovered_set(t).members == expected);
    if (t.size() >= 4) CHECK(k_kings(t, 3).members == expected);
    CHECK(banks_set(t).members == expected);
  }
}

TEST_CASE("vertex-transitive fixtures select everyone", "[solutions]") {
  for (int m : {5, 7}) {
    const Tournament t = cyclone(m);
    CHECK(copeland_set(t).members == all_of(m).members);
    CHECK(top_cycle(t).members == all_of(m).members);
    CHECK(uncovered_set(t).members == all_of(m).members);
    for (int k = 3; k <= m - 1; ++k) CHECK(k_kings(t, k).members == all_of(m).members);
    CHECK(banks_set(t).members == all_of(m).members);
  }
}

TEST_CASE("solution ids", "[solutions]") {
  CHECK(SolutionId::parse("co") == SolutionId::co());
  CHECK(SolutionId::parse("kings3") == SolutionId::kings(3));
  CHECK(SolutionId::parse("kings4").k == 4);
  CHECK(SolutionId::kings(5).name() == "kings5");
  CHECK_THROWS_AS(SolutionId::parse("kings2"), ValidationError);
  CHECK_THROWS_AS(SolutionId::parse("kingsx"), ValidationError);
  CHECK_THROWS_AS(SolutionId::parse("borda"), ValidationError);
}

TEST_CASE("winners dispatcher", "[solutions]") {
  const Tournament t = transitive_tournament(4);
  CHECK(winners(t, SolutionId::co()) == copeland_set(t));
  CHECK(winners(t, SolutionId::ba()).members == std::vector<AltId>{0});
  CHECK_THROWS_AS(winners(t, SolutionId::kings(2)), ValidationError);
}
