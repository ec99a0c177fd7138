#include <catch2/catch.hpp>

#include <set>

#include "movlab/fixtures.hpp"
#include "movlab/flow.hpp"
#include "movlab/generators.hpp"

using namespace movlab;

namespace {

Tournament random_uniform(int n, uint64_t seed) {
  GeneratorConfig cfg;
  cfg.model = Model::Uniform;
  cfg.n = n;
  cfg.seed = seed;
  return generate(cfg);
}

template <typename Visit>
void for_each_tournament(int n, Visit&& visit) {
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
    visit(Tournament(std::move(adj)));
  }
}

// All simple x->y paths with at most `bound` edges, as edge lists.
void collect_paths(const Tournament& t, int x, int y, int bound, std::vector<int>& stack, std::vector<bool>& used,
                   std::vector<std::vector<Edge>>& out) {
  const int v = stack.back();
  if (v == y) {
    std::vector<Edge> path;
    for (size_t i = 0; i + 1 < stack.size(); ++i) path.push_back({stack[i], stack[i + 1]});
    out.push_back(std::move(path));
    return;
  }
  if (static_cast<int>(stack.size()) - 1 == bound) return;
  for (int u = 0; u < t.size(); ++u) {
    if (!used[u] && t.dominates(v, u)) {
      used[u] = true;
      stack.push_back(u);
      collect_paths(t, x, y, bound, stack, used, out);
      stack.pop_back();
      used[u] = false;
    }
  }
}

std::vector<std::vector<Edge>> all_paths(const Tournament& t, int x, int y, int bound) {
  std::vector<int> stack = {x};
  std::vector<bool> used(t.size(), false);
  used[x] = true;
  std::vector<std::vector<Edge>> out;
  collect_paths(t, x, y, bound, stack, used, out);
  return out;
}

// Minimum number of edges meeting every path, by exhaustive search over
// subsets of the edges appearing in some path. Only such edges can help, so
// the pool restriction is sound. Paths become bitmasks over the pool.
int min_hitting_set(const std::vector<std::vector<Edge>>& paths) {
  if (paths.empty()) return 0;
  std::vector<Edge> pool;
  for (const auto& path : paths) {
    for (const Edge& e : path) {
      if (std::find(pool.begin(), pool.end(), e) == pool.end()) pool.push_back(e);
    }
  }
  const int m = static_cast<int>(pool.size());
  REQUIRE(m <= 63);
  std::vector<uint64_t> path_masks;
  path_masks.reserve(paths.size());
  for (const auto& path : paths) {
    uint64_t mask = 0;
    for (const Edge& e : path) {
      const auto i = std::find(pool.begin(), pool.end(), e) - pool.begin();
      mask |= uint64_t{1} << i;
    }
    path_masks.push_back(mask);
  }
  for (int size = 1; size <= m; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      uint64_t chosen = 0;
      for (int i : pick) chosen |= uint64_t{1} << i;
      bool hits_all = true;
      for (uint64_t mask : path_masks) {
        if ((mask & chosen) == 0) {
          hits_all = false;
          break;
        }
      }
      if (hits_all) return size;
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return m;
}

// True if no x->y path of length <= bound survives deleting `removed`.
bool cut_separates(const Tournament& t, int x, int y, int bound, const std::vector<Edge>& removed) {
  std::set<std::pair<int, int>> gone;
  for (const Edge& e : removed) gone.insert({e.from, e.to});
  std::vector<int> dist(t.size(), -1);
  std::vector<int> queue = {x};
  dist[x] = 0;
  for (size_t qh = 0; qh < queue.size(); ++qh) {
    const int v = queue[qh];
    if (dist[v] == bound) continue;
    for (int u = 0; u < t.size(); ++u) {
      if (u != v && t.dominates(v, u) && dist[u] == -1 && !gone.count({v, u})) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist[y] == -1;
}

int bound_of(CutBound b, int n) {
  switch (b) {
    case CutBound::Len2: return 2;
    case CutBound::Len3: return 3;
    case CutBound::Unbounded: return n - 1;
  }
  return n - 1;
}

}  // namespace

TEST_CASE("max flow on a hand-built network", "[flow]") {
  FlowNetwork net(4, 0, 3);
  net.add_arc(0, 1, 1, Edge{0, 1});
  net.add_arc(1, 3, 1, Edge{1, 3});
  net.add_arc(0, 2, 1, Edge{0, 2});
  net.add_arc(2, 3, 1, Edge{2, 3});
  const CutResult result = max_flow_unit(net);
  CHECK(result.value == 2);
  CHECK(result.cut_edges.size() == 2);
  CHECK_THROWS_AS(FlowNetwork(3, 1, 1), ValidationError);
}

TEST_CASE("unbounded cuts on the 3-chain", "[flow]") {
  const Tournament t = transitive_tournament(3);
  CHECK(mincut_bounded(t, 0, 2, CutBound::Unbounded).value == 2);
  CHECK(mincut_bounded(t, 2, 0, CutBound::Unbounded).value == 0);
  CHECK(static_cast<int>(all_paths(t, 0, 2, 2).size()) == 2);
  CHECK(all_paths(t, 2, 0, 2).empty());
  CHECK_THROWS_AS(mincut_bounded(t, 1, 1, CutBound::Len2), ValidationError);
}

TEST_CASE("cyclone pairs need exactly two cuts", "[flow]") {
  const Tournament t = cyclone(5);
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      if (x == y) continue;
      const CutResult r = mincut_bounded(t, x, y, CutBound::Unbounded);
      CHECK(r.value == 2);
      CHECK(r.cut_edges.size() == 2);
      CHECK(cut_separates(t, x, y, 4, r.cut_edges));
      CHECK(min_hitting_set(all_paths(t, x, y, 4)) == 2);
    }
  }
}

TEST_CASE("pinned short-cut values", "[flow]") {
  const Tournament f5 = fig5();
  const CutResult xz = mincut_bounded(f5, 0, 1, CutBound::Len2);
  CHECK(xz.value == 1);
  CHECK(cut_separates(f5, 0, 1, 2, xz.cut_edges));

  const Tournament f4 = fig4();
  CHECK(mincut_bounded(f4, 3, 1, CutBound::Len2).value == 1);  // only d->b within two steps

  const Tournament f7 = fig7(3, 5, 4);
  const CutResult yt = mincut_bounded(f7, 1, 17, CutBound::Len3);
  CHECK(yt.value == 1);
  REQUIRE(yt.cut_edges.size() == 1);
  CHECK(yt.cut_edges[0] == Edge{16, 17});  // the z->t edge
}

TEST_CASE("cut values grow with the bound", "[flow]") {
  // A k+1-bounded cut must destroy every path a k-bounded cut destroys plus
  // the length-(k+1) ones, so minimum sizes are nondecreasing in the bound.
  for (uint64_t seed = 0; seed < 150; ++seed) {
    const Tournament t = random_uniform(3 + static_cast<int>(seed % 14), 7100 + seed);
    for (int x = 0; x < t.size(); ++x) {
      for (int y = 0; y < t.size(); ++y) {
        if (x == y) continue;
        const int len2 = mincut_bounded(t, x, y, CutBound::Len2).value;
        const int len3 = mincut_bounded(t, x, y, CutBound::Len3).value;
        const int unbounded = mincut_bounded(t, x, y, CutBound::Unbounded).value;
        CHECK(len2 <= len3);
        CHECK(len3 <= unbounded);
      }
    }
  }
}

TEST_CASE("cut witnesses separate within their bound", "[flow]") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const Tournament t = random_uniform(3 + static_cast<int>(seed % 12), 7200 + seed);
    const auto present = [&](const Edge& e) { return t.dominates(e.from, e.to); };
    for (int x = 0; x < t.size(); ++x) {
      for (int y = 0; y < t.size(); ++y) {
        if (x == y) continue;
        for (CutBound bound : {CutBound::Len2, CutBound::Len3, CutBound::Unbounded}) {
          const CutResult r = mincut_bounded(t, x, y, bound);
          CHECK(static_cast<int>(r.cut_edges.size()) == r.value);
          for (const Edge& e : r.cut_edges) CHECK(present(e));
          CHECK(cut_separates(t, x, y, bound_of(bound, t.size()), r.cut_edges));
        }
      }
    }
  }
}

TEST_CASE("bounded cuts match the exhaustive hitting set", "[flow]") {
  auto check_all_pairs = [](const Tournament& t) {
    for (int x = 0; x < t.size(); ++x) {
      for (int y = 0; y < t.size(); ++y) {
        if (x == y) continue;
        CHECK(mincut_bounded(t, x, y, CutBound::Len2).value == min_hitting_set(all_paths(t, x, y, 2)));
        CHECK(mincut_bounded(t, x, y, CutBound::Len3).value == min_hitting_set(all_paths(t, x, y, 3)));
      }
    }
  };
  for (int n = 3; n <= 6; ++n) for_each_tournament(n, check_all_pairs);
  for (uint64_t seed = 0; seed < 500; ++seed) {
    check_all_pairs(random_uniform(7 + static_cast<int>(seed % 3), 7300 + seed));
  }
}

TEST_CASE("degree identity of opposite cuts", "[flow]") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const Tournament t = random_uniform(3 + static_cast<int>(seed % 13), 7400 + seed);
    const auto degs = t.out_degrees();
    for (int x = 0; x < t.size(); ++x) {
      for (int y = x + 1; y < t.size(); ++y) {
        const int forward = mincut_bounded(t, x, y, CutBound::Unbounded).value;
        const int backward = mincut_bounded(t, y, x, CutBound::Unbounded).value;
        CHECK(forward - backward == degs[x] - degs[y]);
      }
    }
  }
}
