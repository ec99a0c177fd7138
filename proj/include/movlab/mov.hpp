#pragma once

#include <algorithm>
#include <cstdint>
#include <concepts>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "movlab/errors.hpp"
#include "movlab/flow.hpp"
#include "movlab/solutions.hpp"
#include "movlab/tournament.hpp"

namespace movlab {

// Signed margin of victory. Positive for winners (minimum destructive
// reversal set), negative for non-winners (minimum constructive reversal
// set). Infinite only for solutions that select every alternative on every
// tournament of the given size.
class MovValue {
 public:
  static MovValue finite(int v) {
    if (v == 0) throw ValidationError("margin of victory is never zero");
    MovValue m;
    m.finite_ = true;
    m.value_ = v;
    return m;
  }
  static MovValue infinite() { return MovValue{}; }

  bool is_infinite() const { return !finite_; }
  int value() const {
    if (!finite_) throw ValidationError("infinite margin has no finite value");
    return value_;
  }

  // Infinite compares above every finite value.
  friend bool operator<(const MovValue& a, const MovValue& b) {
    if (a.finite_ && b.finite_) return a.value_ < b.value_;
    return a.finite_ && !b.finite_;
  }
  friend bool operator==(const MovValue&, const MovValue&) = default;

 private:
  bool finite_ = false;
  int value_ = 0;
};

inline std::string to_string(const MovValue& v) {
  return v.is_infinite() ? "inf" : std::to_string(v.value());
}

struct MovResult {
  MovValue value;
  ReversalSet witness;  // empty iff value is infinite
};

struct MovProfile {
  std::vector<MovResult> results;   // indexed by alternative
  std::vector<AltId> argmax;        // alternatives attaining the maximum value
  int unique_value_count = 0;
};

inline int ceil_log2(int n) {
  int c = 0;
  while ((1 << c) < n) ++c;
  return c;
}

// ---------------------------------------------------------------------------
// Membership predicates on raw adjacencies, shared by the exact algorithms
// and the brute-force search.

namespace membership {

inline bool copeland(const Adjacency& adj, int x) {
  const int mine = out_degree(adj, x);
  for (int y = 0; y < adj.size(); ++y) {
    if (y != x && out_degree(adj, y) > mine) return false;
  }
  return true;
}

inline bool top_cycle(const Adjacency& adj, int x) {
  return reaches_all_within(adj, x, adj.size() - 1);
}

inline bool uncovered(const Adjacency& adj, int x) {
  for (int y = 0; y < adj.size(); ++y) {
    if (y != x && covers(adj, y, x)) return false;
  }
  return true;
}

inline bool kings(const Adjacency& adj, int x, int k) {
  return reaches_all_within(adj, x, std::min(k, adj.size() - 1));
}

inline bool banks(const Adjacency& adj, int x) {
  detail::BanksSearch search(adj);
  return search.member(x);
}

inline std::function<bool(const Adjacency&, int)> predicate(const SolutionId& s) {
  switch (s.kind) {
    case SolutionId::Kind::CO: return [](const Adjacency& a, int x) { return copeland(a, x); };
    case SolutionId::Kind::TC: return [](const Adjacency& a, int x) { return top_cycle(a, x); };
    case SolutionId::Kind::UC: return [](const Adjacency& a, int x) { return uncovered(a, x); };
    case SolutionId::Kind::Kings:
      return [k = s.k](const Adjacency& a, int x) { return kings(a, x, k); };
    case SolutionId::Kind::BA: return [](const Adjacency& a, int x) { return banks(a, x); };
  }
  throw ValidationError("unhandled solution id");
}

}  // namespace membership

// ---------------------------------------------------------------------------
// Brute force: iterative deepening over reversal sets. The independent
// oracle every fast path is tested against.

namespace detail {

template <typename Visit>
bool for_each_combination(int item_count, int size, Visit&& visit) {
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  if (size > item_count) return false;
  while (true) {
    if (visit(pick)) return true;
    int i = size - 1;
    while (i >= 0 && pick[i] == item_count - size + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace detail

// Smallest reversal set flipping x's membership, found by exhaustive search
// over sets of size 1, 2, ... Throws GuardError if `cap` is reached before a
// flip; returns an infinite value only when every set up to |E| fails.
template <typename Membership>
  requires std::invocable<Membership&, const Adjacency&, int>
MovResult brute_force_mov(const Tournament& t, Membership&& member, int x, int cap) {
  const std::vector<Edge> all_edges = t.edges();
  const int edge_count = static_cast<int>(all_edges.size());
  if (cap > edge_count) throw ValidationError("cap exceeds edge count");
  const bool initially_in = member(t.adj(), x);

  for (int size = 1; size <= cap; ++size) {
    std::vector<Edge> witness;
    const bool found = detail::for_each_combination(edge_count, size, [&](const std::vector<int>& pick) {
      Adjacency adj = t.adj();
      for (int index : pick) adj.flip(all_edges[index].from, all_edges[index].to);
      if (member(adj, x) != initially_in) {
        witness.reserve(pick.size());
        for (int index : pick) witness.push_back(all_edges[index]);
        return true;
      }
      return false;
    });
    if (found) {
      return MovResult{MovValue::finite(initially_in ? size : -size), ReversalSet(std::move(witness))};
    }
  }
  if (cap < edge_count) {
    throw GuardError("margin undetermined at cap " + std::to_string(cap));
  }
  return MovResult{MovValue::infinite(), ReversalSet{}};
}

inline MovResult brute_force_mov(const Tournament& t, const SolutionId& s, int x, int cap) {
  return brute_force_mov(t, membership::predicate(s), x, cap);
}

inline MovResult brute_force_mov(const Tournament& t, const SolutionId& s, int x) {
  return brute_force_mov(t, s, x, static_cast<int>(t.edges().size()));
}

// ---------------------------------------------------------------------------
// Copeland.

namespace detail {

// Min-cost flow with a single analytic potential layer; used by the
// constructive Copeland search. Arc costs are 0, 1, or -kBig.
class MinCostFlow {
 public:
  explicit MinCostFlow(int node_count) : head_(node_count, -1), potential_(node_count, 0) {}

  static constexpr int64_t kBig = int64_t{1} << 20;

  int add_arc(int from, int to, int capacity, int64_t cost) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, head_[from], capacity, cost});
    head_[from] = id;
    arcs_.push_back({from, head_[to], 0, -cost});
    head_[to] = id + 1;
    return id;
  }

  void set_potential(int node, int64_t p) { potential_[node] = p; }

  int flow_on(int arc_id) const { return arcs_[arc_id ^ 1].capacity; }

  // Pushes flow along negative-cost shortest paths until none remains.
  void run(int source, int sink) {
    const auto n = static_cast<int>(head_.size());
    std::vector<int64_t> dist(n);
    std::vector<int> parent_arc(n);
    while (true) {
      std::fill(dist.begin(), dist.end(), std::numeric_limits<int64_t>::max());
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      dist[source] = 0;
      using Item = std::pair<int64_t, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      heap.push({0, source});
      while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue;
        for (int a = head_[v]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].capacity <= 0) continue;
          const int64_t nd = d + arcs_[a].cost + potential_[v] - potential_[arcs_[a].to];
          if (nd < dist[arcs_[a].to]) {
            dist[arcs_[a].to] = nd;
            parent_arc[arcs_[a].to] = a;
            heap.push({nd, arcs_[a].to});
          }
        }
      }
      if (dist[sink] == std::numeric_limits<int64_t>::max()) return;
      const int64_t true_cost = dist[sink] - potential_[source] + potential_[sink];
      if (true_cost >= 0) return;

      int bottleneck = std::numeric_limits<int>::max();
      int64_t real_on_path = 0;
      for (int v = sink; v != source;) {
        const auto& arc = arcs_[parent_arc[v]];
        bottleneck = std::min(bottleneck, arc.capacity);
        // +-1 arcs are genuine reversals; the large incentive costs are not.
        const int64_t mag = arc.cost < 0 ? -arc.cost : arc.cost;
        if (mag != 0 && mag < kBig / 2) real_on_path += arc.cost;
        v = arcs_[parent_arc[v] ^ 1].to;
      }
      real_cost_ += real_on_path * bottleneck;
      for (int v = sink; v != source;) {
        arcs_[parent_arc[v]].capacity -= bottleneck;
        arcs_[parent_arc[v] ^ 1].capacity += bottleneck;
        v = arcs_[parent_arc[v] ^ 1].to;
      }
      for (int v = 0; v < n; ++v) {
        if (dist[v] != std::numeric_limits<int64_t>::max()) potential_[v] += dist[v];
        else potential_[v] += dist[sink];
      }
    }
  }

  int64_t real_cost() const { return real_cost_; }

 private:
  struct Arc {
    int to;
    int next;
    int capacity;
    int64_t cost;
  };

  std::vector<int> head_;
  std::vector<int64_t> potential_;
  std::vector<Arc> arcs_;
  int64_t real_cost_ = 0;
};

// Constructive Copeland probe: can x be brought into the Copeland set with
// at most `budget` reversals, k of them incoming edges of x? Tokens model
// outdegree shed along reversed edges: alternatives above the threshold
// s = outdeg(x) + k ship their excess into alternatives with room or into x
// (which must absorb exactly k). Fresh tokens may be minted at an
// in-neighbour w, covering reversals of (w, x) that ship no excess.
struct CopelandProbe {
  bool feasible = false;
  int cost = 0;
  std::vector<Edge> witness;
};

inline CopelandProbe copeland_constructive_probe(const Adjacency& adj, int x, int k, int budget) {
  const int n = adj.size();
  const int s = out_degree(adj, x) + k;

  std::vector<int> dominators;
  for (int w = 0; w < n; ++w) {
    if (w != x && adj.dominates(w, x)) dominators.push_back(w);
  }

  int64_t total_excess = 0;
  std::vector<int> excess(n, 0), slack(n, 0);
  for (int z = 0; z < n; ++z) {
    if (z == x) continue;
    const int out = out_degree(adj, z);
    if (out > s) excess[z] = out - s;
    if (out < s) slack[z] = s - out;
    total_excess += excess[z];
  }
  CopelandProbe probe;
  if (std::max<int64_t>(k, total_excess) > budget) return probe;

  // Node ids: S, T, F, alternatives, one auxiliary per in-neighbour, X.
  const int kSource = 0, kSink = 1, kFresh = 2;
  const int alt_base = 3;
  const int aux_base = alt_base + n;
  const int x_node = aux_base + static_cast<int>(dominators.size());
  MinCostFlow flow(x_node + 1);
  flow.set_potential(kSource, 2 * MinCostFlow::kBig);
  flow.set_potential(kSink, 1);
  flow.set_potential(kFresh, MinCostFlow::kBig);
  for (int z = 0; z < n; ++z) flow.set_potential(alt_base + z, MinCostFlow::kBig);
  for (size_t i = 0; i < dominators.size(); ++i) flow.set_potential(aux_base + static_cast<int>(i), MinCostFlow::kBig);
  flow.set_potential(x_node, MinCostFlow::kBig + 1);

  std::vector<int> duty_arcs;
  for (int z = 0; z < n; ++z) {
    if (excess[z] > 0) duty_arcs.push_back(flow.add_arc(kSource, alt_base + z, excess[z], -MinCostFlow::kBig));
    if (slack[z] > 0) flow.add_arc(alt_base + z, kSink, slack[z], 0);
  }
  std::vector<int> ship_arcs;       // arc id per tournament edge (u,v), u,v != x
  std::vector<Edge> ship_labels;
  for (int u = 0; u < n; ++u) {
    if (u == x) continue;
    for (int v = 0; v < n; ++v) {
      if (v == x || v == u || !adj.dominates(u, v)) continue;
      ship_arcs.push_back(flow.add_arc(alt_base + u, alt_base + v, 1, 1));
      ship_labels.push_back({u, v});
    }
  }
  std::vector<int> incoming_arcs;   // auxiliary -> X per in-neighbour
  if (k > 0) flow.add_arc(kSource, kFresh, k, 0);
  for (size_t i = 0; i < dominators.size(); ++i) {
    const int aux = aux_base + static_cast<int>(i);
    flow.add_arc(alt_base + dominators[i], aux, 1, 0);
    if (k > 0) flow.add_arc(kFresh, aux, 1, 0);
    incoming_arcs.push_back(flow.add_arc(aux, x_node, 1, 1));
  }
  int x_arc = -1;
  if (k > 0) x_arc = flow.add_arc(x_node, kSink, k, -MinCostFlow::kBig);

  flow.run(kSource, kSink);

  int64_t shipped = 0;
  for (int arc : duty_arcs) shipped += flow.flow_on(arc);
  if (shipped != total_excess) return probe;
  if (k > 0 && flow.flow_on(x_arc) != k) return probe;
  if (flow.real_cost() > budget) return probe;

  probe.feasible = true;
  probe.cost = static_cast<int>(flow.real_cost());
  for (size_t i = 0; i < ship_arcs.size(); ++i) {
    if (flow.flow_on(ship_arcs[i]) > 0) probe.witness.push_back(ship_labels[i]);
  }
  for (size_t i = 0; i < incoming_arcs.size(); ++i) {
    if (flow.flow_on(incoming_arcs[i]) > 0) probe.witness.push_back({dominators[i], x});
  }
  return probe;
}

}  // namespace detail

// Exact Copeland margin. Winners: per-target closed form — raising a rival y
// above x takes outdeg(x)-outdeg(y)+1 unit steps, minus one extra step saved
// by reversing (x,y) itself when present. Non-winners: the value is either
// -(delta-1) or -delta for delta = maxdeg - outdeg(x); a flow probe decides
// whether budget delta-1 suffices.
inline MovResult mov_co(const Tournament& t, int x) {
  const Adjacency& adj = t.adj();
  const int n = t.size();
  const auto degs = t.out_degrees();
  const int maxdeg = *std::max_element(degs.begin(), degs.end());

  if (degs[x] == maxdeg) {
    int best = std::numeric_limits<int>::max();
    int best_y = -1;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      const int cost = std::max(1, degs[x] - degs[y] + 1 - (adj.dominates(x, y) ? 1 : 0));
      if (cost < best) {
        best = cost;
        best_y = y;
      }
    }
    // Witness: the edge (x,y) if present (closing the gap by two), then
    // single-step reversals raising y or lowering x.
    std::vector<Edge> witness;
    int singles = best;
    if (adj.dominates(x, best_y)) {
      witness.push_back({x, best_y});
      singles = best - 1;
    }
    for (int w = 0; w < n && singles > 0; ++w) {
      if (w != x && adj.dominates(w, best_y)) {
        witness.push_back({w, best_y});
        --singles;
      }
    }
    for (int z = 0; z < n && singles > 0; ++z) {
      if (z != best_y && adj.dominates(x, z)) {
        witness.push_back({x, z});
        --singles;
      }
    }
    if (static_cast<int>(witness.size()) != best) {
      throw std::logic_error("copeland destructive witness size mismatch");
    }
    return MovResult{MovValue::finite(best), ReversalSet(std::move(witness))};
  }

  const int delta = maxdeg - degs[x];
  const int budget = delta - 1;
  const int max_k = std::min(budget, n - 1 - degs[x]);
  for (int k = 0; k <= max_k; ++k) {
    auto probe = detail::copeland_constructive_probe(adj, x, k, budget);
    if (probe.feasible) {
      return MovResult{MovValue::finite(-probe.cost), ReversalSet(std::move(probe.witness))};
    }
  }
  std::vector<Edge> witness;
  for (int w = 0; w < n && static_cast<int>(witness.size()) < delta; ++w) {
    if (w != x && adj.dominates(w, x)) witness.push_back({w, x});
  }
  return MovResult{MovValue::finite(-delta), ReversalSet(std::move(witness))};
}

// ---------------------------------------------------------------------------
// Cut-based winners and incoming-edge constructive search.

namespace detail {

inline MovResult mov_winner_by_cuts(const Tournament& t, int x, CutBound bound) {
  int best = std::numeric_limits<int>::max();
  int best_y = -1;
  for (int y = 0; y < t.size(); ++y) {
    if (y == x) continue;
    const int value = mincut_bounded(t, x, y, bound).value;
    if (value < best) {
      best = value;
      best_y = y;
    }
  }
  auto cut = mincut_bounded(t, x, best_y, bound);
  return MovResult{MovValue::finite(best), ReversalSet(std::move(cut.cut_edges))};
}

// Smallest set of incoming edges of x whose reversal makes `member` true.
// Restricting the search to incoming edges is an exchange-argument
// optimization: reversing (w, x) beats any reversal elsewhere for entering
// a reachability-based winner set. The minimum lies within ceil(log2 n) so
// the enumeration stays shallow in practice.
template <typename Member>
MovResult mov_constructive_incoming(const Tournament& t, int x, Member&& member) {
  const Adjacency& adj = t.adj();
  std::vector<int> dominators;
  for (int w = 0; w < t.size(); ++w) {
    if (w != x && adj.dominates(w, x)) dominators.push_back(w);
  }
  const int max_size = static_cast<int>(dominators.size());
  for (int size = 1; size <= max_size; ++size) {
    std::vector<Edge> witness;
    const bool found = for_each_combination(max_size, size, [&](const std::vector<int>& pick) {
      Adjacency probe = adj;
      for (int i : pick) probe.flip(dominators[i], x);
      if (member(probe, x)) {
        for (int i : pick) witness.push_back({dominators[i], x});
        return true;
      }
      return false;
    });
    if (found) {
      return MovResult{MovValue::finite(-size), ReversalSet(std::move(witness))};
    }
  }
  throw std::logic_error("no incoming-edge constructive set found");
}

}  // namespace detail

// Exact top-cycle margin: winners take the cheapest unbounded cut separating
// them from some target; non-winners always sit at -1 (reversing one edge
// from any top-cycle member suffices).
inline MovResult mov_tc(const Tournament& t, int x) {
  if (membership::top_cycle(t.adj(), x)) {
    return detail::mov_winner_by_cuts(t, x, CutBound::Unbounded);
  }
  const WinnerSet tc = top_cycle(t);
  return MovResult{MovValue::finite(-1), ReversalSet({Edge{tc.members.front(), x}})};
}

// Exact uncovered-set margin via 2-length-bounded cuts / incoming subsets.
inline MovResult mov_uc(const Tournament& t, int x) {
  if (membership::uncovered(t.adj(), x)) {
    return detail::mov_winner_by_cuts(t, x, CutBound::Len2);
  }
  return detail::mov_constructive_incoming(t, x, [](const Adjacency& adj, int v) { return membership::uncovered(adj, v); });
}

// Exact 3-kings margin via 3-length-bounded cuts / incoming subsets.
inline MovResult mov_3kings(const Tournament& t, int x) {
  if (membership::kings(t.adj(), x, 3)) {
    return detail::mov_winner_by_cuts(t, x, CutBound::Len3);
  }
  return detail::mov_constructive_incoming(t, x, [](const Adjacency& adj, int v) { return membership::kings(adj, v, 3); });
}

inline constexpr int kDefaultBaGuard = 9;

// Banks margins at oracle scale only.
inline MovResult mov_ba_small(const Tournament& t, int x, int guard = kDefaultBaGuard) {
  if (t.size() > guard) {
    throw GuardError("banks margin guard exceeded: n=" + std::to_string(t.size()) + " > " + std::to_string(guard));
  }
  return brute_force_mov(t, SolutionId::ba(), x);
}

// Degree heuristic for TC and k-kings margins: min(outdeg(x), min indeg(y)).
// Exact with high probability on large uniform random tournaments, not in
// general.
inline int tc_formula(const Tournament& t, int x) {
  const auto degs = t.out_degrees();
  int min_indeg = std::numeric_limits<int>::max();
  for (int y = 0; y < t.size(); ++y) {
    if (y != x) min_indeg = std::min(min_indeg, t.size() - 1 - degs[y]);
  }
  return std::min(degs[x], min_indeg);
}

// Checks that a finite result is a genuine certificate: the witness has
// |value| edges and reversing it flips x's membership.
inline bool verify_certificate(const Tournament& t, const SolutionId& s, int x, const MovResult& result,
                               std::string* reason = nullptr, int banks_guard = kDefaultBanksGuard) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (result.value.is_infinite()) throw ValidationError("verify_certificate needs a finite result");
  const int value = result.value.value();
  if (result.witness.size() != std::abs(value)) {
    return fail("witness has " + std::to_string(result.witness.size()) + " edges, value " + std::to_string(value));
  }
  const bool was_in = winners(t, s, banks_guard).contains(x);
  if (was_in != (value > 0)) {
    return fail("sign does not match current membership");
  }
  Tournament flipped = t.reversed(result.witness);
  const bool now_in = winners(flipped, s, banks_guard).contains(x);
  if (now_in == was_in) {
    return fail("reversing the witness does not flip membership");
  }
  if (reason) reason->clear();
  return true;
}

// Margin for one alternative under any solution; fast paths where they
// exist, brute force behind guards otherwise.
inline MovResult mov_for(const Tournament& t, const SolutionId& s, int x, int ba_guard = kDefaultBaGuard) {
  switch (s.kind) {
    case SolutionId::Kind::CO: return mov_co(t, x);
    case SolutionId::Kind::TC: return mov_tc(t, x);
    case SolutionId::Kind::UC: return mov_uc(t, x);
    case SolutionId::Kind::Kings:
      if (s.k == 3) return mov_3kings(t, x);
      if (t.size() > ba_guard) {
        throw GuardError("no fast margin algorithm for " + s.name() + "; n exceeds guard " + std::to_string(ba_guard));
      }
      return brute_force_mov(t, s, x);
    case SolutionId::Kind::BA: return mov_ba_small(t, x, ba_guard);
  }
  throw ValidationError("unhandled solution id");
}

// Margins for every alternative plus the argmax set and value diversity.
inline MovProfile mov_profile(const Tournament& t, const SolutionId& s, int ba_guard = kDefaultBaGuard) {
  MovProfile profile;
  profile.results.reserve(t.size());
  for (int x = 0; x < t.size(); ++x) profile.results.push_back(mov_for(t, s, x, ba_guard));

  MovValue best = profile.results[0].value;
  for (const auto& r : profile.results) {
    if (best < r.value) best = r.value;
  }
  std::vector<MovValue> seen;
  for (int x = 0; x < t.size(); ++x) {
    const MovValue& v = profile.results[x].value;
    if (v == best) profile.argmax.push_back(x);
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  }
  profile.unique_value_count = static_cast<int>(seen.size());
  return profile;
}

}  // namespace movlab
