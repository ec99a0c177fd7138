#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "movlab/errors.hpp"
#include "movlab/tournament.hpp"

namespace movlab {

// Cut value together with the tournament edges realizing it.
struct CutResult {
  int value = 0;
  std::vector<Edge> cut_edges;
};

// Unit-capacity flow network. Finite arcs carry a tournament-edge label;
// infinite arcs (capacity sentinel above any possible cut) never appear in
// a reported min cut.
class FlowNetwork {
 public:
  FlowNetwork(int node_count, int source, int sink)
      : source_(source), sink_(sink), head_(node_count, -1) {
    if (source == sink) throw ValidationError("flow source equals sink");
  }

  int add_node() {
    head_.push_back(-1);
    return static_cast<int>(head_.size()) - 1;
  }

  void add_arc(int from, int to, int capacity, std::optional<Edge> label = std::nullopt) {
    push_arc(from, to, capacity, label);
    push_arc(to, from, 0, std::nullopt);
  }

  // Blocking-flow max flow; O(E*sqrt(V)) on unit capacities.
  int max_flow() {
    int total = 0;
    while (bfs()) {
      iter_ = head_;
      while (true) {
        const int pushed = dfs(source_, kInf);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  // Labels of saturated arcs crossing the residual-reachability cut.
  // Deterministic given arc insertion order. Call after max_flow().
  std::vector<Edge> min_cut_edges() const {
    std::vector<char> reachable(head_.size(), 0);
    std::vector<int> queue{source_};
    reachable[source_] = 1;
    for (size_t qh = 0; qh < queue.size(); ++qh) {
      const int v = queue[qh];
      for (int a = head_[v]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].capacity > 0 && !reachable[arcs_[a].to]) {
          reachable[arcs_[a].to] = 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    std::vector<Edge> cut;
    for (size_t a = 0; a < arcs_.size(); a += 2) {
      const int from = arcs_[a ^ 1].to;
      const int to = arcs_[a].to;
      if (reachable[from] && !reachable[to] && arcs_[a].capacity == 0 && arcs_[a ^ 1].capacity > 0) {
        if (arcs_[a].label) cut.push_back(*arcs_[a].label);
      }
    }
    return cut;
  }

  static constexpr int kInf = 1 << 29;

 private:
  struct Arc {
    int to;
    int next;
    int capacity;
    std::optional<Edge> label;
  };

  void push_arc(int from, int to, int capacity, std::optional<Edge> label) {
    arcs_.push_back({to, head_[from], capacity, label});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
  }

  bool bfs() {
    level_.assign(head_.size(), -1);
    std::vector<int> queue{source_};
    level_[source_] = 0;
    for (size_t qh = 0; qh < queue.size(); ++qh) {
      const int v = queue[qh];
      for (int a = head_[v]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].capacity > 0 && level_[arcs_[a].to] == -1) {
          level_[arcs_[a].to] = level_[v] + 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return level_[sink_] != -1;
  }

  int dfs(int v, int limit) {
    if (v == sink_) return limit;
    for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.capacity > 0 && level_[arc.to] == level_[v] + 1) {
        const int pushed = dfs(arc.to, std::min(limit, arc.capacity));
        if (pushed > 0) {
          arc.capacity -= pushed;
          arcs_[a ^ 1].capacity += pushed;
          return pushed;
        }
      }
    }
    level_[v] = -2;  // dead end for this phase
    return 0;
  }

  int source_, sink_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

inline CutResult max_flow_unit(FlowNetwork& net) {
  CutResult result;
  result.value = net.max_flow();
  result.cut_edges = net.min_cut_edges();
  return result;
}

enum class CutBound { Len2, Len3, Unbounded };

namespace detail {

// mincut(x, y) on the raw tournament digraph: one unit arc per edge.
inline CutResult mincut_unbounded(const Adjacency& adj, int x, int y) {
  const int n = adj.size();
  FlowNetwork net(n, x, y);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && adj.dominates(u, v)) net.add_arc(u, v, 1, Edge{u, v});
    }
  }
  return max_flow_unit(net);
}

// Paths of length <= 2 from x to y are pairwise edge-disjoint, so the cut
// picks one edge per path: the direct edge plus (x, z) for every common
// intermediate z.
inline CutResult mincut_len2(const Adjacency& adj, int x, int y) {
  CutResult result;
  if (adj.dominates(x, y)) {
    result.value += 1;
    result.cut_edges.push_back({x, y});
  }
  for (int z = 0; z < adj.size(); ++z) {
    if (z != x && z != y && adj.dominates(x, z) && adj.dominates(z, y)) {
      result.value += 1;
      result.cut_edges.push_back({x, z});
    }
  }
  return result;
}

// Bilayer reduction for paths of length <= 3: node a_v for v in D(x)\{y},
// node b_w for w in dominators(y)\{x}; unit arcs source->a_v labelled (x,v),
// b_w->sink labelled (w,y), a_u->b_w labelled (u,w) for tournament edges
// u->w, and an infinite arc a_v->b_v when v lies in both layers. Every
// tournament edge maps to at most one finite arc, so a min cut is exactly a
// minimum set of edges hitting all x-y paths of length two or three. The
// direct edge, if present, must be cut separately.
inline CutResult mincut_len3(const Adjacency& adj, int x, int y) {
  const int n = adj.size();
  std::vector<int> a_node(n, -1), b_node(n, -1);
  FlowNetwork net(2, 0, 1);
  for (int v = 0; v < n; ++v) {
    if (v != y && adj.dominates(x, v)) a_node[v] = net.add_node();
    if (v != x && adj.dominates(v, y)) b_node[v] = net.add_node();
  }
  for (int v = 0; v < n; ++v) {
    if (a_node[v] != -1) net.add_arc(0, a_node[v], 1, Edge{x, v});
    if (b_node[v] != -1) net.add_arc(b_node[v], 1, 1, Edge{v, y});
    if (a_node[v] != -1 && b_node[v] != -1) net.add_arc(a_node[v], b_node[v], FlowNetwork::kInf);
  }
  for (int u = 0; u < n; ++u) {
    if (a_node[u] == -1) continue;
    for (int w = 0; w < n; ++w) {
      if (w != u && b_node[w] != -1 && adj.dominates(u, w)) {
        net.add_arc(a_node[u], b_node[w], 1, Edge{u, w});
      }
    }
  }
  CutResult result = max_flow_unit(net);
  if (adj.dominates(x, y)) {
    result.value += 1;
    result.cut_edges.push_back({x, y});
  }
  return result;
}

}  // namespace detail

// Smallest set of edges whose removal leaves no x->y path within the bound.
inline CutResult mincut_bounded(const Tournament& t, int x, int y, CutBound bound) {
  if (x == y) throw ValidationError("mincut requires distinct alternatives");
  switch (bound) {
    case CutBound::Len2: return detail::mincut_len2(t.adj(), x, y);
    case CutBound::Len3: return detail::mincut_len3(t.adj(), x, y);
    case CutBound::Unbounded: return detail::mincut_unbounded(t.adj(), x, y);
  }
  throw ValidationError("unhandled cut bound");
}

}  // namespace movlab
