#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "movlab/errors.hpp"
#include "movlab/tournament.hpp"

namespace movlab {

// Nonempty set of winning alternatives, sorted ascending.
struct WinnerSet {
  std::vector<AltId> members;

  bool contains(AltId x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  int size() const { return static_cast<int>(members.size()); }

  friend bool operator==(const WinnerSet&, const WinnerSet&) = default;
};

struct SolutionId {
  enum class Kind { CO, TC, UC, Kings, BA };

  Kind kind = Kind::CO;
  int k = 0;  // Kings only; 2-kings is spelled "uc"

  static SolutionId co() { return {Kind::CO, 0}; }
  static SolutionId tc() { return {Kind::TC, 0}; }
  static SolutionId uc() { return {Kind::UC, 0}; }
  static SolutionId kings(int k) { return {Kind::Kings, k}; }
  static SolutionId ba() { return {Kind::BA, 0}; }

  std::string name() const {
    switch (kind) {
      case Kind::CO: return "co";
      case Kind::TC: return "tc";
      case Kind::UC: return "uc";
      case Kind::Kings: return "kings" + std::to_string(k);
      case Kind::BA: return "ba";
    }
    return "?";
  }

  static SolutionId parse(const std::string& text) {
    if (text == "co") return co();
    if (text == "tc") return tc();
    if (text == "uc") return uc();
    if (text == "ba") return ba();
    if (text.rfind("kings", 0) == 0) {
      const std::string digits = text.substr(5);
      try {
        size_t pos = 0;
        const int k = std::stoi(digits, &pos);
        if (pos != digits.size()) throw std::invalid_argument("");
        if (k == 2) throw ValidationError("kings2 is the uncovered set; use 'uc'");
        if (k < 3) throw ValidationError("kings" + digits + " needs k >= 3");
        return kings(k);
      } catch (const std::invalid_argument&) {
        throw ValidationError("bad solution name '" + text + "'");
      } catch (const std::out_of_range&) {
        throw ValidationError("bad solution name '" + text + "'");
      }
    }
    throw ValidationError("unknown solution '" + text + "' (expected co, tc, uc, kingsK, ba)");
  }

  friend bool operator==(const SolutionId&, const SolutionId&) = default;
};

inline constexpr int kDefaultBanksGuard = 16;

namespace detail {

// Tarjan SCCs, iterative. Components are emitted sinks-first; the source
// component of a tournament condensation is therefore the last one.
inline std::vector<std::vector<int>> strongly_connected_components(const Adjacency& adj) {
  const int n = adj.size();
  std::vector<int> dfs_number(n, -1), low(n, 0), stack_index(n, -1);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  struct Frame {
    int vertex;
    int next_succ;
  };
  std::vector<Frame> call_stack;

  for (int root = 0; root < n; ++root) {
    if (dfs_number[root] != -1) continue;
    call_stack.push_back({root, 0});
    while (!call_stack.empty()) {
      auto& [v, next_succ] = call_stack.back();
      if (next_succ == 0) {
        dfs_number[v] = low[v] = counter++;
        stack_index[v] = static_cast<int>(stack.size());
        stack.push_back(v);
      }
      bool descended = false;
      for (int u = next_succ; u < n; ++u) {
        if (!adj.dominates(v, u)) continue;
        if (dfs_number[u] == -1) {
          next_succ = u + 1;
          call_stack.push_back({u, 0});
          descended = true;
          break;
        }
        if (stack_index[u] != -1) low[v] = std::min(low[v], dfs_number[u]);
      }
      if (descended) continue;
      if (low[v] == dfs_number[v]) {
        const int cut = stack_index[v];
        std::vector<int> component(stack.begin() + cut, stack.end());
        for (int u : component) stack_index[u] = -1;
        stack.resize(static_cast<size_t>(cut));
        components.push_back(std::move(component));
      }
      const int finished = v;
      call_stack.pop_back();
      if (!call_stack.empty()) {
        low[call_stack.back().vertex] = std::min(low[call_stack.back().vertex], low[finished]);
      }
    }
  }
  return components;
}

}  // namespace detail

// Alternatives with maximum outdegree.
inline WinnerSet copeland_set(const Tournament& t) {
  const auto degs = t.out_degrees();
  const int best = *std::max_element(degs.begin(), degs.end());
  WinnerSet result;
  for (int x = 0; x < t.size(); ++x) {
    if (degs[x] == best) result.members.push_back(x);
  }
  return result;
}

// Source component of the SCC condensation; equals the set of alternatives
// that reach every other alternative.
inline WinnerSet top_cycle(const Tournament& t) {
  auto components = detail::strongly_connected_components(t.adj());
  // Pick the component with no incoming edge from outside. In a tournament
  // the condensation is a total order, so exactly one component qualifies;
  // checking directly keeps this independent of emission order.
  for (auto& component : components) {
    const int probe = component[0];
    bool is_source = true;
    for (auto& other : components) {
      if (&other == &component) continue;
      if (t.dominates(other[0], probe)) {
        is_source = false;
        break;
      }
    }
    if (is_source) {
      std::sort(component.begin(), component.end());
      return WinnerSet{std::move(component)};
    }
  }
  throw std::logic_error("tournament condensation has no source component");
}

// Alternatives not covered by any other alternative; equals the 2-kings set.
inline WinnerSet uncovered_set(const Tournament& t) {
  WinnerSet result;
  for (int x = 0; x < t.size(); ++x) {
    bool covered = false;
    for (int y = 0; y < t.size() && !covered; ++y) {
      if (y != x && covers(t.adj(), y, x)) covered = true;
    }
    if (!covered) result.members.push_back(x);
  }
  return result;
}

// Alternatives reaching every other alternative within k steps, 2 <= k <= n-1.
inline WinnerSet k_kings(const Tournament& t, int k) {
  if (k < 2 || k > t.size() - 1) {
    throw ValidationError("k=" + std::to_string(k) + " outside [2, n-1] for n=" + std::to_string(t.size()));
  }
  WinnerSet result;
  for (int x = 0; x < t.size(); ++x) {
    if (reaches_all_within(t.adj(), x, k)) result.members.push_back(x);
  }
  return result;
}

namespace detail {

// Banks membership: does some transitive subtournament with maximal element
// x admit no outside alternative dominating all of it? Chains are extended
// downwards (each new element dominated by all current members), which
// enumerates every transitive set with x on top exactly once. States are
// memoised on (extenders, candidates) bitmask pairs.
class BanksSearch {
 public:
  explicit BanksSearch(const Adjacency& adj) : adj_(adj), n_(adj.size()) {}

  bool member(int x) {
    uint64_t extenders = 0, candidates = 0;
    for (int v = 0; v < n_; ++v) {
      if (v == x) continue;
      if (adj_.dominates(v, x)) {
        extenders |= uint64_t{1} << v;
      } else {
        candidates |= uint64_t{1} << v;
      }
    }
    seen_.clear();
    return search(extenders, candidates);
  }

 private:
  bool search(uint64_t extenders, uint64_t candidates) {
    if (extenders == 0) return true;
    if (!seen_.insert({extenders, candidates}).second) return false;
    uint64_t rest = candidates;
    while (rest) {
      const int b = __builtin_ctzll(rest);
      rest &= rest - 1;
      uint64_t next_ext = 0, next_cand = 0;
      for (uint64_t bits = extenders; bits;) {
        const int v = __builtin_ctzll(bits);
        bits &= bits - 1;
        if (adj_.dominates(v, b)) next_ext |= uint64_t{1} << v;
      }
      for (uint64_t bits = candidates; bits;) {
        const int v = __builtin_ctzll(bits);
        bits &= bits - 1;
        if (v != b && adj_.dominates(b, v)) next_cand |= uint64_t{1} << v;
      }
      if (search(next_ext, next_cand)) return true;
    }
    return false;
  }

  struct PairHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
      uint64_t h = p.first * 0x9E3779B97F4A7C15ULL;
      h ^= p.second + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
      return static_cast<size_t>(h);
    }
  };

  const Adjacency& adj_;
  int n_;
  std::unordered_set<std::pair<uint64_t, uint64_t>, PairHash> seen_;
};

}  // namespace detail

inline bool banks_member(const Tournament& t, int x, int guard = kDefaultBanksGuard) {
  if (t.size() > std::min(guard, 64)) {
    throw GuardError("banks set guard exceeded: n=" + std::to_string(t.size()) + " > " + std::to_string(std::min(guard, 64)));
  }
  detail::BanksSearch search(t.adj());
  return search.member(x);
}

// Condorcet winners of non-extendable transitive subtournaments. Exact and
// exponential; guarded by size.
inline WinnerSet banks_set(const Tournament& t, int guard = kDefaultBanksGuard) {
  if (t.size() > std::min(guard, 64)) {
    throw GuardError("banks set guard exceeded: n=" + std::to_string(t.size()) + " > " + std::to_string(std::min(guard, 64)));
  }
  detail::BanksSearch search(t.adj());
  WinnerSet result;
  for (int x = 0; x < t.size(); ++x) {
    if (search.member(x)) result.members.push_back(x);
  }
  return result;
}

inline WinnerSet winners(const Tournament& t, const SolutionId& s, int banks_guard = kDefaultBanksGuard) {
  switch (s.kind) {
    case SolutionId::Kind::CO: return copeland_set(t);
    case SolutionId::Kind::TC: return top_cycle(t);
    case SolutionId::Kind::UC: return uncovered_set(t);
    case SolutionId::Kind::Kings:
      if (s.k == 2) throw ValidationError("kings with k=2 is the uncovered set; use uc");
      if (s.k < 3) throw ValidationError("kings needs k >= 3");
      return k_kings(t, s.k);
    case SolutionId::Kind::BA: return banks_set(t, banks_guard);
  }
  throw ValidationError("unhandled solution id");
}

}  // namespace movlab
