#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "movlab/errors.hpp"

namespace movlab {

using AltId = int;

struct Edge {
  AltId from = 0;
  AltId to = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return std::to_string(e.from) + "->" + std::to_string(e.to);
}

// A set of currently-present edges to be reversed, kept sorted and unique.
class ReversalSet {
 public:
  ReversalSet() = default;
  explicit ReversalSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
      if (e.from == e.to) throw ValidationError("reversal set contains a self-loop " + to_string(e));
    }
  }

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }

  friend bool operator==(const ReversalSet&, const ReversalSet&) = default;

 private:
  std::vector<Edge> edges_;
};

// Dominance matrix as packed bit rows: bit j of row i is set iff i beats j.
// Mutable scratch type used by builders and search loops; `Tournament` wraps
// a validated, immutable instance.
class Adjacency {
 public:
  Adjacency() = default;
  explicit Adjacency(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

  int size() const { return n_; }
  int words() const { return words_; }

  bool dominates(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1;
  }

  void set(int i, int j) { row(i)[j >> 6] |= uint64_t{1} << (j & 63); }
  void clear(int i, int j) { row(i)[j >> 6] &= ~(uint64_t{1} << (j & 63)); }

  void set_pair(int winner, int loser) {
    set(winner, loser);
    clear(loser, winner);
  }

  // Pre: (from, to) is currently present.
  void flip(int from, int to) {
    clear(from, to);
    set(to, from);
  }

  const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_; }
  uint64_t* row(int i) { return bits_.data() + static_cast<size_t>(i) * words_; }

  friend bool operator==(const Adjacency&, const Adjacency&) = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

namespace detail {

inline int popcount_row(const uint64_t* row, int words) {
  int total = 0;
  for (int w = 0; w < words; ++w) total += __builtin_popcountll(row[w]);
  return total;
}

inline bool row_subset_of(const uint64_t* sub, const uint64_t* super, int words) {
  for (int w = 0; w < words; ++w) {
    if (sub[w] & ~super[w]) return false;
  }
  return true;
}

}  // namespace detail

inline int out_degree(const Adjacency& adj, int x) {
  return detail::popcount_row(adj.row(x), adj.words());
}

// D(y) subseteq D(x); implies x beats y whenever true.
inline bool covers(const Adjacency& adj, int x, int y) {
  return x != y && detail::row_subset_of(adj.row(y), adj.row(x), adj.words());
}

// Bitmask of alternatives reachable from x within at most k steps, x excluded.
inline std::vector<uint64_t> reach_within_mask(const Adjacency& adj, int x, int k) {
  const int words = adj.words();
  std::vector<uint64_t> reached(words, 0);
  std::vector<uint64_t> frontier(adj.row(x), adj.row(x) + words);
  for (int step = 0; step < k; ++step) {
    bool grew = false;
    for (int w = 0; w < words; ++w) {
      if (frontier[w]) grew = true;
      reached[w] |= frontier[w];
    }
    if (!grew || step + 1 == k) break;
    std::vector<uint64_t> next(words, 0);
    for (int w = 0; w < words; ++w) {
      uint64_t bits = frontier[w];
      while (bits) {
        const int v = w * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        const uint64_t* row = adj.row(v);
        for (int u = 0; u < words; ++u) next[u] |= row[u];
      }
    }
    frontier = std::move(next);
    // Only genuinely new vertices stay in the frontier.
    for (int w = 0; w < words; ++w) frontier[w] &= ~reached[w];
  }
  reached[x >> 6] &= ~(uint64_t{1} << (x & 63));
  return reached;
}

inline bool reaches_all_within(const Adjacency& adj, int x, int k) {
  const auto mask = reach_within_mask(adj, x, k);
  int count = 0;
  for (int w = 0; w < adj.words(); ++w) count += __builtin_popcountll(mask[w]);
  return count == adj.size() - 1;
}

enum class CondorcetStatus { Winner, Loser, Neither };

// Validated complete asymmetric digraph over n >= 2 alternatives.
// Immutable after construction; safe to share across threads.
class Tournament {
 public:
  explicit Tournament(Adjacency adj) : adj_(std::move(adj)) { validate(); }

  static Tournament from_matrix(int n, const std::vector<std::vector<bool>>& matrix) {
    if (static_cast<int>(matrix.size()) != n) throw ValidationError("matrix has " + std::to_string(matrix.size()) + " rows, expected " + std::to_string(n));
    Adjacency adj(std::max(n, 0));
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(matrix[i].size()) != n) throw ValidationError("matrix row " + std::to_string(i) + " has wrong length");
      for (int j = 0; j < n; ++j) {
        if (matrix[i][j]) adj.set(i, j);
      }
    }
    return Tournament(std::move(adj));
  }

  int size() const { return adj_.size(); }
  const Adjacency& adj() const { return adj_; }

  bool dominates(int i, int j) const { return adj_.dominates(i, j); }

  int out_degree(int x) const { return movlab::out_degree(adj_, x); }
  int in_degree(int x) const { return size() - 1 - out_degree(x); }

  // (outdegree, indegree) per alternative; the components sum to n-1.
  std::vector<std::pair<int, int>> degrees() const {
    std::vector<std::pair<int, int>> result(size());
    for (int x = 0; x < size(); ++x) {
      const int out = out_degree(x);
      result[x] = {out, size() - 1 - out};
    }
    return result;
  }

  std::vector<int> out_degrees() const {
    std::vector<int> result(size());
    for (int x = 0; x < size(); ++x) result[x] = out_degree(x);
    return result;
  }

  bool covers(int x, int y) const {
    if (x == y) throw ValidationError("covers requires distinct alternatives");
    return movlab::covers(adj_, x, y);
  }

  std::vector<AltId> reach_within(int x, int k) const {
    if (k < 1 || k > size() - 1) throw ValidationError("reach bound k=" + std::to_string(k) + " outside [1, n-1]");
    const auto mask = reach_within_mask(adj_, x, k);
    std::vector<AltId> out;
    for (int v = 0; v < size(); ++v) {
      if ((mask[v >> 6] >> (v & 63)) & 1) out.push_back(v);
    }
    return out;
  }

  CondorcetStatus condorcet_status(int x) const {
    const int out = out_degree(x);
    if (out == size() - 1) return CondorcetStatus::Winner;
    if (out == 0) return CondorcetStatus::Loser;
    return CondorcetStatus::Neither;
  }

  // T^R: all edges of r reversed. Every edge of r must be present.
  Tournament reversed(const ReversalSet& r) const {
    Adjacency adj = adj_;
    for (const Edge& e : r.edges()) {
      check_alt(e.from);
      check_alt(e.to);
      if (!adj_.dominates(e.from, e.to)) throw ValidationError("edge " + to_string(e) + " not present in tournament");
      adj.flip(e.from, e.to);
    }
    return Tournament(std::move(adj));
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(size()) * (size() - 1) / 2);
    for (int i = 0; i < size(); ++i) {
      for (int j = i + 1; j < size(); ++j) {
        out.push_back(adj_.dominates(i, j) ? Edge{i, j} : Edge{j, i});
      }
    }
    return out;
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  void check_alt(int x) const {
    if (x < 0 || x >= size()) throw ValidationError("alternative " + std::to_string(x) + " out of range");
  }

  void validate() const {
    const int n = adj_.size();
    if (n < 2) throw ValidationError("tournament needs at least 2 alternatives, got " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
      if (adj_.dominates(i, i)) throw ValidationError("diagonal entry set at " + std::to_string(i));
      for (int j = i + 1; j < n; ++j) {
        const bool ij = adj_.dominates(i, j);
        const bool ji = adj_.dominates(j, i);
        if (ij && ji) throw ValidationError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") doubly oriented");
        if (!ij && !ji) throw ValidationError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") unoriented");
      }
    }
    const int words = adj_.words();
    const int tail = n & 63;
    if (tail != 0) {
      const uint64_t junk = ~((uint64_t{1} << tail) - 1);
      for (int i = 0; i < n; ++i) {
        if (adj_.row(i)[words - 1] & junk) throw ValidationError("stray bits beyond column range");
      }
    }
  }

  Adjacency adj_;
};

// TRN1 text format.
//   line 1: "TRN1"
//   line 2: n
//   lines 3..n+2: n characters '0'/'1'; row i column j is '1' iff i beats j
inline std::string serialize_trn(const Tournament& t) {
  std::string out = "TRN1\n" + std::to_string(t.size()) + "\n";
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) out.push_back(t.dominates(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

inline Tournament parse_trn(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto fail = [](int line_no, const std::string& msg) -> void {
    throw ValidationError("line " + std::to_string(line_no) + ": " + msg);
  };

  if (!std::getline(in, line) || line != "TRN1") fail(1, "expected header 'TRN1'");
  if (!std::getline(in, line)) fail(2, "missing size line");
  int n = 0;
  try {
    size_t pos = 0;
    n = std::stoi(line, &pos);
    if (pos != line.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    fail(2, "size is not a decimal integer: '" + line + "'");
  }
  if (n < 2) fail(2, "size must be at least 2, got " + std::to_string(n));

  Adjacency adj(n);
  for (int i = 0; i < n; ++i) {
    const int line_no = 3 + i;
    if (!std::getline(in, line)) fail(line_no, "missing row " + std::to_string(i));
    if (static_cast<int>(line.size()) != n) {
      fail(line_no, "row has length " + std::to_string(line.size()) + ", expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      if (line[j] != '0' && line[j] != '1') fail(line_no, std::string("invalid character '") + line[j] + "'");
      if (line[j] == '1') {
        if (i == j) fail(line_no, "diagonal entry set at " + std::to_string(i));
        adj.set(i, j);
      }
    }
    for (int j = 0; j < i; ++j) {
      const bool ij = adj.dominates(i, j);
      const bool ji = adj.dominates(j, i);
      if (ij && ji) fail(line_no, "pair (" + std::to_string(j) + "," + std::to_string(i) + ") doubly oriented");
      if (!ij && !ji) fail(line_no, "pair (" + std::to_string(j) + "," + std::to_string(i) + ") unoriented");
    }
  }
  if (std::getline(in, line) && !line.empty()) fail(n + 3, "trailing content after last row");
  return Tournament(std::move(adj));
}

}  // namespace movlab
