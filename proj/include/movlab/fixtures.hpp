#pragma once

#include <string>
#include <vector>

#include "movlab/errors.hpp"
#include "movlab/tournament.hpp"

namespace movlab {

// Named example tournaments used throughout the test suites. Each builder
// documents its exact adjacency; indices are pinned and stable.

// i beats j iff i < j; index 0 is the Condorcet winner.
inline Tournament transitive_tournament(int n) {
  if (n < 2) throw ValidationError("transitive tournament needs n >= 2");
  Adjacency adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) adj.set(i, j);
  }
  return Tournament(std::move(adj));
}

// Regular tournament on odd m: each alternative beats its (m-1)/2 cyclic
// successors.
inline Tournament cyclone(int m) {
  if (m < 3 || m % 2 == 0) throw ValidationError("cyclone needs odd m >= 3, got " + std::to_string(m));
  Adjacency adj(m);
  for (int i = 0; i < m; ++i) {
    for (int d = 1; d <= (m - 1) / 2; ++d) adj.set(i, (i + d) % m);
  }
  return Tournament(std::move(adj));
}

namespace detail {

// Cyclone structure written into a block of an existing matrix.
inline void fill_cyclone_block(Adjacency& adj, int base, int m) {
  for (int i = 0; i < m; ++i) {
    for (int d = 1; d <= (m - 1) / 2; ++d) adj.set_pair(base + i, base + (i + d) % m);
  }
}

inline void fill_transitive_block(Adjacency& adj, int base, int m) {
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) adj.set_pair(base + i, base + j);
  }
}

}  // namespace detail

// Seven alternatives x, z, y1..y5 at indices 0, 1, 2..6. The y's form a
// cyclone; x beats y1, y2, z; z beats all y's; y3, y4, y5 beat x.
// Outdegrees: z 5; x, y3, y4, y5 3; y1, y2 2.
inline Tournament fig2() {
  constexpr int x = 0, z = 1, y1 = 2, y2 = 3, y3 = 4, y4 = 5, y5 = 6;
  Adjacency adj(7);
  const int ys[5] = {y1, y2, y3, y4, y5};
  for (int i = 0; i < 5; ++i) {
    adj.set_pair(ys[i], ys[(i + 1) % 5]);
    adj.set_pair(ys[i], ys[(i + 2) % 5]);
  }
  adj.set_pair(x, y1);
  adj.set_pair(x, y2);
  adj.set_pair(x, z);
  for (int y : ys) adj.set_pair(z, y);
  adj.set_pair(y3, x);
  adj.set_pair(y4, x);
  adj.set_pair(y5, x);
  return Tournament(std::move(adj));
}

// Seven alternatives a..g at indices 0..6, all with outdegree 3:
// two 3-cycles a->b->c->a and d->e->f->d, a>d, b>e, c>f, the remaining
// cross pairs won by the second cycle, {a,b,c}>g, g>{d,e,f}.
inline Tournament fig4() {
  constexpr int a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6;
  Adjacency adj(7);
  adj.set_pair(a, b);
  adj.set_pair(b, c);
  adj.set_pair(c, a);
  adj.set_pair(d, e);
  adj.set_pair(e, f);
  adj.set_pair(f, d);
  adj.set_pair(a, d);
  adj.set_pair(b, e);
  adj.set_pair(c, f);
  adj.set_pair(e, a);
  adj.set_pair(f, a);
  adj.set_pair(d, b);
  adj.set_pair(f, b);
  adj.set_pair(d, c);
  adj.set_pair(e, c);
  for (int v : {a, b, c}) adj.set_pair(v, g);
  for (int v : {d, e, f}) adj.set_pair(g, v);
  return Tournament(std::move(adj));
}

// Nine alternatives x, z, y1..y7 at indices 0, 1, 2..8.
// Outdegrees: x 4, z 4, y1 4, y2 2, y3 1, y4 3, y5 y6 y7 6.
inline Tournament fig5() {
  constexpr int x = 0, z = 1;
  auto y = [](int i) { return 1 + i; };  // y(1) == 2 .. y(7) == 8
  Adjacency adj(9);
  for (int i : {1, 2, 3, 4}) adj.set_pair(x, y(i));
  adj.set_pair(z, x);
  for (int i : {2, 3, 4}) adj.set_pair(z, y(i));
  adj.set_pair(y(1), z);
  for (int i : {2, 3, 4}) adj.set_pair(y(1), y(i));
  adj.set_pair(y(2), y(3));
  adj.set_pair(y(2), y(4));
  adj.set_pair(y(3), y(4));
  for (int i : {5, 6, 7}) adj.set_pair(y(4), y(i));
  adj.set_pair(y(5), y(6));
  adj.set_pair(y(6), y(7));
  adj.set_pair(y(7), y(5));
  for (int hi : {5, 6, 7}) {
    for (int lo : {1, 2, 3}) adj.set_pair(y(hi), y(lo));
    adj.set_pair(y(hi), z);
    adj.set_pair(y(hi), x);
  }
  return Tournament(std::move(adj));
}

// Chain construction with singletons x, y, z, t and 2k-3 supernodes:
// k-1 cyclone blocks of odd size alpha and k-2 transitive blocks of size
// beta, arranged in columns x,y | A1,B1 | ... | A(k-1) | z | t. Drawn edges
// run y->x, x->A1, y->B1, Ai->Ai+1, Bi->Bi+1, Ai->Bi, A(k-1)->{z,t},
// B(k-2)->z, z->t; every other pair points from the later column to the
// earlier one. Outdegrees: x alpha, y beta+1.
inline Tournament fig7(int k, int alpha, int beta) {
  if (k < 3) throw ValidationError("fig7 needs k >= 3");
  if (alpha < 1 || alpha % 2 == 0) throw ValidationError("fig7 needs odd alpha >= 1");
  if (beta < 1) throw ValidationError("fig7 needs beta >= 1");

  const int n = 4 + (k - 1) * alpha + (k - 2) * beta;
  Adjacency adj(n);
  std::vector<int> column(n);
  std::vector<int> a_base(k), b_base(k);  // 1-based block indices

  int next = 2;
  column[0] = 0;  // x
  column[1] = 0;  // y
  for (int i = 1; i <= k - 2; ++i) {
    a_base[i] = next;
    for (int j = 0; j < alpha; ++j) column[next++] = i;
    b_base[i] = next;
    for (int j = 0; j < beta; ++j) column[next++] = i;
  }
  a_base[k - 1] = next;
  for (int j = 0; j < alpha; ++j) column[next++] = k - 1;
  const int z = next++;
  const int t = next++;
  column[z] = k;
  column[t] = k + 1;

  // Default orientation: later column beats earlier column.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (column[u] == column[v]) continue;
      if (column[u] > column[v]) {
        adj.set_pair(u, v);
      } else {
        adj.set_pair(v, u);
      }
    }
  }

  auto block_beats = [&](int winner_base, int winner_len, int loser_base, int loser_len) {
    for (int i = 0; i < winner_len; ++i) {
      for (int j = 0; j < loser_len; ++j) adj.set_pair(winner_base + i, loser_base + j);
    }
  };
  auto block_beats_node = [&](int base, int len, int node) {
    for (int i = 0; i < len; ++i) adj.set_pair(base + i, node);
  };
  auto node_beats_block = [&](int node, int base, int len) {
    for (int i = 0; i < len; ++i) adj.set_pair(node, base + i);
  };

  adj.set_pair(1, 0);            // y -> x
  node_beats_block(0, a_base[1], alpha);  // x -> A1
  node_beats_block(1, b_base[1], beta);   // y -> B1
  for (int i = 1; i <= k - 2; ++i) block_beats(a_base[i], alpha, a_base[i + 1], alpha);
  for (int i = 1; i <= k - 3; ++i) block_beats(b_base[i], beta, b_base[i + 1], beta);
  for (int i = 1; i <= k - 2; ++i) block_beats(a_base[i], alpha, b_base[i], beta);
  block_beats_node(a_base[k - 1], alpha, z);
  block_beats_node(a_base[k - 1], alpha, t);
  block_beats_node(b_base[k - 2], beta, z);
  adj.set_pair(z, t);

  for (int i = 1; i <= k - 1; ++i) detail::fill_cyclone_block(adj, a_base[i], alpha);
  for (int i = 1; i <= k - 2; ++i) detail::fill_transitive_block(adj, b_base[i], beta);

  return Tournament(std::move(adj));
}

// chain_count cyclones of odd size m chained left to right: every member of
// an earlier block beats every member of a later block, except that each
// later block's first member ("distinguished" alternative) beats the first
// member of block 1. Needs m > 2*chain_count + 1.
inline Tournament cyclone_chain(int chain_count, int m) {
  if (chain_count < 2) throw ValidationError("cyclone_chain needs at least 2 blocks");
  if (m < 3 || m % 2 == 0) throw ValidationError("cyclone_chain needs odd m >= 3");
  if (m <= 2 * chain_count + 1) {
    throw ValidationError("cyclone_chain needs m > 2l+1 (l=" + std::to_string(chain_count) + ", m=" + std::to_string(m) + ")");
  }
  const int n = chain_count * m;
  Adjacency adj(n);
  for (int block = 0; block < chain_count; ++block) detail::fill_cyclone_block(adj, block * m, m);
  for (int earlier = 0; earlier < chain_count; ++earlier) {
    for (int later = earlier + 1; later < chain_count; ++later) {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) adj.set_pair(earlier * m + i, later * m + j);
      }
    }
  }
  for (int block = 1; block < chain_count; ++block) adj.set_pair(block * m, 0);  // backward edges
  return Tournament(std::move(adj));
}

// cyclone(2k+1) plus a final alternative dominated by everyone.
inline Tournament regular_plus_sink(int k) {
  if (k < 1) throw ValidationError("regular_plus_sink needs k >= 1");
  const int m = 2 * k + 1;
  Adjacency adj(m + 1);
  detail::fill_cyclone_block(adj, 0, m);
  for (int i = 0; i < m; ++i) adj.set_pair(i, m);
  return Tournament(std::move(adj));
}

// Builds a fixture from a spec string "name[:param[:param...]]", e.g.
// "fig4", "cyclone:7", "fig7:3:5:4", "cyclone_chain:3:9", "transitive:5".
inline Tournament build_fixture(const std::string& spec) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon == std::string::npos ? colon : colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  const std::string& name = parts[0];
  auto arg = [&](size_t i) -> int {
    if (i >= parts.size()) throw ValidationError("fixture '" + name + "' missing parameter " + std::to_string(i));
    try {
      size_t pos = 0;
      const int v = std::stoi(parts[i], &pos);
      if (pos != parts[i].size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ValidationError("fixture parameter '" + parts[i] + "' is not an integer");
    }
  };
  auto expect_arity = [&](size_t arity) {
    if (parts.size() != arity + 1) {
      throw ValidationError("fixture '" + name + "' takes " + std::to_string(arity) + " parameter(s)");
    }
  };

  if (name == "fig2") { expect_arity(0); return fig2(); }
  if (name == "fig4") { expect_arity(0); return fig4(); }
  if (name == "fig5") { expect_arity(0); return fig5(); }
  if (name == "fig7") { expect_arity(3); return fig7(arg(1), arg(2), arg(3)); }
  if (name == "cyclone") { expect_arity(1); return cyclone(arg(1)); }
  if (name == "cyclone_chain") { expect_arity(2); return cyclone_chain(arg(1), arg(2)); }
  if (name == "transitive") { expect_arity(1); return transitive_tournament(arg(1)); }
  if (name == "regular_plus_sink") { expect_arity(1); return regular_plus_sink(arg(1)); }
  throw ValidationError("unknown fixture '" + name + "'");
}

}  // namespace movlab
