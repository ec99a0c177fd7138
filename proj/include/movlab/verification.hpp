#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "movlab/errors.hpp"
#include "movlab/fixtures.hpp"
#include "movlab/generators.hpp"
#include "movlab/mov.hpp"
#include "movlab/rng.hpp"
#include "movlab/solutions.hpp"

namespace movlab {

// Two artificial solutions used as counterexamples: monotone but not
// transfer-monotone, and vice versa. Their margins break cover-consistency.

namespace membership {

// Excluded iff dominated by an alternative of outdegree 1 and n >= 4.
inline bool s1(const Adjacency& adj, int x) {
  if (adj.size() < 4) return true;
  for (int y = 0; y < adj.size(); ++y) {
    if (y != x && adj.dominates(y, x) && out_degree(adj, y) == 1) return false;
  }
  return true;
}

// Excluded iff outdegree 1 while some other alternative has outdegree 0.
inline bool s2(const Adjacency& adj, int x) {
  if (out_degree(adj, x) != 1) return true;
  for (int y = 0; y < adj.size(); ++y) {
    if (y != x && out_degree(adj, y) == 0) return false;
  }
  return true;
}

}  // namespace membership

inline WinnerSet s1_winners(const Tournament& t) {
  WinnerSet result;
  for (int x = 0; x < t.size(); ++x) {
    if (membership::s1(t.adj(), x)) result.members.push_back(x);
  }
  if (result.members.empty()) throw std::logic_error("s1 selected nothing");
  return result;
}

inline WinnerSet s2_winners(const Tournament& t) {
  WinnerSet result;
  for (int x = 0; x < t.size(); ++x) {
    if (membership::s2(t.adj(), x)) result.members.push_back(x);
  }
  if (result.members.empty()) throw std::logic_error("s2 selected nothing");
  return result;
}

// ---------------------------------------------------------------------------
// Property suites.

struct PropertyOptions {
  int trials = 0;  // 0: use the property's default
  uint64_t seed = 1;
  int min_n = 3;
  int max_n = 25;
};

struct Violation {
  std::string description;
  std::string tournament_trn;
};

struct PropertyReport {
  std::string name;
  std::string generator_desc;
  int trials = 0;
  std::vector<Violation> violations;
  std::string note;

  bool passed() const { return violations.empty(); }
};

namespace detail {

struct PropertyContext {
  PropertyReport report;
  PropertyOptions opts;

  void violate(const Tournament& t, const std::string& description) {
    report.violations.push_back({description, serialize_trn(t)});
  }

  Tournament random_tournament(uint64_t trial, Model model, double p) {
    Rng pick(mix_seed(opts.seed, trial * 2 + 1));
    GeneratorConfig cfg;
    cfg.model = model;
    cfg.p = p;
    cfg.n = opts.min_n + static_cast<int>(pick.next_below(static_cast<uint64_t>(opts.max_n - opts.min_n + 1)));
    cfg.seed = mix_seed(opts.seed, trial * 2);
    return generate(cfg);
  }

  Rng trial_rng(uint64_t trial) { return Rng(mix_seed(opts.seed, 0x5eed0000 + trial)); }
};

inline std::vector<SolutionId> fast_solutions(int n) {
  std::vector<SolutionId> out = {SolutionId::co(), SolutionId::tc(), SolutionId::uc()};
  if (n >= 4) out.push_back(SolutionId::kings(3));
  return out;
}

inline int mov_value(const Tournament& t, const SolutionId& s, int x) {
  return mov_for(t, s, x).value.value();
}

inline std::string format_fraction(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", v);
  return buffer;
}

inline PropertyContext make_context(std::string name, std::string generator_desc, const PropertyOptions& opts) {
  PropertyContext ctx;
  ctx.report.name = std::move(name);
  ctx.report.generator_desc = std::move(generator_desc);
  ctx.opts = opts;
  return ctx;
}

}  // namespace detail

using PropertyFn = std::function<PropertyReport(const PropertyOptions&)>;

namespace properties {

// Reversing an incoming edge of x never lowers x's margin.
inline PropertyReport mov_monotonicity(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 500;
  auto ctx = detail::make_context("mov_monotonicity", "uniform random, sizes " + std::to_string(opts.min_n) + ".." + std::to_string(opts.max_n), opts);
  ctx.report.trials = opts.trials;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::Uniform, 0.5);
    Rng rng = ctx.trial_rng(trial);
    const int x = static_cast<int>(rng.next_below(t.size()));
    std::vector<int> dominators;
    for (int y = 0; y < t.size(); ++y) {
      if (y != x && t.dominates(y, x)) dominators.push_back(y);
    }
    if (dominators.empty()) continue;
    const int y = dominators[rng.next_below(dominators.size())];
    const Tournament flipped = t.reversed(ReversalSet({Edge{y, x}}));

    auto solutions = detail::fast_solutions(t.size());
    if (t.size() <= 7) solutions.push_back(SolutionId::ba());
    for (const SolutionId& s : solutions) {
      const int before = detail::mov_value(t, s, x);
      const int after = detail::mov_value(flipped, s, x);
      if (after < before) {
        ctx.violate(t, s.name() + ": margin of " + std::to_string(x) + " fell " + std::to_string(before) + " -> " +
                           std::to_string(after) + " after reversing (" + std::to_string(y) + "," + std::to_string(x) + ")");
      }
    }
  }
  return ctx.report;
}

// A winner stays chosen when an incoming edge is reversed in its favour.
inline PropertyReport solution_monotonicity(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 500;
  auto ctx = detail::make_context("solution_monotonicity", "uniform random", opts);
  ctx.report.trials = opts.trials;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::Uniform, 0.5);
    Rng rng = ctx.trial_rng(trial);
    const int x = static_cast<int>(rng.next_below(t.size()));
    std::vector<int> dominators;
    for (int y = 0; y < t.size(); ++y) {
      if (y != x && t.dominates(y, x)) dominators.push_back(y);
    }
    if (dominators.empty()) continue;
    const int y = dominators[rng.next_below(dominators.size())];
    const Tournament flipped = t.reversed(ReversalSet({Edge{y, x}}));

    auto solutions = detail::fast_solutions(t.size());
    if (t.size() <= 7) solutions.push_back(SolutionId::ba());
    for (const SolutionId& s : solutions) {
      if (winners(t, s).contains(x) && !winners(flipped, s).contains(x)) {
        ctx.violate(t, s.name() + ": winner " + std::to_string(x) + " dropped out after gaining an edge");
      }
    }
  }
  return ctx.report;
}

// Reversing (y,z) and (z,x) together keeps x chosen.
inline PropertyReport transfer_monotonicity(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 500;
  auto ctx = detail::make_context("transfer_monotonicity", "uniform random", opts);
  ctx.report.trials = opts.trials;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::Uniform, 0.5);
    Rng rng = ctx.trial_rng(trial);
    const int n = t.size();
    int x = -1, y = -1, z = -1;
    const int x0 = static_cast<int>(rng.next_below(n));
    for (int dx = 0; dx < n && x == -1; ++dx) {
      const int cx = (x0 + dx) % n;
      for (int cz = 0; cz < n && x == -1; ++cz) {
        if (cz == cx || !t.dominates(cz, cx)) continue;
        for (int cy = 0; cy < n; ++cy) {
          if (cy != cx && cy != cz && t.dominates(cy, cz)) {
            x = cx;
            z = cz;
            y = cy;
            break;
          }
        }
      }
    }
    if (x == -1) continue;
    const Tournament transferred = t.reversed(ReversalSet({Edge{y, z}, Edge{z, x}}));

    auto solutions = detail::fast_solutions(n);
    if (n <= 7) solutions.push_back(SolutionId::ba());
    for (const SolutionId& s : solutions) {
      if (winners(t, s).contains(x) && !winners(transferred, s).contains(x)) {
        ctx.violate(t, s.name() + ": " + std::to_string(x) + " dropped after transfer via " + std::to_string(z));
      }
    }
  }
  return ctx.report;
}

// Covering implies a weakly larger margin.
inline PropertyReport cover_consistency(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 500;
  auto ctx = detail::make_context("cover_consistency", "condorcet noise p=0.7 (frequent covering pairs)", opts);
  ctx.report.trials = opts.trials;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::CondorcetNoise, 0.7);
    auto solutions = detail::fast_solutions(t.size());
    if (t.size() <= 7) solutions.push_back(SolutionId::ba());
    for (const SolutionId& s : solutions) {
      std::vector<int> values(t.size(), 0);
      std::vector<bool> have(t.size(), false);
      auto value_of = [&](int v) {
        if (!have[v]) {
          values[v] = detail::mov_value(t, s, v);
          have[v] = true;
        }
        return values[v];
      };
      for (int x = 0; x < t.size(); ++x) {
        for (int y = 0; y < t.size(); ++y) {
          if (x != y && t.covers(x, y) && value_of(x) < value_of(y)) {
            ctx.violate(t, s.name() + ": " + std::to_string(x) + " covers " + std::to_string(y) + " but margins are " +
                               std::to_string(value_of(x)) + " < " + std::to_string(value_of(y)));
          }
        }
      }
    }
  }
  return ctx.report;
}

// Strictly larger outdegree implies a weakly larger Copeland margin.
inline PropertyReport co_degree_consistency(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 500;
  auto ctx = detail::make_context("co_degree_consistency", "uniform random", opts);
  ctx.report.trials = opts.trials;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::Uniform, 0.5);
    const auto degs = t.out_degrees();
    std::vector<int> values(t.size());
    for (int x = 0; x < t.size(); ++x) values[x] = detail::mov_value(t, SolutionId::co(), x);
    for (int x = 0; x < t.size(); ++x) {
      for (int y = 0; y < t.size(); ++y) {
        if (degs[x] > degs[y] && values[x] < values[y]) {
          ctx.violate(t, "outdeg " + std::to_string(degs[x]) + ">" + std::to_string(degs[y]) + " but margins " +
                             std::to_string(values[x]) + "<" + std::to_string(values[y]));
        }
      }
    }
  }
  return ctx.report;
}

// Copeland non-winner margins sit in {-(delta-1), -delta}.
inline PropertyReport co_bracket(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 500;
  auto ctx = detail::make_context("co_bracket", "uniform random", opts);
  ctx.report.trials = opts.trials;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::Uniform, 0.5);
    const auto degs = t.out_degrees();
    const int maxdeg = *std::max_element(degs.begin(), degs.end());
    for (int y = 0; y < t.size(); ++y) {
      if (degs[y] == maxdeg) continue;
      const int delta = maxdeg - degs[y];
      const int value = detail::mov_value(t, SolutionId::co(), y);
      if (value < -delta || value > -(delta - 1)) {
        ctx.violate(t, "non-winner " + std::to_string(y) + " margin " + std::to_string(value) + " outside [-" +
                           std::to_string(delta) + ",-" + std::to_string(delta - 1) + "]");
      }
    }
  }
  return ctx.report;
}

// Weakly larger outdegree implies weakly larger top-cycle margin.
inline PropertyReport tc_strong_degree(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 500;
  auto ctx = detail::make_context("tc_strong_degree", "uniform random", opts);
  ctx.report.trials = opts.trials;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::Uniform, 0.5);
    const auto degs = t.out_degrees();
    std::vector<int> values(t.size());
    for (int x = 0; x < t.size(); ++x) values[x] = detail::mov_value(t, SolutionId::tc(), x);
    for (int x = 0; x < t.size(); ++x) {
      for (int y = 0; y < t.size(); ++y) {
        if (x != y && degs[x] >= degs[y] && values[x] < values[y]) {
          ctx.violate(t, "outdeg " + std::to_string(degs[x]) + ">=" + std::to_string(degs[y]) + " but tc margins " +
                             std::to_string(values[x]) + "<" + std::to_string(values[y]));
        }
      }
    }
  }
  return ctx.report;
}

// mincut(x,y) - mincut(y,x) = outdeg(x) - outdeg(y), all ordered pairs.
inline PropertyReport lemma3_identity(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 200;
  auto ctx = detail::make_context("lemma3_identity", "uniform random", opts);
  ctx.report.trials = opts.trials;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::Uniform, 0.5);
    const auto degs = t.out_degrees();
    for (int x = 0; x < t.size(); ++x) {
      for (int y = x + 1; y < t.size(); ++y) {
        const int forward = mincut_bounded(t, x, y, CutBound::Unbounded).value;
        const int backward = mincut_bounded(t, y, x, CutBound::Unbounded).value;
        if (forward - backward != degs[x] - degs[y]) {
          ctx.violate(t, "pair (" + std::to_string(x) + "," + std::to_string(y) + "): cuts " + std::to_string(forward) +
                             "," + std::to_string(backward) + " vs degrees " + std::to_string(degs[x]) + "," +
                             std::to_string(degs[y]));
        }
      }
    }
  }
  return ctx.report;
}

// CO subseteq UC subseteq k-kings subseteq (k+1)-kings subseteq TC; BA
// subseteq UC at oracle sizes.
inline PropertyReport inclusion_chain(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 500;
  auto ctx = detail::make_context("inclusion_chain", "uniform random", opts);
  ctx.report.trials = opts.trials;
  auto subset = [](const WinnerSet& a, const WinnerSet& b) {
    for (int m : a.members) {
      if (!b.contains(m)) return false;
    }
    return true;
  };
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::Uniform, 0.5);
    const WinnerSet co = copeland_set(t);
    const WinnerSet uc = uncovered_set(t);
    const WinnerSet tc = top_cycle(t);
    if (!subset(co, uc)) ctx.violate(t, "CO not within UC");
    WinnerSet previous = uc;
    for (int k = 3; k <= t.size() - 1; ++k) {
      const WinnerSet kings = k_kings(t, k);
      if (!subset(previous, kings)) ctx.violate(t, "chain breaks at k=" + std::to_string(k));
      previous = kings;
    }
    if (!subset(previous, tc)) ctx.violate(t, "kings set not within TC");
    if (t.size() <= 7 && !subset(banks_set(t), uc)) ctx.violate(t, "BA not within UC");
  }
  return ctx.report;
}

// Top-cycle non-winners always have margin exactly -1.
inline PropertyReport tc_nonwinner_minus_one(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 500;
  auto ctx = detail::make_context("tc_nonwinner_minus_one", "condorcet noise p=0.7 (proper top cycles)", opts);
  ctx.report.trials = opts.trials;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::CondorcetNoise, 0.7);
    const WinnerSet tc = top_cycle(t);
    for (int x = 0; x < t.size(); ++x) {
      if (tc.contains(x)) continue;
      const int value = detail::mov_value(t, SolutionId::tc(), x);
      if (value != -1) ctx.violate(t, "non-winner " + std::to_string(x) + " has tc margin " + std::to_string(value));
    }
  }
  return ctx.report;
}

// Uncovered-set margins never fall below -ceil(log2 n).
inline PropertyReport uc_log_bound(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 500;
  auto ctx = detail::make_context("uc_log_bound", "condorcet noise p=0.7", opts);
  ctx.report.trials = opts.trials;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::CondorcetNoise, 0.7);
    const int bound = -ceil_log2(t.size());
    for (int x = 0; x < t.size(); ++x) {
      const int value = detail::mov_value(t, SolutionId::uc(), x);
      if (value < bound) {
        ctx.violate(t, "uc margin " + std::to_string(value) + " below bound " + std::to_string(bound));
      }
    }
  }
  return ctx.report;
}

// One reversal moves a margin by at most 1 without a membership flip, and by
// exactly 2 with one.
inline PropertyReport lipschitz_reversal(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 500;
  auto ctx = detail::make_context("lipschitz_reversal", "uniform random", opts);
  ctx.report.trials = opts.trials;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Tournament t = ctx.random_tournament(trial, Model::Uniform, 0.5);
    Rng rng = ctx.trial_rng(trial);
    const auto all_edges = t.edges();
    const Edge e = all_edges[rng.next_below(all_edges.size())];
    const Tournament flipped = t.reversed(ReversalSet({e}));

    auto solutions = detail::fast_solutions(t.size());
    if (t.size() <= 7) solutions.push_back(SolutionId::ba());
    for (const SolutionId& s : solutions) {
      for (int x = 0; x < t.size(); ++x) {
        const int before = detail::mov_value(t, s, x);
        const int after = detail::mov_value(flipped, s, x);
        const bool flip = (before > 0) != (after > 0);
        if (flip && std::abs(before - after) != 2) {
          ctx.violate(t, s.name() + ": membership flip with margins " + std::to_string(before) + " -> " + std::to_string(after));
        }
        if (!flip && std::abs(before - after) > 1) {
          ctx.violate(t, s.name() + ": margin jump " + std::to_string(before) + " -> " + std::to_string(after));
        }
      }
    }
  }
  return ctx.report;
}

// Agreement between the degree heuristic and the exact top-cycle margin on
// uniform tournaments grows with n; a chained-cyclone fixture disagrees by
// construction.
inline PropertyReport tc_formula_agreement(PropertyOptions opts) {
  if (opts.trials == 0) opts.trials = 100;
  auto ctx = detail::make_context("tc_formula_agreement", "uniform random, n in {10,20,30,40}", opts);
  ctx.report.trials = opts.trials;
  const std::vector<int> sizes = {10, 20, 30, 40};
  std::vector<double> fractions;
  for (size_t si = 0; si < sizes.size(); ++si) {
    const int n = sizes[si];
    int agreements = 0;
    for (int sample = 0; sample < opts.trials; ++sample) {
      GeneratorConfig gen;
      gen.model = Model::Uniform;
      gen.n = n;
      gen.seed = mix_seed(mix_seed(opts.seed, si), sample);
      const Tournament t = generate(gen);
      bool all_match = true;
      for (int x = 0; x < n && all_match; ++x) {
        if (tc_formula(t, x) != detail::mov_value(t, SolutionId::tc(), x)) all_match = false;
      }
      if (all_match) ++agreements;
    }
    fractions.push_back(static_cast<double>(agreements) / opts.trials);
  }
  std::string note = "agreement fractions:";
  for (size_t si = 0; si < sizes.size(); ++si) {
    note += " n=" + std::to_string(sizes[si]) + ":" + detail::format_fraction(fractions[si]);
    if (si > 0 && fractions[si] + 1e-12 < fractions[si - 1]) {
      ctx.report.violations.push_back({"agreement fraction decreased from n=" + std::to_string(sizes[si - 1]) + " to n=" +
                                           std::to_string(sizes[si]),
                                       ""});
    }
  }
  ctx.report.note = note;

  // Known-disagreement fixture: the heuristic is constant on the chained
  // cyclones while the exact margins take several values.
  const Tournament chain = cyclone_chain(4, 11);
  bool any_disagreement = false;
  for (int x = 11; x < chain.size() && !any_disagreement; ++x) {
    if (tc_formula(chain, x) != detail::mov_value(chain, SolutionId::tc(), x)) any_disagreement = true;
  }
  if (!any_disagreement) {
    ctx.violate(chain, "expected the heuristic to disagree on cyclone_chain(4,11)");
  }
  return ctx.report;
}

// The monotone-but-not-transfer-monotone solution: margins violate
// cover-consistency on a regular tournament plus sink.
inline PropertyReport prop8_counterexample(PropertyOptions opts) {
  auto ctx = detail::make_context("prop8_counterexample", "regular_plus_sink(3) fixture", opts);
  ctx.report.trials = 1;
  const Tournament t = regular_plus_sink(3);
  const int sink = t.size() - 1;
  if (s1_winners(t).size() != t.size()) ctx.violate(t, "s1 should select everyone");

  const auto member = [](const Adjacency& adj, int v) { return membership::s1(adj, v); };
  const MovResult sink_result = brute_force_mov(t, member, sink, 4);
  const MovResult member_result = brute_force_mov(t, member, 0, 4);
  if (member_result.value != MovValue::finite(1)) {
    ctx.violate(t, "cyclone member margin should be 1, got " + to_string(member_result.value));
  }
  Tournament one_flip = t.reversed(ReversalSet({Edge{0, sink}}));
  if (membership::s1(one_flip.adj(), 0)) {
    ctx.violate(t, "reversing (0,sink) should remove 0 from the s1 winners");
  }
  if (sink_result.value.is_infinite() || sink_result.value.value() < 2) {
    ctx.violate(t, "sink margin should be at least 2, got " + to_string(sink_result.value));
  }
  if (!t.covers(0, sink)) ctx.violate(t, "cyclone member should cover the sink");
  return ctx.report;
}

// The transfer-monotone-but-not-monotone solution: on transitive
// tournaments the covering alternative has the smaller margin.
inline PropertyReport prop9_counterexample(PropertyOptions opts) {
  auto ctx = detail::make_context("prop9_counterexample", "transitive fixtures", opts);
  ctx.report.trials = 2;
  for (int n : {3, 4}) {
    const Tournament t = transitive_tournament(n);
    const int deg1 = n - 2;  // outdegree 1
    const int deg0 = n - 1;  // outdegree 0
    const auto member = [](const Adjacency& adj, int v) { return membership::s2(adj, v); };
    if (s2_winners(t).contains(deg1)) ctx.violate(t, "outdegree-1 alternative should be excluded");
    if (!s2_winners(t).contains(deg0)) ctx.violate(t, "outdegree-0 alternative should be selected");
    const MovResult r1 = brute_force_mov(t, member, deg1, static_cast<int>(t.edges().size()));
    const MovResult r0 = brute_force_mov(t, member, deg0, static_cast<int>(t.edges().size()));
    if (!(r1.value < r0.value)) {
      ctx.violate(t, "expected margin(" + std::to_string(deg1) + ") < margin(" + std::to_string(deg0) + ")");
    }
    if (!t.covers(deg1, deg0)) ctx.violate(t, "outdegree-1 alternative should cover the loser");
  }
  return ctx.report;
}

}  // namespace properties

inline const std::map<std::string, PropertyFn>& property_catalog() {
  static const std::map<std::string, PropertyFn> catalog = {
      {"mov_monotonicity", properties::mov_monotonicity},
      {"solution_monotonicity", properties::solution_monotonicity},
      {"transfer_monotonicity", properties::transfer_monotonicity},
      {"cover_consistency", properties::cover_consistency},
      {"co_degree_consistency", properties::co_degree_consistency},
      {"co_bracket", properties::co_bracket},
      {"tc_strong_degree", properties::tc_strong_degree},
      {"lemma3_identity", properties::lemma3_identity},
      {"inclusion_chain", properties::inclusion_chain},
      {"tc_nonwinner_minus_one", properties::tc_nonwinner_minus_one},
      {"uc_log_bound", properties::uc_log_bound},
      {"lipschitz_reversal", properties::lipschitz_reversal},
      {"tc_formula_agreement", properties::tc_formula_agreement},
      {"prop8_counterexample", properties::prop8_counterexample},
      {"prop9_counterexample", properties::prop9_counterexample},
  };
  return catalog;
}

inline PropertyReport run_property(const std::string& name, const PropertyOptions& opts = {}) {
  const auto& catalog = property_catalog();
  const auto it = catalog.find(name);
  if (it == catalog.end()) throw ValidationError("unknown property '" + name + "'");
  return it->second(opts);
}

}  // namespace movlab
