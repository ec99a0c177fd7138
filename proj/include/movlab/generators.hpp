#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "movlab/errors.hpp"
#include "movlab/rng.hpp"
#include "movlab/tournament.hpp"

namespace movlab {

enum class Model {
  Uniform,          // fair coin per pair
  CondorcetNoise,   // index order kept with probability p per pair
  CondorcetNoiseVoters,
  ImpartialCulture,
  Urn,
  Mallows,
};

inline std::string model_name(Model m) {
  switch (m) {
    case Model::Uniform: return "uniform";
    case Model::CondorcetNoise: return "cnoise";
    case Model::CondorcetNoiseVoters: return "cnoise-voters";
    case Model::ImpartialCulture: return "ic";
    case Model::Urn: return "urn";
    case Model::Mallows: return "mallows";
  }
  return "?";
}

inline Model parse_model(const std::string& name) {
  if (name == "uniform") return Model::Uniform;
  if (name == "cnoise") return Model::CondorcetNoise;
  if (name == "cnoise-voters") return Model::CondorcetNoiseVoters;
  if (name == "ic") return Model::ImpartialCulture;
  if (name == "urn") return Model::Urn;
  if (name == "mallows") return Model::Mallows;
  throw ValidationError("unknown model '" + name + "' (expected uniform, cnoise, cnoise-voters, ic, urn, mallows)");
}

struct GeneratorConfig {
  Model model = Model::Uniform;
  int n = 0;
  double p = 0.55;            // Condorcet models, in [1/2, 1]
  int voters = 51;            // odd
  double alpha_factor = 0.2;  // urn reinforcement, as a multiple of m!
  double phi = 0.95;          // Mallows dispersion, in (0, 1]
  uint64_t seed = 0;

  void validate() const {
    if (n < 2) throw ValidationError("generator needs n >= 2");
    if (model == Model::CondorcetNoise || model == Model::CondorcetNoiseVoters) {
      if (p < 0.5 || p > 1.0) throw ValidationError("p must lie in [1/2, 1]");
    }
    if (uses_voters()) {
      if (voters < 1 || voters % 2 == 0) throw ValidationError("voter count must be odd and positive");
    }
    if (model == Model::Urn && alpha_factor < 0) throw ValidationError("alpha_factor must be nonnegative");
    if (model == Model::Mallows && (phi <= 0.0 || phi > 1.0)) throw ValidationError("phi must lie in (0, 1]");
  }

  bool uses_voters() const {
    return model == Model::CondorcetNoiseVoters || model == Model::ImpartialCulture || model == Model::Urn ||
           model == Model::Mallows;
  }
};

// One pairwise relation per voter: complete and antisymmetric, transitive
// for the ranking-based models but not necessarily for pairwise noise.
struct PreferenceProfile {
  int n = 0;
  std::vector<Adjacency> voter_relations;

  void validate() const {
    for (const Adjacency& rel : voter_relations) {
      for (int i = 0; i < n; ++i) {
        if (rel.dominates(i, i)) throw ValidationError("voter relation has a diagonal entry");
        for (int j = i + 1; j < n; ++j) {
          if (rel.dominates(i, j) == rel.dominates(j, i)) {
            throw ValidationError("voter relation not complete/antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
          }
        }
      }
    }
  }
};

namespace detail {

inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i >= 1; --i) {
    const int j = static_cast<int>(rng.next_below(static_cast<uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// Repeated-insertion sampling: item i (0-based) lands at position j of the
// current prefix with probability phi^(i-j) / (1 + phi + ... + phi^i),
// position i meaning "last". Ground truth is the index order.
inline std::vector<int> mallows_ranking(int n, double phi, Rng& rng) {
  std::vector<int> ranking;
  ranking.reserve(n);
  std::vector<double> weights;
  for (int i = 0; i < n; ++i) {
    weights.resize(i + 1);
    double total = 0;
    double w = 1.0;  // position i (bottom), exponent 0
    for (int j = i; j >= 0; --j) {
      weights[j] = w;
      total += w;
      w *= phi;
    }
    double draw = rng.next_unit() * total;
    int position = i;
    for (int j = 0; j <= i; ++j) {
      draw -= weights[j];
      if (draw < 0) {
        position = j;
        break;
      }
    }
    ranking.insert(ranking.begin() + position, i);
  }
  return ranking;
}

inline Adjacency relation_from_ranking(const std::vector<int>& ranking) {
  const int n = static_cast<int>(ranking.size());
  Adjacency rel(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) rel.set_pair(ranking[a], ranking[b]);
  }
  return rel;
}

// Pairwise noise around a base order: the base orientation is kept with
// probability p, independently per pair.
inline Adjacency noisy_relation(const std::vector<int>& base, double p, Rng& rng) {
  const int n = static_cast<int>(base.size());
  Adjacency rel(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.bernoulli(p)) {
        rel.set_pair(base[a], base[b]);
      } else {
        rel.set_pair(base[b], base[a]);
      }
    }
  }
  return rel;
}

}  // namespace detail

// Direct tournament models (no voters): uniform and Condorcet noise.
inline Tournament gen_direct(const GeneratorConfig& cfg) {
  cfg.validate();
  if (cfg.model != Model::Uniform && cfg.model != Model::CondorcetNoise) {
    throw ValidationError("gen_direct handles only uniform and cnoise");
  }
  const double p = cfg.model == Model::Uniform ? 0.5 : cfg.p;
  Rng rng(cfg.seed);
  std::vector<int> base(cfg.n);
  std::iota(base.begin(), base.end(), 0);
  return Tournament(detail::noisy_relation(base, p, rng));
}

// Voter-profile models: Condorcet noise with voters, impartial culture,
// urn, and Mallows. Voter v draws from the substream mix_seed(seed, v), so
// profiles agree on their common prefix across voter counts.
inline PreferenceProfile sample_profile(const GeneratorConfig& cfg) {
  cfg.validate();
  if (!cfg.uses_voters()) throw ValidationError("sample_profile needs a voter-based model");

  PreferenceProfile profile;
  profile.n = cfg.n;
  profile.voter_relations.reserve(cfg.voters);

  Rng instance_rng(cfg.seed);
  std::vector<int> base(cfg.n);
  std::iota(base.begin(), base.end(), 0);
  if (cfg.model == Model::CondorcetNoiseVoters) base = detail::random_permutation(cfg.n, instance_rng);

  std::vector<std::vector<int>> drawn_rankings;  // urn history
  for (int v = 0; v < cfg.voters; ++v) {
    Rng rng(mix_seed(cfg.seed, static_cast<uint64_t>(v)));
    switch (cfg.model) {
      case Model::CondorcetNoiseVoters:
        profile.voter_relations.push_back(detail::noisy_relation(base, cfg.p, rng));
        break;
      case Model::ImpartialCulture:
        profile.voter_relations.push_back(detail::relation_from_ranking(detail::random_permutation(cfg.n, rng)));
        break;
      case Model::Urn: {
        // Voter v+1 draws fresh with probability m!/(m! + v*alpha), i.e.
        // 1/(1 + v*alpha_factor); otherwise copies a uniformly chosen
        // previous draw (each previous draw backs alpha identical copies).
        bool fresh = true;
        if (v > 0) {
          const double p_fresh = 1.0 / (1.0 + static_cast<double>(v) * cfg.alpha_factor);
          fresh = rng.next_unit() < p_fresh;
        }
        if (fresh) {
          drawn_rankings.push_back(detail::random_permutation(cfg.n, rng));
        } else {
          const auto copy_of = static_cast<size_t>(rng.next_below(static_cast<uint64_t>(v)));
          drawn_rankings.push_back(drawn_rankings[copy_of]);
        }
        profile.voter_relations.push_back(detail::relation_from_ranking(drawn_rankings.back()));
        break;
      }
      case Model::Mallows:
        profile.voter_relations.push_back(detail::relation_from_ranking(detail::mallows_ranking(cfg.n, cfg.phi, rng)));
        break;
      default:
        throw ValidationError("unhandled voter model");
    }
  }
  return profile;
}

// Majority relation of an odd profile: i beats j iff more voters prefer i.
inline Tournament majority_tournament(const PreferenceProfile& profile) {
  const int voters = static_cast<int>(profile.voter_relations.size());
  if (voters % 2 == 0 || voters == 0) throw ValidationError("majority needs an odd voter count");
  const int n = profile.n;
  Adjacency adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int favour_i = 0;
      for (const Adjacency& rel : profile.voter_relations) {
        if (rel.dominates(i, j)) ++favour_i;
      }
      if (favour_i * 2 > voters) {
        adj.set_pair(i, j);
      } else {
        adj.set_pair(j, i);
      }
    }
  }
  return Tournament(std::move(adj));
}

// Samples one tournament from any model.
inline Tournament generate(const GeneratorConfig& cfg) {
  if (cfg.model == Model::Uniform || cfg.model == Model::CondorcetNoise) return gen_direct(cfg);
  return majority_tournament(sample_profile(cfg));
}

}  // namespace movlab
