#pragma once

// Dempster's combination rule for two subjective-logic opinions. The
// conflict C = sum over i != j of b_i^s * b_j^f is the mass assigned to
// incompatible class pairs; gamma = 1 / (1 - C) renormalizes the surviving
// mass:
//
//   fused b_k = gamma * (b_k^s * b_k^f + b_k^s * u^f + b_k^f * u^s)
//   fused u   = gamma * u^s * u^f
//
// Floating-point ordering is part of the contract for bit-exact
// reproduction (docs/DETERMINISM.md): the conflict sum runs row-major over
// (i, j) with i indexing the first operand, and each fused belief is the
// single expression gamma * (t1 + t2 + t3) in the order written above.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "evifuse/errors.hpp"
#include "evifuse/evidential.hpp"

namespace evifuse {

struct FusedOpinion {
  std::vector<double> beliefs;
  double uncertainty = 0.0;
  double conflict = 0.0;  // in [0, 1)
  double scale = 1.0;     // gamma = 1 / (1 - conflict), >= 1
};

inline Opinion opinion_from_fused(const FusedOpinion& fused) {
  return Opinion{fused.beliefs, fused.uncertainty};
}

inline FusedOpinion dempster_combine(const Opinion& spatial, const Opinion& frequency) {
  validate_opinion(spatial);
  validate_opinion(frequency);
  const std::size_t k = spatial.beliefs.size();
  require(frequency.beliefs.size() == k, ErrorKind::invalid_input,
          "dempster_combine: class counts differ");

  double conflict = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      conflict += spatial.beliefs[i] * frequency.beliefs[j];
    }
  }
  require(conflict < 1.0 - 1e-12, ErrorKind::total_conflict,
          "dempster_combine: opinions are in total conflict");

  const double scale = 1.0 / (1.0 - conflict);
  FusedOpinion fused;
  fused.conflict = conflict;
  fused.scale = scale;
  fused.beliefs.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    fused.beliefs.push_back(scale * (spatial.beliefs[i] * frequency.beliefs[i] +
                                     spatial.beliefs[i] * frequency.uncertainty +
                                     frequency.beliefs[i] * spatial.uncertainty));
  }
  fused.uncertainty = scale * (spatial.uncertainty * frequency.uncertainty);
  return fused;
}

// n-way fusion as a left fold of pairwise combines. Associativity of the
// pairwise rule is property-tested, not assumed.
inline FusedOpinion combine_all(std::span<const Opinion> opinions) {
  require(!opinions.empty(), ErrorKind::invalid_input, "combine_all: empty input");
  validate_opinion(opinions.front());
  FusedOpinion acc;
  acc.beliefs = opinions.front().beliefs;
  acc.uncertainty = opinions.front().uncertainty;
  for (std::size_t i = 1; i < opinions.size(); ++i) {
    acc = dempster_combine(opinion_from_fused(acc), opinions[i]);
  }
  return acc;
}

// Joint Dirichlet parameters reconstructed from a fused opinion:
// S = K / u, e_k = b_k * S, alpha_k = e_k + 1.
inline DirichletParams dirichlet_from_fused(const FusedOpinion& fused) {
  const std::size_t k = fused.beliefs.size();
  require(k >= 2, ErrorKind::invalid_input, "dirichlet_from_fused: need >= 2 classes");
  require(fused.uncertainty > 0.0, ErrorKind::invalid_input,
          "dirichlet_from_fused: zero uncertainty has no finite strength");

  DirichletParams params;
  params.strength = static_cast<double>(k) / fused.uncertainty;
  params.alpha.reserve(k);
  for (double b : fused.beliefs) {
    params.alpha.push_back(b * params.strength + 1.0);
  }
  return params;
}

}  // namespace evifuse
