#pragma once

#include <cstdint>
#include <vector>

#include "evifuse/evidential.hpp"
#include "evifuse/rng.hpp"

namespace testutil {

// Random evidence with mixed scales so both near-vacuous and near-certain
// opinions appear.
inline evifuse::Evidence random_evidence(evifuse::Rng& rng, std::size_t k) {
  const double scale = std::pow(10.0, rng.uniform(-2.0, 3.0));
  evifuse::Evidence e;
  e.values.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    e.values.push_back(scale * rng.next_double());
  }
  return e;
}

inline evifuse::Opinion random_opinion(evifuse::Rng& rng, std::size_t k) {
  return evifuse::opinion_from_evidence(random_evidence(rng, k));
}

}  // namespace testutil
