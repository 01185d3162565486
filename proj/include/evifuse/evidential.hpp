#pragma once

// Dirichlet evidence calculus. Class logits are mapped to non-negative
// evidence e by an evidence function h; alpha = e + 1 parameterizes a
// Dirichlet with strength S = sum(alpha). Beliefs b_k = e_k / S and
// uncertainty u = K / S form a subjective-logic opinion obeying
// sum(b) + u = 1. Two uncertainty estimators are provided:
//
//   standard_uncertainty  u = K / S          (mean-evidence form)
//   improved_uncertainty  u = 1 / max(alpha) (max-evidence form)
//
// The max-evidence form ignores support accumulated on irrelevant classes
// and is never larger than the mean-evidence form.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "evifuse/errors.hpp"

namespace evifuse {

// Class count is values.size() throughout; vectors are indexed by class.
struct Logits {
  std::vector<double> values;
};

struct Evidence {
  std::vector<double> values;
};

struct DirichletParams {
  std::vector<double> alpha;  // every entry >= 1
  double strength = 0.0;      // sum of alpha, >= K
};

struct Opinion {
  std::vector<double> beliefs;  // each in [0, 1]
  double uncertainty = 0.0;     // in (0, 1]
};

enum class EvidenceFunction { softplus, exp, relu };

inline const char* evidence_function_name(EvidenceFunction h) {
  switch (h) {
    case EvidenceFunction::softplus: return "softplus";
    case EvidenceFunction::exp: return "exp";
    case EvidenceFunction::relu: return "relu";
  }
  return "?";
}

inline void validate_logits(const Logits& logits) {
  require(logits.values.size() >= 2, ErrorKind::invalid_input,
          "logits need at least two classes");
  for (double v : logits.values) {
    require(std::isfinite(v), ErrorKind::invalid_input, "non-finite logit");
  }
}

inline void validate_evidence(const Evidence& evidence) {
  require(evidence.values.size() >= 2, ErrorKind::invalid_input,
          "evidence needs at least two classes");
  for (double v : evidence.values) {
    require(std::isfinite(v) && v >= 0.0, ErrorKind::invalid_input,
            "evidence entries must be finite and non-negative");
  }
}

inline void validate_dirichlet(const DirichletParams& params) {
  require(params.alpha.size() >= 2, ErrorKind::invalid_input,
          "dirichlet needs at least two classes");
  double sum = 0.0;
  for (double a : params.alpha) {
    require(std::isfinite(a) && a >= 1.0, ErrorKind::invalid_input,
            "dirichlet concentrations must be >= 1");
    sum += a;
  }
  require(std::abs(params.strength - sum) <= 1e-9 * sum,
          ErrorKind::invalid_input, "dirichlet strength does not match sum of alpha");
}

inline void validate_opinion(const Opinion& opinion) {
  require(opinion.beliefs.size() >= 2, ErrorKind::invalid_input,
          "opinion needs at least two classes");
  double sum = opinion.uncertainty;
  require(std::isfinite(opinion.uncertainty) && opinion.uncertainty >= 0.0,
          ErrorKind::invalid_input, "opinion uncertainty must be non-negative");
  for (double b : opinion.beliefs) {
    require(std::isfinite(b) && b >= 0.0, ErrorKind::invalid_input,
            "opinion beliefs must be non-negative");
    sum += b;
  }
  require(std::abs(sum - 1.0) <= 1e-9, ErrorKind::invalid_input,
          "opinion masses must sum to one");
}

// Overflow-safe softplus: log(1 + exp(x)), with the asymptotic branches
// x for x > 30 and exp(x) for x < -30.
inline double softplus(double x) {
  if (x > 30.0) return x;
  if (x < -30.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

inline double softplus_derivative(double x) {
  // d/dx log(1 + exp(x)) = sigmoid(x), evaluated without overflow.
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double ex = std::exp(x);
  return ex / (1.0 + ex);
}

inline Evidence softplus_evidence(const Logits& logits) {
  validate_logits(logits);
  Evidence evidence;
  evidence.values.reserve(logits.values.size());
  for (double v : logits.values) evidence.values.push_back(softplus(v));
  return evidence;
}

// Evidence extraction under the configured function. softplus is the
// default path; exp and relu exist for ablation of the evidence function.
inline Evidence extract_evidence(const Logits& logits, EvidenceFunction h) {
  if (h == EvidenceFunction::softplus) return softplus_evidence(logits);
  validate_logits(logits);
  Evidence evidence;
  evidence.values.reserve(logits.values.size());
  for (double v : logits.values) {
    if (h == EvidenceFunction::exp) {
      evidence.values.push_back(std::exp(std::min(v, 60.0)));
    } else {
      evidence.values.push_back(v > 0.0 ? v : 0.0);
    }
  }
  return evidence;
}

inline double evidence_derivative(double logit, EvidenceFunction h) {
  switch (h) {
    case EvidenceFunction::softplus: return softplus_derivative(logit);
    case EvidenceFunction::exp: return logit < 60.0 ? std::exp(logit) : 0.0;
    case EvidenceFunction::relu: return logit > 0.0 ? 1.0 : 0.0;
  }
  return 0.0;
}

inline DirichletParams dirichlet_from_evidence(const Evidence& evidence) {
  validate_evidence(evidence);
  DirichletParams params;
  params.alpha.reserve(evidence.values.size());
  double strength = 0.0;
  for (double e : evidence.values) {
    const double a = e + 1.0;
    params.alpha.push_back(a);
    strength += a;
  }
  params.strength = strength;
  return params;
}

inline Opinion opinion_from_evidence(const Evidence& evidence) {
  validate_evidence(evidence);
  const std::size_t k = evidence.values.size();
  double strength = 0.0;
  for (double e : evidence.values) strength += e + 1.0;
  Opinion opinion;
  opinion.beliefs.reserve(k);
  for (double e : evidence.values) opinion.beliefs.push_back(e / strength);
  opinion.uncertainty = static_cast<double>(k) / strength;
  return opinion;
}

inline std::vector<double> predictive_probabilities(const DirichletParams& params) {
  validate_dirichlet(params);
  std::vector<double> probabilities;
  probabilities.reserve(params.alpha.size());
  for (double a : params.alpha) probabilities.push_back(a / params.strength);
  return probabilities;
}

// Mean-evidence uncertainty K / S, equal to 1 / (1 + mean(e)).
inline double standard_uncertainty(const DirichletParams& params) {
  validate_dirichlet(params);
  return static_cast<double>(params.alpha.size()) / params.strength;
}

// Max-evidence uncertainty 1 / max(alpha), in (0, 1].
inline double improved_uncertainty(const DirichletParams& params) {
  validate_dirichlet(params);
  return 1.0 / *std::max_element(params.alpha.begin(), params.alpha.end());
}

// Index of the maximal concentration (equivalently of the maximal
// predictive probability); ties resolve to the lowest index.
inline std::size_t predicted_class(const DirichletParams& params) {
  validate_dirichlet(params);
  return static_cast<std::size_t>(
      std::max_element(params.alpha.begin(), params.alpha.end()) -
      params.alpha.begin());
}

}  // namespace evifuse
