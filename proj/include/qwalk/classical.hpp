// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Classical baselines: discrete simple/lazy random walks on regular graphs and
// the two-state continuous-time Markov chain. Distributions are column
// vectors acted on from the left (p' = P p, dP/dt = Q P).

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "qwalk/error.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

inline constexpr double kDistributionTolerance = 1e-12;

/// Column-stochastic transition matrix.
class StochasticMatrix {
 public:
  explicit StochasticMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    detail::require(entries_.rows() == entries_.cols() && entries_.rows() > 0,
                    ErrorKind::invalid_dimension, "stochastic matrix must be square");
    detail::require((entries_.array() >= 0.0).all(), ErrorKind::contract_violation,
                    "negative transition probability");
    for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
      detail::require(std::abs(entries_.col(c).sum() - 1.0) <= kDistributionTolerance,
                      ErrorKind::contract_violation, "column does not sum to 1");
    }
  }

  const Eigen::MatrixXd& entries() const { return entries_; }
  Eigen::Index size() const { return entries_.rows(); }
  double operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

  StochasticMatrix operator*(const StochasticMatrix& other) const {
    return StochasticMatrix(entries_ * other.entries_);
  }
  Eigen::VectorXd apply(const Eigen::VectorXd& dist) const { return entries_ * dist; }

 private:
  Eigen::MatrixXd entries_;
};

/// Two-state rate matrix Q = [[-alpha, beta], [alpha, -beta]].
struct GeneratorMatrix {
  double alpha = 0.0;
  double beta = 0.0;

  GeneratorMatrix(double alpha_rate, double beta_rate) : alpha(alpha_rate), beta(beta_rate) {
    detail::require(alpha >= 0.0 && beta >= 0.0, ErrorKind::invalid_parameter,
                    "rates must be nonnegative");
    detail::require(alpha + beta > 0.0, ErrorKind::degenerate_chain,
                    "alpha = beta = 0 never moves");
  }

  Eigen::Matrix2d matrix() const {
    Eigen::Matrix2d q;
    q << -alpha, beta, alpha, -beta;
    return q;
  }
};

inline void require_distribution(const Eigen::VectorXd& dist) {
  detail::require((dist.array() >= 0.0).all(), ErrorKind::contract_violation,
                  "distribution has a negative entry");
  detail::require(std::abs(dist.sum() - 1.0) <= 1e-9, ErrorKind::contract_violation,
                  "distribution does not sum to 1");
}

inline StochasticMatrix transition_matrix(const Graph& g, bool lazy) {
  const Eigen::Index n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd p = g.adjacency_real() / static_cast<double>(g.degree());
  if (lazy) p = 0.5 * (Eigen::MatrixXd::Identity(n, n) + p);
  return StochasticMatrix(std::move(p));
}

inline Eigen::VectorXd discrete_step(const Graph& g, const Eigen::VectorXd& dist, bool lazy) {
  detail::require(dist.size() == static_cast<Eigen::Index>(g.size()), ErrorKind::dimension_mismatch,
                  "distribution length does not match graph");
  require_distribution(dist);
  return transition_matrix(g, lazy).apply(dist);
}

/// P(t) = exp(tQ) in closed form.
inline StochasticMatrix two_state_ct(double alpha, double beta, double t) {
  const GeneratorMatrix q(alpha, beta);
  detail::require(t >= 0.0, ErrorKind::invalid_parameter, "time must be nonnegative");
  const double total = alpha + beta;
  const double decay = std::exp(-t * total);
  Eigen::Matrix2d p;
  p << alpha * decay + beta, beta * (1.0 - decay),
       alpha * (1.0 - decay), beta * decay + alpha;
  p /= total;
  return StochasticMatrix(p);
}

/// t -> infinity column of P(t): (beta, alpha) / (alpha + beta).
inline Eigen::Vector2d ct_limit(double alpha, double beta) {
  const GeneratorMatrix q(alpha, beta);
  return Eigen::Vector2d(beta, alpha) / (alpha + beta);
}

inline double tv_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  detail::require(p.size() == q.size(), ErrorKind::dimension_mismatch, "length mismatch");
  return 0.5 * (p - q).cwiseAbs().sum();
}

inline constexpr double kClassicalConvergenceThreshold = 1e-9;
inline constexpr std::size_t kClassicalStepCap = 10000;

/// Steps until the TV distance to uniform drops to `threshold`; nullopt if the
/// cap is reached first.
inline std::optional<std::size_t> steps_to_uniform(const Graph& g, std::size_t start_vertex, bool lazy,
                                                   double threshold = kClassicalConvergenceThreshold,
                                                   std::size_t cap = kClassicalStepCap) {
  detail::require(start_vertex < g.size(), ErrorKind::invalid_vertex, "start vertex out of range");
  const auto n = static_cast<Eigen::Index>(g.size());
  const StochasticMatrix p = transition_matrix(g, lazy);
  const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  Eigen::VectorXd dist = Eigen::VectorXd::Unit(n, static_cast<Eigen::Index>(start_vertex));
  for (std::size_t step = 0; step <= cap; ++step) {
    if (tv_distance(dist, uniform) <= threshold) return step;
    dist = p.apply(dist);
  }
  return std::nullopt;
}

}  // namespace qwalk
