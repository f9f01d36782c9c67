// Copyright 2026 The qmeas Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Which-way polarization measurement: a beam splitter with transmission
 * probability gamma sends the photon either to a polarization analyzer at
 * angle theta followed by detector D, or to one at theta' followed by D'.
 *
 * Registering both detectors per photon gives a bivariate POVM over outcome
 * pairs (m, n), m for D and n for D', '+' meaning "clicked":
 *
 *     M_{++} = O                  M_{+-} = gamma E_+^theta
 *     M_{-+} = (1-gamma) E_+^theta'
 *     M_{--} = I - gamma E_+^theta - (1-gamma) E_+^theta'
 *
 * Its marginals are nonideal versions of the two incompatible polarization
 * PVMs, related to them by column-stochastic nonideality matrices.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmeas/measurement.hpp"

namespace qmeas {

/// Effect labels in storage order: detector D first, then D'.
inline const std::array<std::string, 4> kWhichWayLabels{"++", "+-", "-+", "--"};

template <typename Scalar = double> struct WhichWayConfig {
    Scalar gamma;
    PolarizationAngle<Scalar> theta;
    PolarizationAngle<Scalar> theta_prime;
};

template <typename Scalar = double> struct BivariateWhichWay {
    WhichWayConfig<Scalar> config;
    Povm<Scalar> povm;
};

/// Column-stochastic matrix mapping ideal PVM probabilities onto measured
/// marginal probabilities. Rows index measured outcomes, columns ideal ones.
template <typename Scalar = double> class NonidealityMatrix {
  public:
    explicit NonidealityMatrix(RealMatrix<Scalar> entries, const NumericPolicy<Scalar> &policy = {})
        : entries_(std::move(entries)) {
        if (entries_.size() == 0) {
            throw ShapeError("nonideality matrix must be nonempty");
        }
        if (entries_.minCoeff() < Scalar(0)) {
            throw DomainError("nonideality matrix has a negative entry");
        }
        using std::abs;
        for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
            if (abs(entries_.col(j).sum() - Scalar(1)) > policy.algebraic) {
                throw DomainError("nonideality matrix column " + std::to_string(j) +
                                  " does not sum to 1");
            }
        }
    }

    [[nodiscard]] const RealMatrix<Scalar> &entries() const noexcept { return entries_; }
    [[nodiscard]] Eigen::Index measured() const noexcept { return entries_.rows(); }
    [[nodiscard]] Eigen::Index ideal() const noexcept { return entries_.cols(); }
    [[nodiscard]] Scalar operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

    [[nodiscard]] RealVector<Scalar> apply(const RealVector<Scalar> &ideal_probs) const {
        if (ideal_probs.size() != entries_.cols()) {
            throw ShapeError("nonideality matrix applied to a vector of the wrong length");
        }
        return entries_ * ideal_probs;
    }

  private:
    RealMatrix<Scalar> entries_;
};

template <typename Scalar = double> struct NonidealityPair {
    NonidealityMatrix<Scalar> lambda; ///< detector D, relative to the theta PVM
    NonidealityMatrix<Scalar> mu;     ///< detector D', relative to the theta' PVM
    Scalar max_deviation;             ///< worst residual of the self-check
};

template <typename Scalar> void check_gamma(Scalar gamma) {
    using std::isfinite;
    if (!isfinite(gamma) || gamma < Scalar(0) || gamma > Scalar(1)) {
        std::ostringstream os;
        os << "gamma must lie in [0, 1], got " << gamma;
        throw DomainError(os.str());
    }
}

template <typename Scalar>
BivariateWhichWay<Scalar> build_whichway(const WhichWayConfig<Scalar> &config,
                                         const NumericPolicy<Scalar> &policy = {}) {
    check_gamma(config.gamma);
    const ComplexMatrix<Scalar> e_theta = projector_from_angle(config.theta);
    const ComplexMatrix<Scalar> e_theta_prime = projector_from_angle(config.theta_prime);
    const Scalar g = config.gamma;
    const Scalar h = Scalar(1) - g;

    std::vector<Effect<Scalar>> effects;
    effects.reserve(4);
    effects.push_back({ComplexMatrix<Scalar>::Zero(2, 2), kWhichWayLabels[0]});
    effects.push_back({g * e_theta, kWhichWayLabels[1]});
    effects.push_back({h * e_theta_prime, kWhichWayLabels[2]});
    effects.push_back(
        {ComplexMatrix<Scalar>::Identity(2, 2) - g * e_theta - h * e_theta_prime,
         kWhichWayLabels[3]});
    return {config, validate_povm(std::move(effects), policy)};
}

/// Joint probabilities p_{mn} over ("++", "+-", "-+", "--").
template <typename Scalar>
OutcomeDistribution<Scalar> joint_distribution(const BivariateWhichWay<Scalar> &ww,
                                               const StateDescriptor<Scalar> &state,
                                               const NumericPolicy<Scalar> &policy = {}) {
    return born_probabilities(state, ww.povm, policy);
}

/// Click probabilities of D and D'.
template <typename Scalar> struct DetectionProbabilities {
    Scalar d;
    Scalar d_prime;
};

template <typename Scalar>
DetectionProbabilities<Scalar> detection_probabilities(const BivariateWhichWay<Scalar> &ww,
                                                       const StateDescriptor<Scalar> &state) {
    const auto p = joint_distribution(ww, state);
    return {p.probs[0] + p.probs[1], p.probs[0] + p.probs[2]};
}

/// Marginal of detector D: (sum_n p_{+n}, sum_n p_{-n}).
template <typename Scalar> RealVector<Scalar> marginal_d(const OutcomeDistribution<Scalar> &joint) {
    RealVector<Scalar> out(2);
    out << joint.probs[0] + joint.probs[1], joint.probs[2] + joint.probs[3];
    return out;
}

/// Marginal of detector D': (sum_m p_{m+}, sum_m p_{m-}).
template <typename Scalar>
RealVector<Scalar> marginal_d_prime(const OutcomeDistribution<Scalar> &joint) {
    RealVector<Scalar> out(2);
    out << joint.probs[0] + joint.probs[2], joint.probs[1] + joint.probs[3];
    return out;
}

template <typename Scalar>
RealVector<Scalar> ideal_probabilities(const PolarizationAngle<Scalar> &theta,
                                       const StateDescriptor<Scalar> &state) {
    const auto p = born_probabilities(state, polarization_pvm(theta).povm());
    RealVector<Scalar> out(2);
    out << p.probs[0], p.probs[1];
    return out;
}

namespace detail {

/// Linear polarizations every 15 degrees, both circular polarizations and
/// the unpolarized state.
template <typename Scalar> std::vector<StateDescriptor<Scalar>> whichway_probe_states() {
    std::vector<StateDescriptor<Scalar>> out;
    for (int k = 0; k < 12; ++k) {
        using std::cos;
        using std::sin;
        const Scalar a = Scalar(k) * std::numbers::pi_v<Scalar> / Scalar(12);
        ComplexVector<Scalar> v(2);
        v << cos(a), sin(a);
        out.push_back(StateDescriptor<Scalar>::normalized(v));
    }
    const Complex<Scalar> i(0, 1);
    for (const Scalar sign : {Scalar(1), Scalar(-1)}) {
        ComplexVector<Scalar> v(2);
        v << Complex<Scalar>(1), sign * i;
        out.push_back(StateDescriptor<Scalar>::normalized(v));
    }
    out.push_back(states::maximally_mixed<Scalar>(2));
    return out;
}

} // namespace detail

/**
 * Closed-form nonideality matrices
 *
 *     lambda = [[gamma, 0], [1-gamma, 1]],   mu = [[1-gamma, 0], [gamma, 1]],
 *
 * self-checked against the POVM on a fixed set of probe states: each
 * measured marginal must equal the matrix times the ideal PVM probabilities
 * within policy.algebraic, otherwise NumericError is thrown.
 */
template <typename Scalar>
NonidealityPair<Scalar> marginals_and_nonideality(const BivariateWhichWay<Scalar> &ww,
                                                  const NumericPolicy<Scalar> &policy = {}) {
    const Scalar g = ww.config.gamma;
    RealMatrix<Scalar> lam(2, 2);
    lam << g, 0, Scalar(1) - g, 1;
    RealMatrix<Scalar> mu(2, 2);
    mu << Scalar(1) - g, 0, g, 1;
    NonidealityPair<Scalar> out{NonidealityMatrix<Scalar>(lam, policy),
                                NonidealityMatrix<Scalar>(mu, policy), Scalar(0)};

    for (const auto &state : detail::whichway_probe_states<Scalar>()) {
        const auto joint = joint_distribution(ww, state, policy);
        const RealVector<Scalar> dev_d =
            marginal_d(joint) - out.lambda.apply(ideal_probabilities(ww.config.theta, state));
        const RealVector<Scalar> dev_dp =
            marginal_d_prime(joint) -
            out.mu.apply(ideal_probabilities(ww.config.theta_prime, state));
        out.max_deviation = std::max(
            {out.max_deviation, dev_d.cwiseAbs().maxCoeff(), dev_dp.cwiseAbs().maxCoeff()});
    }
    if (out.max_deviation > policy.algebraic) {
        std::ostringstream os;
        os << "marginal reconstruction failed (max deviation " << out.max_deviation << ")";
        throw NumericError(os.str());
    }
    return out;
}

/// sum_m p_{m-}: probability that D' does not click. Equals 1 at gamma = 1.
template <typename Scalar>
Scalar certainty_check(const BivariateWhichWay<Scalar> &ww, const StateDescriptor<Scalar> &state) {
    const auto p = joint_distribution(ww, state);
    return p.probs[1] + p.probs[3];
}

} // namespace qmeas
