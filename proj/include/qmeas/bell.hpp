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
 * Generalized EPR-Bell experiment: each photon of a pair passes its own
 * which-way measurement (gamma_1, theta_1, theta_1') and (gamma_2, theta_2,
 * theta_2'). The four detectors D1, D1', D2, D2' are read out on every pair,
 * so a single run yields a quadrivariate distribution whose POVM is the
 * tensor product of the two bivariate which-way POVMs.
 *
 * Correlations use the click encoding: +1 if a detector fired, -1 if not.
 * The CHSH combination is S = E(D1,D2) - E(D1,D2') + E(D1',D2) + E(D1',D2').
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qmeas/whichway.hpp"

namespace qmeas {

template <typename Scalar = double> struct BellConfig {
    WhichWayConfig<Scalar> arm1;
    WhichWayConfig<Scalar> arm2;
    StateDescriptor<Scalar> state;
};

template <typename Scalar = double> struct QuadrivariateBell {
    BellConfig<Scalar> config;
    BivariateWhichWay<Scalar> arm1;
    BivariateWhichWay<Scalar> arm2;
    Povm<Scalar> povm; ///< 16 effects, arm-1 outcome major
};

enum class Detector { D1, D1Prime, D2, D2Prime };

struct DetectorPair {
    Detector first;  ///< D1 or D1'
    Detector second; ///< D2 or D2'
    friend bool operator==(const DetectorPair &, const DetectorPair &) = default;
};

/// The four pairs in CHSH order.
inline constexpr std::array<DetectorPair, 4> kChshPairs{{
    {Detector::D1, Detector::D2},
    {Detector::D1, Detector::D2Prime},
    {Detector::D1Prime, Detector::D2},
    {Detector::D1Prime, Detector::D2Prime},
}};

inline std::string to_string(Detector d) {
    switch (d) {
    case Detector::D1:
        return "D1";
    case Detector::D1Prime:
        return "D1'";
    case Detector::D2:
        return "D2";
    case Detector::D2Prime:
        return "D2'";
    }
    return "?";
}

inline std::string to_string(const DetectorPair &p) {
    return to_string(p.first) + "," + to_string(p.second);
}

inline void check_detector_pair(const DetectorPair &p) {
    const bool first_ok = p.first == Detector::D1 || p.first == Detector::D1Prime;
    const bool second_ok = p.second == Detector::D2 || p.second == Detector::D2Prime;
    if (!first_ok || !second_ok) {
        throw DomainError("detector pair must be one arm-1 and one arm-2 detector, got " +
                          to_string(p));
    }
}

/// Parses "D1,D2", "D1,D2'", "D1',D2" or "D1',D2'".
inline DetectorPair parse_detector_pair(const std::string &text) {
    for (const auto &p : kChshPairs) {
        if (to_string(p) == text) {
            return p;
        }
    }
    throw DomainError("invalid detector pair '" + text + "'");
}

/// Labels "m1n1,m2n2" in effect order.
inline std::vector<std::string> quad_labels() {
    std::vector<std::string> out;
    out.reserve(16);
    for (const auto &a : kWhichWayLabels) {
        for (const auto &b : kWhichWayLabels) {
            out.push_back(a + "," + b);
        }
    }
    return out;
}

namespace detail {

inline std::size_t detector_char(Detector d) {
    switch (d) {
    case Detector::D1:
        return 0;
    case Detector::D1Prime:
        return 1;
    case Detector::D2:
        return 3;
    case Detector::D2Prime:
        return 4;
    }
    return 0;
}

} // namespace detail

/// +1 if `d` fired in the quadruple outcome `label`, -1 otherwise.
inline int click_value(const std::string &label, Detector d) {
    const std::size_t pos = detail::detector_char(d);
    if (label.size() != 5 || label[2] != ',') {
        throw DomainError("'" + label + "' is not a quadruple outcome label");
    }
    return label[pos] == '+' ? 1 : -1;
}

template <typename Scalar>
QuadrivariateBell<Scalar> build_bell(const BellConfig<Scalar> &config,
                                     const NumericPolicy<Scalar> &policy = {}) {
    if (config.state.dim() != 4) {
        throw ShapeError("Bell experiment needs a two-photon state of dimension 4, got " +
                         std::to_string(config.state.dim()));
    }
    auto arm1 = build_whichway(config.arm1, policy);
    auto arm2 = build_whichway(config.arm2, policy);
    std::vector<Effect<Scalar>> effects;
    effects.reserve(16);
    for (const auto &a : arm1.povm.effects()) {
        for (const auto &b : arm2.povm.effects()) {
            effects.push_back({kron(a.matrix, b.matrix), a.label + "," + b.label});
        }
    }
    auto povm = validate_povm(std::move(effects), policy);
    return {config, std::move(arm1), std::move(arm2), std::move(povm)};
}

template <typename Scalar>
OutcomeDistribution<Scalar> quad_distribution(const QuadrivariateBell<Scalar> &bell,
                                              const NumericPolicy<Scalar> &policy = {}) {
    return born_probabilities(bell.config.state, bell.povm, policy);
}

/// Bivariate which-way marginal of one arm (1 or 2) of a quadrivariate
/// distribution, over ("++", "+-", "-+", "--").
template <typename Scalar>
OutcomeDistribution<Scalar> arm_marginal(const OutcomeDistribution<Scalar> &quad, int arm) {
    if (arm != 1 && arm != 2) {
        throw DomainError("arm must be 1 or 2");
    }
    if (quad.size() != 16) {
        throw ShapeError("expected a 16-outcome distribution");
    }
    OutcomeDistribution<Scalar> out;
    out.labels.assign(kWhichWayLabels.begin(), kWhichWayLabels.end());
    out.probs.assign(4, Scalar(0));
    for (std::size_t k = 0; k < 16; ++k) {
        out.probs[arm == 1 ? k / 4 : k % 4] += quad.probs[k];
    }
    return out;
}

/// Expectation of the product of click values over a quadruple-labelled
/// distribution (analytic or empirical).
template <typename Scalar>
Scalar correlation_from_distribution(const OutcomeDistribution<Scalar> &quad,
                                     const DetectorPair &pair) {
    check_detector_pair(pair);
    Scalar acc(0);
    for (std::size_t k = 0; k < quad.size(); ++k) {
        acc += Scalar(click_value(quad.labels[k], pair.first) *
                      click_value(quad.labels[k], pair.second)) *
               quad.probs[k];
    }
    return acc;
}

template <typename Scalar>
Scalar detector_correlation(const QuadrivariateBell<Scalar> &bell, const DetectorPair &pair) {
    return correlation_from_distribution(quad_distribution(bell), pair);
}

template <typename Scalar = double> struct ChshReport {
    std::array<Scalar, 4> correlations; ///< in kChshPairs order
    Scalar s_value;
    /// max |S| over the four placements of the minus sign, so violation can
    /// be read off independently of how the angles were labelled.
    Scalar max_abs_s;
    bool violates; ///< |s_value| > 2 + tolerance
};

template <typename Scalar>
ChshReport<Scalar> make_chsh_report(const std::array<Scalar, 4> &e,
                                    const NumericPolicy<Scalar> &policy = {}) {
    using std::abs;
    const Scalar total = e[0] + e[1] + e[2] + e[3];
    Scalar best(0);
    for (std::size_t k = 0; k < 4; ++k) {
        best = std::max(best, abs(total - Scalar(2) * e[k]));
    }
    const Scalar s = e[0] - e[1] + e[2] + e[3];
    return {e, s, best, abs(s) > Scalar(2) + policy.positivity};
}

template <typename Scalar>
ChshReport<Scalar> chsh_from_distribution(const OutcomeDistribution<Scalar> &quad,
                                          const NumericPolicy<Scalar> &policy = {}) {
    std::array<Scalar, 4> e{};
    for (std::size_t k = 0; k < 4; ++k) {
        e[k] = correlation_from_distribution(quad, kChshPairs[k]);
    }
    return make_chsh_report(e, policy);
}

/// All four correlations from the one quadrivariate distribution of a
/// single run; |S| <= 2 whatever the state and settings.
template <typename Scalar>
ChshReport<Scalar> chsh_single_run(const QuadrivariateBell<Scalar> &bell,
                                   const NumericPolicy<Scalar> &policy = {}) {
    return chsh_from_distribution(quad_distribution(bell, policy), policy);
}

template <typename Scalar = double> struct AspectCorner {
    Scalar gamma1;
    Scalar gamma2;
    DetectorPair pair;
    OutcomeDistribution<Scalar> distribution;
    Scalar correlation;
};

/**
 * The four separate runs of a standard Aspect experiment, i.e. the corners
 * (gamma_1, gamma_2) = (1,1), (1,0), (0,1), (0,0). Each corner contributes
 * the correlation of the two detectors that can fire there.
 */
template <typename Scalar>
std::array<AspectCorner<Scalar>, 4>
aspect_corners(const StateDescriptor<Scalar> &state, const PolarizationAngle<Scalar> &theta1,
               const PolarizationAngle<Scalar> &theta1_prime,
               const PolarizationAngle<Scalar> &theta2,
               const PolarizationAngle<Scalar> &theta2_prime,
               const NumericPolicy<Scalar> &policy = {}) {
    constexpr std::array<std::pair<int, int>, 4> gammas{{{1, 1}, {1, 0}, {0, 1}, {0, 0}}};
    std::array<AspectCorner<Scalar>, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) {
        const Scalar g1(gammas[k].first);
        const Scalar g2(gammas[k].second);
        const BellConfig<Scalar> config{{g1, theta1, theta1_prime}, {g2, theta2, theta2_prime}, state};
        const auto bell = build_bell(config, policy);
        auto dist = quad_distribution(bell, policy);
        const Scalar corr = correlation_from_distribution(dist, kChshPairs[k]);
        out[k] = AspectCorner<Scalar>{g1, g2, kChshPairs[k], std::move(dist), corr};
    }
    return out;
}

template <typename Scalar>
ChshReport<Scalar> chsh_aspect(const StateDescriptor<Scalar> &state,
                               const PolarizationAngle<Scalar> &theta1,
                               const PolarizationAngle<Scalar> &theta1_prime,
                               const PolarizationAngle<Scalar> &theta2,
                               const PolarizationAngle<Scalar> &theta2_prime,
                               const NumericPolicy<Scalar> &policy = {}) {
    const auto corners = aspect_corners(state, theta1, theta1_prime, theta2, theta2_prime, policy);
    std::array<Scalar, 4> e{};
    for (std::size_t k = 0; k < 4; ++k) {
        e[k] = corners[k].correlation;
    }
    return make_chsh_report(e, policy);
}

} // namespace qmeas
