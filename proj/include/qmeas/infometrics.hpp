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
 * Information-theoretic measures of measurement nonideality.
 *
 * The nonideality of a stochastic matrix lambda is the average row entropy
 *
 *     J(lambda) = -(1/N) sum_{m,m'} lambda_{mm'} ln(lambda_{mm'} / sum_{m'} lambda_{mm'})
 *
 * with N the number of ideal outcomes (columns) and 0 ln 0 = 0. For a joint
 * nonideal measurement of two PVMs {E_m} and {F_n} the Martens inequality
 *
 *     J(lambda) + J(mu) >= -ln max_{m,n} Tr E_m F_n
 *
 * bounds the two nonidealities from below, independently of the state. The
 * preparation-side counterpart is the Heisenberg relation
 * dA dB >= |<[A,B]>| / 2. All entropies are in nats.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qmeas/whichway.hpp"

namespace qmeas {

template <typename Scalar = double> struct NonidealityEntropy {
    Scalar value;
};

template <typename Scalar = double> struct MartensReport {
    NonidealityEntropy<Scalar> j_lambda;
    NonidealityEntropy<Scalar> j_mu;
    Scalar bound;
    Scalar slack; ///< j_lambda + j_mu - bound
    bool satisfied;
};

template <typename Scalar = double> struct HeisenbergReport {
    Scalar lhs; ///< product of standard deviations
    Scalar rhs; ///< half the modulus of the commutator expectation
    bool satisfied;
};

template <typename Scalar>
NonidealityEntropy<Scalar> row_entropy(const NonidealityMatrix<Scalar> &matrix) {
    using std::log;
    const auto &m = matrix.entries();
    Scalar acc(0);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const Scalar row_sum = m.row(i).sum();
        if (row_sum <= Scalar(0)) {
            continue;
        }
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Scalar x = m(i, j);
            if (x > Scalar(0)) {
                acc -= x * log(x / row_sum);
            }
        }
    }
    // Exact zero for ideal matrices; avoid returning -0.
    return {std::max(Scalar(0), acc / Scalar(m.cols()))};
}

/// Largest Tr(E_m F_n) over all outcome pairs of two PVMs, including '-' outcomes.
template <typename Scalar>
Scalar max_pvm_overlap(const Povm<Scalar> &first, const Povm<Scalar> &second) {
    if (first.dim() != second.dim()) {
        throw ShapeError("PVMs act on spaces of different dimension");
    }
    Scalar best(0);
    for (const auto &e : first.effects()) {
        for (const auto &f : second.effects()) {
            best = std::max(best, (e.matrix * f.matrix).trace().real());
        }
    }
    return best;
}

/// -ln max_{m,n} Tr(E_m^theta E_n^theta'). Equals -ln max(cos^2, sin^2) of the
/// angle difference.
template <typename Scalar>
Scalar martens_bound(const PolarizationAngle<Scalar> &theta,
                     const PolarizationAngle<Scalar> &theta_prime) {
    using std::log;
    const Scalar overlap = max_pvm_overlap(polarization_pvm(theta).povm(),
                                           polarization_pvm(theta_prime).povm());
    // The overlap of two rank-one projectors never exceeds 1; clip rounding.
    return std::max(Scalar(0), -log(std::min(overlap, Scalar(1))));
}

template <typename Scalar>
MartensReport<Scalar> martens_check(const BivariateWhichWay<Scalar> &ww,
                                    const NumericPolicy<Scalar> &policy = {}) {
    const auto pair = marginals_and_nonideality(ww, policy);
    MartensReport<Scalar> r{row_entropy(pair.lambda), row_entropy(pair.mu),
                            martens_bound(ww.config.theta, ww.config.theta_prime), Scalar(0),
                            false};
    r.slack = r.j_lambda.value + r.j_mu.value - r.bound;
    r.satisfied = r.slack >= -policy.positivity;
    return r;
}

template <typename Scalar, typename DerivedA, typename DerivedB>
HeisenbergReport<Scalar> heisenberg_check(const StateDescriptor<Scalar> &state,
                                          const Eigen::MatrixBase<DerivedA> &a,
                                          const Eigen::MatrixBase<DerivedB> &b,
                                          const NumericPolicy<Scalar> &policy = {}) {
    if (hermiticity_residual(a) > policy.algebraic || hermiticity_residual(b) > policy.algebraic) {
        throw DomainError("heisenberg_check: observables must be Hermitian");
    }
    using std::abs;
    using std::sqrt;
    const auto spread = [&](const auto &op) {
        const Scalar mean = expectation(state, op).real();
        const Scalar second = expectation(state, op * op).real();
        return sqrt(std::max(Scalar(0), second - mean * mean));
    };
    const ComplexMatrix<Scalar> commutator = a * b - b * a;
    HeisenbergReport<Scalar> r{spread(a) * spread(b),
                               abs(expectation(state, commutator)) / Scalar(2), false};
    r.satisfied = r.lhs >= r.rhs - policy.positivity;
    return r;
}

} // namespace qmeas
