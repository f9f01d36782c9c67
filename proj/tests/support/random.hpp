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

// Random states, observables and measurements for property tests.

#pragma once

#include <random>
#include <vector>

#include "qmeas/bell.hpp"

namespace qmeas::testing {

using Rng = std::mt19937_64;

inline ComplexMatrixd random_gaussian(Rng &rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> nd;
    ComplexMatrixd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = {nd(rng), nd(rng)};
        }
    }
    return m;
}

inline StateDescriptord random_pure_state(Rng &rng, Eigen::Index d) {
    return StateDescriptord::normalized(random_gaussian(rng, d, 1).col(0));
}

inline StateDescriptord random_density(Rng &rng, Eigen::Index d) {
    const ComplexMatrixd g = random_gaussian(rng, d, d);
    ComplexMatrixd rho = g * g.adjoint();
    rho /= rho.trace();
    rho = (rho + rho.adjoint()).eval() / 2.0;
    return StateDescriptord::mixed(rho);
}

/// Alternates pure and mixed states.
inline StateDescriptord random_state(Rng &rng, Eigen::Index d) {
    return std::bernoulli_distribution(0.5)(rng) ? random_pure_state(rng, d)
                                                 : random_density(rng, d);
}

inline ComplexMatrixd random_hermitian(Rng &rng, Eigen::Index d) {
    const ComplexMatrixd g = random_gaussian(rng, d, d);
    return (g + g.adjoint()) / 2.0;
}

/// k effects M_i = S^{-1/2} A_i S^{-1/2} with A_i = G_i G_i^dagger, S = sum A_i.
inline std::vector<Effect<double>> random_povm_effects(Rng &rng, Eigen::Index d, int k) {
    std::vector<ComplexMatrixd> a;
    ComplexMatrixd s = ComplexMatrixd::Zero(d, d);
    for (int i = 0; i < k; ++i) {
        const ComplexMatrixd g = random_gaussian(rng, d, d);
        a.push_back(g * g.adjoint());
        s += a.back();
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrixd> solver(s);
    const ComplexMatrixd inv_sqrt = solver.operatorInverseSqrt();
    std::vector<Effect<double>> out;
    for (int i = 0; i < k; ++i) {
        ComplexMatrixd m = inv_sqrt * a[static_cast<std::size_t>(i)] * inv_sqrt;
        m = (m + m.adjoint()).eval() / 2.0;
        out.push_back({m, "m" + std::to_string(i)});
    }
    // Absorb the completeness residual into the last effect.
    ComplexMatrixd total = ComplexMatrixd::Zero(d, d);
    for (const auto &e : out) {
        total += e.matrix;
    }
    out.back().matrix += ComplexMatrixd::Identity(d, d) - total;
    return out;
}

inline double random_angle(Rng &rng) {
    return std::uniform_real_distribution<double>(0.0, std::numbers::pi)(rng);
}

inline double random_gamma(Rng &rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline WhichWayConfig<double> random_arm(Rng &rng) {
    return {random_gamma(rng), PolarizationAngled(random_angle(rng)),
            PolarizationAngled(random_angle(rng))};
}

inline BellConfig<double> random_bell_config(Rng &rng) {
    return {random_arm(rng), random_arm(rng), random_state(rng, 4)};
}

} // namespace qmeas::testing
