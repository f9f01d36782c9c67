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
 * Generalized measurements: effects, POVMs, projection-valued measures and
 * Born-rule outcome distributions.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmeas/qcore.hpp"

namespace qmeas {

/// One outcome of a measurement: a positive operator and its label.
template <typename Scalar = double> struct Effect {
    ComplexMatrix<Scalar> matrix;
    std::string label;
};

template <typename Scalar> class Povm;

template <typename Scalar>
Povm<Scalar> validate_povm(std::vector<Effect<Scalar>> effects,
                           const NumericPolicy<Scalar> &policy = {});

/**
 * A validated positive operator-valued measure.
 *
 * Only `validate_povm` creates instances, so every Povm satisfies
 * Hermiticity, 0 <= M <= I and sum M = I within the policy it was checked
 * against. Effect order is preserved and significant.
 */
template <typename Scalar> class Povm {
  public:
    [[nodiscard]] const std::vector<Effect<Scalar>> &effects() const noexcept { return effects_; }
    [[nodiscard]] std::size_t size() const noexcept { return effects_.size(); }
    [[nodiscard]] Eigen::Index dim() const { return effects_.front().matrix.rows(); }
    [[nodiscard]] const Effect<Scalar> &operator[](std::size_t i) const { return effects_[i]; }

    /// True when the effects are mutually orthogonal projectors.
    [[nodiscard]] bool is_projective() const noexcept { return projective_; }

    [[nodiscard]] std::vector<std::string> labels() const {
        std::vector<std::string> out;
        out.reserve(effects_.size());
        for (const auto &e : effects_) {
            out.push_back(e.label);
        }
        return out;
    }

    [[nodiscard]] std::optional<std::size_t> index_of(const std::string &label) const {
        for (std::size_t i = 0; i < effects_.size(); ++i) {
            if (effects_[i].label == label) {
                return i;
            }
        }
        return std::nullopt;
    }

  private:
    template <typename S>
    friend Povm<S> validate_povm(std::vector<Effect<S>> effects, const NumericPolicy<S> &policy);

    Povm(std::vector<Effect<Scalar>> effects, bool projective)
        : effects_(std::move(effects)), projective_(projective) {}

    std::vector<Effect<Scalar>> effects_;
    bool projective_;
};

/// A Povm known to be projection-valued.
template <typename Scalar = double> class Pvm {
  public:
    static Pvm from(Povm<Scalar> povm) {
        if (!povm.is_projective()) {
            throw DomainError("POVM is not projection-valued");
        }
        return Pvm(std::move(povm));
    }

    [[nodiscard]] const Povm<Scalar> &povm() const noexcept { return povm_; }
    operator const Povm<Scalar> &() const noexcept { return povm_; } // NOLINT

    [[nodiscard]] const Effect<Scalar> &operator[](std::size_t i) const { return povm_[i]; }
    [[nodiscard]] std::size_t size() const noexcept { return povm_.size(); }

  private:
    explicit Pvm(Povm<Scalar> povm) : povm_(std::move(povm)) {}
    Povm<Scalar> povm_;
};

/// Outcome probabilities in the order of the measurement's effects.
template <typename Scalar = double> struct OutcomeDistribution {
    std::vector<std::string> labels;
    std::vector<Scalar> probs;

    [[nodiscard]] std::size_t size() const noexcept { return probs.size(); }

    [[nodiscard]] Scalar prob(const std::string &label) const {
        const auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) {
            throw DomainError("unknown outcome label '" + label + "'");
        }
        return probs[static_cast<std::size_t>(it - labels.begin())];
    }
};

/**
 * Checks that `effects` form a POVM and classifies it as projective or not.
 *
 * Throws PovmError (NotHermitian, NotPositive or NotComplete, carrying the
 * largest deviation found), ShapeError for mixed dimensions and DomainError
 * for an empty list or duplicated labels.
 */
template <typename Scalar>
Povm<Scalar> validate_povm(std::vector<Effect<Scalar>> effects,
                           const NumericPolicy<Scalar> &policy) {
    using Reason = PovmError::Reason;
    if (effects.empty()) {
        throw DomainError("a POVM needs at least one effect");
    }
    const Eigen::Index d = effects.front().matrix.rows();
    std::set<std::string> seen;
    for (const auto &e : effects) {
        if (e.matrix.rows() != d || e.matrix.cols() != d || d == 0) {
            throw ShapeError("effect '" + e.label + "' is " +
                             detail::shape_string(e.matrix.rows(), e.matrix.cols()) +
                             ", expected " + detail::shape_string(d, d));
        }
        if (!seen.insert(e.label).second) {
            throw DomainError("duplicate effect label '" + e.label + "'");
        }
    }

    for (const auto &e : effects) {
        const Scalar herm = hermiticity_residual(e.matrix);
        if (herm > policy.algebraic) {
            throw PovmError(Reason::NotHermitian, static_cast<double>(herm),
                            "effect '" + e.label + "' is not Hermitian");
        }
        const RealVector<Scalar> ev = hermitian_eigenvalues(e.matrix);
        if (ev.minCoeff() < -policy.positivity) {
            throw PovmError(Reason::NotPositive, static_cast<double>(-ev.minCoeff()),
                            "effect '" + e.label + "' has a negative eigenvalue");
        }
        if (ev.maxCoeff() > Scalar(1) + policy.positivity) {
            throw PovmError(Reason::NotPositive, static_cast<double>(ev.maxCoeff() - Scalar(1)),
                            "effect '" + e.label + "' exceeds the identity");
        }
    }

    ComplexMatrix<Scalar> total = ComplexMatrix<Scalar>::Zero(d, d);
    for (const auto &e : effects) {
        total += e.matrix;
    }
    const Scalar dev = (total - ComplexMatrix<Scalar>::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > policy.algebraic) {
        std::ostringstream os;
        os << "effects do not sum to the identity (max deviation " << dev << ")";
        throw PovmError(Reason::NotComplete, static_cast<double>(dev), os.str());
    }

    bool projective = true;
    for (std::size_t m = 0; m < effects.size() && projective; ++m) {
        const auto &em = effects[m].matrix;
        if ((em * em - em).cwiseAbs().maxCoeff() > policy.algebraic) {
            projective = false;
        }
        for (std::size_t n = m + 1; n < effects.size() && projective; ++n) {
            if ((em * effects[n].matrix).cwiseAbs().maxCoeff() > policy.algebraic) {
                projective = false;
            }
        }
    }
    return Povm<Scalar>(std::move(effects), projective);
}

/**
 * Born-rule probabilities p_m = <psi|M_m|psi> (or Tr rho M_m).
 *
 * Values down to -policy.positivity are treated as rounding noise: they are
 * clamped to zero and the distribution is renormalized. Anything more
 * negative raises NumericError.
 */
template <typename Scalar>
OutcomeDistribution<Scalar> born_probabilities(const StateDescriptor<Scalar> &state,
                                               const Povm<Scalar> &povm,
                                               const NumericPolicy<Scalar> &policy = {}) {
    if (state.dim() != povm.dim()) {
        throw ShapeError("state dimension " + std::to_string(state.dim()) +
                         " does not match POVM dimension " + std::to_string(povm.dim()));
    }
    OutcomeDistribution<Scalar> out;
    out.labels = povm.labels();
    out.probs.reserve(povm.size());
    bool clamped = false;
    for (const auto &e : povm.effects()) {
        Scalar p = expectation(state, e.matrix).real();
        if (p < -policy.positivity) {
            std::ostringstream os;
            os << "negative probability " << p << " for outcome '" << e.label << "'";
            throw NumericError(os.str());
        }
        if (p < Scalar(0) || p > Scalar(1)) {
            p = std::clamp(p, Scalar(0), Scalar(1));
            clamped = true;
        }
        out.probs.push_back(p);
    }
    Scalar total(0);
    for (Scalar p : out.probs) {
        total += p;
    }
    using std::abs;
    if (abs(total - Scalar(1)) > policy.positivity) {
        std::ostringstream os;
        os << "outcome probabilities sum to " << total;
        throw NumericError(os.str());
    }
    if (clamped) {
        for (Scalar &p : out.probs) {
            p /= total;
        }
    }
    return out;
}

/// {E_+^theta, E_-^theta} with labels "+" and "-".
template <typename Scalar> Pvm<Scalar> polarization_pvm(const PolarizationAngle<Scalar> &theta) {
    ComplexMatrix<Scalar> plus = projector_from_angle(theta);
    ComplexMatrix<Scalar> minus = ComplexMatrix<Scalar>::Identity(2, 2) - plus;
    std::vector<Effect<Scalar>> effects{{std::move(plus), "+"}, {std::move(minus), "-"}};
    return Pvm<Scalar>::from(validate_povm(std::move(effects)));
}

} // namespace qmeas
