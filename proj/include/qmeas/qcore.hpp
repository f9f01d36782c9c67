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
 * Dense complex matrices, quantum states and polarization projectors for
 * small Hilbert spaces. Everything is templated on the real scalar type;
 * the `d`-suffixed aliases fix it to double.
 */

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <variant>

#include <Eigen/Dense>

#include "qmeas/errors.hpp"
#include "qmeas/numeric_policy.hpp"

namespace qmeas {

template <typename Scalar> using Complex = std::complex<Scalar>;
template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ComplexVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrixd = ComplexMatrix<double>;
using ComplexVectord = ComplexVector<double>;

namespace detail {

inline std::string shape_string(Eigen::Index rows, Eigen::Index cols) {
    std::ostringstream os;
    os << rows << "x" << cols;
    return os.str();
}

} // namespace detail

/// Matrix product with a runtime shape check (Eigen only asserts in debug).
template <typename DerivedA, typename DerivedB>
auto matmul(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: cannot multiply " + detail::shape_string(a.rows(), a.cols()) +
                         " by " + detail::shape_string(b.rows(), b.cols()));
    }
    Result out = a * b;
    return out;
}

/// Kronecker product; entry ((i*rb + k), (j*cb + l)) equals a(i,j) * b(k,l).
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index rb = b.rows();
    const Eigen::Index cb = b.cols();
    Result out(a.rows() * rb, a.cols() * cb);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
        }
    }
    return out;
}

/// Largest entrywise modulus of A - A^dagger. Non-square input is a shape error.
template <typename Derived> auto hermiticity_residual(const Eigen::MatrixBase<Derived> &a) {
    if (a.rows() != a.cols()) {
        throw ShapeError("expected a square matrix, got " +
                         detail::shape_string(a.rows(), a.cols()));
    }
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    if (a.size() == 0) {
        return Real(0);
    }
    return Real((a - a.adjoint()).cwiseAbs().maxCoeff());
}

/// Ascending eigenvalues of the Hermitian part of `a`.
template <typename Derived> auto hermitian_eigenvalues(const Eigen::MatrixBase<Derived> &a) {
    using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Plain sym = (a + a.adjoint()) / typename Derived::Scalar(2);
    Eigen::SelfAdjointEigenSolver<Plain> solver(sym, Eigen::EigenvaluesOnly);
    return RealVector<typename Eigen::NumTraits<typename Derived::Scalar>::Real>(
        solver.eigenvalues());
}

/// Direction of linear polarization, held in [0, pi).
template <typename Scalar = double> class PolarizationAngle {
  public:
    explicit PolarizationAngle(Scalar radians) : radians_(canonicalize(radians)) {}

    static PolarizationAngle from_degrees(Scalar degrees) {
        return PolarizationAngle(degrees * std::numbers::pi_v<Scalar> / Scalar(180));
    }

    [[nodiscard]] Scalar radians() const noexcept { return radians_; }
    [[nodiscard]] Scalar degrees() const noexcept {
        return radians_ * Scalar(180) / std::numbers::pi_v<Scalar>;
    }

    friend bool operator==(const PolarizationAngle &, const PolarizationAngle &) = default;

  private:
    static Scalar canonicalize(Scalar theta) {
        using std::fmod;
        using std::isfinite;
        if (!isfinite(theta)) {
            throw DomainError("polarization angle must be finite");
        }
        constexpr Scalar pi = std::numbers::pi_v<Scalar>;
        Scalar r = fmod(theta, pi);
        if (r < Scalar(0)) {
            r += pi;
        }
        if (r >= pi) {
            r -= pi;
        }
        return r;
    }

    Scalar radians_;
};

using PolarizationAngled = PolarizationAngle<double>;

/// Rank-one projector onto the polarization direction (cos theta, sin theta).
template <typename Scalar>
ComplexMatrix<Scalar> projector_from_angle(const PolarizationAngle<Scalar> &theta) {
    using std::cos;
    using std::sin;
    const Scalar c = cos(theta.radians());
    const Scalar s = sin(theta.radians());
    ComplexMatrix<Scalar> e(2, 2);
    e << c * c, c * s, c * s, s * s;
    return e;
}

/**
 * A pure state vector or a density operator on a d-dimensional space.
 *
 * Construction validates normalization (pure) or Hermiticity, unit trace and
 * positivity (mixed) against a NumericPolicy; a constructed state is always
 * valid.
 */
template <typename Scalar = double> class StateDescriptor {
  public:
    using Vector = ComplexVector<Scalar>;
    using Matrix = ComplexMatrix<Scalar>;

    static StateDescriptor pure(Vector psi, const NumericPolicy<Scalar> &policy = {}) {
        if (psi.size() == 0) {
            throw ShapeError("state vector must be nonempty");
        }
        using std::abs;
        const Scalar norm2 = psi.squaredNorm();
        if (abs(norm2 - Scalar(1)) > policy.algebraic) {
            std::ostringstream os;
            os << "state vector is not normalized (|psi|^2 = " << norm2 << ")";
            throw DomainError(os.str());
        }
        return StateDescriptor(std::move(psi));
    }

    /// Normalizes `psi` first; only the zero vector is rejected.
    static StateDescriptor normalized(Vector psi) {
        const Scalar n = psi.norm();
        if (psi.size() == 0 || !(n > Scalar(0))) {
            throw DomainError("cannot normalize a zero state vector");
        }
        psi /= n;
        return StateDescriptor(std::move(psi));
    }

    static StateDescriptor mixed(Matrix rho, const NumericPolicy<Scalar> &policy = {}) {
        if (rho.rows() == 0) {
            throw ShapeError("density operator must be nonempty");
        }
        const Scalar herm = hermiticity_residual(rho);
        if (herm > policy.algebraic) {
            throw DomainError("density operator is not Hermitian");
        }
        using std::abs;
        if (abs(rho.trace() - Complex<Scalar>(1)) > policy.algebraic) {
            throw DomainError("density operator does not have unit trace");
        }
        if (hermitian_eigenvalues(rho).minCoeff() < -policy.positivity) {
            throw DomainError("density operator has a negative eigenvalue");
        }
        return StateDescriptor(std::move(rho));
    }

    [[nodiscard]] Eigen::Index dim() const {
        return std::visit([](const auto &v) { return Eigen::Index(v.rows()); }, repr_);
    }

    [[nodiscard]] bool is_pure_vector() const noexcept {
        return std::holds_alternative<Vector>(repr_);
    }

    /// The state vector; only valid when `is_pure_vector()`.
    [[nodiscard]] const Vector &vector() const { return std::get<Vector>(repr_); }

    /// Density operator, formed as |psi><psi| for vector states.
    [[nodiscard]] Matrix density() const {
        if (const auto *psi = std::get_if<Vector>(&repr_)) {
            return (*psi) * psi->adjoint();
        }
        return std::get<Matrix>(repr_);
    }

  private:
    explicit StateDescriptor(Vector psi) : repr_(std::move(psi)) {}
    explicit StateDescriptor(Matrix rho) : repr_(std::move(rho)) {}

    std::variant<Vector, Matrix> repr_;
};

using StateDescriptord = StateDescriptor<double>;

/// <psi|op|psi> for vector states, Tr(rho op) for density operators.
template <typename Scalar, typename Derived>
Complex<Scalar> expectation(const StateDescriptor<Scalar> &state,
                            const Eigen::MatrixBase<Derived> &op) {
    const Eigen::Index d = state.dim();
    if (op.rows() != d || op.cols() != d) {
        throw ShapeError("expectation: operator is " + detail::shape_string(op.rows(), op.cols()) +
                         " but state has dimension " + std::to_string(d));
    }
    if (state.is_pure_vector()) {
        const auto &psi = state.vector();
        return psi.dot(op * psi); // dot() conjugates its left operand
    }
    return (state.density() * op).trace();
}

/// Pauli matrices and named polarization states. H = |0>, V = |1>.
namespace ops {

template <typename Scalar = double> ComplexMatrix<Scalar> pauli_x() {
    ComplexMatrix<Scalar> m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

template <typename Scalar = double> ComplexMatrix<Scalar> pauli_y() {
    const Complex<Scalar> i(0, 1);
    ComplexMatrix<Scalar> m(2, 2);
    m << Complex<Scalar>(0), -i, i, Complex<Scalar>(0);
    return m;
}

template <typename Scalar = double> ComplexMatrix<Scalar> pauli_z() {
    ComplexMatrix<Scalar> m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

template <typename Scalar = double> ComplexVector<Scalar> basis(Eigen::Index dim, Eigen::Index k) {
    ComplexVector<Scalar> v = ComplexVector<Scalar>::Zero(dim);
    v(k) = Complex<Scalar>(1);
    return v;
}

} // namespace ops

namespace states {

template <typename Scalar = double> StateDescriptor<Scalar> horizontal() {
    return StateDescriptor<Scalar>::pure(ops::basis<Scalar>(2, 0));
}

template <typename Scalar = double> StateDescriptor<Scalar> vertical() {
    return StateDescriptor<Scalar>::pure(ops::basis<Scalar>(2, 1));
}

/// Linear polarization at 45 degrees, (|H> + |V>)/sqrt(2).
template <typename Scalar = double> StateDescriptor<Scalar> diagonal() {
    ComplexVector<Scalar> v(2);
    v << 1, 1;
    return StateDescriptor<Scalar>::normalized(std::move(v));
}

/// (|HV> - |VH>)/sqrt(2), photon 1 as the left tensor factor.
template <typename Scalar = double> StateDescriptor<Scalar> singlet() {
    ComplexVector<Scalar> v(4);
    v << 0, 1, -1, 0;
    return StateDescriptor<Scalar>::normalized(std::move(v));
}

template <typename Scalar = double> StateDescriptor<Scalar> maximally_mixed(Eigen::Index dim) {
    ComplexMatrix<Scalar> rho =
        ComplexMatrix<Scalar>::Identity(dim, dim) / Complex<Scalar>(Scalar(dim));
    return StateDescriptor<Scalar>::mixed(std::move(rho));
}

/// Tensor product of two vector states.
template <typename Scalar>
StateDescriptor<Scalar> product(const StateDescriptor<Scalar> &a, const StateDescriptor<Scalar> &b) {
    if (a.is_pure_vector() && b.is_pure_vector()) {
        return StateDescriptor<Scalar>::normalized(kron(a.vector(), b.vector()));
    }
    return StateDescriptor<Scalar>::mixed(kron(a.density(), b.density()));
}

} // namespace states

} // namespace qmeas
