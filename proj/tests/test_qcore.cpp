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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "qmeas/qcore.hpp"
#include "support/random.hpp"

using namespace qmeas;
using qmeas::testing::Rng;

namespace {

double max_abs_diff(const ComplexMatrixd &a, const ComplexMatrixd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrixd diag2(double a, double b) {
    ComplexMatrixd m = ComplexMatrixd::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

// Entry-by-entry triple loop, independent of Eigen's product kernels.
ComplexMatrixd matmul_oracle(const ComplexMatrixd &a, const ComplexMatrixd &b) {
    ComplexMatrixd c = ComplexMatrixd::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            for (Eigen::Index k = 0; k < a.cols(); ++k)
                c(i, j) += a(i, k) * b(k, j);
    return c;
}

ComplexMatrixd kron_oracle(const ComplexMatrixd &a, const ComplexMatrixd &b) {
    const Eigen::Index d2r = b.rows(), d2c = b.cols();
    ComplexMatrixd out(a.rows() * d2r, a.cols() * d2c);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < d2r; ++k)
                for (Eigen::Index l = 0; l < d2c; ++l)
                    out(i * d2r + k, j * d2c + l) = a(i, j) * b(k, l);
    return out;
}

} // namespace

TEST_CASE("matmul", "[qcore]") {
    Rng rng(11);
    const ComplexMatrixd m = qmeas::testing::random_gaussian(rng, 2, 2);
    CHECK(max_abs_diff(matmul(ComplexMatrixd::Identity(2, 2), m), m) == 0.0);
    CHECK(matmul(diag2(1, 0), diag2(0, 1)).cwiseAbs().maxCoeff() == 0.0);

    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrixd a = qmeas::testing::random_gaussian(rng, 2, 2);
        const ComplexMatrixd b = qmeas::testing::random_gaussian(rng, 2, 2);
        CHECK(max_abs_diff(matmul(a, b), matmul_oracle(a, b)) < 1e-12);
    }

    const ComplexMatrixd a = qmeas::testing::random_gaussian(rng, 2, 3);
    CHECK_THROWS_AS(matmul(a, a), ShapeError);
}

TEST_CASE("kron", "[qcore]") {
    CHECK(max_abs_diff(kron(ComplexMatrixd::Identity(2, 2), ComplexMatrixd::Identity(2, 2)),
                       ComplexMatrixd::Identity(4, 4)) == 0.0);

    ComplexMatrixd expected = ComplexMatrixd::Zero(4, 4);
    expected(1, 1) = 1.0;
    CHECK(max_abs_diff(kron(diag2(1, 0), diag2(0, 1)), expected) == 0.0);

    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrixd a = qmeas::testing::random_gaussian(rng, 2, 2);
        const ComplexMatrixd b = qmeas::testing::random_gaussian(rng, 2, 2);
        CHECK(max_abs_diff(kron(a, b), kron_oracle(a, b)) == 0.0);
    }
    // Non-square operands follow the same index formula.
    const ComplexMatrixd a = qmeas::testing::random_gaussian(rng, 2, 3);
    const ComplexMatrixd b = qmeas::testing::random_gaussian(rng, 3, 1);
    CHECK(max_abs_diff(kron(a, b), kron_oracle(a, b)) == 0.0);
}

TEST_CASE("kron distributes over addition", "[qcore][property]") {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrixd a = qmeas::testing::random_gaussian(rng, 2, 2);
        const ComplexMatrixd b = qmeas::testing::random_gaussian(rng, 2, 2);
        const ComplexMatrixd c = qmeas::testing::random_gaussian(rng, 2, 2);
        const ComplexMatrixd lhs = kron(ComplexMatrixd(a + b), c);
        const ComplexMatrixd rhs = kron(a, c) + kron(b, c);
        REQUIRE(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("expectation", "[qcore]") {
    const auto h = states::horizontal();
    CHECK(std::abs(expectation(h, diag2(1, 0)) - 1.0) == 0.0);
    CHECK(std::abs(expectation(h, ComplexMatrixd::Identity(2, 2)) - 1.0) == 0.0);
    CHECK(std::abs(expectation(states::diagonal(), diag2(1, 0)) - 0.5) < 1e-15);
    CHECK_THROWS_AS(expectation(h, ComplexMatrixd::Identity(4, 4)), ShapeError);
}

TEST_CASE("pure and density expectation paths agree", "[qcore][property]") {
    Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index d = 2 + trial % 3;
        const auto psi = qmeas::testing::random_pure_state(rng, d);
        const auto rho = StateDescriptord::mixed(psi.density());
        const ComplexMatrixd op = qmeas::testing::random_gaussian(rng, d, d);
        REQUIRE(std::abs(expectation(psi, op) - expectation(rho, op)) < 1e-12);

        const ComplexMatrixd herm = qmeas::testing::random_hermitian(rng, d);
        REQUIRE(std::abs(expectation(psi, herm).imag()) < 1e-10);
        REQUIRE(std::abs(expectation(qmeas::testing::random_density(rng, d), herm).imag()) <
                1e-10);
    }
}

TEST_CASE("state validation", "[qcore]") {
    ComplexVectord v(2);
    v << 1, 1;
    CHECK_THROWS_AS(StateDescriptord::pure(v), DomainError);
    CHECK(StateDescriptord::normalized(v).vector().norm() == Catch::Approx(1.0));

    ComplexMatrixd rho = ComplexMatrixd::Identity(2, 2);
    CHECK_THROWS_AS(StateDescriptord::mixed(rho), DomainError); // trace 2
    rho << 1.5, 0, 0, -0.5;
    CHECK_THROWS_AS(StateDescriptord::mixed(rho), DomainError); // negative eigenvalue
    rho << 0.5, 0.1, 0.2, 0.5;
    CHECK_THROWS_AS(StateDescriptord::mixed(rho), DomainError); // not Hermitian
    CHECK(states::maximally_mixed(4).dim() == 4);
}

TEST_CASE("polarization angle canonicalization", "[qcore]") {
    constexpr double pi = std::numbers::pi;
    CHECK(PolarizationAngled(pi).radians() == Catch::Approx(0.0).margin(1e-15));
    CHECK(PolarizationAngled(-pi / 4).radians() == Catch::Approx(3 * pi / 4));
    CHECK(PolarizationAngled(5 * pi / 2).radians() == Catch::Approx(pi / 2));
    CHECK(PolarizationAngled::from_degrees(45).radians() == Catch::Approx(pi / 4));
    CHECK_THROWS_AS(PolarizationAngled(std::nan("")), DomainError);
    CHECK_THROWS_AS(PolarizationAngled(INFINITY), DomainError);
}

TEST_CASE("projector_from_angle", "[qcore]") {
    constexpr double pi = std::numbers::pi;
    CHECK(max_abs_diff(projector_from_angle(PolarizationAngled(0)), diag2(1, 0)) == 0.0);

    ComplexMatrixd quarter(2, 2);
    quarter << 0.5, 0.5, 0.5, 0.5;
    const ComplexMatrixd e45 = projector_from_angle(PolarizationAngled(pi / 4));
    CHECK(max_abs_diff(e45, quarter) < 1e-15);
    CHECK(std::abs((projector_from_angle(PolarizationAngled(0)) * e45).trace() - 0.5) < 1e-15);

    Rng rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const double theta = std::uniform_real_distribution<double>(-10, 10)(rng);
        const ComplexMatrixd e = projector_from_angle(PolarizationAngled(theta));
        REQUIRE(max_abs_diff(e * e, e) < 1e-12);
        REQUIRE(max_abs_diff(e, projector_from_angle(PolarizationAngled(theta + pi))) < 1e-12);
    }
}

TEST_CASE("core works with long double scalars", "[qcore]") {
    using Ld = long double;
    const auto e = projector_from_angle(PolarizationAngle<Ld>(std::numbers::pi_v<Ld> / 4));
    const auto k = kron(e, e);
    CHECK(std::abs(k.trace() - Complex<Ld>(1)) < 1e-15L);
    CHECK(hermitian_eigenvalues(e).maxCoeff() == Catch::Approx(1.0));
}
