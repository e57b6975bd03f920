// Copyright 2026 The entdist authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "entdist/qmat.hpp"
#include "entdist/states.hpp"
#include "oracles.hpp"

using namespace entdist;

namespace {

PauliTensor unit_tensor() {
    PauliTensor t;
    t.r[0][0] = 1.0;
    return t;
}

std::array<Complex, 4> random_pure4(std::mt19937_64 &eng) {
    std::array<Complex, 4> psi{};
    double norm2 = 0.0;
    for (auto &c : psi) {
        c = Complex(entdist::testing::symmetric_draw(eng), entdist::testing::symmetric_draw(eng));
        norm2 += std::norm(c);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto &c : psi) c *= inv;
    return psi;
}

/// Convex mixture of four random pure states: physical by construction.
DensityMatrix random_density(std::mt19937_64 &eng) {
    ComplexMatrix m(4, 4);
    std::array<double, 4> weights{};
    double total = 0.0;
    for (auto &w : weights) {
        w = entdist::testing::unit_draw(eng) + 1e-6;
        total += w;
    }
    for (double w : weights) {
        const auto psi = random_pure4(eng);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) += (w / total) * psi[i] * std::conj(psi[j]);
    }
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, i) = Complex(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < 4; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    m *= Complex(1.0, 0.0) / m.trace();
    return DensityMatrix(m);
}

ComplexMatrix outer_product_state(const std::array<Complex, 2> &u, const std::array<Complex, 2> &v) {
    const std::array<Complex, 4> psi = {u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]};
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
    return m;
}

std::array<double, 4> sorted_desc(std::array<double, 4> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

} // namespace

TEST_CASE("from_pauli of the bare identity tensor is the maximally mixed state") {
    const DensityMatrix d = from_pauli(unit_tensor());
    CHECK(entdist::max_abs_diff(d.matrix(), Complex(0.25, 0.0) * ComplexMatrix::identity(4)) <
          1e-15);
}

TEST_CASE("from_pauli of the diagonal tensor (1, 1, -1, 1) is the corner Bell projector") {
    PauliTensor t = unit_tensor();
    t.r[1][1] = 1.0;
    t.r[2][2] = -1.0;
    t.r[3][3] = 1.0;
    const DensityMatrix d = from_pauli(t);
    ComplexMatrix expected(4, 4);
    expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 0.5;
    CHECK(entdist::max_abs_diff(d.matrix(), expected) < 1e-15);
}

TEST_CASE("from_pauli rejects tensors without unit trace component") {
    PauliTensor t = unit_tensor();
    t.r[0][0] = 0.5;
    CHECK_THROWS_AS(from_pauli(t), std::invalid_argument);
}

TEST_CASE("to_pauli is the inverse of from_pauli on random unit-trace tensors") {
    std::mt19937_64 eng(5);
    for (int sample = 0; sample < 200; ++sample) {
        PauliTensor t = unit_tensor();
        for (std::size_t mu = 0; mu < 4; ++mu)
            for (std::size_t nu = 0; nu < 4; ++nu)
                if (mu != 0 || nu != 0) t.r[mu][nu] = entdist::testing::symmetric_draw(eng);

        const PauliTensor back = to_pauli(from_pauli(t));
        for (std::size_t mu = 0; mu < 4; ++mu)
            for (std::size_t nu = 0; nu < 4; ++nu)
                CHECK(std::abs(back.r[mu][nu] - t.r[mu][nu]) <= 1e-14);
    }
}

TEST_CASE("round trip through the Pauli tensor preserves random physical states") {
    std::mt19937_64 eng(17);
    for (int sample = 0; sample < 100; ++sample) {
        const DensityMatrix d = random_density(eng);
        const DensityMatrix back = from_pauli(to_pauli(d));
        CHECK(entdist::max_abs_diff(back.matrix(), d.matrix()) <= 1e-14);
    }
}

TEST_CASE("to_pauli of the maximally mixed state is the bare identity tensor") {
    const PauliTensor t = to_pauli(from_pauli(unit_tensor()));
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu)
            CHECK(t.r[mu][nu] == doctest::Approx(mu == 0 && nu == 0 ? 1.0 : 0.0).epsilon(1e-15));
}

TEST_CASE("to_pauli of standard-form states recovers the diagonal triple") {
    const PauliTensor t = to_pauli(from_standard({0.3, 0.2, -0.4}));
    CHECK(t.r[1][1] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(t.r[2][2] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(t.r[3][3] == doctest::Approx(-0.4).epsilon(1e-14));
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu)
            if (mu != nu) CHECK(std::abs(t.r[mu][nu]) < 1e-14);

    const PauliTensor bell = to_pauli(from_standard({1.0, -1.0, 1.0}));
    CHECK(bell.r[1][1] == doctest::Approx(1.0));
    CHECK(bell.r[2][2] == doctest::Approx(-1.0));
    CHECK(bell.r[3][3] == doctest::Approx(1.0));
}

TEST_CASE("from_standard at the origin is the maximally mixed state") {
    CHECK(entdist::max_abs_diff(from_standard({0.0, 0.0, 0.0}).matrix(),
                                Complex(0.25, 0.0) * ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("from_standard at the corners gives rank-one Bell projectors") {
    const auto eig_plus = entdist::hermitian_eig(from_standard({1.0, -1.0, 1.0}).matrix());
    CHECK(eig_plus.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-13));
    for (int k = 1; k < 4; ++k) CHECK(std::abs(eig_plus.eigenvalues[k]) < 1e-13);

    // Singlet corner: the spectrum formula puts the weight on the last slot.
    const auto eigs = standard_eigenvalues({-1.0, -1.0, -1.0});
    CHECK(eigs[3] == doctest::Approx(1.0));
    CHECK(eigs[0] == doctest::Approx(0.0));
    CHECK(eigs[1] == doctest::Approx(0.0));
    CHECK(eigs[2] == doctest::Approx(0.0));
}

TEST_CASE("standard_eigenvalues closed forms") {
    const auto corner = standard_eigenvalues({1.0, -1.0, 1.0});
    CHECK(corner[0] == doctest::Approx(1.0));
    CHECK(corner[1] == doctest::Approx(0.0));
    CHECK(corner[2] == doctest::Approx(0.0));
    CHECK(corner[3] == doctest::Approx(0.0));

    const auto center = standard_eigenvalues({0.0, 0.0, 0.0});
    for (double v : center) CHECK(v == doctest::Approx(0.25));

    // Frozen from the eigensolver oracle below; note the spectrum is
    // (0.625, 0.125, 0.125, 0.125), summing to one.
    const auto probe = standard_eigenvalues({0.5, -0.5, 0.5});
    CHECK(probe[0] == doctest::Approx(0.625).epsilon(1e-14));
    CHECK(probe[1] == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(probe[2] == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(probe[3] == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("pt_eigenvalues closed forms") {
    const auto corner = pt_eigenvalues({1.0, -1.0, 1.0});
    CHECK(corner[0] == doctest::Approx(0.5));
    CHECK(corner[1] == doctest::Approx(0.5));
    CHECK(corner[2] == doctest::Approx(0.5));
    CHECK(corner[3] == doctest::Approx(-0.5));

    const auto center = pt_eigenvalues({0.0, 0.0, 0.0});
    for (double v : center) CHECK(v == doctest::Approx(0.25));

    // Werner-type point: (-1/4, 5/12, 5/12, 5/12), checked against the
    // eigensolver on the explicitly transposed matrix.
    const StandardState werner{-2.0 / 3.0, -2.0 / 3.0, -2.0 / 3.0};
    const auto closed = sorted_desc(pt_eigenvalues(werner));
    CHECK(closed[0] == doctest::Approx(5.0 / 12.0).epsilon(1e-14));
    CHECK(closed[3] == doctest::Approx(-0.25).epsilon(1e-14));

    const auto eig = entdist::hermitian_eig(partial_transpose(from_standard(werner)));
    for (int k = 0; k < 4; ++k) CHECK(std::abs(closed[k] - eig.eigenvalues[k]) < 1e-12);
}

TEST_CASE("closed-form spectra agree with the eigensolver over the cube") {
    std::mt19937_64 eng(23);
    for (int sample = 0; sample < 1000; ++sample) {
        const StandardState s{entdist::testing::symmetric_draw(eng),
                              entdist::testing::symmetric_draw(eng),
                              entdist::testing::symmetric_draw(eng)};

        const auto closed = sorted_desc(standard_eigenvalues(s));
        const auto eig = entdist::hermitian_eig(from_standard(s).matrix());
        for (int k = 0; k < 4; ++k) CHECK(std::abs(closed[k] - eig.eigenvalues[k]) <= 1e-10);

        const auto closed_pt = sorted_desc(pt_eigenvalues(s));
        const auto eig_pt = entdist::hermitian_eig(partial_transpose(from_standard(s)));
        for (int k = 0; k < 4; ++k) CHECK(std::abs(closed_pt[k] - eig_pt.eigenvalues[k]) <= 1e-10);

        double sum = 0.0;
        for (double v : standard_eigenvalues(s)) sum += v;
        CHECK(std::abs(sum - 1.0) <= 1e-15);
    }
}

TEST_CASE("partial transpose fixes the maximally mixed state") {
    const ComplexMatrix quarter = Complex(0.25, 0.0) * ComplexMatrix::identity(4);
    CHECK(partial_transpose(quarter) == quarter);
}

TEST_CASE("partial transpose negates r_y on standard-form states") {
    const StandardState s{0.4, -0.7, 0.2};
    const ComplexMatrix pt = partial_transpose(from_standard(s));
    const PauliTensor t = to_pauli(DensityMatrix(pt));
    CHECK(t.r[1][1] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(t.r[2][2] == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(t.r[3][3] == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("partial transpose is an exact involution preserving trace and Hermiticity") {
    std::mt19937_64 eng(29);
    for (int sample = 0; sample < 100; ++sample) {
        const DensityMatrix d = random_density(eng);
        const ComplexMatrix pt = partial_transpose(d);
        CHECK(partial_transpose(pt) == d.matrix());
        CHECK(pt.trace() == d.matrix().trace());
        CHECK(pt.hermiticity_defect() == 0.0);
    }
}

TEST_CASE("identity filter leaves states untouched") {
    std::mt19937_64 eng(31);
    const DensityMatrix d = random_density(eng);
    const LocalFilter id(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
    CHECK(entdist::max_abs_diff(apply_filter(d, id).matrix(), d.matrix()) < 1e-15);
}

TEST_CASE("diagonal filter on the maximally mixed state") {
    const DensityMatrix mixed = from_standard({0.0, 0.0, 0.0});
    const LocalFilter f(ComplexMatrix{{2.0, 0.0}, {0.0, 1.0}}, ComplexMatrix::identity(2));
    const DensityMatrix filtered = apply_filter(mixed, f);
    ComplexMatrix expected(4, 4);
    expected(0, 0) = expected(1, 1) = 0.4;
    expected(2, 2) = expected(3, 3) = 0.1;
    CHECK(entdist::max_abs_diff(filtered.matrix(), expected) < 1e-15);
}

TEST_CASE("filters map pure product states to pure product states") {
    std::mt19937_64 eng(37);
    for (int sample = 0; sample < 50; ++sample) {
        const auto u = entdist::testing::random_qubit(eng);
        const auto v = entdist::testing::random_qubit(eng);
        const DensityMatrix product(outer_product_state({u.c0, u.c1}, {v.c0, v.c1}));

        ComplexMatrix a(2, 2), b(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                a(i, j) = Complex(entdist::testing::symmetric_draw(eng),
                                  entdist::testing::symmetric_draw(eng));
                b(i, j) = Complex(entdist::testing::symmetric_draw(eng),
                                  entdist::testing::symmetric_draw(eng));
            }
        if (std::abs(entdist::det2(a)) < 1e-3 || std::abs(entdist::det2(b)) < 1e-3) continue;

        const DensityMatrix filtered = apply_filter(product, LocalFilter(a, b));

        // Filtering a product projector must give the projector onto
        // (a u) (x) (b v).
        std::array<Complex, 2> au = {a(0, 0) * u.c0 + a(0, 1) * u.c1,
                                     a(1, 0) * u.c0 + a(1, 1) * u.c1};
        std::array<Complex, 2> bv = {b(0, 0) * v.c0 + b(0, 1) * v.c1,
                                     b(1, 0) * v.c0 + b(1, 1) * v.c1};
        const double nu = std::sqrt(std::norm(au[0]) + std::norm(au[1]));
        const double nv = std::sqrt(std::norm(bv[0]) + std::norm(bv[1]));
        for (auto &c : au) c /= nu;
        for (auto &c : bv) c /= nv;
        CHECK(entdist::max_abs_diff(filtered.matrix(), outer_product_state(au, bv)) < 1e-12);
    }
}

TEST_CASE("filter construction rejects singular factors") {
    CHECK_THROWS_AS(LocalFilter(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}, ComplexMatrix::identity(2)),
                    std::invalid_argument);
}

TEST_CASE("near-singular filters can annihilate a state") {
    // Both factors barely invertible and the state sits in the crushed
    // corner, so the normalization trace underflows the floor.
    const ComplexMatrix tiny{{1.0, 0.0}, {0.0, 2e-12}};
    ComplexMatrix pure(4, 4);
    pure(3, 3) = 1.0;
    CHECK_THROWS_AS(apply_filter(DensityMatrix(pure), LocalFilter(tiny, tiny)),
                    std::domain_error);
}

TEST_CASE("is_standard_form accepts standard-form states and extracts the triple") {
    const auto s = is_standard_form(from_standard({0.2, 0.1, -0.3}), 1e-12);
    REQUIRE(s.has_value());
    CHECK(s->rx == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(s->ry == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(s->rz == doctest::Approx(-0.3).epsilon(1e-14));
}

TEST_CASE("is_standard_form rejects states with identity-block components") {
    PauliTensor t = unit_tensor();
    t.r[0][1] = 0.5;
    CHECK_FALSE(is_standard_form(from_pauli(t), 1e-12).has_value());
}

TEST_CASE("is_standard_form rejects filtered corner states") {
    const ComplexMatrix a{{1.0, 0.3}, {0.0, 0.8}};
    const DensityMatrix filtered =
        apply_filter(from_standard({1.0, -1.0, 1.0}), LocalFilter(a, ComplexMatrix::identity(2)));
    CHECK_FALSE(is_standard_form(filtered, 1e-8).has_value());
}
