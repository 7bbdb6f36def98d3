#include <doctest.h>

#include <cmath>
#include <numbers>

#include "berry/linalg.hpp"
#include "berry/random_states.hpp"
#include "berry/spin_system.hpp"

#include "test_util.hpp"

using namespace berry;
using testutil::op_diff;

namespace {
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("state vector construction and normalization") {
    CHECK_THROWS_AS(StateVector({1.0, 0.0, 0.0}), BadDimension); // not a power of two
    CHECK_THROWS_AS(StateVector({0.5, 0.5}), NotNormalized);
    CHECK_THROWS_AS(StateVector::normalized({0.0, 0.0}), ZeroState);
    CHECK_THROWS_AS(StateVector({cplx(1.0, std::nan("")), 0.0}), DomainError);

    const StateVector s = StateVector::normalized({3.0, 4.0});
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s[0].real() == doctest::Approx(0.6));
    CHECK(s[1].real() == doctest::Approx(0.8));
}

TEST_CASE("kron identity and diagonal block structure") {
    const SquareOperator i2 = SquareOperator::identity(2);
    CHECK(op_diff(kron(i2, i2), SquareOperator::identity(4)) == 0.0);

    const SquareOperator zi = kron(pauli_z(), i2);
    CHECK(op_diff(zi, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1}) == 0.0);
}

TEST_CASE("kron(sy, sy) flips the Bell state sign") {
    // hand multiplication: sy x sy = antidiag(-1, 1, 1, -1)
    const SquareOperator yy = kron(pauli_y(), pauli_y());
    CHECK(op_diff(yy, {0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0}) == 0.0);

    const std::vector<cplx> bell{inv_sqrt2, 0.0, 0.0, inv_sqrt2};
    const std::vector<cplx> out = yy.apply(bell);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(out[i] + bell[i]) == 0.0);
}

TEST_CASE("kron associativity on random triples") {
    StateSampler sampler(11);
    for (int trial = 0; trial < 20; ++trial) {
        const SquareOperator a = sampler.random_hermitian(2);
        const SquareOperator b = sampler.random_hermitian(2);
        const SquareOperator c = sampler.random_hermitian(2);
        CHECK(op_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
    }
}

TEST_CASE("hermitian_eig on pauli matrices") {
    const EigResult ez = hermitian_eig(pauli_z());
    CHECK(ez.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ez.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    // ascending: first column |down>, second |up>
    CHECK(std::abs(ez.eigenvectors(1, 0) - cplx(1.0)) < 1e-14);
    CHECK(std::abs(ez.eigenvectors(0, 1) - cplx(1.0)) < 1e-14);

    const EigResult ex = hermitian_eig(pauli_x());
    CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    // phase convention: first component real positive
    CHECK(std::abs(ex.eigenvectors(0, 0) - cplx(inv_sqrt2)) < 1e-14);
    CHECK(std::abs(ex.eigenvectors(1, 0) + cplx(inv_sqrt2)) < 1e-14);
    CHECK(std::abs(ex.eigenvectors(0, 1) - cplx(inv_sqrt2)) < 1e-14);
    CHECK(std::abs(ex.eigenvectors(1, 1) - cplx(inv_sqrt2)) < 1e-14);
}

TEST_CASE("hermitian_eig matches the tilted-axis eigenstate form") {
    // +1 eigenvector of n(phi).sigma at phi = pi/3, t = 0 is
    // (cos(pi/6), sin(pi/6))
    const FieldConfig cfg(std::numbers::pi / 3.0, 1.0, 2.0);
    const SquareOperator h = hamiltonian(cfg, 0.0);
    const EigResult eig = hermitian_eig(h);
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13)); // +omega_L/2 = 1
    CHECK(std::abs(eig.eigenvectors(0, 1) - cplx(std::cos(std::numbers::pi / 6.0))) < 1e-12);
    CHECK(std::abs(eig.eigenvectors(1, 1) - cplx(std::sin(std::numbers::pi / 6.0))) < 1e-12);
}

TEST_CASE("hermitian_eig rejects non-hermitian input") {
    CHECK_THROWS_AS(hermitian_eig(SquareOperator(2, {0.0, 1.0, 0.0, 0.0})), NotHermitian);
}

TEST_CASE("hermitian_eig reconstruction and orthonormality on random matrices") {
    StateSampler sampler(23);
    for (std::size_t dim : {2, 4, 8}) {
        for (int trial = 0; trial < 25; ++trial) {
            const SquareOperator h = sampler.random_hermitian(dim);
            const EigResult eig = hermitian_eig(h);
            for (std::size_t i = 0; i + 1 < dim; ++i) {
                CHECK(eig.eigenvalues[i] <= eig.eigenvalues[i + 1]);
            }
            // V diag(lam) V^dag = h
            const SquareOperator& v = eig.eigenvectors;
            std::vector<cplx> d(dim * dim, 0.0);
            for (std::size_t i = 0; i < dim; ++i) d[i * dim + i] = eig.eigenvalues[i];
            const SquareOperator recon = v * SquareOperator(dim, std::move(d)) * v.adjoint();
            CHECK(op_diff(recon, h) < 1e-10);
            CHECK(op_diff(v.adjoint() * v, SquareOperator::identity(dim)) < 1e-10);
        }
    }
}

TEST_CASE("density matrix validation") {
    // projector is fine
    const DensityMatrix rho = DensityMatrix::from_pure(StateVector({1.0, 0.0}));
    CHECK(rho.dim() == 2);

    // trace != 1
    CHECK_THROWS_AS(DensityMatrix(SquareOperator(2, {0.6, 0.0, 0.0, 0.6})), DomainError);
    // not hermitian
    CHECK_THROWS_AS(DensityMatrix(SquareOperator(2, {0.5, 0.1, 0.3, 0.5})), NotHermitian);
    // negative eigenvalue beyond the clamp window
    CHECK_THROWS_AS(DensityMatrix(SquareOperator(2, {1.001, 0.0, 0.0, -0.001})), NotPSD);
}

TEST_CASE("psd_sqrt fixed points") {
    // a projector is its own root
    std::vector<cplx> proj(16, 0.0);
    proj[0] = 1.0;
    const DensityMatrix p(SquareOperator(4, proj));
    CHECK(op_diff(psd_sqrt(p), p.op()) < 1e-14);

    // sqrt of I/4 is I/2
    const DensityMatrix quarter(SquareOperator::identity(4).scaled(0.25));
    CHECK(op_diff(psd_sqrt(quarter), SquareOperator::identity(4).scaled(0.5)) < 1e-14);

    // rank-1 Bell projector
    const DensityMatrix bell =
        DensityMatrix::from_pure(StateVector({inv_sqrt2, 0.0, 0.0, inv_sqrt2}));
    CHECK(op_diff(psd_sqrt(bell), bell.op()) < 1e-9);
}

TEST_CASE("psd_sqrt squares back on random PSD matrices") {
    StateSampler sampler(37);
    for (int trial = 0; trial < 25; ++trial) {
        const DensityMatrix rho = sampler.random_density(4);
        const SquareOperator root = psd_sqrt(rho);
        CHECK(root.is_hermitian(1e-10));
        CHECK(op_diff(root * root, rho.op()) < 1e-9);
    }
}

TEST_CASE("partial trace basics") {
    // |ud><ud| keeping A -> |u><u|
    const DensityMatrix ud = DensityMatrix::from_pure(StateVector({0.0, 1.0, 0.0, 0.0}));
    CHECK(op_diff(partial_trace(ud, Subsystem::A).op(), {1, 0, 0, 0}) == 0.0);
    CHECK(op_diff(partial_trace(ud, Subsystem::B).op(), {0, 0, 0, 1}) == 0.0);

    // Bell state: maximally mixed marginal
    const DensityMatrix bell =
        DensityMatrix::from_pure(StateVector({inv_sqrt2, 0.0, 0.0, inv_sqrt2}));
    CHECK(op_diff(partial_trace(bell, Subsystem::A).op(),
                  SquareOperator::identity(2).scaled(0.5)) < 1e-14);

    CHECK_THROWS_AS(partial_trace(DensityMatrix::from_pure(StateVector({1.0, 0.0})),
                                  Subsystem::A),
                    BadDimension);
}

TEST_CASE("partial trace of a product recovers the kept factor") {
    StateSampler sampler(41);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix ra = sampler.random_density(2);
        const DensityMatrix rb = sampler.random_density(2);
        const DensityMatrix prod(kron(ra.op(), rb.op()));
        CHECK(op_diff(partial_trace(prod, Subsystem::A).op(), ra.op()) < 1e-12);
        CHECK(op_diff(partial_trace(prod, Subsystem::B).op(), rb.op()) < 1e-12);
    }
}

TEST_CASE("operator predicates") {
    CHECK(pauli_y().is_hermitian(0.0));
    CHECK(pauli_y().is_unitary(1e-15));
    const SquareOperator skew(2, {0.0, 1.0, -1.0, 0.0});
    CHECK(!skew.is_hermitian(1e-12));
    CHECK(skew.is_unitary(1e-15));
    CHECK(!SquareOperator(2, {1.0, 0.0, 0.0, 2.0}).is_unitary(1e-12));
}
