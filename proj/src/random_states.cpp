#include "berry/random_states.hpp"

#include <cmath>
#include <numbers>

namespace berry {

double StateSampler::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

cplx StateSampler::gaussian() { return cplx(normal_(rng_), normal_(rng_)); }

StateVector StateSampler::random_qubit() {
    return StateVector::normalized({gaussian(), gaussian()});
}

StateVector StateSampler::random_pure_two_qubit() {
    return StateVector::normalized({gaussian(), gaussian(), gaussian(), gaussian()});
}

StateVector StateSampler::random_product_two_qubit() {
    const StateVector a = random_qubit();
    const StateVector b = random_qubit();
    std::vector<cplx> amps(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) amps[2 * i + j] = a[i] * b[j];
    return StateVector::normalized(std::move(amps));
}

SquareOperator StateSampler::random_single_qubit_unitary() {
    // Haar-ish axis-angle rotation with a random global phase
    const double z = uniform(-1.0, 1.0);
    const double az = uniform(0.0, 2.0 * std::numbers::pi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double nx = r * std::cos(az), ny = r * std::sin(az), nz = z;
    const double half = 0.5 * uniform(0.0, 2.0 * std::numbers::pi);
    const cplx g = std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
    const double c = std::cos(half);
    const cplx mis(0.0, -std::sin(half));
    return SquareOperator(2, {g * (c + mis * nz), g * (mis * cplx(nx, -ny)),
                              g * (mis * cplx(nx, ny)), g * (c - mis * nz)});
}

SquareOperator StateSampler::random_hermitian(std::size_t dim) {
    std::vector<cplx> e(dim * dim);
    for (cplx& z : e) z = gaussian();
    const SquareOperator g(dim, std::move(e));
    return (g + g.adjoint()).scaled(0.5);
}

DensityMatrix StateSampler::random_density(std::size_t dim) {
    std::vector<cplx> e(dim * dim);
    for (cplx& z : e) z = gaussian();
    const SquareOperator g(dim, std::move(e));
    SquareOperator p = g * g.adjoint();
    const double tr = p.trace().real();
    p = p.scaled(1.0 / tr);
    // hermitize exactly so the validating constructor accepts roundoff
    std::vector<cplx> h = p.entries();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            const cplx avg = 0.5 * (h[i * dim + j] + std::conj(h[j * dim + i]));
            h[i * dim + j] = avg;
            h[j * dim + i] = std::conj(avg);
        }
    return DensityMatrix(SquareOperator(dim, std::move(h)));
}

} // namespace berry
