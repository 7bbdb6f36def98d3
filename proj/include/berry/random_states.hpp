#pragma once

// Seeded generators for randomized checks; every draw is reproducible
// from the seed.

#include <random>

#include "berry/linalg.hpp"

namespace berry {

class StateSampler {
  public:
    explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi);
    cplx gaussian();

    StateVector random_qubit();
    StateVector random_pure_two_qubit();
    StateVector random_product_two_qubit();
    SquareOperator random_single_qubit_unitary();
    SquareOperator random_hermitian(std::size_t dim);
    DensityMatrix random_density(std::size_t dim); // G G^dag, trace-normalized

  private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace berry
