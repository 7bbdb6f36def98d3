#pragma once

// Minimal dense complex linear algebra for the small Hilbert spaces used
// here (dimensions 2, 4, 8): products, adjoints, Kronecker products,
// Hermitian eigendecomposition, PSD square roots, partial trace.

#include <complex>
#include <cstddef>
#include <vector>

#include "berry/errors.hpp"

namespace berry {

using cplx = std::complex<double>;

bool is_finite(cplx z);

// Normalized amplitude vector over 2^n basis states.
// Single qubit basis order: index 0 = |up_z>, index 1 = |down_z>.
// Two qubits: index 2*a + b for qubit A state a, qubit B state b,
// i.e. (|uu>, |ud>, |du>, |dd>).
class StateVector {
  public:
    // validating constructor: dim must be a power of two >= 2, amplitudes
    // finite and unit-norm within 1e-12 (throws NotNormalized otherwise)
    explicit StateVector(std::vector<cplx> amplitudes);

    // rescales to unit norm; throws ZeroState when the norm vanishes
    static StateVector normalized(std::vector<cplx> amplitudes);

    std::size_t dim() const { return amps_.size(); }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    double norm() const;

  private:
    struct unchecked_tag {};
    StateVector(std::vector<cplx> amplitudes, unchecked_tag);

    std::vector<cplx> amps_;
};

// <a|b>, conjugate-linear in the first argument
cplx inner(const StateVector& a, const StateVector& b);

// Dense square complex matrix, row-major, immutable after construction.
class SquareOperator {
  public:
    SquareOperator(std::size_t dim, std::vector<cplx> entries);
    static SquareOperator identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * dim_ + j];
    }
    const std::vector<cplx>& entries() const { return entries_; }

    SquareOperator adjoint() const;
    SquareOperator conjugate() const;
    SquareOperator operator*(const SquareOperator& rhs) const;
    SquareOperator operator+(const SquareOperator& rhs) const;
    SquareOperator operator-(const SquareOperator& rhs) const;
    SquareOperator scaled(cplx factor) const;

    std::vector<cplx> apply(const std::vector<cplx>& v) const;
    StateVector apply_normalized(const StateVector& v) const;

    cplx trace() const;
    double frobenius_norm() const;
    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

  private:
    std::size_t dim_;
    std::vector<cplx> entries_;
};

// Hermitian within 1e-12, unit trace within 1e-12, eigenvalues >= -1e-10.
class DensityMatrix {
  public:
    explicit DensityMatrix(SquareOperator op);
    static DensityMatrix from_pure(const StateVector& psi);

    std::size_t dim() const { return op_.dim(); }
    const SquareOperator& op() const { return op_; }

  private:
    SquareOperator op_;
};

SquareOperator kron(const SquareOperator& a, const SquareOperator& b);

struct EigResult {
    std::vector<double> eigenvalues; // ascending
    SquareOperator eigenvectors;     // orthonormal columns, paired by index
};

// Cyclic Jacobi rotations; off-diagonal norm threshold 1e-14 (relative to
// the Frobenius norm), at most 100 sweeps. Eigenvector phase convention:
// first component of modulus > 1e-12 is made real positive.
EigResult hermitian_eig(const SquareOperator& m);

// Hermitian square root via eigendecomposition. Eigenvalues in
// [-1e-10, 0) are clamped to zero; anything below -1e-10 throws NotPSD.
SquareOperator psd_sqrt(const DensityMatrix& rho);

enum class Subsystem { A, B };

// Reduced state of one qubit out of a two-qubit density matrix.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

} // namespace berry
