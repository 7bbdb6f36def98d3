#pragma once

// Spin-1/2 in a magnetic field rotating about z at a fixed tilt:
// B(t) = B n(phi, t),  n = (sin(phi) cos(w0 t), sin(phi) sin(w0 t), cos(phi)).
// The Hamiltonian is H(t) = (w_L/2) n.sigma (hbar = 1), so its eigenvalues
// are +-w_L/2 at every instant.

#include <array>

#include "berry/linalg.hpp"

namespace berry {

struct FieldConfig {
    double phi;          // tilt from the quantization axis, in [0, pi]
    double omega0;       // field rotation rate, > 0
    double omega_larmor; // precession rate scale, >= 0 (0 = free evolution)

    FieldConfig(double phi, double omega0, double omega_larmor);

    double period() const; // tau = 2 pi / omega0
};

// Flux/monopole strength of the cyclic phase: b = -(1 - cos phi)/2, so the
// accumulated phase factor is e^{i 2 pi b} and |b| runs from 0 to 1.
struct BerryFactor {
    double b;     // in [-1, 0]
    double abs_b; // |b|, in [0, 1]
};

SquareOperator pauli_x();
SquareOperator pauli_y();
SquareOperator pauli_z();

// unit vector n(phi, t)
std::array<double, 3> field_direction(const FieldConfig& cfg, double t);

// H(t) = (omega_larmor / 2) n(phi, t) . sigma
SquareOperator hamiltonian(const FieldConfig& cfg, double t);

struct EigenstatePair {
    StateVector up;   // +omega_larmor/2 branch
    StateVector down; // -omega_larmor/2 branch
};

// Instantaneous eigenstates of n(phi,t).sigma in the sigma_z basis:
//   up   =  cos(phi/2)|up_z> + sin(phi/2) e^{i w0 t}|down_z>
//   down = -sin(phi/2)|up_z> + cos(phi/2) e^{i w0 t}|down_z>
EigenstatePair instantaneous_eigenstates(const FieldConfig& cfg, double t);

// b(phi) = -(1 - cos phi)/2; throws DomainError outside [0, pi]
BerryFactor berry_factor(double phi);

// cyclic phase factor e^{i 2 pi b}
cplx flux_phase(double b);

// field strength b / (2 pi R^2) in flux-quantum units per area
double monopole_field(double b, double radius);

} // namespace berry
