#pragma once

// Time evolution under the rotating-field Hamiltonian: a midpoint
// exponential stepper (each step is the exact 2x2 exponential, so every
// step is unitary), the closed-form rotating-frame propagator used as an
// oracle, and the one-cycle phase map on the two-branch entangled state.

#include "berry/geometric_phase.hpp"
#include "berry/linalg.hpp"
#include "berry/spin_system.hpp"

namespace berry {

struct EvolutionResult {
    StateVector final_state;
    double dynamical_phase; // -integral of <psi|H|psi> dt, trapezoid rule
    long steps;
    double unitarity_defect; // | ||psi|| - 1 | before renormalization
};

// Time-ordered product of midpoint steps U_k = exp(-i H(t_mid,k) dt).
// The expectation <H> is sampled at the step boundaries of the evolving
// state; the final state is renormalized.
EvolutionResult propagate(const StateVector& psi0, const FieldConfig& cfg, double t0,
                          double t1, long steps);

// Closed rotating-frame solution
//   U(t) = exp(-i w0 t sigma_z / 2) exp(-i H_rot t),
//   H_rot = (w_L/2) n(phi,0).sigma - (w0/2) sigma_z.
SquareOperator exact_propagator(const FieldConfig& cfg, double t);

// One-cycle image of (alpha |dn dn> + beta |un un>)/sqrt(M) built in the
// t=0 eigenbasis, with each factor picking up its cyclic geometric phase
// (dynamical phases removed, as after a spin echo):
//   (alpha e^{2i gamma_-} |dn dn> + beta e^{2i gamma_+} |un un>)/sqrt(M).
StateVector cyclic_evolve_pair(cplx alpha, cplx beta, const FieldConfig& cfg);

// Propagates the +branch eigenstate over one period and splits the
// accumulated phase: total = arg<up(0)|psi(tau)>, geometric = total minus
// dynamical mapped into (-2pi, 0]. Adiabatic fields give
// geometric ~ gamma_+(phi).
PhaseRecord up_branch_phases(const FieldConfig& cfg, long steps);

} // namespace berry
