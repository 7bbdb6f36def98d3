#pragma once

// Geometric-phase extraction and composition.
//
// Closed forms for one rotation cycle at tilt phi:
//   gamma_+(phi) = -pi (1 - cos phi)   (up branch,   = -Omega/2)
//   gamma_-(phi) = -pi (1 + cos phi)   (down branch)
// with gamma_+ + gamma_- = -2 pi, Omega = 2 pi (1 - cos phi) the solid
// angle swept by the field.
//
// Branch convention: cyclic geometric phases are reported in (-2pi, 0],
// matching the sign of the closed forms. Overlap (Pancharatnam) phases
// use the principal argument in (-pi, pi].

#include <array>
#include <vector>

#include "berry/linalg.hpp"
#include "berry/spin_system.hpp"

namespace berry {

// maps x into (-pi, pi]
double principal_angle(double x);

// maps x into (-2pi, 0]
double branch_angle(double x);

// distance between angles on the circle, in [0, pi]
double circular_distance(double a, double b);

struct PhaseRecord {
    double geometric;  // radians; cyclic values branch-mapped into (-2pi, 0]
    double dynamical;  // radians, -integral of <H> dt (not mod-reduced)
    double total;      // arg of the generating overlap, in (-pi, pi]
    double visibility; // modulus of the generating overlap, in [0, 1]
};

struct GammaPair {
    double plus;
    double minus; // computed as -2pi - plus so the sum is exact
};

GammaPair closed_form_gamma(double phi);

// Gauge-invariant discretized connection integral: -arg of the product of
// consecutive overlaps <psi_k|psi_{k+1}>, with the wrap-around segment
// included when closed. Segment arguments are taken in (-pi, pi] and
// summed before branch mapping, which tracks the winding across the loop.
// Throws DegeneratePath when any consecutive overlap modulus < 1e-12.
double wilson_loop_phase(const std::vector<StateVector>& path, bool closed);

// Sample points of the +branch eigenstate over one field cycle,
// t_k = k tau / samples for k = 0..samples-1 (closed by wrap-around).
std::vector<StateVector> up_state_cycle(const FieldConfig& cfg, int samples);

// Sample points of (alpha |dn dn> + beta |un un>)/sqrt(M) over one cycle,
// both spins following the rotating field.
std::vector<StateVector> entangled_cycle(cplx alpha, cplx beta, const FieldConfig& cfg,
                                         int samples);

struct PancharatnamResult {
    cplx overlap;
    PhaseRecord record;
};

// Cyclic total phase of the two-branch superposition after one period with
// the dynamical part removed: overlap = (|alpha|^2 e^{-2i gamma_+}
// + |beta|^2 e^{2i gamma_+}) / M, using e^{2i gamma_-} = e^{-2i gamma_+}.
// Throws ZeroVisibility when |overlap| < 1e-12.
PancharatnamResult pancharatnam_overlap(cplx alpha, cplx beta, double gamma_plus);

// Literal two-branch composition alpha e^{-2i gamma_+} + beta e^{2i gamma_+},
// linear in the amplitudes. Not unit-modulus in general (e.g. alpha = beta
// = 1/sqrt(2), gamma_+ = -pi gives sqrt(2)); kept alongside
// pancharatnam_overlap for comparison.
cplx composition_raw(cplx alpha, cplx beta, double gamma_plus);

// Cyclic mixing matrix of the symmetric/antisymmetric Bell pair,
// exp(i gamma_+ sigma_x) = [[cos g, i sin g], [i sin g, cos g]].
SquareOperator sigma_matrix(double gamma_plus);

enum class BellKind { plus, minus };

// One-cycle image of a Bell state, (e^{i gamma_+}|ud> +- e^{-i gamma_+}|du>)/sqrt(2),
// in the computational basis. Expressing the pair of images in the
// (|psi+>, |psi->) basis reproduces the columns of sigma_matrix.
StateVector bell_evolve(BellKind which, double gamma_plus);

struct ThreeSpinResult {
    cplx value;
    double phase;      // arg(value), in (-pi, pi]
    double visibility; // |value|
};

// Three-party phase composition from pair and single-spin cyclic phases:
// value = a1 e^{i(g_ab + g_c)} + a2 e^{i(g_a + g_bc)} + a3 e^{i(g_b + g_ca)}.
// Throws ZeroVisibility when the interference sum vanishes.
ThreeSpinResult three_spin_phase(const std::array<cplx, 3>& amps, double gamma_ab,
                                 double gamma_bc, double gamma_ca, double gamma_a,
                                 double gamma_b, double gamma_c);

} // namespace berry
