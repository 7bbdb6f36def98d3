#pragma once

// Concurrence computations for the two-branch entangled state
// (alpha |dd> + beta |uu>)/sqrt(M), M = |alpha|^2 + |beta|^2.
//
// Two curves are tracked side by side and they are NOT the same quantity:
//   - the complex concurrence 2 alpha beta evaluated on the raw
//     coefficients; with the tilt-parameterized coefficients its norm is
//     sin^2(phi/2) = |b|, the flux-factor identity;
//   - the Wootters concurrence of the normalized state, which equals
//     2|alpha||beta| / M = sin^2(phi/2) / (2 - sin^2(phi/2)) and agrees
//     with the raw curve only at phi = 0 and phi = pi (e.g. 1/3 vs 1/2 at
//     phi = pi/2).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "berry/linalg.hpp"
#include "berry/spin_system.hpp"

namespace berry {

struct EntangledPair {
    cplx alpha; // amplitude of |down down>
    cplx beta;  // amplitude of |up up>
    double m;   // |alpha|^2 + |beta|^2, > 0

    EntangledPair(cplx alpha, cplx beta); // throws ZeroState when both vanish

    // (beta, 0, 0, alpha)/sqrt(M) in the (|uu>,|ud>,|du>,|dd>) ordering
    StateVector normalized_state() const;
};

struct ConcurrenceReport {
    cplx complex_c;           // 2 alpha beta on the raw coefficients
    double paper_c;           // sin^2(phi/2) when tilt-parameterized
    double wootters_c;        // oracle value on the normalized state
    double abs_b;             // |b| = (1 - cos phi)/2
    std::optional<double> phi;
};

struct MonogamyReport {
    int n;
    double c12;
    std::optional<double> c1_rest;
    double bound;        // 1/(n-1)
    double lhs;          // (n-1) c12
    double critical_c12; // equality point 1/(n-1)
    bool satisfied;
};

// C = 2 alpha beta on the raw (unnormalized) coefficients
cplx complex_concurrence(const EntangledPair& pair);

// |alpha| = sqrt(2) cos^2(phi/4), |beta| = sqrt(2) sin^2(phi/4), phases
// zero; M = 2 - sin^2(phi/2)
EntangledPair coefficients_from_phi(double phi);

ConcurrenceReport concurrence_from_phi(double phi);

// Wootters concurrence, the independent oracle: C = max(0, l1-l2-l3-l4)
// with l_i the descending square roots of the eigenvalues of
// rho (sy x sy) rho* (sy x sy), computed through the Hermitian similarity
// form sqrt(rho) rho~ sqrt(rho).
double wootters_concurrence(const StateVector& psi);
double wootters_concurrence(const DensityMatrix& rho);

// Pure-state formula C = 2 |a1 a4 - a2 a3| / sum |a_i|^2 on the
// amplitudes; amplitudes need not be normalized.
double general_concurrence(const std::array<cplx, 4>& amps);
double general_concurrence(const StateVector& psi);

// Heuristic shared-entanglement bound report: bound = 1/(n-1),
// lhs = (n-1) c12, satisfied iff c12 <= bound and (when given)
// lhs <= c1_rest. Reporting only; the inequality is known to fail for
// W-type states and is never asserted here.
MonogamyReport monogamy_report(double c12, int n, std::optional<double> c1_rest = {});

struct SpinModelEntry {
    double phi;
    double abs_b;
    double c;
    std::string label;
};

// The three tilt angles with physically fixed |b|: a disentangled
// isotropic ferromagnet, the RVB frustrated antiferromagnet at C = 1/2,
// and the maximally entangled singlet.
std::vector<SpinModelEntry> spin_model_catalog();

} // namespace berry
