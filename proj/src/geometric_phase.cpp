#include "berry/geometric_phase.hpp"

#include <cmath>
#include <numbers>

namespace berry {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

double principal_angle(double x) {
    double y = std::remainder(x, kTwoPi);
    if (y <= -kPi) y += kTwoPi;
    return y;
}

double branch_angle(double x) {
    double y = std::fmod(x, kTwoPi);
    if (y > 0.0) y -= kTwoPi;
    return y;
}

double circular_distance(double a, double b) { return std::abs(principal_angle(a - b)); }

GammaPair closed_form_gamma(double phi) {
    if (!std::isfinite(phi) || phi < 0.0 || phi > kPi) {
        throw DomainError("closed_form_gamma: phi outside [0, pi]");
    }
    const double plus = -kPi * (1.0 - std::cos(phi));
    return GammaPair{plus, -kTwoPi - plus};
}

double wilson_loop_phase(const std::vector<StateVector>& path, bool closed) {
    if (path.size() < 3) {
        throw DomainError("wilson_loop_phase: need at least 3 path states");
    }
    const std::size_t n = path.size();
    const std::size_t segments = closed ? n : n - 1;
    double winding = 0.0;
    for (std::size_t k = 0; k < segments; ++k) {
        const cplx o = inner(path[k], path[(k + 1) % n]);
        if (std::abs(o) < 1e-12) {
            throw DegeneratePath("wilson_loop_phase: consecutive overlap below 1e-12");
        }
        winding += std::arg(o);
    }
    return branch_angle(-winding);
}

std::vector<StateVector> up_state_cycle(const FieldConfig& cfg, int samples) {
    if (samples < 3) throw DomainError("up_state_cycle: need at least 3 samples");
    const double tau = cfg.period();
    std::vector<StateVector> path;
    path.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        path.push_back(instantaneous_eigenstates(cfg, tau * k / samples).up);
    }
    return path;
}

std::vector<StateVector> entangled_cycle(cplx alpha, cplx beta, const FieldConfig& cfg,
                                         int samples) {
    if (samples < 3) throw DomainError("entangled_cycle: need at least 3 samples");
    if (std::abs(alpha) == 0.0 && std::abs(beta) == 0.0) {
        throw ZeroState("entangled_cycle: both amplitudes zero");
    }
    const double tau = cfg.period();
    std::vector<StateVector> path;
    path.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        const EigenstatePair e = instantaneous_eigenstates(cfg, tau * k / samples);
        std::vector<cplx> amps(4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                amps[2 * i + j] = alpha * e.down[i] * e.down[j] + beta * e.up[i] * e.up[j];
        path.push_back(StateVector::normalized(std::move(amps)));
    }
    return path;
}

PancharatnamResult pancharatnam_overlap(cplx alpha, cplx beta, double gamma_plus) {
    if (!is_finite(alpha) || !is_finite(beta) || !std::isfinite(gamma_plus)) {
        throw DomainError("pancharatnam_overlap: non-finite input");
    }
    const double m = std::norm(alpha) + std::norm(beta);
    if (m == 0.0) throw ZeroState("pancharatnam_overlap: both amplitudes zero");
    const cplx up_factor = std::polar(1.0, 2.0 * gamma_plus);
    const cplx down_factor = std::conj(up_factor); // e^{2i gamma_-} = e^{-2i gamma_+}
    const cplx overlap = (std::norm(alpha) * down_factor + std::norm(beta) * up_factor) / m;
    const double vis = std::abs(overlap);
    if (vis < 1e-12) {
        throw ZeroVisibility("pancharatnam_overlap: overlap modulus below 1e-12");
    }
    const double total = std::arg(overlap);
    return PancharatnamResult{overlap, PhaseRecord{total, 0.0, total, vis}};
}

cplx composition_raw(cplx alpha, cplx beta, double gamma_plus) {
    if (!is_finite(alpha) || !is_finite(beta) || !std::isfinite(gamma_plus)) {
        throw DomainError("composition_raw: non-finite input");
    }
    const cplx up_factor = std::polar(1.0, 2.0 * gamma_plus);
    return alpha * std::conj(up_factor) + beta * up_factor;
}

SquareOperator sigma_matrix(double gamma_plus) {
    const double c = std::cos(gamma_plus);
    const cplx is = cplx(0.0, std::sin(gamma_plus));
    return SquareOperator(2, {c, is, is, c});
}

StateVector bell_evolve(BellKind which, double gamma_plus) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cplx ud = std::polar(inv_sqrt2, gamma_plus);
    cplx du = std::polar(inv_sqrt2, -gamma_plus);
    if (which == BellKind::minus) du = -du;
    return StateVector({0.0, ud, du, 0.0});
}

ThreeSpinResult three_spin_phase(const std::array<cplx, 3>& amps, double gamma_ab,
                                 double gamma_bc, double gamma_ca, double gamma_a,
                                 double gamma_b, double gamma_c) {
    for (const cplx& a : amps) {
        if (!is_finite(a)) throw DomainError("three_spin_phase: non-finite amplitude");
    }
    for (const double g : {gamma_ab, gamma_bc, gamma_ca, gamma_a, gamma_b, gamma_c}) {
        if (!std::isfinite(g)) throw DomainError("three_spin_phase: non-finite phase");
    }
    if (std::abs(amps[0]) == 0.0 && std::abs(amps[1]) == 0.0 && std::abs(amps[2]) == 0.0) {
        throw ZeroState("three_spin_phase: all amplitudes zero");
    }
    const cplx value = amps[0] * std::polar(1.0, gamma_ab + gamma_c) +
                       amps[1] * std::polar(1.0, gamma_a + gamma_bc) +
                       amps[2] * std::polar(1.0, gamma_b + gamma_ca);
    const double vis = std::abs(value);
    if (vis < 1e-12) {
        throw ZeroVisibility("three_spin_phase: interference sum vanishes");
    }
    return ThreeSpinResult{value, std::arg(value), vis};
}

} // namespace berry
