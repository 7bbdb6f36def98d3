#include "berry/evolution.hpp"

#include <cmath>

namespace berry {

namespace {

// exp(-i H t) for Hermitian 2x2 H = a I + v.sigma, via the axis-angle form
// e^{-i a t} (cos(|v| t) I - i sin(|v| t) vhat.sigma).
SquareOperator expm_two_level(const SquareOperator& h, double t) {
    const double a = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double vx = h(0, 1).real();
    const double vy = -h(0, 1).imag();
    const double vz = 0.5 * (h(0, 0).real() - h(1, 1).real());
    const double vn = std::sqrt(vx * vx + vy * vy + vz * vz);
    const cplx global = std::polar(1.0, -a * t);
    if (vn == 0.0) {
        return SquareOperator(2, {global, 0.0, 0.0, global});
    }
    const double c = std::cos(vn * t);
    const double s = std::sin(vn * t) / vn;
    const cplx mis(0.0, -s);
    return SquareOperator(2, {global * (c + mis * vz), global * (mis * cplx(vx, -vy)),
                              global * (mis * cplx(vx, vy)), global * (c - mis * vz)});
}

double energy_expectation(const std::vector<cplx>& psi, const SquareOperator& h) {
    const std::vector<cplx> hp = h.apply(psi);
    cplx s = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) s += std::conj(psi[i]) * hp[i];
    return s.real();
}

} // namespace

EvolutionResult propagate(const StateVector& psi0, const FieldConfig& cfg, double t0,
                          double t1, long steps) {
    if (psi0.dim() != 2) throw BadDimension("propagate: single-spin (dim 2) states only");
    if (steps < 1) throw BadSteps("propagate: steps must be >= 1");
    if (!(t1 > t0)) throw BadSteps("propagate: need t1 > t0");

    const double dt = (t1 - t0) / static_cast<double>(steps);
    std::vector<cplx> psi = psi0.amplitudes();

    double energy_integral = 0.0;
    double e_prev = energy_expectation(psi, hamiltonian(cfg, t0));
    for (long k = 0; k < steps; ++k) {
        const double t_mid = t0 + (static_cast<double>(k) + 0.5) * dt;
        psi = expm_two_level(hamiltonian(cfg, t_mid), dt).apply(psi);
        const double t_next = t0 + static_cast<double>(k + 1) * dt;
        const double e_next = energy_expectation(psi, hamiltonian(cfg, t_next));
        energy_integral += 0.5 * (e_prev + e_next) * dt;
        e_prev = e_next;
    }

    double nrm = 0.0;
    for (const cplx& z : psi) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    const double defect = std::abs(nrm - 1.0);
    return EvolutionResult{StateVector::normalized(std::move(psi)), -energy_integral, steps,
                           defect};
}

SquareOperator exact_propagator(const FieldConfig& cfg, double t) {
    const SquareOperator half_z(2, {cfg.omega0 / 2.0, 0.0, 0.0, -cfg.omega0 / 2.0});
    const SquareOperator h_rot = hamiltonian(cfg, 0.0) - half_z;
    return expm_two_level(half_z, t) * expm_two_level(h_rot, t);
}

StateVector cyclic_evolve_pair(cplx alpha, cplx beta, const FieldConfig& cfg) {
    if (std::abs(alpha) == 0.0 && std::abs(beta) == 0.0) {
        throw ZeroState("cyclic_evolve_pair: both amplitudes zero");
    }
    const EigenstatePair e = instantaneous_eigenstates(cfg, 0.0);
    const GammaPair g = closed_form_gamma(cfg.phi);
    const cplx fd = alpha * std::polar(1.0, 2.0 * g.minus);
    const cplx fu = beta * std::polar(1.0, 2.0 * g.plus);
    std::vector<cplx> amps(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            amps[2 * i + j] = fd * e.down[i] * e.down[j] + fu * e.up[i] * e.up[j];
    return StateVector::normalized(std::move(amps));
}

PhaseRecord up_branch_phases(const FieldConfig& cfg, long steps) {
    const StateVector psi0 = instantaneous_eigenstates(cfg, 0.0).up;
    const EvolutionResult res = propagate(psi0, cfg, 0.0, cfg.period(), steps);
    const cplx overlap = inner(psi0, res.final_state);
    const double total = std::arg(overlap);
    return PhaseRecord{branch_angle(total - res.dynamical_phase), res.dynamical_phase, total,
                       std::abs(overlap)};
}

} // namespace berry
