#include "berry/spin_system.hpp"

#include <cmath>
#include <numbers>

namespace berry {

namespace {
constexpr double kPi = std::numbers::pi;

void require_finite_real(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite value");
}
} // namespace

FieldConfig::FieldConfig(double phi_, double omega0_, double omega_larmor_)
    : phi(phi_), omega0(omega0_), omega_larmor(omega_larmor_) {
    require_finite_real(phi, "FieldConfig.phi");
    require_finite_real(omega0, "FieldConfig.omega0");
    require_finite_real(omega_larmor, "FieldConfig.omega_larmor");
    if (phi < 0.0 || phi > kPi) throw DomainError("FieldConfig: phi outside [0, pi]");
    if (omega0 <= 0.0) throw DomainError("FieldConfig: omega0 must be positive");
    if (omega_larmor < 0.0) throw DomainError("FieldConfig: omega_larmor must be nonnegative");
}

double FieldConfig::period() const { return 2.0 * kPi / omega0; }

SquareOperator pauli_x() { return SquareOperator(2, {0.0, 1.0, 1.0, 0.0}); }

SquareOperator pauli_y() {
    return SquareOperator(2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0});
}

SquareOperator pauli_z() { return SquareOperator(2, {1.0, 0.0, 0.0, -1.0}); }

std::array<double, 3> field_direction(const FieldConfig& cfg, double t) {
    require_finite_real(t, "field_direction.t");
    const double s = std::sin(cfg.phi);
    return {s * std::cos(cfg.omega0 * t), s * std::sin(cfg.omega0 * t), std::cos(cfg.phi)};
}

SquareOperator hamiltonian(const FieldConfig& cfg, double t) {
    const auto n = field_direction(cfg, t);
    const double h = cfg.omega_larmor / 2.0;
    return SquareOperator(2, {h * n[2], h * cplx(n[0], -n[1]), h * cplx(n[0], n[1]), -h * n[2]});
}

EigenstatePair instantaneous_eigenstates(const FieldConfig& cfg, double t) {
    require_finite_real(t, "instantaneous_eigenstates.t");
    const double ch = std::cos(cfg.phi / 2.0);
    const double sh = std::sin(cfg.phi / 2.0);
    const cplx rot = std::polar(1.0, cfg.omega0 * t);
    return EigenstatePair{StateVector({ch, sh * rot}), StateVector({-sh, ch * rot})};
}

BerryFactor berry_factor(double phi) {
    require_finite_real(phi, "berry_factor.phi");
    if (phi < 0.0 || phi > kPi) throw DomainError("berry_factor: phi outside [0, pi]");
    const double abs_b = 0.5 * (1.0 - std::cos(phi));
    return BerryFactor{-abs_b, abs_b};
}

cplx flux_phase(double b) {
    require_finite_real(b, "flux_phase.b");
    return std::polar(1.0, 2.0 * kPi * b);
}

double monopole_field(double b, double radius) {
    require_finite_real(b, "monopole_field.b");
    if (!std::isfinite(radius) || radius <= 0.0) {
        throw DomainError("monopole_field: radius must be positive");
    }
    return b / (2.0 * kPi * radius * radius);
}

} // namespace berry
