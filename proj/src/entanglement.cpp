#include "berry/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace berry {

namespace {

constexpr double kPi = std::numbers::pi;

// eigenvalues of sqrt(rho) rho~ sqrt(rho) below this are numerical noise
// (roundoff-rank leakage); sqrt would amplify them to ~1e-7 otherwise
constexpr double kSpectralFloor = 1e-13;

SquareOperator spin_flip_operator() {
    return kron(pauli_y(), pauli_y()); // real: antidiag(-1, 1, 1, -1)
}

} // namespace

EntangledPair::EntangledPair(cplx alpha_, cplx beta_) : alpha(alpha_), beta(beta_) {
    if (!is_finite(alpha) || !is_finite(beta)) {
        throw DomainError("EntangledPair: non-finite amplitude");
    }
    m = std::norm(alpha) + std::norm(beta);
    if (m == 0.0) throw ZeroState("EntangledPair: both amplitudes zero");
}

StateVector EntangledPair::normalized_state() const {
    return StateVector::normalized({beta, 0.0, 0.0, alpha});
}

cplx complex_concurrence(const EntangledPair& pair) { return 2.0 * pair.alpha * pair.beta; }

EntangledPair coefficients_from_phi(double phi) {
    if (!std::isfinite(phi) || phi < 0.0 || phi > kPi) {
        throw DomainError("coefficients_from_phi: phi outside [0, pi]");
    }
    const double c = std::cos(phi / 4.0);
    const double s = std::sin(phi / 4.0);
    const double sqrt2 = std::sqrt(2.0);
    return EntangledPair(sqrt2 * c * c, sqrt2 * s * s);
}

ConcurrenceReport concurrence_from_phi(double phi) {
    const EntangledPair pair = coefficients_from_phi(phi);
    const double sh = std::sin(phi / 2.0);
    return ConcurrenceReport{complex_concurrence(pair), sh * sh,
                             wootters_concurrence(pair.normalized_state()),
                             berry_factor(phi).abs_b, phi};
}

double wootters_concurrence(const StateVector& psi) {
    if (psi.dim() != 4) throw BadDimension("wootters_concurrence: two-qubit states only");
    if (std::abs(psi.norm() - 1.0) > 1e-12) {
        throw NotNormalized("wootters_concurrence: state not normalized");
    }
    return wootters_concurrence(DensityMatrix::from_pure(psi));
}

double wootters_concurrence(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw BadDimension("wootters_concurrence: two-qubit states only");
    const SquareOperator flip = spin_flip_operator();
    const SquareOperator rho_tilde = flip * rho.op().conjugate() * flip;
    const SquareOperator root = psd_sqrt(rho);
    SquareOperator m = root * rho_tilde * root;
    // hermitize before the eigensolver
    {
        std::vector<cplx> e = m.entries();
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) {
                const cplx avg = 0.5 * (e[i * 4 + j] + std::conj(e[j * 4 + i]));
                e[i * 4 + j] = avg;
                e[j * 4 + i] = std::conj(avg);
            }
        m = SquareOperator(4, std::move(e));
    }
    const EigResult eig = hermitian_eig(m);
    std::array<double, 4> lam{};
    for (std::size_t i = 0; i < 4; ++i) {
        const double mu = eig.eigenvalues[i];
        lam[i] = (mu < kSpectralFloor) ? 0.0 : std::sqrt(mu);
    }
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double general_concurrence(const std::array<cplx, 4>& amps) {
    double m = 0.0;
    for (const cplx& a : amps) {
        if (!is_finite(a)) throw DomainError("general_concurrence: non-finite amplitude");
        m += std::norm(a);
    }
    if (m == 0.0) throw ZeroState("general_concurrence: all amplitudes zero");
    return 2.0 * std::abs(amps[0] * amps[3] - amps[1] * amps[2]) / m;
}

double general_concurrence(const StateVector& psi) {
    if (psi.dim() != 4) throw BadDimension("general_concurrence: two-qubit states only");
    return general_concurrence(std::array<cplx, 4>{psi[0], psi[1], psi[2], psi[3]});
}

MonogamyReport monogamy_report(double c12, int n, std::optional<double> c1_rest) {
    if (n < 2) throw DomainError("monogamy_report: need n >= 2");
    if (!std::isfinite(c12) || c12 < 0.0 || c12 > 1.0) {
        throw DomainError("monogamy_report: c12 outside [0, 1]");
    }
    if (c1_rest && (!std::isfinite(*c1_rest) || *c1_rest < 0.0 || *c1_rest > 1.0)) {
        throw DomainError("monogamy_report: c1_rest outside [0, 1]");
    }
    const double bound = 1.0 / static_cast<double>(n - 1);
    const double lhs = static_cast<double>(n - 1) * c12;
    bool satisfied = c12 <= bound;
    if (c1_rest) satisfied = satisfied && lhs <= *c1_rest;
    return MonogamyReport{n, c12, c1_rest, bound, lhs, bound, satisfied};
}

std::vector<SpinModelEntry> spin_model_catalog() {
    return {
        {0.0, 0.0, 0.0, "isotropic-ferromagnet"},
        {kPi / 2.0, 0.5, 0.5, "RVB-frustrated-antiferromagnet"},
        {kPi, 1.0, 1.0, "singlet-maximal"},
    };
}

} // namespace berry
