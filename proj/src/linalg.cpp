#include "berry/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace berry {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-12;
constexpr double kPsdClamp = -1e-10;

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

void require_finite(const std::vector<cplx>& v, const char* what) {
    for (const cplx& z : v) {
        if (!is_finite(z)) {
            throw DomainError(std::string(what) + ": non-finite entry");
        }
    }
}

double norm2(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(s);
}

} // namespace

bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

StateVector::StateVector(std::vector<cplx> amplitudes)
    : StateVector(std::move(amplitudes), unchecked_tag{}) {
    const double n = norm();
    if (std::abs(n - 1.0) > kNormTol) {
        throw NotNormalized("StateVector: norm deviates from 1 by more than 1e-12");
    }
}

StateVector::StateVector(std::vector<cplx> amplitudes, unchecked_tag)
    : amps_(std::move(amplitudes)) {
    if (!power_of_two(amps_.size())) {
        throw BadDimension("StateVector: dimension must be a power of two >= 2");
    }
    require_finite(amps_, "StateVector");
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
    StateVector s(std::move(amplitudes), unchecked_tag{});
    const double n = s.norm();
    if (n < 1e-150) {
        throw ZeroState("StateVector::normalized: zero amplitude vector");
    }
    for (cplx& z : s.amps_) z /= n;
    return s;
}

double StateVector::norm() const { return norm2(amps_); }

cplx inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw BadDimension("inner: dimension mismatch");
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

SquareOperator::SquareOperator(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw BadDimension("SquareOperator: entry count must equal dim*dim");
    }
    require_finite(entries_, "SquareOperator");
}

SquareOperator SquareOperator::identity(std::size_t dim) {
    std::vector<cplx> e(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return SquareOperator(dim, std::move(e));
}

SquareOperator SquareOperator::adjoint() const {
    std::vector<cplx> e(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            e[j * dim_ + i] = std::conj((*this)(i, j));
    return SquareOperator(dim_, std::move(e));
}

SquareOperator SquareOperator::conjugate() const {
    std::vector<cplx> e(entries_);
    for (cplx& z : e) z = std::conj(z);
    return SquareOperator(dim_, std::move(e));
}

SquareOperator SquareOperator::operator*(const SquareOperator& rhs) const {
    if (dim_ != rhs.dim_) throw BadDimension("operator*: dimension mismatch");
    std::vector<cplx> e(dim_ * dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx(0.0)) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                e[i * dim_ + j] += aik * rhs(k, j);
        }
    return SquareOperator(dim_, std::move(e));
}

SquareOperator SquareOperator::operator+(const SquareOperator& rhs) const {
    if (dim_ != rhs.dim_) throw BadDimension("operator+: dimension mismatch");
    std::vector<cplx> e(entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += rhs.entries_[i];
    return SquareOperator(dim_, std::move(e));
}

SquareOperator SquareOperator::operator-(const SquareOperator& rhs) const {
    if (dim_ != rhs.dim_) throw BadDimension("operator-: dimension mismatch");
    std::vector<cplx> e(entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= rhs.entries_[i];
    return SquareOperator(dim_, std::move(e));
}

SquareOperator SquareOperator::scaled(cplx factor) const {
    std::vector<cplx> e(entries_);
    for (cplx& z : e) z *= factor;
    return SquareOperator(dim_, std::move(e));
}

std::vector<cplx> SquareOperator::apply(const std::vector<cplx>& v) const {
    if (v.size() != dim_) throw BadDimension("apply: dimension mismatch");
    std::vector<cplx> out(dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

StateVector SquareOperator::apply_normalized(const StateVector& v) const {
    return StateVector::normalized(apply(v.amplitudes()));
}

cplx SquareOperator::trace() const {
    cplx s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
}

double SquareOperator::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

bool SquareOperator::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool SquareOperator::is_unitary(double tol) const {
    const SquareOperator p = adjoint() * (*this);
    const SquareOperator id = identity(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i)
        if (std::abs(p.entries()[i] - id.entries()[i]) > tol) return false;
    return true;
}

DensityMatrix::DensityMatrix(SquareOperator op) : op_(std::move(op)) {
    if (!op_.is_hermitian(kHermTol)) {
        throw NotHermitian("DensityMatrix: not Hermitian within 1e-12");
    }
    if (std::abs(op_.trace() - cplx(1.0)) > kNormTol) {
        throw DomainError("DensityMatrix: trace deviates from 1 by more than 1e-12");
    }
    const EigResult eig = hermitian_eig(op_);
    if (eig.eigenvalues.front() < kPsdClamp) {
        throw NotPSD("DensityMatrix: eigenvalue below -1e-10");
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
    const std::size_t n = psi.dim();
    std::vector<cplx> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e[i * n + j] = psi[i] * std::conj(psi[j]);
    return DensityMatrix(SquareOperator(n, std::move(e)));
}

SquareOperator kron(const SquareOperator& a, const SquareOperator& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    const std::size_t n = na * nb;
    std::vector<cplx> e(n * n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    e[(i * nb + k) * n + (j * nb + l)] = a(i, j) * b(k, l);
    return SquareOperator(n, std::move(e));
}

EigResult hermitian_eig(const SquareOperator& m) {
    if (!m.is_hermitian(1e-10)) {
        throw NotHermitian("hermitian_eig: input not Hermitian within 1e-10");
    }
    const std::size_t n = m.dim();
    std::vector<cplx> a(m.entries());
    std::vector<cplx> v(SquareOperator::identity(n).entries());
    auto A = [&](std::size_t i, std::size_t j) -> cplx& { return a[i * n + j]; };
    auto V = [&](std::size_t i, std::size_t j) -> cplx& { return v[i * n + j]; };

    const double fro = m.frobenius_norm();
    if (fro > 0.0) {
        for (int sweep = 0; sweep < 100; ++sweep) {
            double off = 0.0;
            for (std::size_t p = 0; p + 1 < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(A(p, q));
            if (std::sqrt(off) <= 1e-14 * fro) break;

            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const cplx apq = A(p, q);
                    const double r = std::abs(apq);
                    if (r < 1e-300) continue;
                    const cplx f = apq / r;
                    const double app = A(p, p).real();
                    const double aqq = A(q, q).real();
                    const double tau = (aqq - app) / (2.0 * r);
                    const double t =
                        (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;

                    // A <- G' A G with G = [[c, s], [-conj(f) s, conj(f) c]] on (p,q)
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx akp = A(k, p), akq = A(k, q);
                        A(k, p) = c * akp - std::conj(f) * s * akq;
                        A(k, q) = s * akp + std::conj(f) * c * akq;
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx apk = A(p, k), aqk = A(q, k);
                        A(p, k) = c * apk - f * s * aqk;
                        A(q, k) = s * apk + f * c * aqk;
                    }
                    A(p, p) = app - t * r;
                    A(q, q) = aqq + t * r;
                    A(p, q) = 0.0;
                    A(q, p) = 0.0;
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vkp = V(k, p), vkq = V(k, q);
                        V(k, p) = c * vkp - std::conj(f) * s * vkq;
                        V(k, q) = s * vkp + std::conj(f) * c * vkq;
                    }
                }
            }
        }
    }

    std::vector<double> lam(n);
    for (std::size_t i = 0; i < n; ++i) lam[i] = A(i, i).real();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return lam[i] < lam[j]; });

    std::vector<double> sorted(n);
    std::vector<cplx> cols(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        sorted[j] = lam[order[j]];
        // phase convention: first component with |.| > 1e-12 made real positive
        cplx phase = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx z = V(k, order[j]);
            if (std::abs(z) > 1e-12) {
                phase = std::conj(z) / std::abs(z);
                break;
            }
        }
        for (std::size_t k = 0; k < n; ++k) cols[k * n + j] = V(k, order[j]) * phase;
    }
    return EigResult{std::move(sorted), SquareOperator(n, std::move(cols))};
}

SquareOperator psd_sqrt(const DensityMatrix& rho) {
    const std::size_t n = rho.dim();
    const EigResult eig = hermitian_eig(rho.op());
    std::vector<double> root(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lam = eig.eigenvalues[i];
        if (lam < kPsdClamp) throw NotPSD("psd_sqrt: eigenvalue below -1e-10");
        if (lam < 0.0) lam = 0.0;
        root[i] = std::sqrt(lam);
    }
    const SquareOperator& vec = eig.eigenvectors;
    std::vector<cplx> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += vec(i, k) * root[k] * std::conj(vec(j, k));
            e[i * n + j] = s;
        }
    // hermitize against accumulation roundoff
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const cplx avg = 0.5 * (e[i * n + j] + std::conj(e[j * n + i]));
            e[i * n + j] = avg;
            e[j * n + i] = std::conj(avg);
        }
    return SquareOperator(n, std::move(e));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    if (rho.dim() != 4) {
        throw BadDimension("partial_trace: only two-qubit (dim 4) inputs supported");
    }
    const SquareOperator& r = rho.op();
    std::vector<cplx> e(4, 0.0);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < 2; ++k) {
                s += (keep == Subsystem::A) ? r(2 * i + k, 2 * j + k) : r(2 * k + i, 2 * k + j);
            }
            e[i * 2 + j] = s;
        }
    return DensityMatrix(SquareOperator(2, std::move(e)));
}

} // namespace berry
