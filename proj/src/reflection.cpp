#include "opensov/reflection.hpp"

#include <cmath>

namespace osov {

Mat2 k_scalar(cd lambda, cd zeta, cd kappa, cd tau, cd eta) {
    const cd sz = std::sinh(zeta);
    if (std::abs(sz) < 1e-300) throw std::invalid_argument("k_scalar: zeta in i*pi*Z");
    const cd off = kappa * std::sinh(2.0 * lambda - eta);
    Mat2 k;
    k << std::sinh(lambda - 0.5 * eta + zeta), off * std::exp(tau), off * std::exp(-tau),
        std::sinh(zeta - lambda + 0.5 * eta);
    return k / sz;
}

Mat2 k_minus(const ModelParams& p, const BoundaryParams& b, cd lambda) {
    return k_scalar(lambda, b.zeta_m, b.kappa_m, b.tau_m, p.eta);
}

Mat2 k_plus(const ModelParams& p, const BoundaryParams& b, cd lambda) {
    return k_scalar(lambda + p.eta, b.zeta_p, b.kappa_p, b.tau_p, p.eta);
}

cd qdet_k_minus(const ModelParams& p, const BoundaryParams& b, cd lambda) {
    const cd e = p.eta;
    return std::sinh(2.0 * lambda - 2.0 * e) * coeff_g(b, -1, e, lambda + 0.5 * e) *
           coeff_g(b, -1, e, -lambda + 0.5 * e);
}

cd qdet_k_plus(const ModelParams& p, const BoundaryParams& b, cd lambda) {
    const cd e = p.eta;
    return -std::sinh(2.0 * lambda + 2.0 * e) * coeff_g(b, 1, e, lambda + 0.5 * e) *
           coeff_g(b, 1, e, -lambda + 0.5 * e);
}

CMatrix u_minus(const ModelParams& p, const BoundaryParams& b, cd lambda) {
    return monodromy(p, lambda) * aux_left(k_minus(p, b, lambda), monodromy_hat(p, lambda));
}

CMatrix u_plus(const ModelParams& p, const BoundaryParams& b, cd lambda) {
    const CMatrix mt = aux_transpose(monodromy(p, lambda));
    const CMatrix mht = aux_transpose(monodromy_hat(p, lambda));
    const Mat2 kt = k_plus(p, b, lambda).transpose();
    return aux_transpose(mt * aux_left(kt, mht));
}

cd qdet_u_minus(const ModelParams& p, const BoundaryParams& b, cd lambda) {
    const cd e = p.eta;
    return std::sinh(2.0 * lambda - 2.0 * e) * coeff_A_minus(p, b, lambda + 0.5 * e) *
           coeff_A_minus(p, b, -lambda + 0.5 * e);
}

CMatrix qdet_u_minus_operator(const ModelParams& p, const BoundaryParams& b, cd lambda, int eps, int form) {
    const cd e = p.eta;
    const cd l1 = double(eps) * lambda + 0.5 * e, l2 = 0.5 * e - double(eps) * lambda;
    const AuxBlocks u1 = aux_blocks(u_minus(p, b, l1));
    const AuxBlocks u2 = aux_blocks(u_minus(p, b, l2));
    const CMatrix s = form == 1 ? CMatrix(u1.A * u2.A + u1.B * u2.C) : CMatrix(u1.D * u2.D + u1.C * u2.B);
    return std::sinh(2.0 * lambda - 2.0 * e) * s;
}

CMatrix trace_k_u(const Mat2& k, const CMatrix& u) {
    const AuxBlocks ub = aux_blocks(u);
    return k(0, 0) * ub.A + k(0, 1) * ub.C + k(1, 0) * ub.B + k(1, 1) * ub.D;
}

CMatrix transfer_matrix(const ModelParams& p, const BoundaryParams& b, cd lambda) {
    return trace_k_u(k_plus(p, b, lambda), u_minus(p, b, lambda));
}

CMatrix transfer_matrix_plus(const ModelParams& p, const BoundaryParams& b, cd lambda) {
    return trace_k_u(k_minus(p, b, lambda), u_plus(p, b, lambda));
}

CMatrix hamiltonian_direct(int n, cd eta, const BoundaryParams& b) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    CMatrix h = CMatrix::Zero(dim, dim);
    const Mat2 sx = pauli::x(), sy = pauli::y(), sz = pauli::z();
    for (int i = 1; i < n; ++i) {
        h += embed_site(sx, i, n) * embed_site(sx, i + 1, n);
        h += embed_site(sy, i, n) * embed_site(sy, i + 1, n);
        h += std::cosh(eta) * embed_site(sz, i, n) * embed_site(sz, i + 1, n);
    }
    auto field = [&](int site, cd zeta, cd kappa, cd tau) {
        const CMatrix x = embed_site(sx, site, n), y = embed_site(sy, site, n), z = embed_site(sz, site, n);
        return CMatrix(std::sinh(eta) / std::sinh(zeta) *
                       (std::cosh(zeta) * z + 2.0 * kappa * (std::cosh(tau) * x + I_UNIT * std::sinh(tau) * y)));
    };
    h += field(1, b.zeta_m, b.kappa_m, b.tau_m);
    h += field(n, b.zeta_p, b.kappa_p, b.tau_p);
    return h;
}

CMatrix hamiltonian_from_transfer(const ModelParams& p, const BoundaryParams& b, double step_scale) {
    const cd e = p.eta;
    const cd l0 = 0.5 * e;
    const double h = step_scale * std::abs(e);
    auto deriv = [&](double s) {
        return CMatrix((transfer_matrix(p, b, l0 + s) - transfer_matrix(p, b, l0 - s)) / (2.0 * s));
    };
    const CMatrix dt = (4.0 * deriv(0.5 * h) - deriv(h)) / 3.0;
    const cd pref = 2.0 * std::pow(std::sinh(e), 1.0 - 2.0 * p.n_sites) /
                    (k_plus(p, b, l0).trace() * k_minus(p, b, l0).trace());
    return pref * dt;
}

CMatrix hamiltonian_homogeneous_limit(int n, cd eta, const BoundaryParams& b, double delta) {
    auto at = [&](double d) {
        ModelParams p{n, eta, {}};
        for (int k = 1; k <= n; ++k) p.xi.push_back(d * k);
        return hamiltonian_from_transfer(p, b);
    };
    return 2.0 * at(0.5 * delta) - at(delta);
}

CMatrix traceless(const CMatrix& m) {
    return m - (m.trace() / double(m.rows())) * CMatrix::Identity(m.rows(), m.cols());
}

bool regime_conforms(const ModelParams& p, const BoundaryParams& b, Regime r, double tol) {
    auto real = [&](cd x) { return std::abs(x.imag()) < tol; };
    auto imag = [&](cd x) { return std::abs(x.real()) < tol; };
    bool ok = true;
    if (r == Regime::massless) {
        ok = imag(p.eta) && imag(b.zeta_m) && imag(b.zeta_p) && imag(b.tau_m) && imag(b.tau_p) &&
             real(b.kappa_m) && real(b.kappa_p);
        for (const cd& x : p.xi) ok = ok && real(x);
    } else {
        ok = real(p.eta) && real(b.zeta_m) && real(b.zeta_p) && real(b.kappa_m) && real(b.kappa_p) &&
             imag(b.tau_m) && imag(b.tau_p);
        for (const cd& x : p.xi) ok = ok && imag(x);
    }
    return ok;
}

namespace {
// quantum-space adjoint of every auxiliary block
CMatrix quantum_adjoint(const CMatrix& u) {
    const AuxBlocks b = aux_blocks(u);
    return from_aux_blocks({b.A.adjoint(), b.B.adjoint(), b.C.adjoint(), b.D.adjoint()});
}
}  // namespace

HermiticityReport check_hermiticity(const ModelParams& p, const BoundaryParams& b, Regime r,
                                    const std::vector<cd>& pts) {
    HermiticityReport rep;
    rep.conforms = regime_conforms(p, b, r);
    const double s = r == Regime::massless ? -1.0 : 1.0;
    for (const cd& l : pts) {
        const cd lc = s * std::conj(l);
        rep.u_minus_residual = std::max(
            rep.u_minus_residual, rel_diff(quantum_adjoint(u_minus(p, b, l)), aux_transpose(u_minus(p, b, lc))));
        rep.u_plus_residual = std::max(
            rep.u_plus_residual, rel_diff(quantum_adjoint(u_plus(p, b, l)), aux_transpose(u_plus(p, b, lc))));
        rep.transfer_residual = std::max(
            rep.transfer_residual,
            rel_diff(transfer_matrix(p, b, l).adjoint(), transfer_matrix(p, b, std::conj(l))));
    }
    return rep;
}

}  // namespace osov
