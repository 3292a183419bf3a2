#include "opensov/bulk.hpp"

#include <cmath>
#include <sstream>

namespace osov {

BoundaryParams make_boundary(cd zeta_m, cd kappa_m, cd tau_m, cd zeta_p, cd kappa_p, cd tau_p) {
    if (kappa_m == 0.0 || kappa_p == 0.0)
        throw std::invalid_argument("make_boundary: kappa must be non-zero to define alpha/beta");
    BoundaryParams b{zeta_m, kappa_m, tau_m, zeta_p, kappa_p, tau_p, {}, {}, {}, {}};
    auto ab = [](cd z, cd k, cd& al, cd& be) {
        const cd sp = std::asinh(std::exp(z) / (2.0 * k));
        const cd sm = std::asinh(-std::exp(-z) / (2.0 * k));
        al = 0.5 * (sp + sm);
        be = 0.5 * (sp - sm);
    };
    ab(zeta_m, kappa_m, b.alpha_m, b.beta_m);
    ab(zeta_p, kappa_p, b.alpha_p, b.beta_p);
    return b;
}

double alpha_beta_residual(const BoundaryParams& b) {
    auto one = [](cd z, cd k, cd al, cd be) {
        const double r1 = std::abs(std::sinh(al) * std::cosh(be) - std::sinh(z) / (2.0 * k));
        const double r2 = std::abs(std::cosh(al) * std::sinh(be) - std::cosh(z) / (2.0 * k));
        return std::max(r1, r2);
    };
    return std::max(one(b.zeta_m, b.kappa_m, b.alpha_m, b.beta_m), one(b.zeta_p, b.kappa_p, b.alpha_p, b.beta_p));
}

bool zero_mod_ipi(cd x, double tol) {
    const double k = std::round(x.imag() / PI);
    return std::abs(x.real()) < tol && std::abs(x.imag() - k * PI) < tol;
}

std::optional<std::string> check_esov(const ModelParams& p, double tol) {
    if (int(p.xi.size()) != p.n_sites) return "E-SOV: xi has " + std::to_string(p.xi.size()) + " entries";
    for (int a = 0; a < p.n_sites; ++a)
        for (int b = 0; b < p.n_sites; ++b) {
            if (a == b) continue;
            for (int r = -1; r <= 1; ++r)
                if (zero_mod_ipi(p.xi[a] - p.xi[b] - double(r) * p.eta, tol)) {
                    std::ostringstream os;
                    os << "E-SOV: xi_" << a + 1 << " = xi_" << b + 1 << " + (" << r << ")eta mod i*pi";
                    return os.str();
                }
        }
    return std::nullopt;
}

CMatrix r_matrix(cd lambda, cd eta) {
    CMatrix r = CMatrix::Zero(4, 4);
    r(0, 0) = r(3, 3) = std::sinh(lambda + eta);
    r(1, 1) = r(2, 2) = std::sinh(lambda);
    r(1, 2) = r(2, 1) = std::sinh(eta);
    return r;
}

void apply_r_right(CMatrix& m, int site, int n_sites, cd mu, cd eta) {
    const Eigen::Index abit = Eigen::Index(1) << n_sites;
    const Eigen::Index sbit = Eigen::Index(1) << (n_sites - site);
    const cd w_diag = std::sinh(mu + eta), w_mid = std::sinh(mu), w_off = std::sinh(eta);
    const Eigen::Index dim = m.cols();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const bool a = j & abit, s = j & sbit;
        if (a == s) {
            m.col(j) *= w_diag;
        } else if (a) {
            // pair (j, partner) handled once, from the column with aux bit set
            const Eigen::Index partner = (j ^ abit) | sbit;
            CVector cj = m.col(j), cp = m.col(partner);
            m.col(j) = w_mid * cj + w_off * cp;
            m.col(partner) = w_mid * cp + w_off * cj;
        }
    }
}

CMatrix monodromy(const ModelParams& p, cd lambda) {
    const Eigen::Index dim = Eigen::Index(2) << p.n_sites;
    CMatrix m = CMatrix::Identity(dim, dim);
    for (int n = p.n_sites; n >= 1; --n)
        apply_r_right(m, n, p.n_sites, lambda - p.xi[n - 1] - 0.5 * p.eta, p.eta);
    return m;
}

CMatrix monodromy_hat(const ModelParams& p, cd lambda) {
    const double sgn = (p.n_sites % 2) ? -1.0 : 1.0;
    const Mat2 sy = pauli::y();
    return sgn * aux_right(aux_left(sy, aux_transpose(monodromy(p, -lambda))), sy);
}

cd coeff_a(const ModelParams& p, cd lambda) {
    cd r = 1.0;
    for (const cd& x : p.xi) r *= std::sinh(lambda - x + 0.5 * p.eta);
    return r;
}

cd coeff_d(const ModelParams& p, cd lambda) { return coeff_a(p, lambda - p.eta); }

cd coeff_g(const BoundaryParams& b, int sign, cd eta, cd lambda) {
    const cd al = sign > 0 ? b.alpha_p : b.alpha_m;
    const cd be = sign > 0 ? b.beta_p : b.beta_m;
    const cd norm = std::sinh(al) * std::cosh(be);
    if (std::abs(norm) < 1e-300) throw numeric_error("coeff_g: sinh(alpha)cosh(beta) vanishes");
    return std::sinh(lambda + al - 0.5 * eta) * std::cosh(lambda + be - 0.5 * eta) / norm;
}

cd coeff_A_minus(const ModelParams& p, const BoundaryParams& b, cd lambda) {
    return coeff_g(b, -1, p.eta, lambda) * coeff_a(p, lambda) * coeff_d(p, -lambda);
}

cd coeff_a_h(const ModelParams& p, const std::vector<int>& h, cd lambda) {
    cd r = 1.0;
    for (int n = 0; n < p.n_sites; ++n) r *= std::sinh(lambda - p.xi[n] - (double(h[n]) - 0.5) * p.eta);
    return r;
}

cd qdet_m(const ModelParams& p, cd lambda) {
    return coeff_a(p, lambda + 0.5 * p.eta) * coeff_d(p, lambda - 0.5 * p.eta);
}

}  // namespace osov
