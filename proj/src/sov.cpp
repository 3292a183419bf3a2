#include "opensov/sov.hpp"

#include <cmath>
#include <limits>

#include <Eigen/SVD>

namespace osov {

cd SovGrid::zeta(int a, int h) const {
    const int s = a <= n_sites ? a : a - n_sites;
    return double(phi(a)) * (xi[s - 1] + (double(h) - 0.5) * eta);
}

cd SovGrid::eta_val(int a, int h) const { return std::cosh(2.0 * (xi[a - 1] + (double(h) - 0.5) * eta)); }

double SovGrid::min_separation() const {
    double m = std::numeric_limits<double>::infinity();
    for (int a = 1; a <= n_sites; ++a)
        for (int h = 0; h < 2; ++h)
            for (int b = 1; b <= n_sites; ++b)
                for (int k = 0; k < 2; ++k)
                    if (a != b || h != k) m = std::min(m, std::abs(eta_val(a, h) - eta_val(b, k)));
    return m;
}

std::vector<int> sov_h(int index, int n_sites) {
    std::vector<int> h(n_sites);
    for (int a = 0; a < n_sites; ++a) h[a] = (index >> a) & 1;
    return h;
}

int sov_index(const std::vector<int>& h) {
    int k = 0;
    for (std::size_t a = 0; a < h.size(); ++a) k |= (h[a] & 1) << a;
    return k;
}

cd vandermonde(const SovGrid& grid, const std::vector<int>& h) {
    cd v = 1.0;
    for (int a = 2; a <= grid.n_sites; ++a)
        for (int b = 1; b < a; ++b) v *= grid.eta_val(a, h[a - 1]) - grid.eta_val(b, h[b - 1]);
    return v;
}

cd site_weight(const ModelParams& p, cd beta, int a) {
    return std::sinh(2.0 * p.xi[a - 1] + beta * p.eta) / std::sinh(beta * p.eta);
}

cd f_coeff(const ModelParams& p, cd beta, int a) {
    const cd x = p.xi[a - 1], e = p.eta;
    return std::sinh(2.0 * x + e) * std::sinh(beta * e) / (std::sinh(2.0 * x - e) * std::sinh(2.0 * x + beta * e));
}

namespace {

double condition_number(const CMatrix& m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& s = svd.singularValues();
    return s(s.size() - 1) == 0.0 ? std::numeric_limits<double>::infinity() : s(0) / s(s.size() - 1);
}

cd b_factor(const BoundaryParams& b, cd arg) {
    return 2.0 * b.kappa_m * std::sinh(arg) - std::exp(b.zeta_m);
}

cd w_product(const ModelParams& p, cd beta, const std::vector<int>& h) {
    cd w = 1.0;
    for (int a = 1; a <= p.n_sites; ++a)
        if (!h[a - 1]) w *= site_weight(p, beta, a);
    return w;
}

// ζ values on the 2N-point grid for a given h
std::vector<cd> grid_points(const SovGrid& grid, const std::vector<int>& h) {
    std::vector<cd> z(2 * grid.n_sites);
    for (int a = 1; a <= 2 * grid.n_sites; ++a) z[a - 1] = grid.zeta(a, h[(a - 1) % grid.n_sites]);
    return z;
}

// shared interpolation for the 𝒜− left and 𝒟− right actions
template <class HopValue>
CVector interpolate_action(const Gauge& g, cd beta, const std::vector<int>& h, cd lambda, bool left,
                           HopValue hop_value, double c_sign) {
    const ModelParams& p = g.model();
    const BoundaryParams& b = g.boundary();
    const int n = p.n_sites;
    const cd e = p.eta, sb = std::sinh(beta * e);
    const SovGrid grid(p);
    const std::vector<cd> z = grid_points(grid, h);
    // left weight sinh(x−λ+βη), right weight sinh(λ−x+βη)
    auto wt = [&](cd x) { return (left ? std::sinh(x - lambda + beta * e) : std::sinh(lambda - x + beta * e)) / sb; };
    CVector out = CVector::Zero(Eigen::Index(1) << n);
    const int self = sov_index(h);

    for (int a = 1; a <= 2 * n; ++a) {
        const int site = (a - 1) % n;
        const int target = h[site] - grid.phi(a);
        if (target < 0 || target > 1) continue;
        const cd za = z[a - 1];
        cd c = wt(za) * std::sinh(2.0 * lambda - e) / std::sinh(2.0 * za - e);
        for (int q = 1; q <= 2 * n; ++q)
            if (q != a) c *= std::sinh(lambda - z[q - 1]) / std::sinh(za - z[q - 1]);
        std::vector<int> h2 = h;
        h2[site] = target;
        out(sov_index(h2)) += c * hop_value(a, za);
    }

    const cd n1 = 0.5 * e, n2 = 0.5 * e + 0.5 * I_UNIT * PI;
    const double sgn = (n % 2) ? -1.0 : 1.0;
    cd p1 = 1.0, p2 = 1.0, f0 = std::sinh(2.0 * lambda - e);
    for (const cd& zb : z) {
        p1 *= std::sinh(lambda - zb) / std::sinh(n1 - zb);
        p2 *= std::sinh(lambda - zb) / std::sinh(n2 - zb);
        f0 *= std::sinh(lambda - zb);
    }
    const cd v1 = sgn * qdet_m(p, 0.0);
    const cd v2 = -std::cosh(b.zeta_m) / std::sinh(b.zeta_m) * qdet_m(p, 0.5 * I_UNIT * PI);
    const cd c0 = c_sign * b.kappa_m * std::sinh(b.tau_m + (g.alpha() + 1.0) * e) / (std::sinh(b.zeta_m) * sb);
    out(self) += wt(n1) * v1 * std::cosh(lambda - n1) * p1 + wt(n2) * v2 * std::sinh(lambda - n1) /
                 std::sinh(n2 - n1) * p2 + c0 * f0;
    return out;
}

}  // namespace

SovBasis left_sov_basis(const Gauge& g, cd beta) {
    const ModelParams& p = g.model();
    const int n = p.n_sites;
    const Eigen::Index dim = p.dim();
    std::vector<CMatrix> ops(n);
    for (int s = 1; s <= n; ++s) {
        const cd l = 0.5 * p.eta - p.xi[s - 1];
        ops[s - 1] = g.A(l, beta + 2.0) / coeff_A_minus(p, g.boundary(), l);
    }
    SovBasis out;
    out.side = Side::left;
    out.beta = beta;
    out.states.resize(dim, dim);
    out.states.row(0) = g.bra_ref(beta);
    for (Eigen::Index k = 1; k < dim; ++k) {
        int s = 0;
        while (!((k >> s) & 1)) ++s;
        out.states.row(k) = out.states.row(k & ~(Eigen::Index(1) << s)) * ops[s];
    }
    out.condition = condition_number(out.states);
    return out;
}

SovBasis right_sov_basis(const Gauge& g, cd beta) {
    const ModelParams& p = g.model();
    const int n = p.n_sites;
    const Eigen::Index dim = p.dim();
    std::vector<CMatrix> ops(n);
    for (int s = 1; s <= n; ++s) {
        const cd x = p.xi[s - 1];
        ops[s - 1] = g.D(x + 0.5 * p.eta, beta) /
                     (f_coeff(p, beta, s) * coeff_A_minus(p, g.boundary(), 0.5 * p.eta - x));
    }
    SovBasis out;
    out.side = Side::right;
    out.beta = beta;
    out.states.resize(dim, dim);
    out.states.col(dim - 1) = g.ket_ref(2.0 - beta);
    for (Eigen::Index k = dim - 2; k >= 0; --k) {
        int s = 0;
        while ((k >> s) & 1) ++s;
        out.states.col(k) = ops[s] * out.states.col(k | (Eigen::Index(1) << s));
    }
    out.condition = condition_number(out.states);
    return out;
}

cd pseudo_eigenvalue_left(const Gauge& g, const std::vector<int>& h, cd lambda, cd beta) {
    const ModelParams& p = g.model();
    const BoundaryParams& b = g.boundary();
    const cd e = p.eta;
    const double n = p.n_sites;
    const double sgn = (p.n_sites % 2) ? -1.0 : 1.0;
    return sgn * std::exp((beta + n) * e) * coeff_a_h(p, h, lambda) * coeff_a_h(p, h, -lambda) *
           std::sinh(2.0 * lambda - e) * b_factor(b, (n + beta - g.alpha() - 1.0) * e - b.tau_m) /
           (2.0 * std::sinh(b.zeta_m) * std::sinh(beta * e));
}

cd pseudo_eigenvalue_right(const Gauge& g, const std::vector<int>& h, cd lambda, cd beta) {
    const ModelParams& p = g.model();
    const BoundaryParams& b = g.boundary();
    const cd e = p.eta;
    const double n = p.n_sites;
    const double sgn = (p.n_sites % 2) ? -1.0 : 1.0;
    cd ratio = 1.0;
    for (int a = 1; a <= p.n_sites; ++a)
        if (!h[a - 1]) ratio *= f_coeff(p, beta + 2.0, a) / f_coeff(p, beta, a);
    return sgn * std::exp((beta - n) * e) * ratio * coeff_a_h(p, h, lambda) * coeff_a_h(p, h, -lambda) *
           std::sinh(2.0 * lambda - e) * b_factor(b, (beta - 1.0 - n - g.alpha()) * e - b.tau_m) /
           (2.0 * std::sinh(b.zeta_m) * std::sinh(beta * e));
}

double left_pseudo_eigen_residual(const Gauge& g, const SovBasis& at_beta, const SovBasis& at_beta_m2, cd lambda) {
    const CMatrix bop = g.B(lambda, at_beta.beta);
    const CMatrix lhs = at_beta.states * bop;
    double r = 0.0;
    for (Eigen::Index k = 0; k < lhs.rows(); ++k) {
        const auto h = sov_h(int(k), g.model().n_sites);
        const CRow rhs = pseudo_eigenvalue_left(g, h, lambda, at_beta.beta) * at_beta_m2.states.row(k);
        r = std::max(r, (lhs.row(k) - rhs).norm() / std::max(lhs.row(k).norm(), rhs.norm()));
    }
    return r;
}

double right_pseudo_eigen_residual(const Gauge& g, const SovBasis& at_beta, const SovBasis& at_beta_p2, cd lambda) {
    const CMatrix lhs = g.B(lambda, at_beta.beta) * at_beta.states;
    double r = 0.0;
    for (Eigen::Index k = 0; k < lhs.cols(); ++k) {
        const auto h = sov_h(int(k), g.model().n_sites);
        const CVector rhs = pseudo_eigenvalue_right(g, h, lambda, at_beta.beta) * at_beta_p2.states.col(k);
        r = std::max(r, (lhs.col(k) - rhs).norm() / std::max(lhs.col(k).norm(), rhs.norm()));
    }
    return r;
}

CVector a_minus_left_coefficients(const Gauge& g, cd beta, const std::vector<int>& h, cd lambda) {
    const ModelParams& p = g.model();
    const BoundaryParams& b = g.boundary();
    auto hop = [&](int, cd za) { return coeff_A_minus(p, b, za); };
    return interpolate_action(g, beta, h, lambda, true, hop, -1.0);
}

CVector d_minus_right_coefficients(const Gauge& g, cd beta, const std::vector<int>& h, cd lambda) {
    const ModelParams& p = g.model();
    const BoundaryParams& b = g.boundary();
    const SovGrid grid(p);
    auto hop = [&](int a, cd) {
        const int site = (a - 1) % p.n_sites + 1;
        const cd f = f_coeff(p, beta, site);
        return (grid.phi(a) > 0 ? f : 1.0 / f) * coeff_A_minus(p, b, -grid.zeta(a, 1 - h[site - 1]));
    };
    return interpolate_action(g, beta, h, lambda, false, hop, 1.0);
}

CRow a_minus_left_action(const Gauge& g, const SovBasis& left, const std::vector<int>& h, cd lambda) {
    return a_minus_left_coefficients(g, left.beta, h, lambda).transpose() * left.states;
}

CVector d_minus_right_action(const Gauge& g, const SovBasis& right, const std::vector<int>& h, cd lambda) {
    return right.states * d_minus_right_coefficients(g, right.beta, h, lambda);
}

cd sov_normalization(const Gauge& g, cd beta) {
    const ModelParams& p = g.model();
    CRow v = g.bra_ref(beta);
    for (int s = 1; s <= p.n_sites; ++s) {
        const cd l = 0.5 * p.eta - p.xi[s - 1];
        v = v * g.A(l, beta + 2.0) / coeff_A_minus(p, g.boundary(), l);
    }
    const std::vector<int> ones(p.n_sites, 1);
    return vandermonde(SovGrid(p), ones) * (v * g.ket_ref(-beta))(0);
}

cd gram_diagonal_closed(const Gauge& g, cd beta, cd z_beta_m2, const std::vector<int>& h) {
    const ModelParams& p = g.model();
    return z_beta_m2 * w_product(p, beta, h) / vandermonde(SovGrid(p), h);
}

CMatrix gram_matrix(const SovBasis& left_at_beta_m2, const SovBasis& right_at_beta) {
    return left_at_beta_m2.states * right_at_beta.states;
}

double identity_decomposition_residual(const Gauge& g, const SovBasis& left_at_beta_m2,
                                       const SovBasis& right_at_beta, cd z_beta_m2) {
    const ModelParams& p = g.model();
    const SovGrid grid(p);
    const Eigen::Index dim = p.dim();
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const auto h = sov_h(int(k), p.n_sites);
        const cd mu = vandermonde(grid, h) / (z_beta_m2 * w_product(p, right_at_beta.beta, h));
        sum += mu * right_at_beta.states.col(k) * left_at_beta_m2.states.row(k);
    }
    return (sum - CMatrix::Identity(dim, dim)).norm();
}

namespace {
bool zero_mod_2pii(cd x, double tol) {
    const double k = std::round(x.imag() / (2.0 * PI));
    return std::abs(x.real()) < tol && std::abs(x.imag() - 2.0 * PI * k) < tol;
}
}  // namespace

bool fail_sov_condition(const ModelParams& p, const BoundaryParams& b, int sign, double tol) {
    const cd e = p.eta;
    const double n = p.n_sites;
    const cd spm = b.alpha_m + b.beta_m, smp = b.alpha_p - b.beta_p;
    for (int k = 0; k < 2; ++k)
        for (int m = 0; m < 2; ++m) {
            const double sk = k ? -1.0 : 1.0, sm = m ? -1.0 : 1.0;
            const cd x = double(sign) * (n - 1.0) * e - (b.tau_m - b.tau_p + sk * spm + sm * smp +
                                                           I_UNIT * PI * double(k + m));
            if (zero_mod_2pii(x, tol)) return true;
        }
    return false;
}

SovApplicability sov_applicability(const ModelParams& p, const BoundaryParams& b, double tol) {
    SovApplicability r;
    r.fail_i = fail_sov_condition(p, b, +1, tol);
    r.fail_ii = fail_sov_condition(p, b, -1, tol);
    const std::string vi = r.fail_i ? "Fail-SOV-i" : "";
    const std::string vii = r.fail_ii ? "Fail-SOV-ii" : "";
    r.constructions = {ConstructionStatus{"I_b", !r.fail_i, vi}, ConstructionStatus{"II_b", !r.fail_ii, vii},
                       ConstructionStatus{"I_c", !r.fail_i, vi}, ConstructionStatus{"II_c", !r.fail_ii, vii}};
    return r;
}

namespace {
bool nilpotent_b(const ModelParams& p, const BoundaryParams& b, cd alpha, cd beta, double shift, double tol) {
    const cd e = p.eta;
    const cd spm = b.alpha_m + b.beta_m;
    for (int k = 0; k < 2; ++k) {
        const double sk = k ? -1.0 : 1.0;
        const cd x = (alpha - beta) * e - (shift * e - b.tau_m - sk * spm + I_UNIT * PI * double(k));
        if (zero_mod_2pii(x, tol)) return true;
    }
    return false;
}
}  // namespace

bool nilpotent_b_left(const ModelParams& p, const BoundaryParams& b, cd alpha, cd beta, double tol) {
    return nilpotent_b(p, b, alpha, beta, double(p.n_sites) - 1.0, tol);
}

bool nilpotent_b_right(const ModelParams& p, const BoundaryParams& b, cd alpha, cd beta, double tol) {
    return nilpotent_b(p, b, alpha, beta, -double(p.n_sites) - 1.0, tol);
}

int a_minus_vanishing_site(const ModelParams& p, const BoundaryParams& b, double tol) {
    for (int s = 1; s <= p.n_sites; ++s)
        if (std::abs(coeff_A_minus(p, b, 0.5 * p.eta - p.xi[s - 1])) < tol) return s;
    return 0;
}

}  // namespace osov
