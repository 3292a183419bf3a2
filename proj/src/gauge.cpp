#include "opensov/gauge.hpp"

#include <cmath>

namespace osov {

GaugeParams triangular_gauge(const ModelParams& p, const BoundaryParams& b, cd alpha, int k) {
    const double sgn = (k % 2) ? -1.0 : 1.0;
    const cd beta = alpha + 2.0 + (b.tau_p - sgn * (b.alpha_p - b.beta_p) - I_UNIT * PI * double(k)) / p.eta;
    return {alpha, beta};
}

Gauge::Gauge(ModelParams p, BoundaryParams b, cd alpha) : p_(std::move(p)), b_(b), alpha_(alpha) {}

void Gauge::check_beta(cd beta, const char* where) const {
    if (std::abs(std::sinh(beta * p_.eta)) < 1e-10)
        throw numeric_error(std::string(where) + ": singular gauge, sinh(beta*eta) = 0");
}

Vec2 Gauge::X(cd l, cd beta) const { return Vec2(std::exp(-(l + (alpha_ + beta) * p_.eta)), 1.0); }
Vec2 Gauge::Y(cd l, cd beta) const { return Vec2(std::exp(-(l + (alpha_ - beta) * p_.eta)), 1.0); }

Vec2 Gauge::X_hat(cd l, cd c) const {
    const cd e = p_.eta;
    check_beta(c - 2.0, "X_hat");
    return std::exp(e) * std::sinh((c - 3.0) * e) / std::sinh((c - 2.0) * e) * X(l, c);
}

Vec2 Gauge::Y_hat(cd l, cd c) const {
    const cd e = p_.eta;
    check_beta(c + 2.0, "Y_hat");
    return std::exp(e) * std::sinh((c + 3.0) * e) / std::sinh((c + 2.0) * e) * Y(l, c);
}

Row2 Gauge::X_bar(cd l, cd beta) const {
    const cd e = p_.eta;
    check_beta(beta, "X_bar");
    const cd pre = std::exp(l + alpha_ * e) / (2.0 * std::sinh(beta * e));
    return pre * Row2(1.0, -std::exp(-(l + (alpha_ + beta) * e)));
}

Row2 Gauge::Y_bar(cd l, cd beta) const {
    const cd e = p_.eta;
    check_beta(beta, "Y_bar");
    const cd pre = std::exp(l + alpha_ * e) / (2.0 * std::sinh(beta * e));
    return pre * Row2(-1.0, std::exp(-(l + (alpha_ - beta) * e)));
}

Row2 Gauge::X_tilde(cd l, cd beta) const {
    const cd e = p_.eta;
    check_beta(beta - 1.0, "X_tilde");
    return std::exp(e) * std::sinh(beta * e) / std::sinh((beta - 1.0) * e) * X_bar(l, beta);
}

Row2 Gauge::Y_tilde(cd l, cd beta) const {
    const cd e = p_.eta;
    check_beta(beta + 1.0, "Y_tilde");
    return std::exp(e) * std::sinh(beta * e) / std::sinh((beta + 1.0) * e) * Y_bar(l, beta);
}

Mat2 Gauge::G_bar(cd l, cd beta) const {
    Mat2 g;
    g << X(l, beta), Y(l, beta);
    return g;
}

Mat2 Gauge::G_bar_inv(cd l, cd beta) const {
    Mat2 g;
    g << Y_bar(l, beta), X_bar(l, beta);
    return g;
}

Mat2 Gauge::G_tilde(cd l, cd beta) const {
    Mat2 g;
    g << X(l, beta + 1.0), Y(l, beta - 1.0);
    return g;
}

Mat2 Gauge::G_tilde_inv(cd l, cd beta) const {
    Mat2 g;
    g << Y_tilde(l, beta - 1.0), X_tilde(l, beta + 1.0);
    return g;
}

Mat2 Gauge::G_hat(cd l, cd beta) const {
    Mat2 g;
    g << X_hat(l, beta + 2.0), Y_hat(l, beta - 2.0);
    return g;
}

Mat2 Gauge::G_hat_inv(cd l, cd beta) const {
    Mat2 g;
    g << Y_tilde(l, beta - 2.0), X_tilde(l, beta + 2.0);
    return g;
}

CMatrix Gauge::monodromy(cd l, cd beta) const {
    const cd s = l - 0.5 * p_.eta;
    const double n = p_.n_sites;
    return aux_right(aux_left(G_tilde_inv(s, beta), osov::monodromy(p_, l)), G_tilde(s, beta + n));
}

CMatrix Gauge::monodromy_hat(cd l, cd beta) const {
    const cd s = 0.5 * p_.eta - l;
    const double n = p_.n_sites;
    return aux_right(aux_left(G_bar_inv(s, beta + n), osov::monodromy_hat(p_, l)), G_bar(s, beta));
}

CMatrix Gauge::u_minus(cd l, cd beta) const {
    const cd e = p_.eta;
    const CMatrix u = osov::u_minus(p_, b_, l);
    return std::exp(-l + 0.5 * e) * aux_right(aux_left(G_tilde_inv(l - 0.5 * e, beta), u), G_tilde(0.5 * e - l, beta));
}

CMatrix Gauge::u_minus_decomposed(cd l, cd beta) const {
    const CMatrix m = monodromy(l, beta);
    const CMatrix ac = m * aux_left(k_minus_bar(l, beta), monodromy_hat(l, beta + 1.0));
    const CMatrix bd = m * aux_left(k_minus(l, beta), monodromy_hat(l, beta - 1.0));
    const AuxBlocks x = aux_blocks(ac), y = aux_blocks(bd);
    return std::exp(-l + 0.5 * p_.eta) * from_aux_blocks({x.A, y.B, x.C, y.D});
}

CMatrix Gauge::A(cd l, cd beta) const { return aux_blocks(u_minus(l, beta - 2.0)).A; }
CMatrix Gauge::B(cd l, cd beta) const { return aux_blocks(u_minus(l, beta)).B; }
CMatrix Gauge::C(cd l, cd beta) const { return aux_blocks(u_minus(l, beta - 2.0)).C; }
CMatrix Gauge::D(cd l, cd beta) const { return aux_blocks(u_minus(l, beta)).D; }

Mat2 Gauge::k_minus(cd l, cd beta) const {
    const cd e = p_.eta;
    const double n = p_.n_sites;
    return G_tilde_inv(l - 0.5 * e, beta + n) * osov::k_minus(p_, b_, l) * G_bar(0.5 * e - l, beta + n - 1.0);
}

Mat2 Gauge::k_minus_bar(cd l, cd beta) const {
    const cd e = p_.eta;
    const double n = p_.n_sites;
    return G_tilde_inv(l - 0.5 * e, beta + n) * osov::k_minus(p_, b_, l) * G_bar(0.5 * e - l, beta + n + 1.0);
}

Mat2 Gauge::k_plus_sandwich(cd l, cd beta, Side side) const {
    const cd e = p_.eta;
    const Mat2 k = osov::k_plus(p_, b_, l);
    const cd r = 0.5 * e - l, c = l - 0.5 * e;
    Mat2 out;
    if (side == Side::left) {
        const Vec2 x = X_hat(c, beta + 2.0), y = Y_hat(c, beta - 2.0);
        out(0, 0) = (Y_tilde(r, beta - 2.0) * k * x)(0);
        out(0, 1) = (Y_tilde(r, beta) * k * y)(0);
        out(1, 0) = (X_tilde(r, beta) * k * x)(0);
        out(1, 1) = (X_tilde(r, beta + 2.0) * k * y)(0);
    } else {
        const Row2 yb = Y_bar(r, beta), xb = X_bar(r, beta);
        out(0, 0) = (yb * k * X(c, beta))(0);
        out(0, 1) = (yb * k * Y(c, beta - 2.0))(0);
        out(1, 0) = (xb * k * X(c, beta + 2.0))(0);
        out(1, 1) = (xb * k * Y(c, beta))(0);
    }
    return out;
}

Mat2 Gauge::k_plus_closed(cd l, cd beta, Side side) const {
    using std::cosh;
    using std::exp;
    using std::sinh;
    const cd e = p_.eta, z = b_.zeta_p, k = b_.kappa_p, t = b_.tau_p, a = alpha_;
    check_beta(beta, "k_plus_closed");
    const cd den = sinh(beta * e) * sinh(z);
    const cd s2 = sinh(2.0 * l + e);
    const cd l12 = exp((beta + 1.0) * e) * s2 * (k * sinh((beta - 1.0 - a) * e - t) - 0.5 * exp(-z)) / den;
    const cd l21 = exp(-(beta - 1.0) * e) * s2 * (k * sinh((beta + a + 1.0) * e + t) + 0.5 * exp(-z)) / den;
    Mat2 out;
    if (side == Side::left) {
        const cd lp = l + 0.5 * e, lm = l - 0.5 * e;
        out(0, 0) = (sinh(z) * cosh(lp) * sinh(lm + beta * e) -
                     (cosh(z) * sinh(lp) * cosh(lm + beta * e) + k * s2 * sinh(t + (a + 2.0) * e))) /
                    den;
        out(0, 1) = l12;
        out(1, 0) = l21;
        out(1, 1) = (sinh(z) * cosh(lp) * sinh(-lm + beta * e) + cosh(z) * sinh(lp) * cosh(-lm + beta * e) +
                     k * s2 * sinh(t + (a + 2.0) * e)) /
                    den;
    } else {
        out(0, 0) = (exp(z) * sinh((beta - 1.0) * e) - exp(-z) * sinh(2.0 * l + beta * e) -
                     2.0 * k * s2 * sinh(t + a * e)) /
                    (2.0 * den);
        out(0, 1) = exp(-2.0 * e) * l12;
        out(1, 0) = exp(-2.0 * e) * l21;
        out(1, 1) = (exp(-z) * sinh(2.0 * l - beta * e) + exp(z) * sinh((beta + 1.0) * e) +
                     2.0 * k * s2 * sinh(t + a * e)) /
                    (2.0 * den);
    }
    return out;
}

cd Gauge::a_plus(cd l, cd beta) const {
    using std::cosh;
    using std::sinh;
    const cd e = p_.eta, z = b_.zeta_p, k = b_.kappa_p, t = b_.tau_p;
    const cd pre = sinh(2.0 * l + e) / (sinh(2.0 * l) * sinh((beta + 1.0) * e) * sinh(z));
    const cd x = l + 0.5 * e + beta * e;
    return pre * (sinh(z) * cosh(l - 0.5 * e) * sinh(x) -
                  (cosh(z) * sinh(l - 0.5 * e) * cosh(x) + k * sinh(2.0 * l - e) * sinh(t + alpha_ * e + 2.0 * e)));
}

cd Gauge::d_plus(cd l, cd beta) const {
    using std::cosh;
    using std::sinh;
    const cd e = p_.eta, z = b_.zeta_p, k = b_.kappa_p, t = b_.tau_p;
    const cd pre = sinh(2.0 * l + e) / (sinh(2.0 * l) * sinh((beta - 1.0) * e) * sinh(z));
    const cd x = -l - 0.5 * e + beta * e;
    return pre * (sinh(z) * cosh(l - 0.5 * e) * sinh(x) +
                  (cosh(z) * sinh(l - 0.5 * e) * cosh(x) + k * sinh(2.0 * l - e) * sinh(t + alpha_ * e)));
}

CRow Gauge::bra_ref(cd beta) const {
    const cd e = p_.eta;
    const int n = p_.n_sites;
    CMatrix out = CMatrix::Ones(1, 1);
    for (int s = 1; s <= n; ++s) {
        CMatrix loc(1, 2);
        loc << -1.0, std::exp(-alpha_ * e + (double(n - s) + beta) * e - p_.xi[s - 1]);
        out = kron(out, loc);
    }
    return out.row(0);
}

CVector Gauge::ket_ref(cd beta) const {
    const cd e = p_.eta;
    const int n = p_.n_sites;
    CMatrix out = CMatrix::Ones(1, 1);
    for (int s = 1; s <= n; ++s) {
        CMatrix loc(2, 1);
        loc << std::exp(-alpha_ * e - (double(n - s) + beta) * e - p_.xi[s - 1]), 1.0;
        out = kron(out, loc);
    }
    return out.col(0);
}

cd Gauge::bra_norm(cd beta) const {
    const cd e = p_.eta;
    const int n = p_.n_sites;
    cd r = std::pow(2.0, n) * std::exp(-alpha_ * double(n) * e);
    for (int s = 1; s <= n; ++s) r *= std::sinh((double(n - s) + beta) * e) * std::exp(-p_.xi[s - 1]);
    return r;
}

double Gauge::transfer_decomposition_residual(cd l, cd beta, Side side) const {
    const CMatrix t = transfer_matrix(p_, b_, l);
    const Mat2 k = k_plus_closed(l, beta - 1.0, side);
    CMatrix r = k(0, 0) * A(l, beta) + k(1, 1) * D(l, beta);
    if (side == Side::left)
        r += k(1, 0) * B(l, beta - 2.0) + k(0, 1) * C(l, beta + 2.0);
    else
        r += k(1, 0) * B(l, beta) + k(0, 1) * C(l, beta);
    return rel_diff(t, r);
}

double Gauge::transfer_diagonal_form_residual(cd l, cd beta, Side side) const {
    const CMatrix t = transfer_matrix(p_, b_, l);
    const Mat2 k = k_plus_closed(l, beta - 1.0, side);
    CMatrix r;
    if (side == Side::left)
        r = a_plus(l, beta - 1.0) * A(l, beta) + a_plus(-l, beta - 1.0) * A(-l, beta) +
            k(1, 0) * B(l, beta - 2.0) + k(0, 1) * C(l, beta + 2.0);
    else
        r = d_plus(l, beta - 1.0) * D(l, beta) + d_plus(-l, beta - 1.0) * D(-l, beta) + k(1, 0) * B(l, beta) +
            k(0, 1) * C(l, beta);
    return rel_diff(t, r);
}

}  // namespace osov
