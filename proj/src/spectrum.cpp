#include "opensov/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace osov {

cd EigenvalueAnsatz::f(cd lambda) const {
    const cd c = std::cosh(2.0 * lambda), ch = std::cosh(p.eta);
    const double sgn = (p.n_sites % 2) ? -1.0 : 1.0;
    cd t1 = (c + ch) / (2.0 * ch) * tau_half;
    cd t2 = -sgn * (c - ch) / (2.0 * ch) * tau_half_ipi;
    cd top = t_inf * (c * c - ch * ch);
    for (const cd& z : c0) {
        t1 *= (c - z) / (ch - z);
        t2 *= (c - z) / (ch + z);
        top *= c - z;
    }
    return t1 + t2 + top;
}

cd EigenvalueAnsatz::g(int a, cd lambda) const {
    const cd c = std::cosh(2.0 * lambda), ch = std::cosh(p.eta);
    const cd ca = c0[a - 1];
    cd r = (c * c - ch * ch) / (ca * ca - ch * ch);
    for (std::size_t q = 0; q < c0.size(); ++q)
        if (int(q) != a - 1) r *= (c - c0[q]) / (ca - c0[q]);
    return r;
}

cd EigenvalueAnsatz::tau(cd lambda, const std::vector<cd>& x) const {
    cd t = f(lambda);
    for (std::size_t a = 0; a < x.size(); ++a) t += g(int(a) + 1, lambda) * x[a];
    return t;
}

EigenvalueAnsatz build_ansatz(const ModelParams& p, const BoundaryParams& b) {
    EigenvalueAnsatz ans{p, b, {}, {}, {}, {}};
    const cd e = p.eta, ch = std::cosh(e);
    const double sgn = (p.n_sites % 2) ? -1.0 : 1.0;
    auto coth = [](cd z) { return std::cosh(z) / std::sinh(z); };
    ans.tau_half = sgn * 2.0 * ch * qdet_m(p, 0.0);
    ans.tau_half_ipi = -2.0 * ch * coth(b.zeta_m) * coth(b.zeta_p) * qdet_m(p, 0.5 * I_UNIT * PI);
    ans.t_inf = std::pow(2.0, 1 - p.n_sites) * b.kappa_p * b.kappa_m * std::cosh(b.tau_p - b.tau_m) /
                (std::sinh(b.zeta_p) * std::sinh(b.zeta_m));
    for (const cd& x : p.xi) ans.c0.push_back(std::cosh(2.0 * (x - 0.5 * e)));
    return ans;
}

cd coeff_A_big(const Gauge& g, cd beta, cd lambda) {
    return g.a_plus(lambda, beta - 1.0) * coeff_A_minus(g.model(), g.boundary(), lambda);
}

cd coeff_D_big_node(const Gauge& g, cd beta, int a) {
    const ModelParams& p = g.model();
    const cd x = p.xi[a - 1], e = p.eta;
    return g.d_plus(x + 0.5 * e, beta - 1.0) * f_coeff(p, beta, a) * coeff_A_minus(p, g.boundary(), -(x - 0.5 * e));
}

cd quadratic_rhs(const ModelParams& p, const BoundaryParams& b, int n) {
    const cd x = p.xi[n - 1], e = p.eta;
    return qdet_k_plus(p, b, x) * qdet_u_minus(p, b, x) / (std::sinh(e + 2.0 * x) * std::sinh(e - 2.0 * x));
}

CVector QuadraticSystem::residual(const CVector& x) const {
    return (x.array() * (g_nodes * x + f_nodes).array()).matrix() - q;
}

CMatrix QuadraticSystem::jacobian(const CVector& x) const {
    CMatrix j = x.asDiagonal() * g_nodes;
    j.diagonal() += g_nodes * x + f_nodes;
    return j;
}

QuadraticSystem assemble_quadratic_system(const EigenvalueAnsatz& ans) {
    const int n = ans.p.n_sites;
    QuadraticSystem s{ans, CMatrix(n, n), CVector(n), CVector(n)};
    for (int r = 1; r <= n; ++r) {
        const cd z1 = ans.p.xi[r - 1] + 0.5 * ans.p.eta;
        for (int a = 1; a <= n; ++a) s.g_nodes(r - 1, a - 1) = ans.g(a, z1);
        s.f_nodes(r - 1) = ans.f(z1);
        s.q(r - 1) = quadratic_rhs(ans.p, ans.b, r);
    }
    return s;
}

namespace {
std::vector<cd> to_std(const CVector& v) { return std::vector<cd>(v.data(), v.data() + v.size()); }
CVector to_eigen(const std::vector<cd>& v) { return Eigen::Map<const CVector>(v.data(), Eigen::Index(v.size())); }

double system_scale(const QuadraticSystem& sys) { return std::max(1.0, sys.q.cwiseAbs().maxCoeff()); }
}  // namespace

OracleResult solve_spectrum_oracle(const ModelParams& p, const BoundaryParams& b, cd probe) {
    OracleResult out;
    out.probe = probe;
    const EigenDecomposition ed = eig_dense(transfer_matrix(p, b, probe));
    const Eigen::Index dim = p.dim();
    out.probe_eigenvalues = ed.eigenvalues;
    out.eigenvectors = ed.right_eigenvectors;
    double gap = std::numeric_limits<double>::infinity(), scale = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        scale = std::max(scale, std::abs(ed.eigenvalues[i]));
        for (Eigen::Index j = 0; j < i; ++j) gap = std::min(gap, std::abs(ed.eigenvalues[i] - ed.eigenvalues[j]));
    }
    out.simplicity_gap = dim > 1 ? gap / scale : 1.0;

    std::vector<CMatrix> tz;
    for (int a = 1; a <= p.n_sites; ++a) tz.push_back(transfer_matrix(p, b, p.xi[a - 1] - 0.5 * p.eta));
    const QuadraticSystem sys = assemble_quadratic_system(build_ansatz(p, b));
    for (Eigen::Index k = 0; k < dim; ++k) {
        const CVector v = ed.right_eigenvectors.col(k);
        SpectrumSolution s;
        for (const CMatrix& t : tz) s.x.push_back(v.dot(t * v) / v.squaredNorm());
        s.system_residual = sys.residual(to_eigen(s.x)).cwiseAbs().maxCoeff() / system_scale(sys);
        s.converged = true;
        out.solutions.push_back(std::move(s));
    }
    return out;
}

SpectrumSolution newton_solve(const QuadraticSystem& sys, const std::vector<cd>& seed, const NewtonOptions& opt) {
    SpectrumSolution s;
    CVector x = to_eigen(seed);
    const double scale = system_scale(sys);
    double r = sys.residual(x).cwiseAbs().maxCoeff() / scale;
    int it = 0;
    while (r > opt.tol && it < opt.max_iterations) {
        const Eigen::FullPivLU<CMatrix> lu(sys.jacobian(x));
        if (!lu.isInvertible()) break;
        x -= lu.solve(sys.residual(x));
        r = sys.residual(x).cwiseAbs().maxCoeff() / scale;
        ++it;
        if (!all_finite(x)) break;
    }
    s.x = to_std(x);
    s.iterations = it;
    s.system_residual = r;
    s.converged = all_finite(x) && r <= opt.tol;
    return s;
}

NewtonReport collect_roots(std::vector<SpectrumSolution> runs, const NewtonOptions& opt) {
    NewtonReport rep;
    rep.seeds = int(runs.size());
    for (SpectrumSolution& s : runs) {
        if (!s.converged) {
            if (s.iterations < opt.max_iterations) ++rep.singular;
            continue;
        }
        ++rep.converged;
        rep.max_iterations_used = std::max(rep.max_iterations_used, s.iterations);
        const CVector xs = to_eigen(s.x);
        const bool dup = std::any_of(rep.roots.begin(), rep.roots.end(), [&](const SpectrumSolution& r) {
            return (to_eigen(r.x) - xs).norm() < opt.dedup_distance * std::max(1.0, xs.norm());
        });
        if (!dup) rep.roots.push_back(std::move(s));
    }
    return rep;
}

NewtonReport solve_spectrum_newton(const QuadraticSystem& sys, const std::vector<std::vector<cd>>& seeds,
                                   const NewtonOptions& opt) {
    std::vector<SpectrumSolution> runs;
    for (const auto& seed : seeds) runs.push_back(newton_solve(sys, seed, opt));
    return collect_roots(std::move(runs), opt);
}

std::vector<std::vector<cd>> random_seeds(const QuadraticSystem& sys, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // log-uniform modulus around sqrt|q|: roots sit both near q/f and near −f/g
    std::uniform_real_distribution<double> logmag(-3.0, 3.0), phase(0.0, 2.0 * PI);
    const int n = sys.size();
    std::vector<std::vector<cd>> out(count, std::vector<cd>(n));
    for (auto& s : out)
        for (int a = 0; a < n; ++a) s[a] = std::sqrt(std::abs(sys.q(a))) * std::polar(std::exp(logmag(rng)), phase(rng));
    return out;
}

cd homotopy_gamma(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * PI);
    return std::polar(1.0, phase(rng));
}

SpectrumSolution track_homotopy_path(const QuadraticSystem& sys, cd gamma, int path, const NewtonOptions& opt) {
    const int n = sys.size();
    CVector s2 = sys.q.cwiseAbs().cast<cd>();
    CVector x(n);
    for (int a = 0; a < n; ++a) x(a) = ((path >> a) & 1 ? -1.0 : 1.0) * std::sqrt(s2(a));

    // H(x,t) = (1−t)γ(x∘x − s²) + t F(x)
    auto h = [&](const CVector& y, double t) -> CVector {
        return (1.0 - t) * gamma * (y.cwiseProduct(y) - s2) + t * sys.residual(y);
    };
    auto hx = [&](const CVector& y, double t) -> CMatrix {
        CMatrix j = t * sys.jacobian(y);
        j.diagonal() += (1.0 - t) * gamma * 2.0 * y;
        return j;
    };
    auto velocity = [&](const CVector& y, double t) -> CVector {
        const CVector ht = sys.residual(y) - gamma * (y.cwiseProduct(y) - s2);
        return -Eigen::FullPivLU<CMatrix>(hx(y, t)).solve(ht);
    };

    double t = 0.0, dt = 0.02;
    int steps = 0;
    bool lost = false;
    while (t < 1.0 && !lost) {
        if (++steps > 20000 || dt < 1e-12) {
            lost = true;
            break;
        }
        const double step = std::min(dt, 1.0 - t);
        const CVector k1 = velocity(x, t), k2 = velocity(x + 0.5 * step * k1, t + 0.5 * step),
                      k3 = velocity(x + 0.5 * step * k2, t + 0.5 * step), k4 = velocity(x + step * k3, t + step);
        CVector y = x + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        const double tn = t + step;
        bool ok = all_finite(y);
        for (int it = 0; ok && it < 4; ++it) {
            const CVector d = Eigen::FullPivLU<CMatrix>(hx(y, tn)).solve(h(y, tn));
            y -= d;
            ok = all_finite(y);
            if (d.norm() < 1e-11 * (1.0 + y.norm())) break;
            if (it == 3) ok = false;
        }
        // reject steps that jump too far relative to the predicted motion
        if (ok && (y - x).norm() > 0.5 * (1.0 + x.norm())) ok = false;
        if (ok) {
            x = y;
            t = tn;
            dt = std::min(0.1, dt * 1.5);
        } else {
            dt *= 0.5;
        }
    }
    SpectrumSolution s = newton_solve(sys, to_std(x), opt);
    if (lost) s.converged = false;
    return s;
}

NewtonReport solve_spectrum_homotopy(const QuadraticSystem& sys, std::uint64_t seed, const NewtonOptions& opt) {
    const cd gamma = homotopy_gamma(seed);
    std::vector<SpectrumSolution> runs;
    for (int k = 0; k < (1 << sys.size()); ++k) runs.push_back(track_homotopy_path(sys, gamma, k, opt));
    return collect_roots(std::move(runs), opt);
}

double functional_equation_residual(const Gauge& g, cd beta, const EigenvalueAnsatz& ans, const std::vector<cd>& x) {
    const ModelParams& p = g.model();
    double r = 0.0;
    for (int a = 1; a <= p.n_sites; ++a) {
        const cd z0 = p.xi[a - 1] - 0.5 * p.eta, z1 = p.xi[a - 1] + 0.5 * p.eta;
        const cd rhs = coeff_A_big(g, beta, z1) * coeff_A_big(g, beta, -z0);
        r = std::max(r, std::abs(ans.tau(z0, x) * ans.tau(z1, x) - rhs) / std::abs(rhs));
    }
    return r;
}

std::vector<cd> q_ratios(const Gauge& g, cd beta, const std::vector<cd>& x, QForm form) {
    const ModelParams& p = g.model();
    std::vector<cd> out;
    for (int a = 1; a <= p.n_sites; ++a) {
        const cd z0 = p.xi[a - 1] - 0.5 * p.eta;
        const cd am = coeff_A_big(g, beta, -z0);
        out.push_back(form == QForm::division ? x[a - 1] / am * site_weight(p, beta, a) : x[a - 1] * am);
    }
    return out;
}

std::vector<cd> qbar_ratios(const Gauge& g, cd beta, const EigenvalueAnsatz& ans, const std::vector<cd>& x,
                            QForm form) {
    const ModelParams& p = g.model();
    std::vector<cd> out;
    for (int a = 1; a <= p.n_sites; ++a) {
        const cd dd = coeff_D_big_node(g, beta, a);
        if (form == QForm::division)
            out.push_back(dd / ans.tau(p.xi[a - 1] + 0.5 * p.eta, x) * site_weight(p, beta, a));
        else
            out.push_back(x[a - 1] / dd);
    }
    return out;
}

namespace {
cd separate_coefficient(const SovGrid& grid, const std::vector<cd>& ratio, const std::vector<int>& h) {
    cd c = vandermonde(grid, h);
    for (std::size_t a = 0; a < h.size(); ++a)
        if (h[a]) c *= ratio[a];
    return c;
}
}  // namespace

CVector build_right_eigenstate(const SovGrid& grid, const std::vector<cd>& q_ratio, const SovBasis& right) {
    CVector v = CVector::Zero(right.states.rows());
    for (Eigen::Index k = 0; k < right.states.cols(); ++k)
        v += separate_coefficient(grid, q_ratio, sov_h(int(k), grid.n_sites)) * right.states.col(k);
    return v;
}

CRow build_left_eigenstate(const SovGrid& grid, const std::vector<cd>& qbar_ratio, const SovBasis& left) {
    CRow v = CRow::Zero(left.states.cols());
    for (Eigen::Index k = 0; k < left.states.rows(); ++k)
        v += separate_coefficient(grid, qbar_ratio, sov_h(int(k), grid.n_sites)) * left.states.row(k);
    return v;
}

double right_eigen_residual(const ModelParams& p, const BoundaryParams& b, const CVector& v, const EigenvalueAnsatz& ans,
                            const std::vector<cd>& x, const std::vector<cd>& points) {
    double r = 0.0;
    for (const cd& l : points)
        r = std::max(r, (transfer_matrix(p, b, l) * v - ans.tau(l, x) * v).norm() / v.norm());
    return r;
}

double left_eigen_residual(const ModelParams& p, const BoundaryParams& b, const CRow& v, const EigenvalueAnsatz& ans,
                           const std::vector<cd>& x, const std::vector<cd>& points) {
    double r = 0.0;
    for (const cd& l : points)
        r = std::max(r, (v * transfer_matrix(p, b, l) - ans.tau(l, x) * v).norm() / v.norm());
    return r;
}

void attach_eigenstates(SpectrumSolution& sol, const Gauge& g, cd beta, const EigenvalueAnsatz& ans,
                        const SovBasis& right_at_beta, const SovBasis& left_at_beta_m2,
                        const std::vector<cd>& points, double tol) {
    const ModelParams& p = g.model();
    const BoundaryParams& b = g.boundary();
    const SovGrid grid(p);
    double best = std::numeric_limits<double>::infinity();
    for (QForm form : {QForm::division, QForm::printed}) {
        const std::vector<cd> q = q_ratios(g, beta, sol.x, form);
        const std::vector<cd> qb = qbar_ratios(g, beta, ans, sol.x, form);
        const double rr = right_eigen_residual(p, b, build_right_eigenstate(grid, q, right_at_beta), ans, sol.x, points);
        const double rl = left_eigen_residual(p, b, build_left_eigenstate(grid, qb, left_at_beta_m2), ans, sol.x, points);
        const double r = std::isfinite(rr) && std::isfinite(rl) ? std::max(rr, rl) : std::numeric_limits<double>::infinity();
        if (r < best) {
            best = r;
            sol.q_ratio = q;
            sol.qbar_ratio = qb;
            sol.q_form = form == QForm::division ? "division" : "printed";
        }
        if (r < tol) break;
    }
    sol.eigen_residual = best;
}

double baxter_residual(const Gauge& g, cd beta, const EigenvalueAnsatz& ans, const std::vector<cd>& x,
                       const SovBasis& left_at_beta_m2, const CVector& v) {
    const ModelParams& p = g.model();
    const int n = p.n_sites, dim = int(p.dim());
    const SovGrid grid(p);
    const CVector psi = left_at_beta_m2.states * v;
    double r = 0.0;
    for (int k = 0; k < dim; ++k) {
        const std::vector<int> h = sov_h(k, n);
        for (int a = 1; a <= n; ++a) {
            const int bit = 1 << (a - 1);
            const cd z = grid.zeta(a, h[a - 1]);
            const cd lhs = ans.tau(z, x) * psi(k);
            cd down = 0.0, up = 0.0;
            if (h[a - 1] == 1) down = coeff_A_big(g, beta, z) * psi(k - bit);
            if (h[a - 1] == 0) up = coeff_A_big(g, beta, -z) * psi(k + bit);
            const double scale = std::abs(lhs) + std::abs(down) + std::abs(up);
            if (scale > 0.0) r = std::max(r, std::abs(lhs - down - up) / scale);
        }
    }
    return r;
}

double multiset_distance(std::vector<cd> a, std::vector<cd> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double scale = 0.0;
    for (const cd& z : b) scale = std::max(scale, std::abs(z));
    scale = std::max(scale, 1e-300);
    double worst = 0.0;
    for (const cd& z : a) {
        auto it = std::min_element(b.begin(), b.end(), [&](const cd& u, const cd& w) { return std::abs(u - z) < std::abs(w - z); });
        worst = std::max(worst, std::abs(*it - z) / scale);
        b.erase(it);
    }
    return worst;
}

}  // namespace osov
