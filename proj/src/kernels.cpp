#include "opensov/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace osov {

int openmp_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<CMatrix> transfer_batch(const ModelParams& p, const BoundaryParams& b, const std::vector<cd>& points,
                                    Exec exec) {
    const int n = int(points.size());
    std::vector<CMatrix> out(n);
    if (exec == Exec::serial) {
        for (int i = 0; i < n; ++i) out[i] = transfer_matrix(p, b, points[i]);
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) out[i] = transfer_matrix(p, b, points[i]);
    return out;
}

std::vector<CMatrix> a_minus_action_batch(const Gauge& g, const SovBasis& left, const std::vector<cd>& points,
                                          Exec exec) {
    const int n = g.model().n_sites, dim = 1 << n, np = int(points.size());
    std::vector<CMatrix> out(np, CMatrix(dim, dim));
    auto work = [&](int task) {
        const int i = task / dim, k = task % dim;
        out[i].row(k) = a_minus_left_action(g, left, sov_h(k, n), points[i]);
    };
    const int tasks = np * dim;
    if (exec == Exec::serial) {
        for (int t = 0; t < tasks; ++t) work(t);
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < tasks; ++t) work(t);
    return out;
}

NewtonReport newton_multi_seed(const QuadraticSystem& sys, const std::vector<std::vector<cd>>& seeds,
                               const NewtonOptions& opt, Exec exec) {
    const int n = int(seeds.size());
    std::vector<SpectrumSolution> runs(n);
    if (exec == Exec::serial) {
        for (int i = 0; i < n; ++i) runs[i] = newton_solve(sys, seeds[i], opt);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) runs[i] = newton_solve(sys, seeds[i], opt);
    }
    return collect_roots(std::move(runs), opt);
}

NewtonReport homotopy_all_paths(const QuadraticSystem& sys, std::uint64_t seed, const NewtonOptions& opt, Exec exec) {
    const int n = 1 << sys.size();
    const cd gamma = homotopy_gamma(seed);
    std::vector<SpectrumSolution> runs(n);
    if (exec == Exec::serial) {
        for (int k = 0; k < n; ++k) runs[k] = track_homotopy_path(sys, gamma, k, opt);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < n; ++k) runs[k] = track_homotopy_path(sys, gamma, k, opt);
    }
    return collect_roots(std::move(runs), opt);
}

PairCheck random_pair_scalar_check(const Gauge& g, cd beta, cd z_beta_m2, int pairs, std::uint64_t seed, Exec exec) {
    const ModelParams& p = g.model();
    std::vector<double> err(pairs);
    auto work = [&](int i) {
        const SeparateState o = random_separate_state(Side::left, beta, p.n_sites, seed + 2 * std::uint64_t(i));
        const SeparateState r = random_separate_state(Side::right, beta, p.n_sites, seed + 2 * std::uint64_t(i) + 1);
        const cd d = scalar_product_det(p, beta, o, r, z_beta_m2);
        const cd s = scalar_product_direct_sum(g, beta, o, r, z_beta_m2);
        err[i] = std::abs(d - s) / std::abs(s);
    };
    if (exec == Exec::serial) {
        for (int i = 0; i < pairs; ++i) work(i);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < pairs; ++i) work(i);
    }
    PairCheck out{pairs, 0.0};
    for (double e : err) out.max_rel_error = std::max(out.max_rel_error, e);
    return out;
}

}  // namespace osov
