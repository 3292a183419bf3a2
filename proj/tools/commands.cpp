#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace sovchain {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json cjson(cd z) { return json::array({z.real(), z.imag()}); }

// %.17g keeps the CSV lossless
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string cnum(cd z) { return num(z.real()) + "," + num(z.imag()); }

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
    if (dir.empty()) return;
    fs::create_directories(dir);
    std::ofstream f(fs::path(dir) / name, std::ios::binary);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
}

json check_json(const osov::CheckResult& c) {
    return {{"suite", c.suite}, {"check", c.name}, {"relation", c.relation},
            {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}};
}

json params_json(const Resolved& r) {
    json xi = json::array();
    for (cd z : r.p.xi) xi.push_back(cjson(z));
    const osov::BoundaryParams& b = r.b;
    return {{"n_sites", r.p.n_sites}, {"eta", cjson(r.p.eta)}, {"xi", xi},
            {"boundary", {{"zeta_minus", cjson(b.zeta_m)}, {"kappa_minus", cjson(b.kappa_m)}, {"tau_minus", cjson(b.tau_m)},
                          {"zeta_plus", cjson(b.zeta_p)}, {"kappa_plus", cjson(b.kappa_p)}, {"tau_plus", cjson(b.tau_p)}}},
            {"alpha", cjson(r.alpha)}, {"gauge_k", r.gauge_k}, {"beta", cjson(r.beta)}};
}

json applicability_json(const osov::SovApplicability& a) {
    json cons = json::array();
    for (const auto& c : a.constructions)
        cons.push_back({{"name", c.name}, {"feasible", c.feasible}, {"violated", c.violated}});
    return {{"fail_i", a.fail_i}, {"fail_ii", a.fail_ii}, {"verdict", a.verdict()}, {"constructions", cons}};
}

// the output location is not part of the run, so reports do not depend on it
json report_config(const RunConfig& c) {
    json j = to_json(c);
    j.erase("out");
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<std::string> plan_suites(const std::string& name, const osov::SovApplicability& app) {
    std::vector<std::string> base;
    if (name == "all")
        base = osov::suite_names();
    else
        base.push_back(name);
    if (!app.fail_i && !app.fail_ii) return base;
    // one construction family is infeasible: keep bulk-level suites and the surviving SOV side
    const std::string side = app.fail_i ? "sov_right" : "sov_left";
    std::vector<std::string> out;
    bool sov_requested = false;
    for (const std::string& s : base) {
        if (s == "bulk" || s == "reflection")
            out.push_back(s);
        else
            sov_requested = true;
    }
    if (sov_requested) out.push_back(side);
    return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Resolved r = resolve(cfg);
    const osov::VerifyContext ctx = r.context(cfg.seed, cfg.tol_scale);
    const std::vector<std::string> suites = plan_suites(cfg.suite, r.applicability);
    if (r.applicability.fail_i || r.applicability.fail_ii)
        out << "note: " << (r.applicability.fail_i ? "Fail-SOV-i" : "Fail-SOV-ii")
            << " holds; running the " << (r.applicability.fail_i ? "right" : "left") << " construction only\n";

    json checks = json::array();
    int failed = 0, total = 0;
    for (const std::string& s : suites) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::vector<osov::CheckResult> res = osov::run_suite(s, ctx);
        for (const osov::CheckResult& c : res) {
            ++total;
            failed += !c.pass;
            out << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(10) << c.suite << std::setw(34) << c.name
                << std::scientific << std::setprecision(2) << c.residual << "  tol " << c.tolerance << "  ["
                << c.relation << "]\n";
            checks.push_back(check_json(c));
        }
        out << std::defaultfloat << "suite " << s << " done in " << std::fixed << std::setprecision(2) << elapsed(t0)
            << " s\n"
            << std::defaultfloat;
    }
    out << (failed ? "FAILED " : "OK ") << total - failed << "/" << total << " checks passed\n";

    const json report = {{"command", "verify"},   {"config", report_config(cfg)}, {"parameters", params_json(r)},
                         {"applicability", applicability_json(r.applicability)},
                         {"suites", suites},      {"checks", checks},
                         {"total", total},        {"failed", failed},       {"pass", failed == 0}};
    write_file(cfg.out, "verify.json", dump(report));
    return failed ? 1 : 0;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
    const Resolved r = resolve(cfg);
    if (r.applicability.fail_i || r.applicability.fail_ii)
        throw ConfigError(r.applicability.fail_i ? "Fail-SOV-i" : "Fail-SOV-ii",
                          "spectrum needs both SOV constructions in this gauge");
    const osov::Gauge g(r.p, r.b, r.alpha);
    osov::SpectrumRunOptions opt;
    opt.newton_only = cfg.newton_only;
    opt.seed = cfg.seed;
    opt.probe = cfg.probe;
    const osov::SpectrumRun run = osov::run_spectrum(g, r.beta, opt);
    const int n = r.p.n_sites;
    const double tol = 1e-8 * cfg.tol_scale;

    std::ostringstream csv;
    csv << "index";
    for (int a = 1; a <= n; ++a) csv << ",x" << a << "_re,x" << a << "_im";
    csv << ",tau_probe_re,tau_probe_im,tau_half_re,tau_half_im,tau_half_ipi_re,tau_half_ipi_im"
           ",system_residual,functional_residual,eigen_residual,oracle_match,q_form,spurious\n";
    json rows = json::array();
    int good = 0;
    for (std::size_t i = 0; i < run.solutions.size(); ++i) {
        const osov::SpectrumSolution& s = run.solutions[i];
        const cd tp = run.ansatz.tau(cfg.probe, s.x);
        csv << i;
        json xs = json::array();
        for (cd x : s.x) {
            csv << "," << cnum(x);
            xs.push_back(cjson(x));
        }
        csv << "," << cnum(tp) << "," << cnum(run.ansatz.tau_half) << "," << cnum(run.ansatz.tau_half_ipi) << ","
            << num(s.system_residual) << "," << num(s.functional_residual) << "," << num(s.eigen_residual) << ","
            << num(run.oracle_match[i]) << "," << s.q_form << "," << (s.spurious ? 1 : 0) << "\n";
        rows.push_back({{"index", i}, {"x", xs}, {"tau_probe", cjson(tp)}, {"system_residual", s.system_residual},
                        {"functional_residual", s.functional_residual}, {"eigen_residual", s.eigen_residual},
                        {"oracle_match", run.oracle_match[i]}, {"q_form", s.q_form}, {"spurious", s.spurious},
                        {"iterations", s.iterations}});
        good += !s.spurious && s.eigen_residual < tol && run.oracle_match[i] < tol;
    }
    const bool complete = int(run.solutions.size()) == int(r.p.dim()) && run.multiset_distance_max < tol;
    const bool pass = complete && good == int(run.solutions.size());

    out << "spectrum N=" << n << " beta=" << r.beta << (cfg.newton_only ? " (newton-only)" : " (oracle-seeded)") << "\n"
        << "roots " << run.solutions.size() << " of " << r.p.dim() << ", verified " << good << "\n"
        << "newton seeds " << run.newton.seeds << ", converged " << run.newton.converged << ", singular "
        << run.newton.singular << ", distinct " << run.newton.roots.size() << "\n";
    if (cfg.newton_only)
        out << "homotopy paths " << run.homotopy.seeds << ", converged " << run.homotopy.converged << ", distinct "
            << run.homotopy.roots.size() << "\n";
    out
        << "multiset distance to dense spectrum " << std::scientific << std::setprecision(2)
        << run.multiset_distance_max << std::defaultfloat << "\n"
        << (pass ? "OK" : "FAILED") << "\n";

    const json summary = {
        {"command", "spectrum"},
        {"config", report_config(cfg)},
        {"parameters", params_json(r)},
        {"mode", cfg.newton_only ? "newton-only" : "oracle-seeded"},
        {"tau_half", cjson(run.ansatz.tau_half)},
        {"tau_half_ipi", cjson(run.ansatz.tau_half_ipi)},
        {"t_inf", cjson(run.ansatz.t_inf)},
        {"simplicity_gap", run.oracle.simplicity_gap},
        {"newton", {{"seeds", run.newton.seeds}, {"converged", run.newton.converged}, {"singular", run.newton.singular},
                    {"distinct_roots", run.newton.roots.size()}, {"max_iterations", run.newton.max_iterations_used}}},
        {"homotopy", {{"paths", run.homotopy.seeds}, {"converged", run.homotopy.converged},
                      {"distinct_roots", run.homotopy.roots.size()}}},
        {"expected_roots", r.p.dim()},
        {"verified_roots", good},
        {"multiset_distance", run.multiset_distance_max},
        {"solutions", rows},
        {"pass", pass}};
    write_file(cfg.out, "spectrum.csv", csv.str());
    write_file(cfg.out, "spectrum.json", dump(summary));
    return pass ? 0 : 1;
}

int cmd_scalar(const RunConfig& cfg, std::ostream& out) {
    const Resolved r = resolve(cfg);
    if (r.applicability.fail_i || r.applicability.fail_ii)
        throw ConfigError(r.applicability.fail_i ? "Fail-SOV-i" : "Fail-SOV-ii",
                          "scalar products need both SOV constructions in this gauge");
    const osov::Gauge g(r.p, r.b, r.alpha);
    osov::SpectrumRunOptions opt;
    opt.seed = cfg.seed;
    opt.probe = cfg.probe;
    const osov::SpectrumRun run = osov::run_spectrum(g, r.beta, opt);
    const int m = int(run.solutions.size());

    std::vector<std::pair<int, int>> pairs = cfg.pairs;
    if (pairs.empty())
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) pairs.emplace_back(i, j);
    for (auto [i, j] : pairs)
        if (i < 0 || j < 0 || i >= m || j >= m)
            throw ConfigError("state-index", "unknown eigenstate index in pair (" + std::to_string(i) + "," +
                                                 std::to_string(j) + "), have " + std::to_string(m));

    const cd z = osov::sov_normalization(g, r.beta - 2.0);
    std::vector<osov::SeparateState> lefts, rights;
    std::vector<cd> diag(m);
    for (const osov::SpectrumSolution& s : run.solutions) {
        lefts.push_back(osov::eigenstate_as_separate(s, osov::Side::left, r.beta));
        rights.push_back(osov::eigenstate_as_separate(s, osov::Side::right, r.beta));
    }
    for (int i = 0; i < m; ++i) diag[i] = osov::scalar_product_det(r.p, r.beta, lefts[i], rights[i], z);

    std::ostringstream csv;
    csv << "left,right,det_re,det_im,direct_re,direct_im,rel_error,ratio_re,ratio_im\n";
    json rows = json::array();
    double worst = 0.0, cross = 0.0, diag_min = std::numeric_limits<double>::infinity();
    for (auto [i, j] : pairs) {
        const cd d = osov::scalar_product_det(r.p, r.beta, lefts[i], rights[j], z);
        const cd direct = osov::scalar_product_direct_sum(g, r.beta, lefts[i], rights[j], z);
        const double err = std::abs(d - direct) / std::max(std::abs(direct), std::abs(diag[i]));
        // normalized by the geometric mean of the diagonal pairings, so Z drops out
        const cd ratio = d / std::sqrt(diag[i] * diag[j]);
        worst = std::max(worst, err);
        if (i == j)
            diag_min = std::min(diag_min, std::abs(d) / std::abs(z));
        else
            cross = std::max(cross, std::abs(ratio));
        csv << i << "," << j << "," << cnum(d) << "," << cnum(direct) << "," << num(err) << "," << cnum(ratio) << "\n";
        rows.push_back({{"left", i}, {"right", j}, {"det", cjson(d)}, {"direct", cjson(direct)}, {"rel_error", err},
                        {"ratio", cjson(ratio)}});
    }
    const double tol = cfg.tol_scale;
    const bool pass = worst < 1e-9 * tol && cross < 1e-8 * tol && diag_min > 0.0;
    out << "scalar N=" << r.p.n_sites << " pairs " << pairs.size() << "\n"
        << std::scientific << std::setprecision(2) << "determinant vs direct max rel error " << worst << "\n"
        << "max off-diagonal ratio " << cross << "\n"
        << "min |diagonal|/|Z| " << diag_min << std::defaultfloat << "\n"
        << (pass ? "OK" : "FAILED") << "\n";
    const json summary = {{"command", "scalar"},        {"config", report_config(cfg)}, {"parameters", params_json(r)},
                          {"z_beta_m2", cjson(z)},      {"max_rel_error", worst}, {"max_offdiagonal_ratio", cross},
                          {"min_diagonal_over_z", diag_min}, {"pairs", rows},     {"pass", pass}};
    write_file(cfg.out, "scalar.csv", csv.str());
    write_file(cfg.out, "scalar.json", dump(summary));
    return pass ? 0 : 1;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (cfg.sweep_count < 1) throw ConfigError("config", "sweep_count must be positive");
    struct Row {
        std::uint64_t seed = 0;
        std::string status;  // ok / failed / the violated condition
        int total = 0, failed = 0;
        std::string worst_check;
        double worst_ratio = 0.0;  // residual / tolerance
    };
    std::vector<Row> rows(cfg.sweep_count);
    // config errors are collected per row; resolve up front so the parallel loop cannot throw
    std::vector<std::optional<Resolved>> resolved(cfg.sweep_count);
    for (int i = 0; i < cfg.sweep_count; ++i) {
        RunConfig c = cfg;
        c.seed = cfg.seed + std::uint64_t(i);
        rows[i].seed = c.seed;
        try {
            resolved[i] = resolve(c);
        } catch (const ConfigError& e) {
            rows[i].status = e.condition;
        }
    }
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < cfg.sweep_count; ++i) {
        if (!resolved[i]) continue;
        const Resolved& r = *resolved[i];
        const osov::VerifyContext ctx = r.context(rows[i].seed, cfg.tol_scale);
        Row& row = rows[i];
        for (const std::string& s : plan_suites(cfg.suite, r.applicability))
            for (const osov::CheckResult& c : osov::run_suite(s, ctx)) {
                ++row.total;
                row.failed += !c.pass;
                const double ratio = c.tolerance > 0.0 && c.residual == c.residual ? c.residual / c.tolerance : 0.0;
                if (!c.pass && (row.worst_check.empty() || ratio > row.worst_ratio)) {
                    row.worst_check = c.suite + "/" + c.name;
                    row.worst_ratio = ratio;
                }
            }
        row.status = row.failed ? "failed" : "ok";
    }

    std::ostringstream csv;
    csv << "seed,status,checks,failed,worst_failed_check\n";
    int bad = 0;
    for (const Row& row : rows) {
        csv << row.seed << "," << row.status << "," << row.total << "," << row.failed << "," << row.worst_check << "\n";
        out << "seed " << row.seed << ": " << row.status << " (" << row.total - row.failed << "/" << row.total << ")"
            << (row.worst_check.empty() ? "" : "  worst " + row.worst_check) << "\n";
        bad += row.status == "failed";
    }
    out << (bad ? "FAILED " : "OK ") << cfg.sweep_count - bad << "/" << cfg.sweep_count << " seeds clean\n";
    write_file(cfg.out, "sweep.csv", csv.str());
    return bad ? 1 : 0;
}

}  // namespace sovchain
