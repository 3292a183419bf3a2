#include "config.hpp"

#include <cmath>
#include <fstream>

namespace sovchain {

using nlohmann::json;

namespace {

json cjson(cd z) { return json::array({z.real(), z.imag()}); }

cd cparse(const json& j, const char* what) {
    if (j.is_number()) return cd(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cd(j[0].get<double>(), j[1].get<double>());
    throw ConfigError("config", std::string(what) + " must be a number or an [re, im] pair");
}

template <class T>
void read(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

void read_c(const json& j, const char* key, cd& out) {
    if (j.contains(key)) out = cparse(j.at(key), key);
}

}  // namespace

json to_json(const RunConfig& c) {
    json j;
    j["n_sites"] = c.n_sites;
    j["seed"] = c.seed;
    j["eta"] = cjson(c.eta);
    if (c.xi) {
        json a = json::array();
        for (const cd& z : *c.xi) a.push_back(cjson(z));
        j["xi"] = a;
    }
    if (c.boundary) {
        const BoundarySpec& b = *c.boundary;
        j["boundary"] = {{"zeta_minus", cjson(b.zeta_m)}, {"kappa_minus", cjson(b.kappa_m)}, {"tau_minus", cjson(b.tau_m)},
                         {"zeta_plus", cjson(b.zeta_p)},  {"kappa_plus", cjson(b.kappa_p)},  {"tau_plus", cjson(b.tau_p)}};
    }
    if (c.alpha) j["alpha"] = cjson(*c.alpha);
    j["gauge_k"] = c.gauge_k;
    if (!c.engineer.empty()) j["engineer"] = c.engineer;
    j["suite"] = c.suite;
    j["tol_scale"] = c.tol_scale;
    if (!c.out.empty()) j["out"] = c.out;
    j["newton_only"] = c.newton_only;
    j["probe"] = cjson(c.probe);
    j["sweep_count"] = c.sweep_count;
    if (!c.pairs.empty()) {
        json a = json::array();
        for (auto [l, r] : c.pairs) a.push_back(json::array({l, r}));
        j["pairs"] = a;
    }
    return j;
}

RunConfig config_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config", "top level must be an object");
    RunConfig c;
    try {
        read(j, "n_sites", c.n_sites);
        read(j, "seed", c.seed);
        read_c(j, "eta", c.eta);
        if (j.contains("xi")) {
            std::vector<cd> xi;
            for (const json& z : j.at("xi")) xi.push_back(cparse(z, "xi"));
            c.xi = xi;
        }
        if (j.contains("boundary")) {
            const json& b = j.at("boundary");
            BoundarySpec s;
            const char* keys[] = {"zeta_minus", "kappa_minus", "tau_minus", "zeta_plus", "kappa_plus", "tau_plus"};
            cd* dst[] = {&s.zeta_m, &s.kappa_m, &s.tau_m, &s.zeta_p, &s.kappa_p, &s.tau_p};
            for (int i = 0; i < 6; ++i) {
                if (!b.contains(keys[i])) throw ConfigError("config", std::string("boundary.") + keys[i] + " missing");
                *dst[i] = cparse(b.at(keys[i]), keys[i]);
            }
            c.boundary = s;
        }
        if (j.contains("alpha")) c.alpha = cparse(j.at("alpha"), "alpha");
        read(j, "gauge_k", c.gauge_k);
        read(j, "engineer", c.engineer);
        read(j, "suite", c.suite);
        read(j, "tol_scale", c.tol_scale);
        read(j, "out", c.out);
        read(j, "newton_only", c.newton_only);
        read_c(j, "probe", c.probe);
        read(j, "sweep_count", c.sweep_count);
        if (j.contains("pairs"))
            for (const json& p : j.at("pairs")) c.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    } catch (const json::exception& e) {
        throw ConfigError("config", e.what());
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config", e.what());
    }
    return config_from_json(j);
}

osov::VerifyContext Resolved::context(std::uint64_t seed, double tol_scale) const {
    return osov::VerifyContext{p, b, alpha, gauge_k, seed, tol_scale};
}

Resolved resolve(const RunConfig& c) {
    if (c.n_sites < 1 || c.n_sites > 10) throw ConfigError("config", "n_sites must be in 1..10");
    if (!(c.tol_scale > 0.0)) throw ConfigError("config", "tol_scale must be positive");
    if (std::abs(std::sinh(c.eta)) < 1e-12) throw ConfigError("config", "eta must not lie in i*pi*Z");

    Resolved r;
    r.p = osov::seeded_model(c.n_sites, c.seed, c.eta);
    if (c.xi) {
        if (int(c.xi->size()) != c.n_sites) throw ConfigError("config", "xi must have n_sites entries");
        r.p.xi = *c.xi;
    }
    if (c.boundary) {
        const BoundarySpec& s = *c.boundary;
        for (cd z : {s.zeta_m, s.zeta_p})
            if (std::abs(std::sinh(z)) < 1e-12) throw ConfigError("boundary", "zeta must not lie in i*pi*Z");
        r.b = osov::make_boundary(s.zeta_m, s.kappa_m, s.tau_m, s.zeta_p, s.kappa_p, s.tau_p);
    } else {
        r.b = osov::seeded_boundary(c.seed);
    }
    if (c.engineer == "fail_i")
        r.b = osov::engineer_failure(r.p, r.b, +1);
    else if (c.engineer == "fail_ii")
        r.b = osov::engineer_failure(r.p, r.b, -1);
    else if (!c.engineer.empty())
        throw ConfigError("config", "engineer must be fail_i or fail_ii");

    if (auto v = osov::check_esov(r.p)) throw ConfigError("E-SOV", v->substr(v->find(": ") + 2));
    r.alpha = c.alpha ? *c.alpha : osov::seeded_alpha(c.seed);
    r.gauge_k = c.gauge_k;
    r.beta = osov::triangular_gauge(r.p, r.b, r.alpha, r.gauge_k).beta;
    for (cd shift : {-4.0, -2.0, 0.0, 2.0})
        if (std::abs(std::sinh((r.beta + shift) * r.p.eta)) < 1e-10)
            throw ConfigError("Triangular-gauge-K+B", "gauge parameter beta makes sinh(beta*eta) vanish");
    if (int s = osov::a_minus_vanishing_site(r.p, r.b))
        throw ConfigError("A-minus-vanishing", "A-(eta/2 - xi_" + std::to_string(s) + ") = 0");
    r.applicability = osov::sov_applicability(r.p, r.b);
    if (!r.applicability.applicable())
        throw ConfigError("Fail-SOV", "both failure conditions hold; " + r.applicability.verdict());
    return r;
}

}  // namespace sovchain
