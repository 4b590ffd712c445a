#include "ioc/harness/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace ioc::harness {

namespace {

constexpr std::pair<Suite, const char*> kSuiteNames[] = {
    {Suite::Normalization, "normalization"}, {Suite::Convexity, "convexity"},
    {Suite::LogConvexity, "logconvexity"},   {Suite::Ode, "ode"},
    {Suite::Bounds, "bounds"},               {Suite::Legendre, "legendre"},
    {Suite::Bessel, "bessel"},               {Suite::Identities, "identities"},
    {Suite::Entropy, "entropy"},
};

}  // namespace

std::string to_string(Suite suite) {
    for (const auto& [s, name] : kSuiteNames) {
        if (s == suite) return name;
    }
    return "unknown";
}

Suite parse_suite(const std::string& name) {
    for (const auto& [s, n] : kSuiteNames) {
        if (name == n) return s;
    }
    throw ParameterError("unknown suite '" + name + "'");
}

std::set<Suite> all_suites() {
    std::set<Suite> out;
    for (const auto& entry : kSuiteNames) {
        out.insert(entry.first);
    }
    return out;
}

std::set<Suite> parse_suite_list(const std::string& list) {
    std::set<Suite> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) continue;
        if (item == "all") {
            return all_suites();
        }
        out.insert(parse_suite(item));
    }
    if (out.empty()) {
        throw ParameterError("suite list is empty");
    }
    return out;
}

std::vector<std::int64_t> SweepConfig::default_trials() {
    std::vector<std::int64_t> out(40);
    for (std::int64_t l = 1; l <= 40; ++l) {
        out[static_cast<std::size_t>(l - 1)] = l;
    }
    return out;
}

void SweepConfig::validate() const {
    eval.validate();
    if (x_points < 3) throw ParameterError("x_points must be at least 3");
    if (!(x_max > 0.0) || !std::isfinite(x_max)) throw ParameterError("x_max must be positive");
    if (identities_max_n < 0 || identities_max_n > 500) {
        throw ParameterError("max_n must lie in [0, 500]");
    }
    if (legendre_max_n < 2) throw ParameterError("legendre_max_n must be at least 2");
    if (quadrature_max_n < 1 || quadrature_max_n > 10'000) {
        throw ParameterError("quadrature_max_n must lie in [1, 10^4]");
    }
    if (tol_override && !(*tol_override >= 0.0)) {
        throw ParameterError("tol must be nonnegative");
    }
    if (workers < 0) throw ParameterError("workers must be nonnegative");
    for (double c : c_list) {
        if (!std::isfinite(c)) throw ParameterError("c values must be finite");
    }
}

std::vector<FamilyParams> SweepConfig::families() const {
    std::vector<double> cs = c_list;
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::vector<double> ns = n_list;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::vector<std::int64_t> ls = l_list;
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());

    std::vector<FamilyParams> out;
    for (double c : cs) {
        if (c < 0.0 && !n_explicit) {
            for (std::int64_t l : ls) {
                if (l >= 1) out.push_back(FamilyParams::from_trials(l, c));
            }
            continue;
        }
        for (double n : ns) {
            try {
                out.emplace_back(n, c);
            } catch (const ParameterError&) {
                // filtered: (n, c) violates the family constraint
            }
        }
    }
    return out;
}

int SweepConfig::worker_count() const {
    if (workers > 0) return workers;
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void apply_json_config(SweepConfig& cfg, const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParameterError(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParameterError("config: top level must be an object");
    }
    try {
        if (doc.contains("c")) cfg.c_list = doc["c"].get<std::vector<double>>();
        if (doc.contains("n")) {
            cfg.n_list = doc["n"].get<std::vector<double>>();
            cfg.n_explicit = true;
        }
        if (doc.contains("l")) {
            cfg.l_list = doc["l"].get<std::vector<std::int64_t>>();
            cfg.n_explicit = false;
        }
        if (doc.contains("x_points")) cfg.x_points = doc["x_points"].get<int>();
        if (doc.contains("x_max")) cfg.x_max = doc["x_max"].get<double>();
        if (doc.contains("suites")) {
            cfg.suites.clear();
            for (const auto& s : doc["suites"]) {
                cfg.suites.insert(parse_suite(s.get<std::string>()));
            }
        }
        if (doc.contains("max_n")) cfg.identities_max_n = doc["max_n"].get<int>();
        if (doc.contains("legendre_max_n")) cfg.legendre_max_n = doc["legendre_max_n"].get<int>();
        if (doc.contains("quadrature_max_n")) {
            cfg.quadrature_max_n = doc["quadrature_max_n"].get<int>();
        }
        if (doc.contains("tol") && !doc["tol"].is_null()) cfg.tol_override = doc["tol"].get<double>();
        if (doc.contains("workers")) cfg.workers = doc["workers"].get<int>();
        if (doc.contains("eval")) {
            const auto& ev = doc["eval"];
            if (ev.contains("rel_tol")) cfg.eval.rel_tol = ev["rel_tol"].get<double>();
            if (ev.contains("max_terms")) cfg.eval.max_terms = ev["max_terms"].get<std::int64_t>();
            if (ev.contains("deriv_step")) cfg.eval.deriv_step = ev["deriv_step"].get<double>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("config: ") + e.what());
    }
}

}  // namespace ioc::harness
