#include "ioc/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace ioc::harness {

namespace {

// NaN sorts first so that absent coordinates group ahead of numeric ones.
double sort_key(double v) { return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v; }

nlohmann::json number_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

}  // namespace

CheckRecord make_record(std::string suite, std::string check, double c, double n, double x,
                        double observed, double target, double margin, double tol) {
    CheckRecord r;
    r.suite = std::move(suite);
    r.check = std::move(check);
    r.c = c;
    r.n = n;
    r.x = x;
    r.observed = observed;
    r.target = target;
    r.margin = margin;
    r.tol = tol;
    r.pass = !std::isnan(margin) && margin >= -tol;
    return r;
}

SuiteReport::SuiteReport(std::vector<CheckRecord> records) : records_(std::move(records)) {
    std::stable_sort(records_.begin(), records_.end(), [](const CheckRecord& a, const CheckRecord& b) {
        return std::make_tuple(a.suite, sort_key(a.c), sort_key(a.n), sort_key(a.x), a.check) <
               std::make_tuple(b.suite, sort_key(b.c), sort_key(b.n), sort_key(b.x), b.check);
    });
    for (const auto& r : records_) {
        SuiteSummary& s = summary_[r.suite];
        (r.pass ? s.pass : s.fail) += 1;
        if (!std::isnan(r.margin)) {
            s.worst_margin = std::min(s.worst_margin, r.margin);
        }
    }
}

long SuiteReport::failures() const {
    long total = 0;
    for (const auto& [name, s] : summary_) {
        total += s.fail;
    }
    return total;
}

nlohmann::json SuiteReport::to_json(bool failures_only) const {
    nlohmann::json out;
    out["summary"] = nlohmann::json::object();
    for (const auto& [name, s] : summary_) {
        out["summary"][name] = {{"pass", s.pass}, {"fail", s.fail},
                                {"worst_margin", number_or_null(s.worst_margin)}};
    }
    out["records"] = nlohmann::json::array();
    for (const auto& r : records_) {
        if (failures_only && r.pass) continue;
        nlohmann::json j = {
            {"suite", r.suite},
            {"check", r.check},
            {"c", number_or_null(r.c)},
            {"n", number_or_null(r.n)},
            {"x", number_or_null(r.x)},
            {"observed", number_or_null(r.observed)},
            {"target", number_or_null(r.target)},
            {"margin", number_or_null(r.margin)},
            {"tol", r.tol},
            {"pass", r.pass},
        };
        if (!r.detail.empty()) j["detail"] = r.detail;
        out["records"].push_back(std::move(j));
    }
    return out;
}

}  // namespace ioc::harness
