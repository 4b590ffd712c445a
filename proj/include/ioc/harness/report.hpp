#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace ioc::harness {

inline constexpr double kNoValue = std::numeric_limits<double>::quiet_NaN();

/// One verified inequality or identity. `margin` is normalized so that
/// margin >= 0 means satisfied outright; the check passes when
/// margin >= -tol. Absent coordinates (c for Legendre records, x for
/// family-level checks) are NaN and serialize as null.
struct CheckRecord {
    std::string suite;
    std::string check;
    double c = kNoValue;
    double n = kNoValue;
    double x = kNoValue;
    double observed = kNoValue;
    double target = kNoValue;
    double margin = kNoValue;
    double tol = 0.0;
    bool pass = false;
    std::string detail;
};

/// margin and tol filled in; pass derived from them.
CheckRecord make_record(std::string suite, std::string check, double c, double n, double x,
                        double observed, double target, double margin, double tol);

struct SuiteSummary {
    long pass = 0;
    long fail = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
};

class SuiteReport {
public:
    explicit SuiteReport(std::vector<CheckRecord> records);

    [[nodiscard]] const std::vector<CheckRecord>& records() const { return records_; }
    [[nodiscard]] const std::map<std::string, SuiteSummary>& summary() const { return summary_; }
    [[nodiscard]] long failures() const;
    [[nodiscard]] bool all_pass() const { return failures() == 0; }

    /// {summary: {suite: {pass, fail, worst_margin}}, records: [...]}. With
    /// failures_only the records array holds only failing checks.
    [[nodiscard]] nlohmann::json to_json(bool failures_only = false) const;

private:
    std::vector<CheckRecord> records_;
    std::map<std::string, SuiteSummary> summary_;
};

}  // namespace ioc::harness
