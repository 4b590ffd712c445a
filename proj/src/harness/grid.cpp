#include "ioc/harness/grid.hpp"

#include <algorithm>

namespace ioc::harness {

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 2) {
        throw ParameterError("linspace: need at least two points");
    }
    std::vector<double> out(static_cast<std::size_t>(points));
    const double last = static_cast<double>(points - 1);
    for (int i = 0; i < points; ++i) {
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * (static_cast<double>(i) / last);
    }
    out.back() = hi;
    return out;
}

std::vector<double> x_grid(const FamilyParams& params, int points, double x_max) {
    if (points < 3) {
        throw ParameterError("x_grid: x_points must be at least 3");
    }
    const Domain dom = params.domain();
    const double length = dom.bounded() ? dom.upper : x_max;
    if (!(length > 0.0)) {
        throw ParameterError("x_grid: x_max must be positive");
    }
    std::vector<double> grid = linspace(0.0, length, points);
    const double margin = 1e-6 * length;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        grid[i] = std::clamp(grid[i], margin, length - margin);
    }
    return grid;
}

}  // namespace ioc::harness
