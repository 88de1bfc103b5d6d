#include "polyent/textio.hpp"

#include <cmath>
#include <cstdlib>

namespace polyent {

GridSpec parse_grid(const std::string &text) {
    GridSpec g;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ParseError("grid spec '" + text + "' is not of the form a:b:step");
    char *end = nullptr;
    auto to_double = [&](const std::string &s) {
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw ParseError("grid spec: '" + s + "' is not a number");
        return v;
    };
    g.start = to_double(text.substr(0, c1));
    g.stop = to_double(text.substr(c1 + 1, c2 - c1 - 1));
    g.step = to_double(text.substr(c2 + 1));
    if (!(g.start < g.stop))
        throw ParseError("grid spec: start must be below stop");
    if (!(g.step > 0.0))
        throw ParseError("grid spec: step must be positive");
    return g;
}

std::vector<double> grid_points(const GridSpec &grid) {
    std::vector<double> pts;
    const double span = grid.stop - grid.start;
    const long long count = static_cast<long long>(std::floor(span / grid.step + 1e-9));
    pts.reserve(static_cast<size_t>(count) + 2);
    for (long long k = 0; k <= count; ++k) pts.push_back(grid.start + static_cast<double>(k) * grid.step);
    if (grid.stop - pts.back() > 1e-12 * std::max(1.0, std::abs(grid.stop)))
        pts.push_back(grid.stop);
    else
        pts.back() = grid.stop;
    return pts;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> pts(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        pts[static_cast<size_t>(k)] = a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
    pts.back() = b;
    return pts;
}

} // namespace polyent
