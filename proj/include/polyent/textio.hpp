// textio.hpp — number formatting and grid parsing shared by file I/O and the CLI.

#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "polyent/errors.hpp"

namespace polyent {

/// Shortest text form with 17 significant digits; round-trips any double.
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
};

/// Parses "a:b:step". Requires start < stop and step > 0.
GridSpec parse_grid(const std::string &text);

/// Points start, start+step, … plus the stop endpoint when the step does not
/// land on it exactly.
std::vector<double> grid_points(const GridSpec &grid);

/// n evenly spaced points including both endpoints (n >= 2).
std::vector<double> linspace(double a, double b, int n);

} // namespace polyent
