#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stabledrift {

// Uniform observation grid t_i = i * T / n on [0, T].
struct TimeGrid {
    double horizon = 1.0;
    std::size_t n_steps = 2;

    TimeGrid() = default;
    TimeGrid(double T, std::size_t n) : horizon(T), n_steps(n) {
        if (!(T > 0.0))
            throw std::domain_error("TimeGrid: horizon must be positive");
        if (n < 2)
            throw std::domain_error("TimeGrid: need at least 2 steps");
    }

    double dt() const { return horizon / static_cast<double>(n_steps); }
    std::size_t n_points() const { return n_steps + 1; }

    // t_n hits the horizon exactly.
    double time(std::size_t i) const {
        return horizon * (static_cast<double>(i) / static_cast<double>(n_steps));
    }

    bool operator==(const TimeGrid&) const = default;
};

// A scalar process observed at the grid points.
struct SamplePath {
    TimeGrid grid;
    std::vector<double> values; // size n_steps + 1

    SamplePath() = default;
    SamplePath(TimeGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.n_points())
            throw std::invalid_argument("SamplePath: values size must be n_steps + 1");
    }

    std::size_t size() const { return values.size(); }
    double front() const { return values.front(); }
    double back() const { return values.back(); }
};

} // namespace stabledrift
