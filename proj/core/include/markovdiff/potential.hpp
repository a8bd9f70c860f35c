#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "markovdiff/field.hpp"

namespace markovdiff {

/// External potential usable both on and off the grid (characteristics need
/// point evaluation; grid solvers sample it).
class Potential {
public:
    static Potential free();
    /// Isotropic harmonic well 0.5 * k * |x|^2.
    static Potential harmonic(double k);
    /// 1-D tabulated potential, piecewise-cubic Hermite interpolation.
    static Potential table(std::vector<double> x, std::vector<double> v);

    double value(const std::array<double, 3>& x, int dim) const { return value_(x, dim); }
    double gradient(const std::array<double, 3>& x, int dim, int axis) const {
        return grad_(x, dim, axis);
    }

    double value1d(double x) const { return value_({x, 0, 0}, 1); }
    double gradient1d(double x) const { return grad_({x, 0, 0}, 1, 0); }

    ScalarField sample(const Grid& grid) const;

    const std::string& kind() const { return kind_; }

private:
    std::function<double(const std::array<double, 3>&, int)> value_;
    std::function<double(const std::array<double, 3>&, int, int)> grad_;
    std::string kind_;
};

}  // namespace markovdiff
