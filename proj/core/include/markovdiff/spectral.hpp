#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "markovdiff/grid.hpp"

namespace markovdiff::wave {

/// Sine-basis realization of the Laplacian on a grid with homogeneous
/// Dirichlet boundary values (boundary points held at zero). Supports
/// applying exp(theta * Laplacian) for complex theta, which covers both the
/// kinetic phase of the split step and real heat smoothing.
class DirichletSpectral {
public:
    explicit DirichletSpectral(const Grid& grid);
    ~DirichletSpectral();
    DirichletSpectral(const DirichletSpectral&) = delete;
    DirichletSpectral& operator=(const DirichletSpectral&) = delete;

    /// psi <- exp(theta * Laplacian) psi; boundary entries are zeroed.
    void apply_laplacian_exponential(std::complex<double> theta,
                                     std::vector<std::complex<double>>& psi) const;

    const Grid& grid() const { return grid_; }

private:
    struct Impl;
    Grid grid_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace markovdiff::wave
