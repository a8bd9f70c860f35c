#pragma once

#include <complex>
#include <vector>

#include "markovdiff/field.hpp"

namespace markovdiff {

/// Instantaneous state (R, S) of the wave description, rho = exp(2R).
/// S carries the flow phase: the velocity field is nu * grad(S).
struct WaveState {
    ScalarField R;
    ScalarField S;
    double t = 0.0;

    /// Builds a state from a density (normalized and floored here) and a phase.
    static WaveState from_density(const ScalarField& rho, const ScalarField& S, double t = 0.0);

    ScalarField rho() const;

    /// Complex wave function exp(R + i*beta_mag*S).
    std::vector<std::complex<double>> psi(double beta_mag) const;

    /// Recovers (R, S) from psi: R = log|psi| (floored), S = unwrapped phase / beta_mag,
    /// gauge-fixed. Valid for node-free states only.
    static WaveState from_psi(const Grid& grid, std::span<const std::complex<double>> psi,
                              double beta_mag, double t);
};

/// Unwraps a grid-sampled phase starting from the domain center, axis by axis.
std::vector<double> unwrap_phase(const Grid& grid, std::span<const double> wrapped);

}  // namespace markovdiff
