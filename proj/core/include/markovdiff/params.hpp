#pragma once

#include <limits>

namespace markovdiff {

/// Dynamical branch selected by the diffusion exponent lambda.
/// lambda > 1/2 linearizes to a complex wave equation (imaginary phase scale);
/// lambda == 1/2 degenerates to the viscous Hamilton-Jacobi description.
enum class ParamBranch {
    Classical,  ///< lambda == 1/2, hbar == 0
    Quantum     ///< lambda > 1/2, imaginary beta
};

/// Model constants of the generalized diffusion dynamics plus the derived
/// scales populated by validate_params().
struct ModelParams {
    double m = 1.0;       ///< particle mass
    double nu = 1.0;      ///< diffusion parameter (length^2/time)
    double lambda = 1.0;  ///< dimensionless quantum-pressure coefficient
    double c = 0.0;       ///< density-coupling energy constant
    double kappa = 0.0;   ///< viscous coupling (energy)
    double T = 0.0;       ///< temperature (energy units)

    // Derived; filled in by validate_params().
    double hbar = 0.0;  ///< m*nu*sqrt(2*lambda - 1); zero on the classical branch
    double beta_mag = std::numeric_limits<double>::infinity();
    ///< |beta| = 1/sqrt(2*lambda - 1); +inf on the classical branch
    double mu = std::numeric_limits<double>::infinity();
    ///< mobility nu/kappa; +inf for kappa == 0
    ParamBranch branch = ParamBranch::Quantum;

    /// Action scale m*nu/|beta| of the linearized equations (0 when classical).
    double action_scale() const { return beta_mag == std::numeric_limits<double>::infinity() ? 0.0 : m * nu / beta_mag; }
};

/// Validates the raw constants and populates the derived fields.
/// Rejects lambda < 1/2 (unphysical stationary states), non-positive m or nu,
/// negative kappa or T, and non-finite input.
ModelParams validate_params(ModelParams raw);

}  // namespace markovdiff
