#pragma once

#include <Eigen/Dense>

#include "markovdiff/field.hpp"

namespace markovdiff::stencil {

/// Dense 1-D derivative matrix of the given order (1 or 2), 4th-order central
/// stencils with one-sided closures on the outermost two rows per side.
/// Every row annihilates constants.
Eigen::MatrixXd derivative_matrix(const Grid& grid, int order);

/// Derivative of a field along one axis (any dim), same stencils.
ScalarField derivative(const ScalarField& f, int axis, int order);

/// Sum of second derivatives over all axes.
ScalarField laplacian(const ScalarField& f);

/// Sum over axes of the squared first derivative.
ScalarField gradient_square(const ScalarField& f);

}  // namespace markovdiff::stencil
