#pragma once

#include <span>
#include <vector>

#include "vvl/field.hpp"

namespace vvl {

enum class Measure { plain, radial };

/// Quadrature of a 1D field: sum w_i f_i (plain) or sum w_i r_i f_i (radial).
double integrate(const ScalarField1D& field, Measure measure = Measure::plain);

/// Tensorized quadrature of a 2D field; the periodic direction carries the
/// uniform weight `spacing`.
double integrate(const ScalarField2D& field, Measure measure = Measure::plain);

/// Translates each periodic row j of the field by row_shifts[j], with
/// trigonometric interpolation (exact for resolved modes).
ScalarField2D periodic_shift(const ScalarField2D& field, std::span<const double> row_shifts);

/// Spectral derivative of every periodic row.
ScalarField2D periodic_derivative(const ScalarField2D& field);

/// Second-order derivative along the graded axis (3-point nonuniform
/// stencils; one-sided at the endpoints).
ScalarField1D normal_derivative(const ScalarField1D& field);
ScalarField2D normal_derivative(const ScalarField2D& field);

}  // namespace vvl
