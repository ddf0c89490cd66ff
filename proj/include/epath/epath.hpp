#pragma once

// Spectra of a quantum particle on an elliptical path: symmetry-adapted
// Rayleigh-Ritz diagonalization for two Hamiltonians (one non-Hermitian with
// real spectrum, one Hermitian) plus an exact rational perturbation series in
// the eccentricity parameter xi = (b^2 - a^2) / a^2.

#include "epath/analysis.hpp"
#include "epath/format.hpp"
#include "epath/matrix_builder.hpp"
#include "epath/model.hpp"
#include "epath/perturbation.hpp"
#include "epath/quadrature.hpp"
#include "epath/rational.hpp"
#include "epath/solver.hpp"
#include "epath/trigpoly.hpp"

namespace epath {

inline constexpr const char* library_version = "0.1.0";

}  // namespace epath
