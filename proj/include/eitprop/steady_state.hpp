#pragma once

#include "eitprop/density_matrix.hpp"
#include "eitprop/operators.hpp"

namespace eitprop {

/// Stationary state of the Lindbladian: solves L vec(rho) = 0 as a dense
/// linear system with the trace constraint substituted for the (redundant)
/// d/dt rho_00 row. Throws SingularSteadyStateError when the stationary
/// subspace is degenerate (rank deficiency beyond the trace redundancy).
DensityMatrix steady_state(const Matrix& h, const LindbladSet& lindblad);

}  // namespace eitprop
