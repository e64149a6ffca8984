#pragma once

#include "thinheat/field.hpp"
#include "thinheat/types.hpp"

namespace thinheat {

/// Settings for the finite-difference reference solver. The scheme is locked
/// to alternating-direction implicit (Peaceman-Rachford) stepping. nx1/nx2
/// equal to 0 inherit the node counts of the initial field; nonzero values
/// must match them, since the solver never resamples.
struct FDConfig {
    int nx1 = 0;
    int nx2 = 0;
    double dt = 0.0;
};

/// ADI time stepping for v_t = v_{x1x1} + (1/eps^2) v_{x2x2} on the reference
/// square with homogeneous Neumann boundaries (mirror ghost nodes). Runs
/// floor(t/dt) full steps plus one scaled partial step when t is not an
/// integer multiple of dt. Kept deliberately free of any spectral machinery.
GridField fd_solve(const GridField& v0, Epsilon eps, double t, const FDConfig& cfg);

/// Trapezoidal mean of the samples over the field's own domain.
double fd_mean(const GridField& f);

}  // namespace thinheat
