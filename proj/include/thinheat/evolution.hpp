#pragma once

#include "thinheat/field.hpp"
#include "thinheat/projection.hpp"
#include "thinheat/types.hpp"

namespace thinheat {

/// Controls how many modes the solver keeps. For t >= t_floor the count comes
/// from a certified bound on the decayed spectral tail; below t_floor the
/// solver falls back to driving the Parseval defect under tol^2.
struct TruncationPolicy {
    double tol = 1e-10;
    int max_modes = 4096;
    double t_floor = 1e-6;
};

/// Mode count plus whether the requested tail bound was actually met. When
/// the bound cannot be met within max_modes, count == max_modes and certified
/// is false.
struct TruncationChoice {
    int count = 0;
    bool certified = false;
};

/// How a solve picked its truncation; filled in when the caller passes a slot.
struct SolveInfo {
    int modes = 0;
    bool certified = false;
};

namespace detail {

/// Upper bound on sum over lattice modes with lambda >= lambda_cut of
/// e^{-2 t lambda}, by geometric comparison along each axis.
double spectral_tail_bound(Epsilon eps, double t, double lambda_cut);

/// Upper bound on sum_{n >= k0} e^{-theta n^2} for theta > 0.
double axis_tail_bound(double theta, int k0);

}  // namespace detail

/// Smallest K <= policy.max_modes with
/// norm_bound * sqrt(sum_{k > K} e^{-2 t lambda_k}) <= policy.tol, the tail
/// sum being replaced by its certified lattice bound. Requires
/// t >= policy.t_floor > 0; near t = 0 callers must use the Parseval-defect
/// pathway instead (solve does this automatically).
TruncationChoice choose_truncation(Epsilon eps, double t, double norm_bound,
                                   const TruncationPolicy& policy);

/// Heat flow on the reference square: project, decay, reconstruct on the
/// input grid. The truncation count follows the policy as described above.
GridField solve(const GridField& v0, Epsilon eps, double t, const TruncationPolicy& policy = {},
                SolveInfo* info = nullptr);

/// Heat flow on the physical rectangle [0,1] x [0,eps]. The uniform grids on
/// the two domains share nodes under (x1, x2) -> (x1, eps x2), so the pull
/// back and push forward reuse sample arrays without interpolation.
GridField solve_physical(const GridField& u0, double t, const TruncationPolicy& policy = {},
                         SolveInfo* info = nullptr);

}  // namespace thinheat
