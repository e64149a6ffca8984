#pragma once

#include <vector>

#include "thinheat/evolution.hpp"
#include "thinheat/field.hpp"
#include "thinheat/projection.hpp"
#include "thinheat/types.hpp"

namespace thinheat {

/// lambda0_n = pi^2 (n-1)^2 for n >= 1, the eps -> 0 limit of the n-th sorted
/// eigenvalue; arithmetic matches eigenvalue((n-1, 0), eps) bitwise.
double eigenvalue1d(int n);

/// Normalized eigenfunction for lambda0_n on [0,1]: 1 for n = 1, and
/// sqrt(2) cos((n-1) pi x) for n >= 2.
double eigenfunction1d(int n, double x);

class SpectralState1D;
SpectralState1D evolve(const SpectralState1D& state, double t);

/// Dense prefix n = 1..K of limit-problem coefficients, with the same lazy
/// elapsed-time evolution as SpectralState.
class SpectralState1D {
  public:
    explicit SpectralState1D(std::vector<double> coefficients);

    int truncation_count() const { return static_cast<int>(base_.size()); }
    std::size_t size() const { return base_.size(); }

    int n(std::size_t k) const { return static_cast<int>(k) + 1; }
    double lambda(std::size_t k) const { return eigenvalue1d(static_cast<int>(k) + 1); }
    double coefficient(std::size_t k) const {
        return base_[k] * detail::decay_factor(elapsed_, lambda(k));
    }

    double elapsed() const { return elapsed_; }
    std::vector<double> coefficients() const;
    double sum_coeff_sq() const;

  private:
    friend SpectralState1D evolve(const SpectralState1D& state, double t);

    std::vector<double> base_;
    double elapsed_ = 0.0;
};

/// Simpson quadrature of f*g over [0,1].
double inner_product1d(const GridField1D& f, const GridField1D& g);

/// Coefficients of f against the first `count` limit eigenfunctions.
SpectralState1D project1d(const GridField1D& f, int count);

/// Pointwise sum of coefficient * eigenfunction1d on an nx-node grid.
GridField1D reconstruct1d(const SpectralState1D& state, int nx);

/// Heat flow of the limit problem on (0,1): project, decay, reconstruct on
/// the input grid, with the truncation count chosen per the policy.
GridField1D evolve1d(const GridField1D& v0, double t, const TruncationPolicy& policy = {},
                     SolveInfo* info = nullptr);

/// The constant-in-x2 extension u_hat(x1, x2) = u(x1) on the reference square.
GridField embed(const GridField1D& u, int nx2);

/// Per-column Simpson average over x2; the L2-orthogonal projection of f onto
/// x2-independent fields. f must be a reference-square field.
GridField1D vertical_average(const GridField& f);

}  // namespace thinheat
