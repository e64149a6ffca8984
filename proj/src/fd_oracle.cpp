#include "thinheat/fd_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace thinheat {

namespace {

// One spatial direction of the splitting. With c = (tau/2) * kappa / h^2 the
// mirrored-ghost second-difference operator A has rows [-2, 2], [1, -2, 1],
// [2, -2] (all times kappa/h^2), and the half-steps need (I + cA) products
// and (I - cA) tridiagonal solves. The matrix is the same for every line in
// the direction, so it is factored once.
class DirectionOp {
  public:
    DirectionOp(int n, double c) : n_(n), c_(c) { factor(); }

    // dst = (I + cA) src over one line with the given stride.
    void apply_plus(const double* src, double* dst, int stride) const {
        const int last = n_ - 1;
        dst[0] = (1.0 - 2.0 * c_) * src[0] + 2.0 * c_ * src[static_cast<std::ptrdiff_t>(stride)];
        for (int i = 1; i < last; ++i) {
            const std::ptrdiff_t p = static_cast<std::ptrdiff_t>(i) * stride;
            dst[p] = c_ * src[p - stride] + (1.0 - 2.0 * c_) * src[p] + c_ * src[p + stride];
        }
        const std::ptrdiff_t p = static_cast<std::ptrdiff_t>(last) * stride;
        dst[p] = 2.0 * c_ * src[p - stride] + (1.0 - 2.0 * c_) * src[p];
    }

    // x := (I - cA)^{-1} x over one line with the given stride.
    void solve_inplace(double* x, int stride) const {
        const int last = n_ - 1;
        for (int i = 1; i <= last; ++i) {
            const std::ptrdiff_t p = static_cast<std::ptrdiff_t>(i) * stride;
            x[p] -= lower_[static_cast<std::size_t>(i)] * x[p - stride];
        }
        std::ptrdiff_t p = static_cast<std::ptrdiff_t>(last) * stride;
        x[p] *= inv_diag_[static_cast<std::size_t>(last)];
        for (int i = last - 1; i >= 0; --i) {
            p = static_cast<std::ptrdiff_t>(i) * stride;
            x[p] = (x[p] - upper_[static_cast<std::size_t>(i)] * x[p + stride]) *
                   inv_diag_[static_cast<std::size_t>(i)];
        }
    }

  private:
    void factor() {
        upper_.assign(static_cast<std::size_t>(n_), 0.0);
        lower_.assign(static_cast<std::size_t>(n_), 0.0);
        inv_diag_.assign(static_cast<std::size_t>(n_), 0.0);
        const int last = n_ - 1;
        upper_[0] = -2.0 * c_;
        for (int i = 1; i < last; ++i) upper_[static_cast<std::size_t>(i)] = -c_;

        // Thomas elimination; diag 1 + 2c with sub-diagonal -c (-2c on the
        // last row). Diagonal dominance for c > 0 keeps every pivot >= 1.
        double diag = 1.0 + 2.0 * c_;
        inv_diag_[0] = 1.0 / diag;
        for (int i = 1; i <= last; ++i) {
            const double sub = (i == last) ? -2.0 * c_ : -c_;
            const double l = sub * inv_diag_[static_cast<std::size_t>(i - 1)];
            lower_[static_cast<std::size_t>(i)] = l;
            diag = 1.0 + 2.0 * c_ - l * upper_[static_cast<std::size_t>(i - 1)];
            inv_diag_[static_cast<std::size_t>(i)] = 1.0 / diag;
        }
    }

    int n_;
    double c_;
    std::vector<double> upper_;
    std::vector<double> lower_;
    std::vector<double> inv_diag_;
};

// One Peaceman-Rachford step of size tau, in place.
void adi_step(std::vector<double>& v, std::vector<double>& work, int nx1, int nx2,
              const DirectionOp& op1, const DirectionOp& op2) {
    // Half step 1: (I - c1 A1) v* = (I + c2 A2) v.
    for (int i = 0; i < nx1; ++i) {
        op2.apply_plus(&v[static_cast<std::size_t>(i) * nx2], &work[static_cast<std::size_t>(i) * nx2], 1);
    }
    for (int j = 0; j < nx2; ++j) {
        op1.solve_inplace(&work[static_cast<std::size_t>(j)], nx2);
    }
    // Half step 2: (I - c2 A2) v+ = (I + c1 A1) v*.
    for (int j = 0; j < nx2; ++j) {
        op1.apply_plus(&work[static_cast<std::size_t>(j)], &v[static_cast<std::size_t>(j)], nx2);
    }
    for (int i = 0; i < nx1; ++i) {
        op2.solve_inplace(&v[static_cast<std::size_t>(i) * nx2], 1);
    }
}

void check_finite(const std::vector<double>& v, long long step) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw numeric_error("fd_solve: non-finite value after step " + std::to_string(step));
        }
    }
}

}  // namespace

GridField fd_solve(const GridField& v0, Epsilon eps, double t, const FDConfig& cfg) {
    if (v0.is_physical()) {
        throw std::invalid_argument("fd_solve: field must live on the reference square");
    }
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("fd_solve: t must be positive and finite");
    }
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
        throw std::invalid_argument("fd_solve: cfg.dt must be positive and finite");
    }
    if (cfg.nx1 != 0 && cfg.nx1 != v0.nx1()) {
        throw std::invalid_argument("fd_solve: cfg.nx1 does not match the initial field");
    }
    if (cfg.nx2 != 0 && cfg.nx2 != v0.nx2()) {
        throw std::invalid_argument("fd_solve: cfg.nx2 does not match the initial field");
    }

    const int nx1 = v0.nx1();
    const int nx2 = v0.nx2();
    const double h1 = 1.0 / (nx1 - 1);
    const double h2 = 1.0 / (nx2 - 1);
    const double kappa2 = 1.0 / (eps.value() * eps.value());

    long long full_steps = std::llround(t / cfg.dt);
    double remainder = 0.0;
    if (std::fabs(t - static_cast<double>(full_steps) * cfg.dt) >
        1e-9 * std::max(cfg.dt, t)) {
        full_steps = static_cast<long long>(std::floor(t / cfg.dt));
        remainder = t - static_cast<double>(full_steps) * cfg.dt;
    }

    GridField out = v0;
    std::vector<double>& v = out.values();
    std::vector<double> work(v.size(), 0.0);

    if (full_steps > 0) {
        const DirectionOp op1(nx1, cfg.dt / (2.0 * h1 * h1));
        const DirectionOp op2(nx2, cfg.dt * kappa2 / (2.0 * h2 * h2));
        for (long long s = 0; s < full_steps; ++s) {
            adi_step(v, work, nx1, nx2, op1, op2);
            check_finite(v, s + 1);
        }
    }
    if (remainder > 0.0) {
        const DirectionOp op1(nx1, remainder / (2.0 * h1 * h1));
        const DirectionOp op2(nx2, remainder * kappa2 / (2.0 * h2 * h2));
        adi_step(v, work, nx1, nx2, op1, op2);
        check_finite(v, full_steps + 1);
    }
    return out;
}

double fd_mean(const GridField& f) {
    const double h1 = 1.0 / (f.nx1() - 1);
    const double h2 = 1.0 / (f.nx2() - 1);
    double total = 0.0;
    for (int i = 0; i < f.nx1(); ++i) {
        const double wi = (i == 0 || i == f.nx1() - 1) ? 0.5 : 1.0;
        double row = 0.0;
        for (int j = 0; j < f.nx2(); ++j) {
            const double wj = (j == 0 || j == f.nx2() - 1) ? 0.5 : 1.0;
            row += wj * f.at(i, j);
        }
        total += wi * row;
    }
    return total * h1 * h2;
}

}  // namespace thinheat
