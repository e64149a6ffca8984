#include "thinheat/limit1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thinheat {

double eigenvalue1d(int n) {
    if (n < 1) {
        throw std::invalid_argument("eigenvalue1d: n must be >= 1");
    }
    const double j = static_cast<double>(n - 1);
    return kPiSq * (j * j);
}

double eigenfunction1d(int n, double x) {
    if (n < 1) {
        throw std::invalid_argument("eigenfunction1d: n must be >= 1");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("eigenfunction1d: x outside [0,1]");
    }
    if (n == 1) return 1.0;
    return std::sqrt(2.0) * std::cos((n - 1) * kPi * x);
}

SpectralState1D::SpectralState1D(std::vector<double> coefficients) : base_(std::move(coefficients)) {
    for (double c : base_) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("SpectralState1D: coefficients must be finite");
        }
    }
}

std::vector<double> SpectralState1D::coefficients() const {
    std::vector<double> out(base_.size());
    for (std::size_t k = 0; k < base_.size(); ++k) out[k] = coefficient(k);
    return out;
}

double SpectralState1D::sum_coeff_sq() const {
    double s = 0.0;
    for (std::size_t k = 0; k < base_.size(); ++k) {
        const double c = coefficient(k);
        s += c * c;
    }
    return s;
}

SpectralState1D evolve(const SpectralState1D& state, double t) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("evolve: t must be nonnegative");
    }
    SpectralState1D out = state;
    out.elapsed_ = state.elapsed_ + t;
    return out;
}

double inner_product1d(const GridField1D& f, const GridField1D& g) {
    if (f.nx() != g.nx()) {
        throw std::invalid_argument("inner_product1d: grids do not match");
    }
    const std::vector<double> w = simpson_weights(f.nx());
    double total = 0.0;
    for (int i = 0; i < f.nx(); ++i) {
        total += w[static_cast<std::size_t>(i)] * f.at(i) * g.at(i);
    }
    return total;
}

SpectralState1D project1d(const GridField1D& f, int count) {
    if (count < 1) {
        throw std::invalid_argument("project1d: count must be >= 1");
    }
    const std::vector<double> w = simpson_weights(f.nx());
    std::vector<double> coeffs(static_cast<std::size_t>(count), 0.0);
    for (int n = 1; n <= count; ++n) {
        double acc = 0.0;
        for (int i = 0; i < f.nx(); ++i) {
            acc += w[static_cast<std::size_t>(i)] * f.at(i) * eigenfunction1d(n, f.coord(i));
        }
        coeffs[static_cast<std::size_t>(n - 1)] = acc;
    }
    return SpectralState1D(std::move(coeffs));
}

GridField1D reconstruct1d(const SpectralState1D& state, int nx) {
    GridField1D out(nx);
    for (std::size_t k = 0; k < state.size(); ++k) {
        const double c = state.coefficient(k);
        const int n = state.n(k);
        for (int i = 0; i < nx; ++i) {
            out.at(i) += c * eigenfunction1d(n, out.coord(i));
        }
    }
    return out;
}

namespace {

// 1d analogue of choose_truncation: tail sum_{n > K} e^{-2 t lambda0_n} is
// bounded by the geometric axis bound starting at index K.
TruncationChoice choose_truncation1d(double t, double norm_bound, const TruncationPolicy& policy) {
    if (norm_bound == 0.0) return {1, true};
    const double beta = 2.0 * t * kPiSq;
    for (int count = 1; count <= policy.max_modes; ++count) {
        const double bound = detail::axis_tail_bound(beta, count);
        if (norm_bound * std::sqrt(bound) <= policy.tol) {
            return {count, true};
        }
    }
    return {policy.max_modes, false};
}

}  // namespace

GridField1D evolve1d(const GridField1D& v0, double t, const TruncationPolicy& policy,
                     SolveInfo* info) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("evolve1d: t must be nonnegative");
    }
    if (!(policy.tol > 0.0) || policy.max_modes < 1 || !(policy.t_floor >= 0.0)) {
        throw std::invalid_argument("evolve1d: invalid truncation policy");
    }

    SolveInfo chosen;
    SpectralState1D state = [&]() -> SpectralState1D {
        if (policy.t_floor > 0.0 && t >= policy.t_floor) {
            const double norm_sq = inner_product1d(v0, v0);
            const TruncationChoice choice =
                choose_truncation1d(t, std::sqrt(std::max(norm_sq, 0.0)), policy);
            chosen.modes = choice.count;
            chosen.certified = choice.certified;
            return project1d(v0, choice.count);
        }
        const double target = policy.tol * policy.tol;
        const double norm_sq = inner_product1d(v0, v0);
        int count = std::min(16, policy.max_modes);
        SpectralState1D s = project1d(v0, count);
        double defect = std::max(0.0, norm_sq - s.sum_coeff_sq());
        bool certified = defect <= target;
        while (!certified && count < policy.max_modes) {
            const int doubled = std::min(2 * count, policy.max_modes);
            SpectralState1D grown = project1d(v0, doubled);
            const double grown_defect = std::max(0.0, norm_sq - grown.sum_coeff_sq());
            s = std::move(grown);
            count = doubled;
            if (grown_defect <= target) {
                certified = true;
            } else if (defect - grown_defect <= 1e-3 * defect) {
                defect = grown_defect;
                break;
            }
            defect = grown_defect;
        }
        chosen.modes = count;
        chosen.certified = certified;
        return s;
    }();

    if (info) *info = chosen;
    return reconstruct1d(evolve(state, t), v0.nx());
}

GridField embed(const GridField1D& u, int nx2) {
    GridField out(u.nx(), nx2);
    for (int i = 0; i < u.nx(); ++i) {
        for (int j = 0; j < nx2; ++j) {
            out.at(i, j) = u.at(i);
        }
    }
    return out;
}

GridField1D vertical_average(const GridField& f) {
    if (f.is_physical()) {
        throw std::invalid_argument("vertical_average: field must live on the reference square");
    }
    const std::vector<double> w2 = simpson_weights(f.nx2());
    GridField1D out(f.nx1());
    for (int i = 0; i < f.nx1(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < f.nx2(); ++j) {
            acc += w2[static_cast<std::size_t>(j)] * f.at(i, j);
        }
        out.at(i) = acc;
    }
    return out;
}

}  // namespace thinheat
