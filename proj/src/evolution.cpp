#include "thinheat/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thinheat {

namespace detail {

double axis_tail_bound(double theta, int k0) {
    if (k0 == 0) {
        // sum_{n>=0} e^{-theta n^2} <= sum_{n>=0} e^{-theta n}
        return 1.0 / (1.0 - std::exp(-theta));
    }
    // n^2 >= k0^2 + (2 k0 + 1)(n - k0) for n >= k0, so the tail is dominated
    // by a geometric series with ratio e^{-theta (2 k0 + 1)}.
    const double k = static_cast<double>(k0);
    const double head = std::exp(-theta * k * k);
    const double ratio = std::exp(-theta * (2.0 * k + 1.0));
    return head / (1.0 - ratio);
}

namespace {

// Smallest m with lambda(m, 0) >= cut, stepping to keep the comparison on the
// exact same floating-point values the enumerator produces.
int first_m_at_or_above(Epsilon eps, double cut) {
    int m = static_cast<int>(std::floor(std::sqrt(std::max(cut, 0.0)) / kPi));
    m = std::max(m, 0);
    while (m > 0 && eigenvalue({m - 1, 0}, eps) >= cut) --m;
    while (eigenvalue({m, 0}, eps) < cut) ++m;
    return m;
}

// Smallest n with lambda(m, n) >= cut, given lambda(m, 0) < cut.
int first_n_at_or_above(Epsilon eps, int m, double cut) {
    const double md = static_cast<double>(m);
    const double slack = cut / kPiSq - md * md;
    int n = static_cast<int>(std::floor(eps.value() * std::sqrt(std::max(slack, 0.0))));
    n = std::max(n, 1);
    while (n > 1 && eigenvalue({m, n - 1}, eps) >= cut) --n;
    while (eigenvalue({m, n}, eps) < cut) ++n;
    return n;
}

}  // namespace

double spectral_tail_bound(Epsilon eps, double t, double lambda_cut) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("spectral_tail_bound: t must be positive");
    }
    if (!std::isfinite(lambda_cut)) return 0.0;
    const double beta = 2.0 * t * kPiSq;
    const double e = eps.value();
    const double gamma = beta / (e * e);

    const int m1 = first_m_at_or_above(eps, lambda_cut);
    double total = axis_tail_bound(beta, m1) * axis_tail_bound(gamma, 0);
    for (int m = 0; m < m1; ++m) {
        const int n0 = first_n_at_or_above(eps, m, lambda_cut);
        const double md = static_cast<double>(m);
        total += std::exp(-beta * md * md) * axis_tail_bound(gamma, n0);
    }
    return total;
}

}  // namespace detail

namespace {

void validate_policy(const TruncationPolicy& policy) {
    if (!(policy.tol > 0.0)) {
        throw std::invalid_argument("TruncationPolicy: tol must be positive");
    }
    if (policy.max_modes < 1) {
        throw std::invalid_argument("TruncationPolicy: max_modes must be >= 1");
    }
    if (!(policy.t_floor >= 0.0)) {
        throw std::invalid_argument("TruncationPolicy: t_floor must be nonnegative");
    }
}

}  // namespace

TruncationChoice choose_truncation(Epsilon eps, double t, double norm_bound,
                                   const TruncationPolicy& policy) {
    validate_policy(policy);
    if (!(policy.t_floor > 0.0)) {
        throw std::invalid_argument(
            "choose_truncation: the decay bound needs policy.t_floor > 0");
    }
    if (!(t >= policy.t_floor)) {
        throw std::invalid_argument(
            "choose_truncation: t below policy.t_floor; use the defect pathway near t = 0");
    }
    if (!(norm_bound >= 0.0)) {
        throw std::invalid_argument("choose_truncation: norm_bound must be nonnegative");
    }
    if (norm_bound == 0.0) return {1, true};

    SpectrumEnumerator en(eps);
    double last_cut = -1.0;
    double bound = 0.0;
    for (int count = 1; count <= policy.max_modes; ++count) {
        en.next();
        const double cut = en.peek_lambda();
        if (cut != last_cut) {
            bound = detail::spectral_tail_bound(eps, t, cut);
            last_cut = cut;
        }
        if (norm_bound * std::sqrt(bound) <= policy.tol) {
            return {count, true};
        }
    }
    return {policy.max_modes, false};
}

GridField solve(const GridField& v0, Epsilon eps, double t, const TruncationPolicy& policy,
                SolveInfo* info) {
    validate_policy(policy);
    if (!(t >= 0.0)) {
        throw std::invalid_argument("solve: t must be nonnegative");
    }
    if (v0.is_physical()) {
        throw std::invalid_argument("solve: field must live on the reference square");
    }

    SolveInfo chosen;
    SpectralState state = [&]() -> SpectralState {
        if (policy.t_floor > 0.0 && t >= policy.t_floor) {
            const double norm_sq = inner_product(v0, v0);
            const double norm_bound = std::sqrt(std::max(norm_sq, 0.0));
            const TruncationChoice choice = choose_truncation(eps, t, norm_bound, policy);
            chosen.modes = choice.count;
            chosen.certified = choice.certified;
            return project(v0, eps, choice.count);
        }
        // Near t = 0 the decay bound is useless; grow the truncation until the
        // Parseval defect certifies the projection itself, or until it stops
        // improving (quadrature floor), or the cap is hit.
        const double target = policy.tol * policy.tol;
        int count = std::min(16, policy.max_modes);
        SpectralState s = project(v0, eps, count);
        double defect = parseval_defect(v0, s);
        bool certified = defect <= target;
        while (!certified && count < policy.max_modes) {
            const int doubled = std::min(2 * count, policy.max_modes);
            SpectralState grown = project(v0, eps, doubled);
            const double grown_defect = parseval_defect(v0, grown);
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
    return reconstruct(evolve(state, t), v0.nx1(), v0.nx2());
}

GridField solve_physical(const GridField& u0, double t, const TruncationPolicy& policy,
                         SolveInfo* info) {
    if (!u0.is_physical()) {
        throw std::invalid_argument("solve_physical: field must carry a physical(eps) tag");
    }
    const Epsilon eps(u0.eps_value());
    GridField pulled_back(u0.nx1(), u0.nx2());
    pulled_back.values() = u0.values();
    GridField evolved = solve(pulled_back, eps, t, policy, info);
    GridField out(u0.nx1(), u0.nx2(), eps);
    out.values() = evolved.values();
    return out;
}

}  // namespace thinheat
