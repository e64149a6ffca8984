#include "thinheat/eigenbasis.hpp"

#include <cmath>
#include <stdexcept>

namespace thinheat {

double norm_const(ModeIndex mode) {
    if (mode.m < 0 || mode.n < 0) {
        throw std::invalid_argument("norm_const: mode indices must be nonnegative");
    }
    const int zeros = (mode.m == 0 ? 1 : 0) + (mode.n == 0 ? 1 : 0);
    if (zeros == 2) return 1.0;
    if (zeros == 1) return std::sqrt(2.0);
    return 2.0;
}

double eigenvalue(ModeIndex mode, Epsilon eps) {
    if (mode.m < 0 || mode.n < 0) {
        throw std::invalid_argument("eigenvalue: mode indices must be nonnegative");
    }
    const double m = static_cast<double>(mode.m);
    const double t = static_cast<double>(mode.n) / eps.value();
    return kPiSq * (m * m + t * t);
}

namespace {

void check_unit_point(const char* who, double x1, double x2) {
    if (!(x1 >= 0.0 && x1 <= 1.0 && x2 >= 0.0 && x2 <= 1.0)) {
        throw std::invalid_argument(std::string(who) + ": point outside [0,1]^2");
    }
}

}  // namespace

double eigenfunction_rescaled(ModeIndex mode, double x1, double x2) {
    if (mode.m < 0 || mode.n < 0) {
        throw std::invalid_argument("eigenfunction_rescaled: mode indices must be nonnegative");
    }
    check_unit_point("eigenfunction_rescaled", x1, x2);
    return norm_const(mode) * std::cos(mode.m * kPi * x1) * std::cos(mode.n * kPi * x2);
}

double eigenfunction_physical(ModeIndex mode, Epsilon eps, double x, double y) {
    if (mode.m < 0 || mode.n < 0) {
        throw std::invalid_argument("eigenfunction_physical: mode indices must be nonnegative");
    }
    const double e = eps.value();
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= e)) {
        throw std::invalid_argument("eigenfunction_physical: point outside [0,1] x [0,eps]");
    }
    return norm_const(mode) / std::sqrt(e) * std::cos(mode.m * kPi * x) *
           std::cos(mode.n * kPi * y / e);
}

SpectrumEnumerator::SpectrumEnumerator(Epsilon eps) : eps_(eps) { push(0, 0); }

void SpectrumEnumerator::push(int m, int n) {
    const std::uint64_t key = (static_cast<std::uint64_t>(m) << 32) | static_cast<std::uint64_t>(n);
    if (!seen_.insert(key).second) return;
    frontier_.push(Node{eigenvalue({m, n}, eps_), m, n});
}

EigenPair SpectrumEnumerator::next() {
    const Node top = frontier_.top();
    frontier_.pop();
    push(top.m + 1, top.n);
    push(top.m, top.n + 1);
    return EigenPair{ModeIndex{top.m, top.n}, top.lambda, next_rank_++};
}

double SpectrumEnumerator::peek_lambda() const { return frontier_.top().lambda; }

std::vector<EigenPair> ordered_spectrum(Epsilon eps, int count) {
    if (count < 1) {
        throw std::invalid_argument("ordered_spectrum: count must be >= 1");
    }
    std::vector<EigenPair> out;
    out.reserve(static_cast<std::size_t>(count));
    SpectrumEnumerator it(eps);
    for (int i = 0; i < count; ++i) out.push_back(it.next());
    return out;
}

}  // namespace thinheat
