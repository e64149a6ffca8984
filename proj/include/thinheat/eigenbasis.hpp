#pragma once

#include <cstdint>
#include <queue>
#include <unordered_set>
#include <vector>

#include "thinheat/types.hpp"

namespace thinheat {

/// An eigenvalue of the rescaled operator -d^2/dx1^2 - (1/eps^2) d^2/dx2^2 on
/// the unit square with Neumann conditions, together with its lattice mode and
/// its 1-based position in the sorted sequence lambda_1 <= lambda_2 <= ...
struct EigenPair {
    ModeIndex mode;
    double lambda = 0.0;
    int multiplicity_rank = 0;
};

/// L^2 normalization constant a_{m,n}: 1 if m=n=0, sqrt(2) if exactly one
/// index vanishes, 2 otherwise.
double norm_const(ModeIndex mode);

/// lambda_{m,n} = pi^2 (m^2 + n^2/eps^2). The division n/eps happens before
/// squaring so extreme ratios overflow to +inf instead of producing NaN.
double eigenvalue(ModeIndex mode, Epsilon eps);

/// Eigenfunction on the reference square: a_{m,n} cos(m pi x1) cos(n pi x2).
/// Independent of eps.
double eigenfunction_rescaled(ModeIndex mode, double x1, double x2);

/// Eigenfunction on the physical rectangle (0,1) x (0,eps):
/// (a_{m,n}/sqrt(eps)) cos(m pi x) cos(n pi y / eps).
double eigenfunction_physical(ModeIndex mode, Epsilon eps, double x, double y);

/// Lazy enumeration of the spectrum in nondecreasing lambda order, ties broken
/// lexicographically by (m, n). The frontier expands over the lattice by
/// pushing the two successors (m+1, n) and (m, n+1) of every popped node;
/// monotonicity of lambda in each index guarantees the heap always contains
/// the next pair.
class SpectrumEnumerator {
  public:
    explicit SpectrumEnumerator(Epsilon eps);

    /// Pops the next eigenpair; ranks are assigned sequentially from 1.
    EigenPair next();

    /// Lambda of the next pair without consuming it.
    double peek_lambda() const;

  private:
    struct Node {
        double lambda;
        int m;
        int n;
    };
    struct Later {
        bool operator()(const Node& a, const Node& b) const {
            if (a.lambda != b.lambda) return a.lambda > b.lambda;
            if (a.m != b.m) return a.m > b.m;
            return a.n > b.n;
        }
    };

    void push(int m, int n);

    Epsilon eps_;
    int next_rank_ = 1;
    std::priority_queue<Node, std::vector<Node>, Later> frontier_;
    std::unordered_set<std::uint64_t> seen_;
};

/// First `count` eigenpairs of the rescaled operator, sorted.
std::vector<EigenPair> ordered_spectrum(Epsilon eps, int count);

}  // namespace thinheat
