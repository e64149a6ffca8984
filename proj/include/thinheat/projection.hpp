#pragma once

#include <string>
#include <vector>

#include "thinheat/eigenbasis.hpp"
#include "thinheat/field.hpp"
#include "thinheat/types.hpp"

namespace thinheat {

namespace detail {

/// exp(-t * lambda) with the conventions the semigroup needs: exactly 1 when
/// t = 0 or lambda = 0, and 0 when t * lambda overflows to +inf.
double decay_factor(double t, double lambda);

}  // namespace detail

/// Composite Simpson weights for an odd count of uniform closed nodes on
/// [0,1]: (h/3) * [1, 4, 2, 4, ..., 2, 4, 1] with h = 1/(n-1).
std::vector<double> simpson_weights(int n);

/// Tensor Simpson quadrature of f*g over the field's domain. Physical fields
/// integrate over [0,1] x [0,eps], so the x2 weights pick up a factor eps.
double inner_product(const GridField& f, const GridField& g);

class SpectralState;
SpectralState evolve(const SpectralState& state, double t);

/// Truncated expansion of a reference-square field in the ordered eigenbasis.
/// Coefficients are stored at the projection time; evolution accumulates an
/// elapsed time and the exposed coefficients carry the decay e^{-elapsed *
/// lambda}, so splitting an evolution into steps changes nothing downstream.
class SpectralState {
  public:
    SpectralState(Epsilon eps, std::vector<EigenPair> pairs, std::vector<double> coefficients,
                  double source_norm_sq);

    Epsilon eps() const { return eps_; }
    int truncation_count() const { return static_cast<int>(pairs_.size()); }
    double source_norm_sq() const { return source_norm_sq_; }
    double elapsed() const { return elapsed_; }

    std::size_t size() const { return pairs_.size(); }
    const EigenPair& pair(std::size_t k) const { return pairs_[k]; }

    /// Coefficient with the accumulated decay applied.
    double coefficient(std::size_t k) const {
        return base_[k] * detail::decay_factor(elapsed_, pairs_[k].lambda);
    }

    std::vector<double> coefficients() const;
    double sum_coeff_sq() const;

  private:
    friend SpectralState evolve(const SpectralState& state, double t);

    Epsilon eps_;
    std::vector<EigenPair> pairs_;
    std::vector<double> base_;
    double source_norm_sq_;
    double elapsed_ = 0.0;
};

/// Coefficients of f against the first `count` ordered modes, by Simpson
/// quadrature on f's own grid. f must be a reference-square field.
SpectralState project(const GridField& f, Epsilon eps, int count);

/// Pointwise sum of coefficient * eigenfunction_rescaled on an nx1 x nx2 grid.
GridField reconstruct(const SpectralState& state, int nx1, int nx2);

/// max(0, ||f||^2 - sum of squared coefficients); the truncation plus
/// quadrature residue of a projection of f.
double parseval_defect(const GridField& f, const SpectralState& state);

/// JSON layout: {"eps": e, "truncation_count": K, "source_norm_sq": s,
/// "pairs": [{"m": ..., "n": ..., "lambda": ..., "coefficient": ...}, ...]}.
void write_json(const SpectralState& state, const std::string& path);
std::string to_json(const SpectralState& state);
SpectralState read_json(const std::string& path);
SpectralState parse_json(const std::string& text);

}  // namespace thinheat
