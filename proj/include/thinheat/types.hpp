#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace thinheat {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPiSq = kPi * kPi;

/// Lattice index (m, n) of a Neumann cosine mode; both components nonnegative.
struct ModeIndex {
    int m = 0;
    int n = 0;

    friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

/// Plate thickness / anisotropy parameter. Strictly positive and finite.
class Epsilon {
  public:
    explicit Epsilon(double value) : value_(value) {
        if (!std::isfinite(value) || value <= 0.0) {
            throw std::invalid_argument("Epsilon: value must be finite and > 0");
        }
    }

    double value() const { return value_; }

  private:
    double value_;
};

}  // namespace thinheat
