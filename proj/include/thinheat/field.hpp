#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thinheat/errors.hpp"
#include "thinheat/types.hpp"

namespace thinheat {

namespace detail {

/// Decimal rendering with 17 significant digits, enough to round-trip any
/// 64-bit float byte-identically.
std::string fmt17(double v);

/// Strict double parser: the whole token must be consumed.
double parse_double(const std::string& token, const std::string& context);

int parse_int(const std::string& token, const std::string& context);

std::vector<std::string> split(const std::string& line, char sep);

}  // namespace detail

/// Scalar samples on a uniform tensor grid of closed-interval nodes. A field
/// tagged `reference` lives on [0,1]^2; a field tagged `physical` lives on
/// [0,1] x [0,eps] and remembers its eps. Node counts are odd so composite
/// Simpson quadrature applies directly.
class GridField {
  public:
    /// Zero-filled reference-square field.
    GridField(int nx1, int nx2);

    /// Zero-filled physical-rectangle field.
    GridField(int nx1, int nx2, Epsilon eps);

    int nx1() const { return nx1_; }
    int nx2() const { return nx2_; }
    bool is_physical() const { return eps_.has_value(); }

    /// eps of a physical field; asking a reference field is a logic error.
    double eps_value() const;

    double at(int i, int j) const { return values_[index(i, j)]; }
    double& at(int i, int j) { return values_[index(i, j)]; }

    /// Node coordinates. coord2 is scaled by eps for physical fields.
    double coord1(int i) const { return static_cast<double>(i) / (nx1_ - 1); }
    double coord2(int j) const;

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    /// Same node counts, same domain tag, and same eps when physical.
    bool compatible_with(const GridField& other) const;

  private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(nx2_) +
               static_cast<std::size_t>(j);
    }

    int nx1_;
    int nx2_;
    std::optional<double> eps_;
    std::vector<double> values_;
};

/// Scalar samples on a uniform closed grid over [0,1].
class GridField1D {
  public:
    explicit GridField1D(int nx);

    int nx() const { return nx_; }
    double at(int i) const { return values_[static_cast<std::size_t>(i)]; }
    double& at(int i) { return values_[static_cast<std::size_t>(i)]; }
    double coord(int i) const { return static_cast<double>(i) / (nx_ - 1); }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

  private:
    int nx_;
    std::vector<double> values_;
};

/// values[i][j] = f(i/(nx1-1), j/(nx2-1)) on the reference square. A
/// non-finite sample aborts with a diagnostic naming the offending node.
GridField sample(const std::function<double(double, double)>& f, int nx1, int nx2);

/// Same, but over the physical rectangle [0,1] x [0,eps]; f receives (x, y).
GridField sample_physical(const std::function<double(double, double)>& f, Epsilon eps, int nx1,
                          int nx2);

/// values[i] = f(i/(nx-1)) on [0,1].
GridField1D sample1d(const std::function<double(double)>& f, int nx);

/// CSV layout: one header line "nx1,nx2,reference" or "nx1,nx2,physical,<eps>",
/// then nx1 lines of nx2 comma-separated samples in row-major order.
void write_csv(const GridField& f, const std::string& path);
GridField read_csv(const std::string& path);
GridField parse_csv(const std::string& text);
std::string to_csv(const GridField& f);

/// CSV layout: one header line "nx", then nx lines of one sample each.
void write_csv(const GridField1D& f, const std::string& path);
GridField1D read_csv1d(const std::string& path);
GridField1D parse_csv1d(const std::string& text);
std::string to_csv(const GridField1D& f);

}  // namespace thinheat
