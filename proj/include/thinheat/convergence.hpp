#pragma once

#include <string>
#include <vector>

#include "thinheat/evolution.hpp"
#include "thinheat/field.hpp"
#include "thinheat/types.hpp"

namespace thinheat {

/// Largest eps for which the first k+1 sorted eigenvalues are the purely
/// longitudinal ladder pi^2 (n-1)^2, n = 1..k+1; equals 1/k.
double epsilon_threshold(int k);

/// One row of the eigenvalue-convergence table.
struct EigenRow {
    double eps = 0.0;
    int n = 0;
    double lambda = 0.0;
    double gap = 0.0;
};

/// For each eps, the first n_max sorted eigenvalues and their distances to
/// the limit values eigenvalue1d(n); rows grouped by eps in input order.
std::vector<EigenRow> eigen_convergence(int n_max, const std::vector<double>& eps_list);

/// L2 distance between the 2d flow and the embedded 1d limit flow, per time.
struct ErrorCurve {
    double eps = 0.0;
    std::vector<double> t;
    std::vector<double> error;
    double sup_error = 0.0;
};

/// For each t in t_grid: || solve(v0, eps, t) - embed(evolve1d(avg, t)) ||
/// in the quadrature L2 norm, where avg = vertical_average(v0). t_grid must
/// be strictly increasing and nonnegative.
ErrorCurve solution_error(const GridField& v0, Epsilon eps, const std::vector<double>& t_grid,
                          const TruncationPolicy& policy = {});

/// count geometrically spaced points from t0 to t1 inclusive; 0 < t0 <= t1.
std::vector<double> geometric_t_grid(double t0, double t1, int count);

/// Everything a convergence sweep needs.
struct ExperimentSpec {
    std::vector<double> eps_list;
    GridField v0;
    int n_max = 8;
    std::vector<double> t_grid;
    TruncationPolicy policy;
};

struct ConvergenceReport {
    std::vector<double> eps_list;
    std::vector<EigenRow> eigen_table;
    std::vector<ErrorCurve> curves;
};

/// Runs eigen_convergence plus one solution_error sweep per eps.
ConvergenceReport convergence_report(const ExperimentSpec& spec);

std::string to_json(const ConvergenceReport& report);
void write_json(const ConvergenceReport& report, const std::string& path);

/// CSV with one "eps,t,error" row per curve point.
std::string curves_to_csv(const ConvergenceReport& report);
void write_curves_csv(const ConvergenceReport& report, const std::string& path);

}  // namespace thinheat
