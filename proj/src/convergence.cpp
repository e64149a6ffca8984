#include "thinheat/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "thinheat/eigenbasis.hpp"
#include "thinheat/limit1d.hpp"
#include "thinheat/projection.hpp"

namespace thinheat {

double epsilon_threshold(int k) {
    if (k < 1) {
        throw std::invalid_argument("epsilon_threshold: k must be >= 1");
    }
    return 1.0 / static_cast<double>(k);
}

std::vector<EigenRow> eigen_convergence(int n_max, const std::vector<double>& eps_list) {
    if (n_max < 1) {
        throw std::invalid_argument("eigen_convergence: n_max must be >= 1");
    }
    std::vector<EigenRow> table;
    table.reserve(eps_list.size() * static_cast<std::size_t>(n_max));
    for (double e : eps_list) {
        const std::vector<EigenPair> spectrum = ordered_spectrum(Epsilon(e), n_max);
        for (int n = 1; n <= n_max; ++n) {
            EigenRow row;
            row.eps = e;
            row.n = n;
            row.lambda = spectrum[static_cast<std::size_t>(n - 1)].lambda;
            row.gap = std::fabs(row.lambda - eigenvalue1d(n));
            table.push_back(row);
        }
    }
    return table;
}

ErrorCurve solution_error(const GridField& v0, Epsilon eps, const std::vector<double>& t_grid,
                          const TruncationPolicy& policy) {
    if (t_grid.empty()) {
        throw std::invalid_argument("solution_error: t_grid must be nonempty");
    }
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0.0) || !std::isfinite(t_grid[i])) {
            throw std::invalid_argument("solution_error: t_grid entries must be finite and >= 0");
        }
        if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
            throw std::invalid_argument("solution_error: t_grid must be strictly increasing");
        }
    }

    const GridField1D limit_data = vertical_average(v0);
    ErrorCurve curve;
    curve.eps = eps.value();
    curve.t = t_grid;
    curve.error.reserve(t_grid.size());
    for (double t : t_grid) {
        const GridField two_d = solve(v0, eps, t, policy);
        const GridField one_d = embed(evolve1d(limit_data, t, policy), v0.nx2());
        GridField diff(v0.nx1(), v0.nx2());
        for (int i = 0; i < v0.nx1(); ++i) {
            for (int j = 0; j < v0.nx2(); ++j) {
                diff.at(i, j) = two_d.at(i, j) - one_d.at(i, j);
            }
        }
        const double err = std::sqrt(std::max(inner_product(diff, diff), 0.0));
        curve.error.push_back(err);
        curve.sup_error = std::max(curve.sup_error, err);
    }
    return curve;
}

std::vector<double> geometric_t_grid(double t0, double t1, int count) {
    if (!(t0 > 0.0) || !std::isfinite(t0) || !std::isfinite(t1)) {
        throw std::invalid_argument("geometric_t_grid: need finite 0 < t0 <= t1");
    }
    if (count < 1) {
        throw std::invalid_argument("geometric_t_grid: count must be >= 1");
    }
    if (count == 1) {
        if (t1 != t0) {
            throw std::invalid_argument("geometric_t_grid: a single point needs t0 == t1");
        }
        return {t0};
    }
    if (!(t1 > t0)) {
        throw std::invalid_argument("geometric_t_grid: need t1 > t0 for count >= 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(count), 0.0);
    const double ratio = t1 / t0;
    for (int i = 0; i < count; ++i) {
        grid[static_cast<std::size_t>(i)] =
            t0 * std::pow(ratio, static_cast<double>(i) / (count - 1));
    }
    grid.front() = t0;
    grid.back() = t1;
    return grid;
}

ConvergenceReport convergence_report(const ExperimentSpec& spec) {
    ConvergenceReport report;
    report.eps_list = spec.eps_list;
    report.eigen_table = eigen_convergence(spec.n_max, spec.eps_list);
    for (double e : spec.eps_list) {
        report.curves.push_back(solution_error(spec.v0, Epsilon(e), spec.t_grid, spec.policy));
    }
    return report;
}

std::string to_json(const ConvergenceReport& report) {
    std::string out = "{\n  \"eps_list\": [";
    for (std::size_t i = 0; i < report.eps_list.size(); ++i) {
        if (i > 0) out += ", ";
        out += detail::fmt17(report.eps_list[i]);
    }
    out += "],\n  \"eigen_table\": [";
    for (std::size_t i = 0; i < report.eigen_table.size(); ++i) {
        const EigenRow& row = report.eigen_table[i];
        out += (i == 0 ? "\n" : ",\n");
        out += "    {\"eps\": " + detail::fmt17(row.eps) + ", \"n\": " + std::to_string(row.n) +
               ", \"lambda\": " + detail::fmt17(row.lambda) +
               ", \"gap\": " + detail::fmt17(row.gap) + "}";
    }
    out += report.eigen_table.empty() ? "],\n" : "\n  ],\n";
    out += "  \"curves\": [";
    for (std::size_t c = 0; c < report.curves.size(); ++c) {
        const ErrorCurve& curve = report.curves[c];
        out += (c == 0 ? "\n" : ",\n");
        out += "    {\"eps\": " + detail::fmt17(curve.eps) +
               ", \"sup_error\": " + detail::fmt17(curve.sup_error) + ", \"points\": [";
        for (std::size_t i = 0; i < curve.t.size(); ++i) {
            if (i > 0) out += ", ";
            out += "{\"t\": " + detail::fmt17(curve.t[i]) +
                   ", \"error\": " + detail::fmt17(curve.error[i]) + "}";
        }
        out += "]}";
    }
    out += report.curves.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

void write_json(const ConvergenceReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_error("cannot open '" + path + "' for writing");
    }
    out << to_json(report);
    if (!out) {
        throw io_error("write to '" + path + "' failed");
    }
}

std::string curves_to_csv(const ConvergenceReport& report) {
    std::string out = "eps,t,error\n";
    for (const ErrorCurve& curve : report.curves) {
        for (std::size_t i = 0; i < curve.t.size(); ++i) {
            out += detail::fmt17(curve.eps) + "," + detail::fmt17(curve.t[i]) + "," +
                   detail::fmt17(curve.error[i]) + "\n";
        }
    }
    return out;
}

void write_curves_csv(const ConvergenceReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_error("cannot open '" + path + "' for writing");
    }
    out << curves_to_csv(report);
    if (!out) {
        throw io_error("write to '" + path + "' failed");
    }
}

}  // namespace thinheat
