#include "thinheat/projection.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace thinheat {

namespace detail {

double decay_factor(double t, double lambda) {
    if (t == 0.0 || lambda == 0.0) return 1.0;
    return std::exp(-t * lambda);
}

}  // namespace detail

std::vector<double> simpson_weights(int n) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("simpson_weights: node count must be odd and >= 3, got " +
                                    std::to_string(n));
    }
    const double h = 1.0 / (n - 1);
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    w.front() = h / 3.0;
    w.back() = h / 3.0;
    for (int i = 1; i + 1 < n; ++i) {
        w[static_cast<std::size_t>(i)] = (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
    }
    return w;
}

double inner_product(const GridField& f, const GridField& g) {
    if (!f.compatible_with(g)) {
        throw std::invalid_argument("inner_product: grids or domain tags do not match");
    }
    const std::vector<double> w1 = simpson_weights(f.nx1());
    const std::vector<double> w2 = simpson_weights(f.nx2());
    double total = 0.0;
    for (int i = 0; i < f.nx1(); ++i) {
        double row = 0.0;
        for (int j = 0; j < f.nx2(); ++j) {
            row += w2[static_cast<std::size_t>(j)] * f.at(i, j) * g.at(i, j);
        }
        total += w1[static_cast<std::size_t>(i)] * row;
    }
    if (f.is_physical()) total *= f.eps_value();
    return total;
}

SpectralState::SpectralState(Epsilon eps, std::vector<EigenPair> pairs,
                             std::vector<double> coefficients, double source_norm_sq)
    : eps_(eps),
      pairs_(std::move(pairs)),
      base_(std::move(coefficients)),
      source_norm_sq_(source_norm_sq) {
    if (pairs_.size() != base_.size()) {
        throw std::invalid_argument("SpectralState: one coefficient per mode required");
    }
    if (!(source_norm_sq_ >= 0.0) || !std::isfinite(source_norm_sq_)) {
        throw std::invalid_argument("SpectralState: source_norm_sq must be finite and >= 0");
    }
    for (double c : base_) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("SpectralState: coefficients must be finite");
        }
    }
}

std::vector<double> SpectralState::coefficients() const {
    std::vector<double> out(base_.size());
    for (std::size_t k = 0; k < base_.size(); ++k) out[k] = coefficient(k);
    return out;
}

double SpectralState::sum_coeff_sq() const {
    double s = 0.0;
    for (std::size_t k = 0; k < base_.size(); ++k) {
        const double c = coefficient(k);
        s += c * c;
    }
    return s;
}

SpectralState evolve(const SpectralState& state, double t) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("evolve: t must be nonnegative");
    }
    SpectralState out = state;
    out.elapsed_ = state.elapsed_ + t;
    return out;
}

SpectralState project(const GridField& f, Epsilon eps, int count) {
    if (f.is_physical()) {
        throw std::invalid_argument("project: field must live on the reference square");
    }
    if (count < 1) {
        throw std::invalid_argument("project: count must be >= 1");
    }
    std::vector<EigenPair> modes = ordered_spectrum(eps, count);
    const std::vector<double> w1 = simpson_weights(f.nx1());
    const std::vector<double> w2 = simpson_weights(f.nx2());

    // Factor the tensor quadrature: one weighted column sum per distinct n,
    // then a 1d sum per mode.
    std::map<int, std::vector<double>> column_sums;
    for (const EigenPair& p : modes) column_sums.emplace(p.mode.n, std::vector<double>{});
    for (auto& [n, sums] : column_sums) {
        sums.assign(static_cast<std::size_t>(f.nx1()), 0.0);
        for (int i = 0; i < f.nx1(); ++i) {
            double acc = 0.0;
            for (int j = 0; j < f.nx2(); ++j) {
                acc += w2[static_cast<std::size_t>(j)] * f.at(i, j) *
                       std::cos(n * kPi * f.coord2(j));
            }
            sums[static_cast<std::size_t>(i)] = acc;
        }
    }

    std::vector<double> coeffs(modes.size(), 0.0);
    for (std::size_t k = 0; k < modes.size(); ++k) {
        const ModeIndex mode = modes[k].mode;
        const std::vector<double>& sums = column_sums.at(mode.n);
        double acc = 0.0;
        for (int i = 0; i < f.nx1(); ++i) {
            acc += w1[static_cast<std::size_t>(i)] * std::cos(mode.m * kPi * f.coord1(i)) *
                   sums[static_cast<std::size_t>(i)];
        }
        coeffs[k] = norm_const(mode) * acc;
    }

    const double norm_sq = inner_product(f, f);
    return SpectralState(eps, std::move(modes), std::move(coeffs), norm_sq);
}

GridField reconstruct(const SpectralState& state, int nx1, int nx2) {
    GridField out(nx1, nx2);

    // Accumulate an x1 profile per distinct n, then spread each profile along
    // its cos(n pi x2) factor.
    std::map<int, std::vector<double>> profiles;
    for (std::size_t k = 0; k < state.size(); ++k) {
        const EigenPair& p = state.pair(k);
        auto [it, inserted] = profiles.emplace(p.mode.n, std::vector<double>{});
        if (inserted) it->second.assign(static_cast<std::size_t>(nx1), 0.0);
        const double scale = state.coefficient(k) * norm_const(p.mode);
        for (int i = 0; i < nx1; ++i) {
            it->second[static_cast<std::size_t>(i)] +=
                scale * std::cos(p.mode.m * kPi * out.coord1(i));
        }
    }
    for (const auto& [n, profile] : profiles) {
        for (int j = 0; j < nx2; ++j) {
            const double c2 = std::cos(n * kPi * out.coord2(j));
            for (int i = 0; i < nx1; ++i) {
                out.at(i, j) += profile[static_cast<std::size_t>(i)] * c2;
            }
        }
    }
    return out;
}

double parseval_defect(const GridField& f, const SpectralState& state) {
    const double norm_sq = inner_product(f, f);
    const double defect = norm_sq - state.sum_coeff_sq();
    return defect > 0.0 ? defect : 0.0;
}

std::string to_json(const SpectralState& state) {
    std::string out = "{\n";
    out += "  \"eps\": " + detail::fmt17(state.eps().value()) + ",\n";
    out += "  \"truncation_count\": " + std::to_string(state.truncation_count()) + ",\n";
    out += "  \"source_norm_sq\": " + detail::fmt17(state.source_norm_sq()) + ",\n";
    out += "  \"pairs\": [";
    for (std::size_t k = 0; k < state.size(); ++k) {
        const EigenPair& p = state.pair(k);
        const double c = state.coefficient(k);
        if (!std::isfinite(p.lambda) || !std::isfinite(c)) {
            throw numeric_error("to_json: non-finite eigenvalue or coefficient");
        }
        out += (k == 0 ? "\n" : ",\n");
        out += "    {\"m\": " + std::to_string(p.mode.m) + ", \"n\": " + std::to_string(p.mode.n) +
               ", \"lambda\": " + detail::fmt17(p.lambda) +
               ", \"coefficient\": " + detail::fmt17(c) + "}";
    }
    out += state.size() == 0 ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

void write_json(const SpectralState& state, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_error("cannot open '" + path + "' for writing");
    }
    out << to_json(state);
    if (!out) {
        throw io_error("write to '" + path + "' failed");
    }
}

SpectralState parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("state JSON: ") + e.what());
    }
    try {
        const double eps = doc.at("eps").get<double>();
        const double norm_sq = doc.at("source_norm_sq").get<double>();
        std::vector<EigenPair> pairs;
        std::vector<double> coeffs;
        int rank = 1;
        for (const auto& item : doc.at("pairs")) {
            EigenPair p;
            p.mode.m = item.at("m").get<int>();
            p.mode.n = item.at("n").get<int>();
            p.lambda = item.at("lambda").get<double>();
            p.multiplicity_rank = rank++;
            pairs.push_back(p);
            coeffs.push_back(item.at("coefficient").get<double>());
        }
        return SpectralState(Epsilon(eps), std::move(pairs), std::move(coeffs), norm_sq);
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("state JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw io_error(std::string("state JSON: ") + e.what());
    }
}

SpectralState read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_json(buf.str());
    } catch (const io_error& e) {
        throw io_error(std::string(e.what()) + " [" + path + "]");
    }
}

}  // namespace thinheat
