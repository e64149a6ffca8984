#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thinheat/convergence.hpp"
#include "thinheat/eigenbasis.hpp"
#include "thinheat/evolution.hpp"
#include "thinheat/fd_oracle.hpp"
#include "thinheat/field.hpp"
#include "thinheat/initial_data.hpp"
#include "thinheat/limit1d.hpp"
#include "thinheat/projection.hpp"

namespace {

using thinheat::detail::fmt17;

/// JSON-file front end for CLI11's config machinery: a flat object holds this
/// subcommand's long option names, nested objects address nested scopes.
/// Command-line flags override anything read here.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
        nlohmann::json doc = nlohmann::json::object();
        for (const CLI::Option* opt : app->get_options({})) {
            if (!opt->get_configurable()) continue;
            const std::string name = opt->get_single_name();
            if (name.empty() || name == "config") continue;
            if (!opt->results().empty()) {
                doc[name] = opt->results().size() == 1
                                ? nlohmann::json(opt->results().front())
                                : nlohmann::json(opt->results());
            } else if (default_also && !opt->get_default_str().empty()) {
                doc[name] = opt->get_default_str();
            }
        }
        return doc.dump(2) + "\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        nlohmann::json doc;
        try {
            input >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw CLI::ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!doc.is_object()) {
            throw CLI::ConfigError("config must be a JSON object");
        }
        std::vector<CLI::ConfigItem> items;
        walk(doc, {}, items);
        return items;
    }

  private:
    static void walk(const nlohmann::json& node, std::vector<std::string> parents,
                     std::vector<CLI::ConfigItem>& items) {
        for (auto it = node.begin(); it != node.end(); ++it) {
            if (it->is_object()) {
                std::vector<std::string> deeper = parents;
                deeper.push_back(it.key());
                walk(*it, std::move(deeper), items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = it.key();
            if (it->is_array()) {
                for (const auto& v : *it) item.inputs.push_back(scalar(v, it.key()));
            } else {
                item.inputs.push_back(scalar(*it, it.key()));
            }
            items.push_back(std::move(item));
        }
    }

    static std::string scalar(const nlohmann::json& v, const std::string& key) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        if (v.is_number_float()) return fmt17(v.get<double>());
        throw CLI::ConfigError("config key '" + key + "' holds an unsupported JSON value");
    }
};

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw thinheat::io_error("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw thinheat::io_error("write to '" + path + "' failed");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text(text, out_path);
    }
}

std::vector<double> parse_eps_list(const std::string& csv) {
    std::vector<double> eps_list;
    if (csv.empty()) return eps_list;
    for (const std::string& token : thinheat::detail::split(csv, ',')) {
        try {
            eps_list.push_back(thinheat::detail::parse_double(token, "--eps-list"));
        } catch (const thinheat::io_error& e) {
            throw std::invalid_argument(e.what());
        }
    }
    return eps_list;
}

/// Shared shape of the solve-like subcommands.
struct FieldSource {
    std::string init;
    std::string in;

    void attach(CLI::App* cmd) {
        cmd->add_option("--init", init,
                        "initial data selector: constant, cos_x1(k), cos_x2(k), product(k,l), "
                        "or sum:a,b,...");
        cmd->add_option("--in", in, "read the initial field from a CSV file instead");
    }

    thinheat::GridField load(int nx1, int nx2) const {
        if (init.empty() == in.empty()) {
            throw std::invalid_argument("provide exactly one of --init or --in");
        }
        if (!in.empty()) {
            return thinheat::read_csv(in);
        }
        return thinheat::sample(thinheat::make_initial(init), nx1, nx2);
    }

    thinheat::GridField1D load1d(int nx) const {
        if (init.empty() == in.empty()) {
            throw std::invalid_argument("provide exactly one of --init or --in");
        }
        if (!in.empty()) {
            return thinheat::read_csv1d(in);
        }
        return thinheat::sample1d(thinheat::make_initial_1d(init), nx);
    }
};

struct PolicyFlags {
    thinheat::TruncationPolicy policy;
    bool strict = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", policy.tol, "L2 tail tolerance of the truncation")
            ->capture_default_str();
        cmd->add_option("--max-modes", policy.max_modes, "hard cap on the mode count")
            ->capture_default_str();
        cmd->add_option("--t-floor", policy.t_floor,
                        "smallest t the decay-based truncation certifies")
            ->capture_default_str();
        cmd->add_flag("--strict", strict, "fail (exit 3) when the truncation is uncertified");
    }

    void enforce(const thinheat::SolveInfo& info, const char* what) const {
        if (info.certified) return;
        const std::string message = std::string(what) + ": truncation not certified at " +
                                    std::to_string(info.modes) + " modes";
        if (strict) {
            throw thinheat::numeric_error(message);
        }
        std::cerr << "warning: " << message << "\n";
    }
};

int dispatch(CLI::App& app, int argc, char** argv) {
    app.require_subcommand(1);
    auto formatter = std::make_shared<JsonConfig>();

    auto add_command = [&](const std::string& name, const std::string& desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->config_formatter(formatter);
        cmd->allow_config_extras(CLI::config_extras_mode::error);
        // CLI11 only consults config files on the root app, so the subcommand
        // feeds its own file through parse_from_stream. That path fills only
        // options the command line left empty, keeping flag precedence.
        cmd->add_option_function<std::string>(
            "--config",
            [cmd](const std::string& path) {
                std::ifstream in(path, std::ios::binary);
                if (!in) {
                    throw CLI::FileError::Missing(path);
                }
                cmd->parse_from_stream(in);
            },
            "JSON config file; explicit flags win");
        return cmd;
    };

    // eigen
    CLI::App* eigen = add_command("eigen", "print the first K ordered eigenpairs as CSV");
    double eigen_eps = 0.0;
    int eigen_count = 0;
    std::string eigen_out;
    eigen->add_option("--eps", eigen_eps, "plate thickness parameter")->required();
    eigen->add_option("--count", eigen_count, "number of eigenpairs")->required();
    eigen->add_option("--out", eigen_out, "output path (default: stdout)");

    // project
    CLI::App* project_cmd = add_command("project", "expand a field in the ordered eigenbasis");
    double project_eps = 0.0;
    int project_count = 0;
    int project_nx1 = 129, project_nx2 = 129;
    std::string project_out;
    FieldSource project_src;
    project_cmd->add_option("--eps", project_eps, "plate thickness parameter")->required();
    project_cmd->add_option("--count", project_count, "number of modes")->required();
    project_cmd->add_option("--nx1", project_nx1, "grid nodes along x1")->capture_default_str();
    project_cmd->add_option("--nx2", project_nx2, "grid nodes along x2")->capture_default_str();
    project_src.attach(project_cmd);
    project_cmd->add_option("--out", project_out, "output path (default: stdout)");

    // solve
    CLI::App* solve_cmd = add_command("solve", "run the spectral heat flow on the unit square");
    double solve_eps = 0.0, solve_t = 0.0;
    int solve_nx1 = 129, solve_nx2 = 129;
    std::string solve_out;
    FieldSource solve_src;
    PolicyFlags solve_policy;
    solve_cmd->add_option("--eps", solve_eps, "plate thickness parameter")->required();
    solve_cmd->add_option("--t", solve_t, "evolution time")->required();
    solve_cmd->add_option("--nx1", solve_nx1, "grid nodes along x1")->capture_default_str();
    solve_cmd->add_option("--nx2", solve_nx2, "grid nodes along x2")->capture_default_str();
    solve_src.attach(solve_cmd);
    solve_policy.attach(solve_cmd);
    solve_cmd->add_option("--out", solve_out, "output path (default: stdout)");

    // solve1d
    CLI::App* solve1d_cmd = add_command("solve1d", "run the limit heat flow on (0,1)");
    double solve1d_t = 0.0;
    int solve1d_nx = 129;
    std::string solve1d_out;
    FieldSource solve1d_src;
    PolicyFlags solve1d_policy;
    solve1d_cmd->add_option("--t", solve1d_t, "evolution time")->required();
    solve1d_cmd->add_option("--nx", solve1d_nx, "grid nodes")->capture_default_str();
    solve1d_src.attach(solve1d_cmd);
    solve1d_policy.attach(solve1d_cmd);
    solve1d_cmd->add_option("--out", solve1d_out, "output path (default: stdout)");

    // oracle
    CLI::App* oracle_cmd =
        add_command("oracle", "run the finite-difference reference solver and compare");
    double oracle_eps = 0.0, oracle_t = 0.0, oracle_dt = 0.0;
    int oracle_nx1 = 65, oracle_nx2 = 65;
    std::string oracle_out;
    FieldSource oracle_src;
    PolicyFlags oracle_policy;
    oracle_cmd->add_option("--eps", oracle_eps, "plate thickness parameter")->required();
    oracle_cmd->add_option("--t", oracle_t, "evolution time")->required();
    oracle_cmd->add_option("--dt", oracle_dt, "time step")->required();
    oracle_cmd->add_option("--nx1", oracle_nx1, "grid nodes along x1")->capture_default_str();
    oracle_cmd->add_option("--nx2", oracle_nx2, "grid nodes along x2")->capture_default_str();
    oracle_src.attach(oracle_cmd);
    oracle_policy.attach(oracle_cmd);
    oracle_cmd->add_option("--out", oracle_out, "output path for the FD field CSV")->required();

    // converge
    CLI::App* converge_cmd = add_command("converge", "eigenvalue and solution convergence sweep");
    std::string converge_eps_list;
    double converge_t0 = 0.05, converge_t1 = 0.5;
    int converge_t_count = 64, converge_n_max = 8;
    int converge_nx1 = 129, converge_nx2 = 129;
    std::string converge_out, converge_curves;
    FieldSource converge_src;
    PolicyFlags converge_policy;
    converge_cmd->add_option("--eps-list", converge_eps_list, "comma-separated eps values")
        ->required();
    converge_cmd->add_option("--t0", converge_t0, "first time")->capture_default_str();
    converge_cmd->add_option("--t1", converge_t1, "last time")->capture_default_str();
    converge_cmd->add_option("--t-count", converge_t_count, "geometric grid size")
        ->capture_default_str();
    converge_cmd->add_option("--n-max", converge_n_max, "eigenvalues per eps in the table")
        ->capture_default_str();
    converge_cmd->add_option("--nx1", converge_nx1, "grid nodes along x1")->capture_default_str();
    converge_cmd->add_option("--nx2", converge_nx2, "grid nodes along x2")->capture_default_str();
    converge_src.attach(converge_cmd);
    converge_policy.attach(converge_cmd);
    converge_cmd->add_option("--out", converge_out, "report JSON path (default: stdout)");
    converge_cmd->add_option("--curves-csv", converge_curves, "also write eps,t,error rows here");

    app.parse(argc, argv);

    if (*eigen) {
        const std::vector<thinheat::EigenPair> spectrum =
            thinheat::ordered_spectrum(thinheat::Epsilon(eigen_eps), eigen_count);
        std::string csv = "rank,m,n,lambda\n";
        for (const thinheat::EigenPair& p : spectrum) {
            csv += std::to_string(p.multiplicity_rank) + "," + std::to_string(p.mode.m) + "," +
                   std::to_string(p.mode.n) + "," + fmt17(p.lambda) + "\n";
        }
        emit(csv, eigen_out);
        return 0;
    }

    if (*project_cmd) {
        const thinheat::GridField f = project_src.load(project_nx1, project_nx2);
        const thinheat::SpectralState state =
            thinheat::project(f, thinheat::Epsilon(project_eps), project_count);
        emit(thinheat::to_json(state), project_out);
        return 0;
    }

    if (*solve_cmd) {
        const thinheat::GridField f = solve_src.load(solve_nx1, solve_nx2);
        thinheat::SolveInfo info;
        const thinheat::GridField result =
            thinheat::solve(f, thinheat::Epsilon(solve_eps), solve_t, solve_policy.policy, &info);
        solve_policy.enforce(info, "solve");
        emit(thinheat::to_csv(result), solve_out);
        return 0;
    }

    if (*solve1d_cmd) {
        const thinheat::GridField1D f = solve1d_src.load1d(solve1d_nx);
        thinheat::SolveInfo info;
        const thinheat::GridField1D result =
            thinheat::evolve1d(f, solve1d_t, solve1d_policy.policy, &info);
        solve1d_policy.enforce(info, "solve1d");
        emit(thinheat::to_csv(result), solve1d_out);
        return 0;
    }

    if (*oracle_cmd) {
        const thinheat::GridField f = oracle_src.load(oracle_nx1, oracle_nx2);
        thinheat::FDConfig cfg;
        cfg.dt = oracle_dt;
        const thinheat::Epsilon eps(oracle_eps);
        const thinheat::GridField fd = thinheat::fd_solve(f, eps, oracle_t, cfg);
        thinheat::SolveInfo info;
        const thinheat::GridField spectral =
            thinheat::solve(f, eps, oracle_t, oracle_policy.policy, &info);
        oracle_policy.enforce(info, "oracle");
        thinheat::GridField diff(f.nx1(), f.nx2());
        for (int i = 0; i < f.nx1(); ++i) {
            for (int j = 0; j < f.nx2(); ++j) {
                diff.at(i, j) = fd.at(i, j) - spectral.at(i, j);
            }
        }
        const double dist = std::sqrt(std::max(thinheat::inner_product(diff, diff), 0.0));
        write_text(thinheat::to_csv(fd), oracle_out);
        std::cout << "l2_distance," << fmt17(dist) << "\n";
        return 0;
    }

    if (*converge_cmd) {
        const std::vector<double> eps_list = parse_eps_list(converge_eps_list);
        thinheat::ExperimentSpec spec{
            eps_list,
            converge_src.load(converge_nx1, converge_nx2),
            converge_n_max,
            thinheat::geometric_t_grid(converge_t0, converge_t1, converge_t_count),
            converge_policy.policy,
        };
        const thinheat::ConvergenceReport report = thinheat::convergence_report(spec);
        emit(thinheat::to_json(report), converge_out);
        if (!converge_curves.empty()) {
            thinheat::write_curves_csv(report, converge_curves);
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thinheat: spectral heat flow on thin rectangular plates"};
    try {
        return dispatch(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const thinheat::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const thinheat::numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
