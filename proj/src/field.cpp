#include "thinheat/field.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace thinheat {

namespace detail {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& token, const std::string& context) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw io_error(context + ": expected a number, got '" + token + "'");
    }
    return v;
}

int parse_int(const std::string& token, const std::string& context) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0') {
        throw io_error(context + ": expected an integer, got '" + token + "'");
    }
    return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

namespace {

void require_odd_count(const char* who, const char* name, int n) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument(std::string(who) + ": " + name + " must be odd and >= 3, got " +
                                    std::to_string(n));
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void dump(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_error("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw io_error("write to '" + path + "' failed");
    }
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> lines = split(text, '\n');
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    for (std::string& line : lines) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
    }
    return lines;
}

}  // namespace

}  // namespace detail

GridField::GridField(int nx1, int nx2) : nx1_(nx1), nx2_(nx2) {
    detail::require_odd_count("GridField", "nx1", nx1);
    detail::require_odd_count("GridField", "nx2", nx2);
    values_.assign(static_cast<std::size_t>(nx1) * static_cast<std::size_t>(nx2), 0.0);
}

GridField::GridField(int nx1, int nx2, Epsilon eps) : GridField(nx1, nx2) {
    eps_ = eps.value();
}

double GridField::eps_value() const {
    if (!eps_) {
        throw std::invalid_argument("GridField: reference-square field has no eps");
    }
    return *eps_;
}

double GridField::coord2(int j) const {
    const double unit = static_cast<double>(j) / (nx2_ - 1);
    return eps_ ? *eps_ * unit : unit;
}

bool GridField::compatible_with(const GridField& other) const {
    if (nx1_ != other.nx1_ || nx2_ != other.nx2_) return false;
    if (eps_.has_value() != other.eps_.has_value()) return false;
    if (eps_ && *eps_ != *other.eps_) return false;
    return true;
}

GridField1D::GridField1D(int nx) : nx_(nx) {
    detail::require_odd_count("GridField1D", "nx", nx);
    values_.assign(static_cast<std::size_t>(nx), 0.0);
}

namespace {

void check_sample(double v, int i, int j) {
    if (!std::isfinite(v)) {
        throw numeric_error("sample: non-finite value at node (i=" + std::to_string(i) +
                            ", j=" + std::to_string(j) + ")");
    }
}

}  // namespace

GridField sample(const std::function<double(double, double)>& f, int nx1, int nx2) {
    GridField out(nx1, nx2);
    for (int i = 0; i < nx1; ++i) {
        for (int j = 0; j < nx2; ++j) {
            const double v = f(out.coord1(i), out.coord2(j));
            check_sample(v, i, j);
            out.at(i, j) = v;
        }
    }
    return out;
}

GridField sample_physical(const std::function<double(double, double)>& f, Epsilon eps, int nx1,
                          int nx2) {
    GridField out(nx1, nx2, eps);
    for (int i = 0; i < nx1; ++i) {
        for (int j = 0; j < nx2; ++j) {
            const double v = f(out.coord1(i), out.coord2(j));
            check_sample(v, i, j);
            out.at(i, j) = v;
        }
    }
    return out;
}

GridField1D sample1d(const std::function<double(double)>& f, int nx) {
    GridField1D out(nx);
    for (int i = 0; i < nx; ++i) {
        const double v = f(out.coord(i));
        if (!std::isfinite(v)) {
            throw numeric_error("sample1d: non-finite value at node (i=" + std::to_string(i) + ")");
        }
        out.at(i) = v;
    }
    return out;
}

std::string to_csv(const GridField& f) {
    std::string out;
    out += std::to_string(f.nx1()) + "," + std::to_string(f.nx2()) + ",";
    if (f.is_physical()) {
        out += "physical," + detail::fmt17(f.eps_value());
    } else {
        out += "reference";
    }
    out += "\n";
    for (int i = 0; i < f.nx1(); ++i) {
        for (int j = 0; j < f.nx2(); ++j) {
            if (j > 0) out += ",";
            out += detail::fmt17(f.at(i, j));
        }
        out += "\n";
    }
    return out;
}

GridField parse_csv(const std::string& text) {
    const std::vector<std::string> lines = detail::nonempty_lines(text);
    if (lines.empty()) {
        throw io_error("field CSV: empty input");
    }
    const std::vector<std::string> head = detail::split(lines[0], ',');
    if (head.size() < 3) {
        throw io_error("field CSV: header needs nx1,nx2,domain_tag");
    }
    const int nx1 = detail::parse_int(head[0], "field CSV header nx1");
    const int nx2 = detail::parse_int(head[1], "field CSV header nx2");
    GridField out = [&]() -> GridField {
        try {
            if (head[2] == "reference") {
                if (head.size() != 3) throw io_error("field CSV: reference header has 3 columns");
                return GridField(nx1, nx2);
            }
            if (head[2] == "physical") {
                if (head.size() != 4) throw io_error("field CSV: physical header needs eps");
                const double eps = detail::parse_double(head[3], "field CSV header eps");
                return GridField(nx1, nx2, Epsilon(eps));
            }
        } catch (const std::invalid_argument& e) {
            throw io_error(std::string("field CSV: ") + e.what());
        }
        throw io_error("field CSV: unknown domain tag '" + head[2] + "'");
    }();
    if (lines.size() != static_cast<std::size_t>(nx1) + 1) {
        throw io_error("field CSV: expected " + std::to_string(nx1) + " data rows, got " +
                       std::to_string(lines.size() - 1));
    }
    for (int i = 0; i < nx1; ++i) {
        const std::vector<std::string> row = detail::split(lines[static_cast<std::size_t>(i) + 1], ',');
        if (row.size() != static_cast<std::size_t>(nx2)) {
            throw io_error("field CSV: row " + std::to_string(i) + " has " +
                           std::to_string(row.size()) + " values, expected " + std::to_string(nx2));
        }
        for (int j = 0; j < nx2; ++j) {
            const double v = detail::parse_double(row[static_cast<std::size_t>(j)],
                                                  "field CSV row " + std::to_string(i));
            if (!std::isfinite(v)) {
                throw io_error("field CSV: non-finite sample at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
            }
            out.at(i, j) = v;
        }
    }
    return out;
}

void write_csv(const GridField& f, const std::string& path) { detail::dump(to_csv(f), path); }

GridField read_csv(const std::string& path) {
    try {
        return parse_csv(detail::slurp(path));
    } catch (const io_error& e) {
        throw io_error(std::string(e.what()) + " [" + path + "]");
    }
}

std::string to_csv(const GridField1D& f) {
    std::string out = std::to_string(f.nx()) + "\n";
    for (int i = 0; i < f.nx(); ++i) {
        out += detail::fmt17(f.at(i));
        out += "\n";
    }
    return out;
}

GridField1D parse_csv1d(const std::string& text) {
    const std::vector<std::string> lines = detail::nonempty_lines(text);
    if (lines.empty()) {
        throw io_error("1d field CSV: empty input");
    }
    const int nx = detail::parse_int(lines[0], "1d field CSV header nx");
    GridField1D out = [&]() -> GridField1D {
        try {
            return GridField1D(nx);
        } catch (const std::invalid_argument& e) {
            throw io_error(std::string("1d field CSV: ") + e.what());
        }
    }();
    if (lines.size() != static_cast<std::size_t>(nx) + 1) {
        throw io_error("1d field CSV: expected " + std::to_string(nx) + " data rows, got " +
                       std::to_string(lines.size() - 1));
    }
    for (int i = 0; i < nx; ++i) {
        const double v = detail::parse_double(lines[static_cast<std::size_t>(i) + 1],
                                              "1d field CSV row " + std::to_string(i));
        if (!std::isfinite(v)) {
            throw io_error("1d field CSV: non-finite sample at row " + std::to_string(i));
        }
        out.at(i) = v;
    }
    return out;
}

void write_csv(const GridField1D& f, const std::string& path) { detail::dump(to_csv(f), path); }

GridField1D read_csv1d(const std::string& path) {
    try {
        return parse_csv1d(detail::slurp(path));
    } catch (const io_error& e) {
        throw io_error(std::string(e.what()) + " [" + path + "]");
    }
}

}  // namespace thinheat
