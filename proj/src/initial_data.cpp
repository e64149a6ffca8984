#include "thinheat/initial_data.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "thinheat/types.hpp"

namespace thinheat {

namespace {

enum class TermKind { constant, cos_x1, cos_x2, product };

struct Term {
    TermKind kind = TermKind::constant;
    int k = 0;
    int l = 0;
};

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

// Splits on commas that are not nested inside parentheses, so that
// "cos_x1(1),product(2,3)" yields two pieces.
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string current;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

int parse_frequency(const std::string& token, const std::string& selector) {
    const std::string t = trimmed(token);
    if (t.empty()) {
        throw std::invalid_argument("initial data '" + selector + "': empty frequency");
    }
    for (char c : t) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("initial data '" + selector +
                                        "': frequency must be a nonnegative integer, got '" + t +
                                        "'");
        }
    }
    if (t.size() > 6) {
        throw std::invalid_argument("initial data '" + selector + "': frequency too large");
    }
    return std::stoi(t);
}

std::vector<int> parse_args(const std::string& piece, const std::string& selector) {
    const std::size_t open = piece.find('(');
    if (open == std::string::npos || piece.back() != ')') {
        throw std::invalid_argument("initial data '" + selector + "': malformed term '" + piece +
                                    "'");
    }
    const std::string inside = piece.substr(open + 1, piece.size() - open - 2);
    std::vector<int> args;
    for (const std::string& a : split_top_level(inside)) {
        args.push_back(parse_frequency(a, selector));
    }
    return args;
}

Term parse_term(const std::string& raw, const std::string& selector) {
    const std::string piece = trimmed(raw);
    if (piece == "constant") {
        return Term{TermKind::constant, 0, 0};
    }
    if (piece.rfind("cos_x1(", 0) == 0) {
        const std::vector<int> args = parse_args(piece, selector);
        if (args.size() != 1) {
            throw std::invalid_argument("initial data '" + selector + "': cos_x1 takes one frequency");
        }
        return Term{TermKind::cos_x1, args[0], 0};
    }
    if (piece.rfind("cos_x2(", 0) == 0) {
        const std::vector<int> args = parse_args(piece, selector);
        if (args.size() != 1) {
            throw std::invalid_argument("initial data '" + selector + "': cos_x2 takes one frequency");
        }
        return Term{TermKind::cos_x2, args[0], 0};
    }
    if (piece.rfind("product(", 0) == 0) {
        const std::vector<int> args = parse_args(piece, selector);
        if (args.size() != 2) {
            throw std::invalid_argument("initial data '" + selector +
                                        "': product takes two frequencies");
        }
        return Term{TermKind::product, args[0], args[1]};
    }
    throw std::invalid_argument("initial data '" + selector + "': unknown term '" + piece + "'");
}

std::vector<Term> parse_selector(const std::string& selector) {
    const std::string s = trimmed(selector);
    if (s.empty()) {
        throw std::invalid_argument("initial data: empty selector");
    }
    std::vector<Term> terms;
    if (s.rfind("sum:", 0) == 0) {
        for (const std::string& piece : split_top_level(s.substr(4))) {
            terms.push_back(parse_term(piece, selector));
        }
    } else {
        terms.push_back(parse_term(s, selector));
    }
    return terms;
}

double eval_term(const Term& term, double x1, double x2) {
    switch (term.kind) {
        case TermKind::constant:
            return 1.0;
        case TermKind::cos_x1:
            return std::cos(term.k * kPi * x1);
        case TermKind::cos_x2:
            return std::cos(term.k * kPi * x2);
        case TermKind::product:
            return std::cos(term.k * kPi * x1) * std::cos(term.l * kPi * x2);
    }
    return 0.0;
}

}  // namespace

std::function<double(double, double)> make_initial(const std::string& selector) {
    const std::vector<Term> terms = parse_selector(selector);
    return [terms](double x1, double x2) {
        double acc = 0.0;
        for (const Term& term : terms) acc += eval_term(term, x1, x2);
        return acc;
    };
}

std::function<double(double)> make_initial_1d(const std::string& selector) {
    const std::vector<Term> terms = parse_selector(selector);
    for (const Term& term : terms) {
        if (term.kind == TermKind::cos_x2 || term.kind == TermKind::product) {
            throw std::invalid_argument("initial data '" + selector +
                                        "': cos_x2 and product are not available in 1d");
        }
    }
    return [terms](double x) {
        double acc = 0.0;
        for (const Term& term : terms) acc += eval_term(term, x, 0.0);
        return acc;
    };
}

}  // namespace thinheat
