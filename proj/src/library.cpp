#include "knottrace/library.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "knottrace/invariants.hpp"

namespace knottrace {

KnotComplex staircase_torus_knot(int m) {
    if (m < 1) throw std::invalid_argument("staircase parameter must be positive");
    std::vector<GeneratorInfo> gens;
    for (int k = m; k >= -m; --k)
        gens.push_back({"g" + std::to_string(k), k, k - m});
    std::set<std::pair<int, int>> arrows;
    auto index = [m](int k) { return m - k; };
    for (int k = m - 1; k >= -m + 1; k -= 2) {
        arrows.emplace(index(k), index(k + 1));  // i-drop 1, j-drop 0
        arrows.emplace(index(k), index(k - 1));  // i-drop 0, j-drop 1
    }
    return KnotComplex::make("T2" + std::to_string(2 * m + 1), std::move(gens),
                             std::move(arrows));
}

namespace {

KnotComplex make_unknot() {
    return KnotComplex::make("unknot", {{"u", 0, 0}}, {});
}

KnotComplex make_figure_eight() {
    std::vector<GeneratorInfo> gens = {
        {"p", 1, 1}, {"q", 0, 0}, {"r", 0, 0}, {"e", 0, 0}, {"s", -1, -1}};
    std::set<std::pair<int, int>> arrows = {{1, 0}, {1, 4}, {0, 2}, {4, 2}};
    return KnotComplex::make("fig8", std::move(gens), std::move(arrows));
}

std::vector<LibraryEntry> build_library() {
    std::vector<LibraryEntry> lib;

    LibraryEntry unknot{ "unknot", make_unknot(), {}, {} };
    unknot.published = {{"tau", {0, "unknot"}},
                        {"nu", {0, "unknot"}},
                        {"epsilon", {0, "unknot"}},
                        {"genus", {0, "unknot"}}};
    lib.push_back(std::move(unknot));

    for (int m = 1; m <= 3; ++m) {
        LibraryEntry e{ "T2" + std::to_string(2 * m + 1), staircase_torus_knot(m), {}, {} };
        e.published = {{"tau", {m, "torus-knot formula"}},
                       {"nu", {m, "torus-knot formula"}},
                       {"epsilon", {1, "torus-knot formula"}},
                       {"genus", {m, "torus-knot formula"}}};
        lib.push_back(std::move(e));
    }

    LibraryEntry fig8{ "fig8", make_figure_eight(), {}, {} };
    fig8.published = {{"tau", {0, "twist-knot values"}},
                      {"nu", {0, "twist-knot values"}},
                      {"epsilon", {0, "twist-knot values"}},
                      {"genus", {1, "twist-knot values"}}};
    fig8.relations.emplace("mirror-of", "fig8");  // amphichiral
    lib.push_back(std::move(fig8));

    return lib;
}

}  // namespace

const std::vector<LibraryEntry>& builtin_library() {
    static const std::vector<LibraryEntry> lib = build_library();
    return lib;
}

const LibraryEntry* find_entry(std::string_view name) {
    for (const auto& e : builtin_library())
        if (e.name == name) return &e;
    return nullptr;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Splits "a,b" at the top-level comma, respecting nested parentheses.
std::pair<std::string_view, std::string_view> split_args(std::string_view body) {
    int depth = 0;
    for (std::size_t k = 0; k < body.size(); ++k) {
        if (body[k] == '(') ++depth;
        if (body[k] == ')') --depth;
        if (body[k] == ',' && depth == 0)
            return {body.substr(0, k), body.substr(k + 1)};
    }
    throw std::invalid_argument("sum(...) expects two comma-separated arguments");
}

}  // namespace

KnotComplex resolve_library_expr(std::string_view expr) {
    expr = trim(expr);
    if (expr.starts_with("mirror(") && expr.ends_with(")")) {
        return resolve_library_expr(expr.substr(7, expr.size() - 8)).mirrored();
    }
    if (expr.starts_with("sum(") && expr.ends_with(")")) {
        auto [lhs, rhs] = split_args(expr.substr(4, expr.size() - 5));
        return KnotComplex::connected_sum(resolve_library_expr(lhs),
                                          resolve_library_expr(rhs));
    }
    if (const LibraryEntry* e = find_entry(expr)) return e->complex;
    throw std::invalid_argument("unknown library entry '" + std::string(expr) +
                                "'; see 'library list'");
}

KnotComplex resolve_input(const std::string& arg) {
    if (arg.starts_with("lib:")) return resolve_library_expr(std::string_view(arg).substr(4));
    std::ifstream in(arg);
    if (!in)
        throw ValidationError(Violation::Parse, "cannot open input file '" + arg + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return KnotComplex::parse(text.str());
}

const std::vector<TwistDesignation>& twist_designations() {
    static const std::vector<TwistDesignation> none;
    return none;
}

bool twist_designation_consistent(const KnotComplex& source, const KnotComplex& result) {
    return tau(result) <= tau(source) && nu(result) <= nu(source);
}

}  // namespace knottrace
