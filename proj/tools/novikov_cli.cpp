// Command-line front end for the novikov library.
//
//   eval        parse an expression and print its canonical form
//   derive      apply a derivation (named or given by images), optionally a power
//   exp         exponentiate a locally nilpotent derivation
//   theta       abelianize a unit-plus-weight-1 element
//   decompose   rewrite a weight-1 polynomial as circle products of generators
//   check       run the fixed identity list ("paper") or the seeded property
//               suite ("identities")
//
// Every subcommand honours --json, --gens and --m. Exit codes: 0 success,
// 1 identity/property/computation failure, 2 usage or parse error.

#include "novikov/json_io.hpp"
#include "novikov/novikov.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace {

using namespace novikov;

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Session {
    std::string gens = "x,y,z";
    int m = 1;
    bool json = false;
};

/// Split on commas that sit outside parentheses, so multi-index derivatives
/// like x^(1,2) survive inside image lists.
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') {
            ++depth;
        } else if (ch == ')') {
            --depth;
        }
        if (ch == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    return parts;
}

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

RingPtr ring_of(const Session& session) {
    std::vector<std::string> names;
    for (const auto& part : split_top_level(session.gens)) {
        names.push_back(trimmed(part));
    }
    return make_ring(names, session.m);
}

/// A --map value is either a named derivation or a comma-separated list of
/// image expressions, one per generator.
Derivation derivation_of(const RingPtr& ring, const std::string& value) {
    if (value == "d1") {
        return builtin_d1(ring);
    }
    if (value == "partial1") {
        return builtin_partial1(ring);
    }
    if (value == "delta") {
        std::vector<DiffPolynomial> images;
        for (int i = 0; i < ring->generators; ++i) {
            images.push_back(DiffPolynomial::generator(ring, i).delta(0));
        }
        return Derivation(ring, std::move(images));
    }
    std::vector<DiffPolynomial> images;
    for (const auto& part : split_top_level(value)) {
        images.push_back(eval_expr(trimmed(part), ring));
    }
    if (static_cast<int>(images.size()) != ring->generators) {
        throw std::invalid_argument("--map needs one image per generator (" +
                                    std::to_string(ring->generators) + " expected, got " +
                                    std::to_string(images.size()) + ")");
    }
    return Derivation(ring, std::move(images));
}

void print_images(const std::vector<std::pair<std::string, std::string>>& images) {
    for (const auto& [name, image] : images) {
        std::cout << name << " -> " << image << "\n";
    }
}

template <typename T>
int emit(const Session& session, const T& value) {
    if (session.json) {
        std::cout << json_of(value).dump(2) << "\n";
    } else if constexpr (std::is_same_v<T, Derivation> || std::is_same_v<T, Endomorphism>) {
        print_images(format_images(value));
    } else {
        std::cout << format(value) << "\n";
    }
    return kExitSuccess;
}

int run_eval(const Session& session, const std::string& expr) {
    auto ring = ring_of(session);
    return emit(session, eval_expr(expr, ring));
}

int run_derive(const Session& session, const std::string& expr, const std::string& map, int power) {
    auto ring = ring_of(session);
    Derivation D = derivation_of(ring, map);
    DiffPolynomial f = eval_expr(expr, ring);
    for (int i = 0; i < power; ++i) {
        f = D(f);
    }
    return emit(session, f);
}

int run_exp(const Session& session, const std::string& map, int cap) {
    auto ring = ring_of(session);
    // Building the derivation can only fail through bad usage; from here on,
    // the one failure mode is the series refusing to terminate.
    Derivation D = derivation_of(ring, map);
    try {
        return emit(session, exp_derivation(D, cap));
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

int run_theta(const Session& session, const std::string& expr) {
    auto ring = ring_of(session);
    auto element = NovikovElement::from_polynomial(eval_expr(expr, ring));
    return emit(session, theta(element));
}

int run_decompose(const Session& session, const std::string& expr) {
    auto ring = ring_of(session);
    DiffPolynomial f = eval_expr(expr, ring);
    if (f.is_zero()) {
        throw std::invalid_argument("decompose: the zero polynomial has no decomposition");
    }
    if (!is_novikov(f)) {
        throw std::invalid_argument("decompose: every monomial must have weight 1");
    }
    TermCombination combination;
    for (const auto& [u, c] : f.terms()) {
        for (const auto& wt : express_as_novikov(ring, u)) {
            combination.push_back({c * wt.coeff, wt.term});
        }
    }
    if (!(eval_combination(ring, combination).body() == f)) {
        std::cerr << "decompose: internal round-trip mismatch\n";
        return kExitFailure;
    }
    if (session.json) {
        Json out;
        out["terms"] = Json::array();
        for (const auto& wt : combination) {
            out["terms"].push_back({{"coeff", format(wt.coeff)}, {"tree", format(ring, wt.term)}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << format(ring, combination) << "\n";
    }
    return kExitSuccess;
}

int report(const Session& session, const std::vector<CheckResult>& results) {
    if (session.json) {
        Json out = Json::array();
        for (const auto& r : results) {
            out.push_back(json_report(r.name, r.pass, r.detail));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.pass && !r.detail.empty()) {
                std::cout << "  [" << r.detail << "]";
            }
            std::cout << "\n";
        }
    }
    return all_pass(results) ? kExitSuccess : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in differential polynomial and free Novikov algebras"};
    app.require_subcommand(1);

    Session session;
    app.add_option("--gens", session.gens, "comma-separated generator names")->capture_default_str();
    app.add_option("--m", session.m, "number of commuting derivations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--json", session.json, "machine-readable output");

    std::string expr;
    std::string map = "d1";
    int power = 1;
    int cap = 20;

    auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression to canonical form");
    cmd_eval->add_option("expr", expr, "expression")->required();
    cmd_eval->fallthrough();

    auto* cmd_derive = app.add_subcommand("derive", "apply a derivation");
    cmd_derive->add_option("expr", expr, "expression")->required();
    cmd_derive->add_option("--map", map, "d1, partial1, delta, or a comma-separated image list")
        ->capture_default_str();
    cmd_derive->add_option("--power", power, "apply the derivation this many times")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_derive->fallthrough();

    auto* cmd_exp = app.add_subcommand("exp", "exponentiate a locally nilpotent derivation");
    cmd_exp->add_option("--map", map, "d1, partial1, delta, or a comma-separated image list")
        ->capture_default_str();
    cmd_exp->add_option("--cap", cap, "largest power tried before giving up")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_exp->fallthrough();

    auto* cmd_theta = app.add_subcommand("theta", "abelianize a unit-plus-weight-1 element");
    cmd_theta->add_option("expr", expr, "expression")->required();
    cmd_theta->fallthrough();

    auto* cmd_decompose =
        app.add_subcommand("decompose", "rewrite a weight-1 polynomial over the circle product");
    cmd_decompose->add_option("expr", expr, "expression")->required();
    cmd_decompose->fallthrough();

    auto* cmd_check = app.add_subcommand("check", "run verification suites");
    cmd_check->require_subcommand(1);
    cmd_check->fallthrough();

    bool corrupt_d1 = false;
    auto* check_paper = cmd_check->add_subcommand("paper", "fixed identity list for the named maps");
    check_paper->add_flag("--corrupt-d1", corrupt_d1,
                          "negative control: corrupt D1 and expect failures");
    check_paper->fallthrough();

    PropertyOptions popts;
    auto* check_identities = cmd_check->add_subcommand("identities", "seeded randomized property suite");
    check_identities->add_option("--seed", popts.seed, "property seed")
        ->envname("NOVIKOV_SEED")
        ->capture_default_str();
    check_identities->add_option("--cases", popts.cases, "cases per property")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    check_identities->add_option("--max-degree", popts.max_degree, "degree bound for random inputs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    check_identities->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (cmd_eval->parsed()) {
            return run_eval(session, expr);
        }
        if (cmd_derive->parsed()) {
            return run_derive(session, expr, map, power);
        }
        if (cmd_exp->parsed()) {
            return run_exp(session, map, cap);
        }
        if (cmd_theta->parsed()) {
            return run_theta(session, expr);
        }
        if (cmd_decompose->parsed()) {
            return run_decompose(session, expr);
        }
        if (check_paper->parsed()) {
            return report(session, paper_checks(corrupt_d1));
        }
        if (check_identities->parsed()) {
            return report(session, property_checks(popts));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
