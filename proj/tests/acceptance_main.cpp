// Standalone acceptance gate: one PASS/FAIL line per criterion, exit 0 only
// when every criterion holds. An optional first argument names the CLI
// binary; when present, the end-to-end exit-code checks run through it.

#include "novikov/abelian.hpp"
#include "novikov/checks.hpp"
#include "novikov/format.hpp"
#include "novikov/maps.hpp"
#include "novikov/novikov_algebra.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace novikov;

namespace {

int failures = 0;

void line(int number, const std::string& title, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " [" << number << "] " << title;
    if (!pass && !detail.empty()) {
        std::cout << " -- " << detail;
    }
    std::cout << "\n";
    if (!pass) {
        ++failures;
    }
}

/// Runs the CLI quietly and reports its exit code, or -1 when it cannot run.
int cli_exit_code(const std::string& cli, const std::string& args) {
    std::string command = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
    int status = std::system(command.c_str());
    if (status == -1 || !WIFEXITED(status)) {
        return -1;
    }
    return WEXITSTATUS(status);
}

std::string summarize_failures(const std::vector<CheckResult>& results) {
    std::string s;
    for (const auto& r : results) {
        if (!r.pass) {
            if (!s.empty()) {
                s += "; ";
            }
            s += r.name + ": " + r.detail;
        }
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    auto R = standard_ring();

    try {
        // 1. The fixed identity suite for partial1, w, w0, D1 and psi.
        {
            auto results = paper_checks();
            bool pass = results.size() == 19 && all_pass(results);
            std::string detail = pass ? "" : summarize_failures(results);
            if (pass && !cli.empty()) {
                int code = cli_exit_code(cli, "check paper");
                if (code != 0) {
                    pass = false;
                    detail = "cli 'check paper' exited with " + std::to_string(code);
                }
            }
            line(1, "fixed identity suite (19 checks at exact equality)", pass, detail);
        }

        // 2. exp(D1) terminates and equals the closed-form automorphism.
        {
            auto psi = exp_derivation(builtin_d1(R), 10);
            auto w0 = builtin_w0(R);
            auto x = DiffPolynomial::generator(R, 0);
            auto y = DiffPolynomial::generator(R, 1);
            auto z = DiffPolynomial::generator(R, 2);
            std::vector<NovikovElement> closed = {
                NovikovElement::from_body(x + circ(y.scaled(Rational(2)), w0) +
                                          circ(circ(z, w0), w0)),
                NovikovElement::from_body(y + circ(z, w0)),
                NovikovElement::from_body(z),
            };
            bool pass = psi == Endomorphism::from_novikov_images(R, closed);
            line(2, "exp(D1) = (x + 2*y o w0 + (z o w0) o w0, y + z o w0, z)", pass);
        }

        // 3. Abelianization carries the derivation and its exponential onto
        //    the Nagata pair.
        {
            bool pass = theta(builtin_w0(R)) == comm_w(R) &&
                        induced_derivation(builtin_d1(R)) == nagata_derivation(R) &&
                        induced_endomorphism(builtin_psi(R)) == nagata(R) &&
                        comm_exp(nagata_derivation(R)) == nagata(R);
            line(3, "theta sends (w0, D1, exp D1) to (w, w*partial, nagata)", pass);
        }

        // 4. Every weight-1 monomial of degree at most 5 decomposes into
        //    circle trees that evaluate back to it.
        {
            auto monomials = weight_one_monomials(R, 5);
            bool pass = monomials.size() == 510;
            std::string detail;
            if (!pass) {
                detail = "expected 510 monomials, found " + std::to_string(monomials.size());
            }
            for (const auto& u : monomials) {
                if (!pass) {
                    break;
                }
                auto back = eval_combination(R, express_as_novikov(R, u));
                if (!back.unit().is_zero() || back.body() != DiffPolynomial::monomial(R, u)) {
                    pass = false;
                    detail = "round trip failed on " + format(R, u);
                }
            }
            line(4, "all 510 weight-1 monomials of degree <= 5 decompose exactly", pass, detail);
        }

        // 5. The randomized identity properties at the default budget.
        {
            auto results = property_checks();
            bool pass = all_pass(results);
            line(5, "randomized properties (23 suites, 200 cases each)", pass,
                 pass ? "" : summarize_failures(results));
        }

        // 6. Negative controls: non-examples are rejected and the corrupted
        //    derivation fails loudly.
        {
            bool pass = !is_novikov(builtin_w(R)) && !is_novikov(builtin_w(R).delta().delta()) &&
                        !is_triangular(builtin_d1(R)) && !is_triangular(builtin_d1(R), true) &&
                        !all_pass(paper_checks(true));
            std::string detail;
            if (pass && !cli.empty()) {
                int code = cli_exit_code(cli, "check paper --corrupt-d1");
                if (code != 1) {
                    pass = false;
                    detail = "cli corrupted check exited with " + std::to_string(code) +
                             ", expected 1";
                }
            }
            line(6, "negative controls: weights, triangularity, corrupted D1", pass, detail);
        }
    } catch (const std::exception& e) {
        std::cout << "FAIL [exception] " << e.what() << "\n";
        ++failures;
    }

    return failures == 0 ? 0 : 1;
}
