#pragma once

// Deterministic plain-text rendering. Terms stream out in the canonical map
// order; coefficients print as reduced fractions with the sign folded into
// the separator; derivative orders use primes up to order two and ^(r)
// beyond (multi-indices always print as ^(i1,...,im)). Everything printed
// here parses back to an equal value under the expression grammar.

#include "novikov/abelian.hpp"
#include "novikov/maps.hpp"
#include "novikov/novikov_algebra.hpp"
#include "novikov/ring.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace novikov {

namespace detail {

/// Accumulates "a - b + 2*c" style sums: the first summand carries a bare
/// leading minus, later ones fold their sign into the separator.
class TermWriter {
public:
    void add(const Rational& coeff, const std::string& monomial) {
        if (coeff.is_zero()) {
            return;
        }
        Rational magnitude = coeff.abs();
        if (first_) {
            if (coeff.sign() < 0) {
                out_ += "-";
            }
            first_ = false;
        } else {
            out_ += coeff.sign() < 0 ? " - " : " + ";
        }
        if (monomial.empty()) {
            out_ += magnitude.str();
        } else {
            if (!magnitude.is_one()) {
                out_ += magnitude.str() + "*";
            }
            out_ += monomial;
        }
    }

    std::string finish() const { return first_ ? "0" : out_; }

private:
    std::string out_;
    bool first_ = true;
};

} // namespace detail

inline std::string format(const Rational& c) { return c.str(); }

inline std::string format(const RingPtr& ring, const DerivativeVariable& v) {
    std::string s = ring->names.at(static_cast<std::size_t>(v.var));
    if (ring->derivations == 1) {
        int r = v.theta[0];
        if (r == 1 || r == 2) {
            s += std::string(static_cast<std::size_t>(r), '\'');
        } else if (r >= 3) {
            s += "^(" + std::to_string(r) + ")";
        }
    } else if (v.order() > 0) {
        s += "^(";
        for (std::size_t i = 0; i < v.theta.size(); ++i) {
            if (i > 0) {
                s += ",";
            }
            s += std::to_string(v.theta[i]);
        }
        s += ")";
    }
    return s;
}

inline std::string format(const RingPtr& ring, const DiffMonomial& u) {
    if (u.is_one()) {
        return "1";
    }
    std::string s;
    for (const auto& factor : u.factors()) {
        if (!s.empty()) {
            s += "*";
        }
        s += format(ring, factor.variable);
        if (factor.power > 1) {
            s += "^" + std::to_string(factor.power);
        }
    }
    return s;
}

inline std::string format(const DiffPolynomial& f) {
    detail::TermWriter out;
    for (const auto& [u, c] : f.terms()) {
        out.add(c, u.is_one() ? "" : format(f.ring(), u));
    }
    return out.finish();
}

inline std::string format(const NovikovElement& a) {
    detail::TermWriter out;
    out.add(a.unit(), "");
    for (const auto& [u, c] : a.body().terms()) {
        out.add(c, format(a.ring(), u));
    }
    return out.finish();
}

inline std::string format(const RingPtr& ring, const CommMonomial& u) {
    std::string s;
    for (std::size_t i = 0; i < u.exponents.size(); ++i) {
        if (u.exponents[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += ring->names[i];
        if (u.exponents[i] > 1) {
            s += "^" + std::to_string(u.exponents[i]);
        }
    }
    return s.empty() ? "1" : s;
}

inline std::string format(const CommPolynomial& f) {
    detail::TermWriter out;
    for (const auto& [u, c] : f.terms()) {
        out.add(c, u.is_one() ? "" : format(f.ring(), u));
    }
    return out.finish();
}

inline std::string format(const RingPtr& ring, const TermPtr& t, bool parenthesized = false) {
    if (t->is_leaf()) {
        return ring->names.at(static_cast<std::size_t>(t->generator));
    }
    std::string s = format(ring, t->left, true) + " o " + format(ring, t->right, true);
    return parenthesized ? "(" + s + ")" : s;
}

inline std::string format(const RingPtr& ring, const TermCombination& comb) {
    detail::TermWriter out;
    for (const auto& wt : comb) {
        // A scaled ∘-tree needs parentheses: '*' binds tighter than 'o'.
        bool scaled = !wt.coeff.abs().is_one() && !wt.term->is_leaf();
        out.add(wt.coeff, scaled ? format(ring, wt.term, true) : format(ring, wt.term, false));
    }
    return out.finish();
}

/// Generator-by-generator images, for printing maps as "x -> ...".
inline std::vector<std::pair<std::string, std::string>> format_images(const Derivation& D) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (int i = 0; i < D.ring()->generators; ++i) {
        rows.emplace_back(D.ring()->names[static_cast<std::size_t>(i)], format(D.image(i)));
    }
    return rows;
}

inline std::vector<std::pair<std::string, std::string>> format_images(const Endomorphism& phi) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (int i = 0; i < phi.ring()->generators; ++i) {
        std::string image = phi.novikov() ? format(phi.image_element(i)) : format(phi.body(i));
        rows.emplace_back(phi.ring()->names[static_cast<std::size_t>(i)], std::move(image));
    }
    return rows;
}

inline std::vector<std::pair<std::string, std::string>> format_images(const CommDerivation& D) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (int i = 0; i < D.ring()->generators; ++i) {
        rows.emplace_back(D.ring()->names[static_cast<std::size_t>(i)], format(D.image(i)));
    }
    return rows;
}

inline std::vector<std::pair<std::string, std::string>> format_images(const CommEndomorphism& phi) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (int i = 0; i < phi.ring()->generators; ++i) {
        rows.emplace_back(phi.ring()->names[static_cast<std::size_t>(i)], format(phi.image(i)));
    }
    return rows;
}

inline std::ostream& operator<<(std::ostream& out, const DiffPolynomial& f) {
    return out << format(f);
}

inline std::ostream& operator<<(std::ostream& out, const NovikovElement& a) {
    return out << format(a);
}

inline std::ostream& operator<<(std::ostream& out, const CommPolynomial& f) {
    return out << format(f);
}

} // namespace novikov
