#pragma once

// The Novikov structure on a differential polynomial algebra with one
// derivation: f∘g = f·g'. The weight-1 component N0 is closed under ∘ and is
// spanned by the weight-1 monomials; NovikovElement adjoins a formal unit,
// N = k·1 ⊕ N0, with 1 acting as a two-sided identity. express_as_novikov
// rewrites any weight-1 monomial as an exact rational combination of ∘-trees
// over the generators, and eval_term/eval_combination invert that.

#include "novikov/ring.hpp"

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace novikov {

inline void require_one_derivation(const RingPtr& ring, const char* op) {
    if (ring->derivations != 1) {
        throw std::invalid_argument(std::string(op) + ": requires a ring with exactly one derivation");
    }
}

/// The circle product f∘g = f·g'. Bilinear; defined on the whole algebra.
inline DiffPolynomial circ(const DiffPolynomial& f, const DiffPolynomial& g) {
    require_same_ring(f.ring(), g.ring());
    require_one_derivation(f.ring(), "circ");
    return f * g.delta();
}

/// True iff every monomial of f has weight 1 (the zero polynomial passes).
inline bool is_novikov(const DiffPolynomial& f) {
    for (const auto& [u, c] : f.terms()) {
        if (u.weight() != 1) {
            return false;
        }
    }
    return true;
}

/// c·1 + f with f in the weight-1 component. The unit is formal: it is not
/// the constant polynomial 1 (the realization f∘g = fg' would send 1∘f to f',
/// not f), so the scalar part is kept outside the body.
class NovikovElement {
public:
    NovikovElement(RingPtr ring, Rational unit, DiffPolynomial body)
        : ring_(std::move(ring)), unit_(std::move(unit)), body_(std::move(body)) {
        require_same_ring(ring_, body_.ring());
        require_one_derivation(ring_, "novikov element");
        if (!is_novikov(body_)) {
            throw std::invalid_argument("novikov element: body must have weight 1");
        }
    }

    static NovikovElement zero(RingPtr ring) {
        DiffPolynomial body = DiffPolynomial::zero(ring);
        return NovikovElement(std::move(ring), Rational(0), std::move(body));
    }

    static NovikovElement one(RingPtr ring) {
        DiffPolynomial body = DiffPolynomial::zero(ring);
        return NovikovElement(std::move(ring), Rational(1), std::move(body));
    }

    static NovikovElement from_body(DiffPolynomial body) {
        RingPtr ring = body.ring();
        return NovikovElement(std::move(ring), Rational(0), std::move(body));
    }

    static NovikovElement generator(const RingPtr& ring, int i) {
        return from_body(DiffPolynomial::generator(ring, i));
    }

    /// Splits a polynomial whose constant term stands for the formal unit.
    static NovikovElement from_polynomial(const DiffPolynomial& f) {
        Rational unit = f.coefficient(DiffMonomial::one());
        DiffPolynomial body = f - DiffPolynomial::constant(f.ring(), unit);
        return NovikovElement(f.ring(), std::move(unit), std::move(body));
    }

    const RingPtr& ring() const { return ring_; }
    const Rational& unit() const { return unit_; }
    const DiffPolynomial& body() const { return body_; }
    bool is_zero() const { return unit_.is_zero() && body_.is_zero(); }

    NovikovElement operator-() const { return NovikovElement(ring_, -unit_, -body_); }

    NovikovElement scaled(const Rational& c) const {
        return NovikovElement(ring_, unit_ * c, body_.scaled(c));
    }

    friend NovikovElement operator+(const NovikovElement& a, const NovikovElement& b) {
        require_same_ring(a.ring_, b.ring_);
        return NovikovElement(a.ring_, a.unit_ + b.unit_, a.body_ + b.body_);
    }

    friend NovikovElement operator-(const NovikovElement& a, const NovikovElement& b) {
        require_same_ring(a.ring_, b.ring_);
        return NovikovElement(a.ring_, a.unit_ - b.unit_, a.body_ - b.body_);
    }

    friend bool operator==(const NovikovElement& a, const NovikovElement& b) {
        require_same_ring(a.ring_, b.ring_);
        return a.unit_ == b.unit_ && a.body_ == b.body_;
    }

private:
    RingPtr ring_;
    Rational unit_;
    DiffPolynomial body_;
};

/// (c1 + f1) ∘ (c2 + f2) = c1·c2 + c1·f2 + c2·f1 + f1∘f2.
inline NovikovElement nov_mul(const NovikovElement& a, const NovikovElement& b) {
    require_same_ring(a.ring(), b.ring());
    DiffPolynomial body =
        b.body().scaled(a.unit()) + a.body().scaled(b.unit()) + circ(a.body(), b.body());
    return NovikovElement(a.ring(), a.unit() * b.unit(), std::move(body));
}

/// A ∘-word over the generators: leaves are generator indices, internal nodes
/// multiply their subtrees with ∘. Shared immutable subtrees.
struct NovikovTerm;
using TermPtr = std::shared_ptr<const NovikovTerm>;

struct NovikovTerm {
    int generator = -1;  // >= 0 on leaves
    TermPtr left;
    TermPtr right;

    bool is_leaf() const { return generator >= 0; }
};

inline TermPtr term_leaf(int generator) {
    if (generator < 0) {
        throw std::invalid_argument("novikov term: negative generator index");
    }
    auto t = std::make_shared<NovikovTerm>();
    t->generator = generator;
    return t;
}

inline TermPtr term_circ(TermPtr left, TermPtr right) {
    if (!left || !right) {
        throw std::invalid_argument("novikov term: null subtree");
    }
    auto t = std::make_shared<NovikovTerm>();
    t->left = std::move(left);
    t->right = std::move(right);
    return t;
}

struct WeightedTerm {
    Rational coeff;
    TermPtr term;
};

using TermCombination = std::vector<WeightedTerm>;

inline NovikovElement eval_term(const RingPtr& ring, const TermPtr& t) {
    if (!t) {
        throw std::invalid_argument("eval_term: null tree");
    }
    if (t->is_leaf()) {
        return NovikovElement::generator(ring, t->generator);
    }
    return nov_mul(eval_term(ring, t->left), eval_term(ring, t->right));
}

inline NovikovElement eval_combination(const RingPtr& ring, const TermCombination& comb) {
    NovikovElement sum = NovikovElement::zero(ring);
    for (const auto& wt : comb) {
        sum = sum + eval_term(ring, wt.term).scaled(wt.coeff);
    }
    return sum;
}

namespace detail {

inline void append_scaled(TermCombination& out, const Rational& c, const TermCombination& comb) {
    for (const auto& wt : comb) {
        out.push_back(WeightedTerm{c * wt.coeff, wt.term});
    }
}

} // namespace detail

/// Rewrites a weight-1 monomial as a rational combination of ∘-trees whose
/// linear evaluation reproduces it exactly.
///
/// deg 1: the generator leaf. If a first derivative x_i' divides u (smallest
/// such i), then u = (u / x_i') ∘ x_i. Otherwise the maximal derivative order
/// is some k >= 2: take that factor x_j^(k) (ties broken toward the largest
/// generator) together with k-1 order-zero factors of largest index, forming
/// v0 = x_{i1}···x_{i_{k-1}}·x_j^(k) and u0 = u / v0; then
/// u0 ∘ (x_{i1}···x_{i_{k-1}}·x_j^(k-1)) expands to u plus k-1 monomials that
/// each contain a first derivative, so u is that product minus their
/// decompositions. Recursion terminates: the measure
/// (deg, has-no-first-derivative) drops lexicographically at every step.
inline TermCombination express_as_novikov(const RingPtr& ring, const DiffMonomial& u) {
    require_one_derivation(ring, "express_as_novikov");
    if (u.weight() != 1) {
        throw std::invalid_argument("express_as_novikov: monomial must have weight 1");
    }
    const auto& factors = u.factors();

    if (u.degree() == 1) {
        return {WeightedTerm{Rational(1), term_leaf(factors[0].variable.var)}};
    }

    // Factors are ascending, so the first order-1 factor has the smallest
    // generator index among first derivatives.
    for (const auto& f : factors) {
        if (f.variable.order() == 1) {
            DiffMonomial rest = *u.divided_by(DiffMonomial::variable(f.variable));
            TermPtr leaf = term_leaf(f.variable.var);
            TermCombination out;
            for (const auto& wt : express_as_novikov(ring, rest)) {
                out.push_back(WeightedTerm{wt.coeff, term_circ(wt.term, leaf)});
            }
            return out;
        }
    }

    // No first derivatives: find the factor of maximal order (largest
    // generator on ties) and k-1 order-zero factors of largest index.
    const MonomialFactor* top = nullptr;
    for (const auto& f : factors) {
        if (!top || f.variable.order() > top->variable.order() ||
            (f.variable.order() == top->variable.order() && f.variable.var > top->variable.var)) {
            top = &f;
        }
    }
    const int k = top->variable.order();

    std::vector<MonomialFactor> chosen;
    for (auto it = factors.rbegin(); it != factors.rend() && static_cast<int>(chosen.size()) < k - 1; ++it) {
        if (it->variable.order() != 0) {
            continue;
        }
        for (int p = 0; p < it->power && static_cast<int>(chosen.size()) < k - 1; ++p) {
            chosen.push_back(MonomialFactor{it->variable, 1});
        }
    }
    if (static_cast<int>(chosen.size()) != k - 1) {
        // A weight-1 monomial always carries enough order-zero factors.
        throw std::logic_error("express_as_novikov: too few order-zero factors");
    }

    std::vector<MonomialFactor> v0_factors = chosen;
    v0_factors.push_back(MonomialFactor{top->variable, 1});
    DiffMonomial u0 = *u.divided_by(DiffMonomial::from_factors(std::move(v0_factors)));

    std::vector<MonomialFactor> lowered = chosen;
    lowered.push_back(MonomialFactor{derivative_variable(ring, top->variable.var, k - 1), 1});
    DiffMonomial b = DiffMonomial::from_factors(std::move(lowered));

    TermCombination out;
    TermCombination left = express_as_novikov(ring, u0);
    TermCombination right = express_as_novikov(ring, b);
    for (const auto& l : left) {
        for (const auto& r : right) {
            out.push_back(WeightedTerm{l.coeff * r.coeff, term_circ(l.term, r.term)});
        }
    }

    // u0·δ(b) = u + corrections; each correction contains a first derivative.
    DiffPolynomial expansion =
        DiffPolynomial::monomial(ring, u0) * DiffPolynomial::monomial(ring, b).delta();
    if (!expansion.coefficient(u).is_one()) {
        throw std::logic_error("express_as_novikov: unexpected expansion of the leading product");
    }
    for (const auto& [mono, c] : expansion.terms()) {
        if (mono == u) {
            continue;
        }
        detail::append_scaled(out, -c, express_as_novikov(ring, mono));
    }
    return out;
}

namespace detail {

inline void enumerate_weight_one(const RingPtr& ring, int next_var, int next_order, int deg_left,
                                 int order_left, std::vector<MonomialFactor>& acc,
                                 std::vector<DiffMonomial>& out) {
    if (deg_left == 0) {
        if (order_left == 0) {
            out.push_back(DiffMonomial::from_factors(acc));
        }
        return;
    }
    if (next_var >= ring->generators || order_left < 0) {
        return;
    }
    int var = next_var;
    int order = next_order;
    // Advance through the variable universe in canonical order.
    auto advance = [&](int& v, int& r) {
        if (++r > order_left) {  // higher orders can never fit any more
            v += 1;
            r = 0;
        }
    };
    // Skip this variable entirely.
    {
        int v = var;
        int r = order;
        advance(v, r);
        enumerate_weight_one(ring, v, r, deg_left, order_left, acc, out);
    }
    // Or use it with some positive power.
    for (int p = 1; p <= deg_left && p * order <= order_left; ++p) {
        acc.push_back(MonomialFactor{DerivativeVariable{var, {order}}, p});
        int v = var;
        int r = order;
        advance(v, r);
        enumerate_weight_one(ring, v, r, deg_left - p, order_left - p * order, acc, out);
        acc.pop_back();
    }
}

} // namespace detail

/// All weight-1 monomials of degree between 1 and max_degree, in the term
/// order (degree first).
inline std::vector<DiffMonomial> weight_one_monomials(const RingPtr& ring, int max_degree) {
    require_one_derivation(ring, "weight_one_monomials");
    std::vector<DiffMonomial> out;
    for (int t = 1; t <= max_degree; ++t) {
        std::vector<DiffMonomial> of_degree;
        std::vector<MonomialFactor> acc;
        detail::enumerate_weight_one(ring, 0, 0, t, t - 1, acc, of_degree);
        std::sort(of_degree.begin(), of_degree.end(),
                  [](const DiffMonomial& a, const DiffMonomial& b) { return MonomialOrder{}(a, b); });
        out.insert(out.end(), of_degree.begin(), of_degree.end());
    }
    return out;
}

} // namespace novikov
