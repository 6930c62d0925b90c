#pragma once

// Derivations and endomorphisms of the differential polynomial algebra and of
// its Novikov structure, both given by generator images. A derivation extends
// by linearity, the Leibniz rule, and commutation with the deltas:
// D(x_j^theta) = delta^theta(images[j]). An endomorphism substitutes
// x_j^theta -> delta^theta(images[j]) multiplicatively. On top of that sit
// local-nilpotency detection (a semi-decision with a cap), exponentials of
// locally nilpotent derivations, elementary and tame automorphisms, a
// syntactic triangularity test, and the named maps of the worked example
// (partial1, w, w0, D1, psi).

#include "novikov/novikov_algebra.hpp"
#include "novikov/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace novikov {

class Derivation {
public:
    Derivation(RingPtr ring, std::vector<DiffPolynomial> images, bool novikov = false)
        : ring_(std::move(ring)), images_(std::move(images)), novikov_(novikov) {
        if (static_cast<int>(images_.size()) != ring_->generators) {
            throw std::invalid_argument("derivation: one image per generator required");
        }
        for (const auto& g : images_) {
            require_same_ring(ring_, g.ring());
            if (novikov_ && !is_novikov(g)) {
                throw std::invalid_argument("derivation: novikov-mode images must have weight 1");
            }
        }
        if (novikov_) {
            require_one_derivation(ring_, "derivation");
        }
    }

    static Derivation zero(RingPtr ring, bool novikov = false) {
        std::vector<DiffPolynomial> images(static_cast<std::size_t>(ring->generators),
                                           DiffPolynomial::zero(ring));
        return Derivation(std::move(ring), std::move(images), novikov);
    }

    const RingPtr& ring() const { return ring_; }
    bool novikov() const { return novikov_; }
    const std::vector<DiffPolynomial>& images() const { return images_; }
    const DiffPolynomial& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }

    Derivation negated() const {
        std::vector<DiffPolynomial> neg;
        neg.reserve(images_.size());
        for (const auto& g : images_) {
            neg.push_back(-g);
        }
        return Derivation(ring_, std::move(neg), novikov_);
    }

    /// Leibniz extension: on a monomial, each factor is replaced in turn by
    /// the theta-derivative of its generator's image.
    DiffPolynomial operator()(const DiffPolynomial& f) const {
        require_same_ring(ring_, f.ring());
        // The same derivative of the same image recurs across monomials;
        // compute each one once per call.
        std::map<DerivativeVariable, DiffPolynomial> derived;
        DiffPolynomial result = DiffPolynomial::zero(ring_);
        for (const auto& [u, c] : f.terms()) {
            const auto& factors = u.factors();
            for (std::size_t l = 0; l < factors.size(); ++l) {
                std::vector<MonomialFactor> rest = factors;
                rest[l].power -= 1;
                auto it = derived.find(factors[l].variable);
                if (it == derived.end()) {
                    it = derived
                             .emplace(factors[l].variable,
                                      image(factors[l].variable.var).derivative(factors[l].variable.theta))
                             .first;
                }
                result += DiffPolynomial::monomial(ring_, DiffMonomial::from_factors(std::move(rest)),
                                                   c * Rational(factors[l].power)) *
                          it->second;
            }
        }
        return result;
    }

    NovikovElement operator()(const NovikovElement& a) const {
        if (!novikov_) {
            throw std::invalid_argument("derivation: novikov mode required for novikov elements");
        }
        // A derivation kills the adjoined unit.
        return NovikovElement::from_body((*this)(a.body()));
    }

private:
    RingPtr ring_;
    std::vector<DiffPolynomial> images_;
    bool novikov_;
};

/// Smallest n <= cap with D^n(f) = 0 (so 0 when f is already zero), or
/// nullopt if no such n shows up within the cap.
inline std::optional<int> nilpotency_index(const Derivation& D, const DiffPolynomial& f, int cap) {
    if (cap < 1) {
        throw std::invalid_argument("nilpotency_index: cap must be at least 1");
    }
    if (f.is_zero()) {
        return 0;
    }
    DiffPolynomial g = f;
    for (int n = 1; n <= cap; ++n) {
        g = D(g);
        if (g.is_zero()) {
            return n;
        }
    }
    return std::nullopt;
}

/// Outcome of the local-nilpotency semi-decision. Since D commutes with the
/// deltas and satisfies Leibniz, vanishing on every generator within the cap
/// is sound for the whole algebra; failure within the cap means "unknown",
/// never "no".
struct NilpotencyReport {
    bool established = false;
    int cap = 0;
    std::vector<std::optional<int>> generator_indices;
};

inline NilpotencyReport is_locally_nilpotent(const Derivation& D, int cap) {
    NilpotencyReport report;
    report.cap = cap;
    report.established = true;
    for (int i = 0; i < D.ring()->generators; ++i) {
        auto idx = nilpotency_index(D, DiffPolynomial::generator(D.ring(), i), cap);
        report.generator_indices.push_back(idx);
        if (!idx) {
            report.established = false;
        }
    }
    return report;
}

/// Substitution endomorphism. In the differential-algebra mode the images are
/// plain polynomials; in the novikov mode each image is a NovikovElement
/// (unit + weight-1 body) and application to Novikov elements goes through
/// the free-algebra decomposition when any image carries a unit.
class Endomorphism {
public:
    static Endomorphism from_polynomial_images(RingPtr ring, std::vector<DiffPolynomial> images) {
        return Endomorphism(std::move(ring), std::move(images), {}, false);
    }

    static Endomorphism from_novikov_images(RingPtr ring, const std::vector<NovikovElement>& images) {
        std::vector<DiffPolynomial> bodies;
        std::vector<Rational> units;
        bodies.reserve(images.size());
        units.reserve(images.size());
        for (const auto& a : images) {
            require_same_ring(ring, a.ring());
            bodies.push_back(a.body());
            units.push_back(a.unit());
        }
        return Endomorphism(std::move(ring), std::move(bodies), std::move(units), true);
    }

    static Endomorphism identity(RingPtr ring, bool novikov = false) {
        std::vector<DiffPolynomial> images;
        for (int i = 0; i < ring->generators; ++i) {
            images.push_back(DiffPolynomial::generator(ring, i));
        }
        if (!novikov) {
            return from_polynomial_images(std::move(ring), std::move(images));
        }
        std::vector<Rational> units(images.size(), Rational(0));
        return Endomorphism(std::move(ring), std::move(images), std::move(units), true);
    }

    const RingPtr& ring() const { return ring_; }
    bool novikov() const { return novikov_; }
    const std::vector<DiffPolynomial>& bodies() const { return bodies_; }
    const DiffPolynomial& body(int i) const { return bodies_.at(static_cast<std::size_t>(i)); }

    NovikovElement image_element(int i) const {
        require_novikov("image_element");
        return NovikovElement(ring_, units_.at(static_cast<std::size_t>(i)),
                              bodies_.at(static_cast<std::size_t>(i)));
    }

    bool units_vanish() const {
        return std::all_of(units_.begin(), units_.end(), [](const Rational& c) { return c.is_zero(); });
    }

    /// Multiplicative substitution x_j^theta -> delta^theta(image_j). In the
    /// novikov mode this realization exists only when no image carries a unit
    /// component (the formal 1 is not a polynomial).
    DiffPolynomial operator()(const DiffPolynomial& f) const {
        require_same_ring(ring_, f.ring());
        if (novikov_ && !units_vanish()) {
            throw std::domain_error(
                "endomorphism: images carry unit components; apply to novikov elements instead");
        }
        // Substituted factors recur across monomials (and so do their small
        // powers); compute each once per call.
        std::map<std::pair<DerivativeVariable, int>, DiffPolynomial> pieces;
        auto piece = [&](const DerivativeVariable& v, int power) -> const DiffPolynomial& {
            auto it = pieces.find({v, power});
            if (it != pieces.end()) {
                return it->second;
            }
            auto base = pieces.find({v, 1});
            if (base == pieces.end()) {
                base = pieces.emplace(std::pair{v, 1}, body(v.var).derivative(v.theta)).first;
            }
            if (power == 1) {
                return base->second;
            }
            return pieces.emplace(std::pair{v, power}, base->second.pow(power)).first->second;
        };
        DiffPolynomial result = DiffPolynomial::zero(ring_);
        for (const auto& [u, c] : f.terms()) {
            DiffPolynomial prod = DiffPolynomial::constant(ring_, c);
            for (const auto& factor : u.factors()) {
                prod = prod * piece(factor.variable, factor.power);
            }
            result += prod;
        }
        return result;
    }

    /// Unit-preserving extension to N = k·1 + N0. When every image has unit 0
    /// this agrees with plain substitution of the body (both sides are
    /// ∘-homomorphisms agreeing on generators); otherwise each weight-1
    /// monomial is decomposed into ∘-trees and re-evaluated over the images.
    NovikovElement operator()(const NovikovElement& a) const {
        require_novikov("application to novikov elements");
        require_same_ring(ring_, a.ring());
        if (units_vanish()) {
            return NovikovElement(ring_, a.unit(), (*this)(a.body()));
        }
        NovikovElement result(ring_, a.unit(), DiffPolynomial::zero(ring_));
        for (const auto& [u, c] : a.body().terms()) {
            for (const auto& wt : express_as_novikov(ring_, u)) {
                result = result + evaluate_tree(wt.term).scaled(c * wt.coeff);
            }
        }
        return result;
    }

    /// compose(phi, psi) applies psi first: the images of psi get pushed
    /// through phi.
    friend Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
        require_same_ring(phi.ring_, psi.ring_);
        if (phi.novikov_ != psi.novikov_) {
            throw std::invalid_argument("compose: cannot mix novikov and polynomial endomorphisms");
        }
        if (!phi.novikov_) {
            std::vector<DiffPolynomial> images;
            images.reserve(psi.bodies_.size());
            for (const auto& g : psi.bodies_) {
                images.push_back(phi(g));
            }
            return from_polynomial_images(phi.ring_, std::move(images));
        }
        std::vector<NovikovElement> images;
        images.reserve(psi.bodies_.size());
        for (int i = 0; i < phi.ring_->generators; ++i) {
            images.push_back(phi(psi.image_element(i)));
        }
        return from_novikov_images(phi.ring_, images);
    }

    Endomorphism after(const Endomorphism& first) const { return compose(*this, first); }

    friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
        require_same_ring(a.ring_, b.ring_);
        if (a.novikov_ != b.novikov_) {
            return false;
        }
        if (a.novikov_ && a.units_ != b.units_) {
            return false;
        }
        return a.bodies_ == b.bodies_;
    }

private:
    Endomorphism(RingPtr ring, std::vector<DiffPolynomial> bodies, std::vector<Rational> units,
                 bool novikov)
        : ring_(std::move(ring)), bodies_(std::move(bodies)), units_(std::move(units)),
          novikov_(novikov) {
        if (static_cast<int>(bodies_.size()) != ring_->generators) {
            throw std::invalid_argument("endomorphism: one image per generator required");
        }
        for (const auto& g : bodies_) {
            require_same_ring(ring_, g.ring());
        }
        if (novikov_) {
            require_one_derivation(ring_, "endomorphism");
            if (units_.size() != bodies_.size()) {
                throw std::invalid_argument("endomorphism: unit/body image mismatch");
            }
            for (const auto& g : bodies_) {
                if (!is_novikov(g)) {
                    throw std::invalid_argument("endomorphism: novikov-mode images must have weight 1");
                }
            }
        }
    }

    void require_novikov(const char* what) const {
        if (!novikov_) {
            throw std::invalid_argument(std::string("endomorphism: ") + what + " requires novikov mode");
        }
    }

    NovikovElement evaluate_tree(const TermPtr& t) const {
        if (t->is_leaf()) {
            return image_element(t->generator);
        }
        return nov_mul(evaluate_tree(t->left), evaluate_tree(t->right));
    }

    RingPtr ring_;
    std::vector<DiffPolynomial> bodies_;
    std::vector<Rational> units_;  // empty in the differential-algebra mode
    bool novikov_;
};

/// exp D = Id + D + D²/2! + …, truncated nowhere: the series must terminate
/// on every generator, which is exactly local nilpotency within the cap.
inline Endomorphism exp_derivation(const Derivation& D, int cap = 20) {
    NilpotencyReport report = is_locally_nilpotent(D, cap);
    if (!report.established) {
        throw std::domain_error("exp: local nilpotency not established within cap " +
                                std::to_string(cap));
    }
    const RingPtr& ring = D.ring();
    std::vector<DiffPolynomial> images;
    for (int i = 0; i < ring->generators; ++i) {
        DiffPolynomial sum = DiffPolynomial::generator(ring, i);
        DiffPolynomial power = sum;
        for (int k = 1; !power.is_zero(); ++k) {
            power = D(power);
            sum = sum + power.scaled(Rational(BigInt(1), factorial(k)));
        }
        images.push_back(std::move(sum));
    }
    if (!D.novikov()) {
        return Endomorphism::from_polynomial_images(ring, std::move(images));
    }
    std::vector<NovikovElement> novikov_images;
    novikov_images.reserve(images.size());
    for (auto& g : images) {
        novikov_images.push_back(NovikovElement::from_body(std::move(g)));
    }
    return Endomorphism::from_novikov_images(ring, novikov_images);
}

/// sigma(i, alpha, f) = (x_1, …, alpha·x_i + f, …, x_n) with f free of x_i.
struct ElementaryAuto {
    int target = 0;
    Rational alpha;
    NovikovElement shift;

    ElementaryAuto(int i, Rational a, NovikovElement f)
        : target(i), alpha(std::move(a)), shift(std::move(f)) {
        if (target < 0 || target >= shift.ring()->generators) {
            throw std::invalid_argument("elementary: generator index out of range");
        }
        if (alpha.is_zero()) {
            throw std::invalid_argument("elementary: alpha must be nonzero");
        }
        for (const auto& [u, c] : shift.body().terms()) {
            for (const auto& factor : u.factors()) {
                if (factor.variable.var == target) {
                    throw std::invalid_argument("elementary: shift must not involve the target generator");
                }
            }
        }
    }

    const RingPtr& ring() const { return shift.ring(); }

    ElementaryAuto inverted() const {
        Rational inv = alpha.inverse();
        return ElementaryAuto(target, inv, shift.scaled(-inv));
    }

    Endomorphism to_endomorphism() const {
        const RingPtr& R = ring();
        std::vector<NovikovElement> images;
        for (int j = 0; j < R->generators; ++j) {
            if (j == target) {
                images.push_back(NovikovElement::generator(R, j).scaled(alpha) + shift);
            } else {
                images.push_back(NovikovElement::generator(R, j));
            }
        }
        return Endomorphism::from_novikov_images(R, images);
    }
};

inline ElementaryAuto invert_elementary(const ElementaryAuto& e) { return e.inverted(); }

using TameWord = std::vector<ElementaryAuto>;

/// Applies the word in reading order: the first element acts first, so the
/// result is word[k-1] ∘ … ∘ word[0].
inline Endomorphism apply_tame(const RingPtr& ring, const TameWord& word) {
    Endomorphism result = Endomorphism::identity(ring, true);
    for (const auto& e : word) {
        require_same_ring(ring, e.ring());
        result = compose(e.to_endomorphism(), result);
    }
    return result;
}

namespace detail {

inline bool triangular_in_order(const Derivation& D, const std::vector<int>& order) {
    std::vector<int> position(order.size());
    for (std::size_t q = 0; q < order.size(); ++q) {
        position[static_cast<std::size_t>(order[q])] = static_cast<int>(q);
    }
    for (std::size_t p = 0; p < order.size(); ++p) {
        for (const auto& [u, c] : D.image(order[p]).terms()) {
            for (const auto& factor : u.factors()) {
                if (position[static_cast<std::size_t>(factor.variable.var)] <= static_cast<int>(p)) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace detail

/// Syntactic triangular shape: each image only mentions generators strictly
/// later in the order (so the last image is a constant). This checks the
/// SHAPE in the given coordinates; with search_permutation all n! generator
/// orders are tried (n <= 6).
inline bool is_triangular(const Derivation& D, bool search_permutation = false) {
    std::vector<int> order(static_cast<std::size_t>(D.ring()->generators));
    std::iota(order.begin(), order.end(), 0);
    if (detail::triangular_in_order(D, order)) {
        return true;
    }
    if (!search_permutation) {
        return false;
    }
    if (D.ring()->generators > 6) {
        throw std::invalid_argument("is_triangular: permutation search supports at most 6 generators");
    }
    while (std::next_permutation(order.begin(), order.end())) {
        if (detail::triangular_in_order(D, order)) {
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// The named maps of the worked example over k{x,y,z} with one derivation.

inline void require_three_generators(const RingPtr& ring, const char* what) {
    if (ring->generators != 3 || ring->derivations != 1) {
        throw std::invalid_argument(std::string(what) +
                                    ": requires three generators and one derivation");
    }
}

/// w = y² − xz.
inline DiffPolynomial builtin_w(const RingPtr& ring) {
    require_three_generators(ring, "w");
    auto x = DiffPolynomial::generator(ring, 0);
    auto y = DiffPolynomial::generator(ring, 1);
    auto z = DiffPolynomial::generator(ring, 2);
    return y * y - x * z;
}

/// w₀ = ½(2·y∘y − x∘z − z∘x), the weight-1 companion of w (w₀ = ½w′).
inline DiffPolynomial builtin_w0(const RingPtr& ring) {
    require_three_generators(ring, "w0");
    auto x = DiffPolynomial::generator(ring, 0);
    auto y = DiffPolynomial::generator(ring, 1);
    auto z = DiffPolynomial::generator(ring, 2);
    return (circ(y, y).scaled(Rational(2)) - circ(x, z) - circ(z, x)).scaled(Rational(1, 2));
}

/// ∂₁ = 2y·∂x + z·∂y.
inline Derivation builtin_partial1(const RingPtr& ring) {
    require_three_generators(ring, "partial1");
    auto y = DiffPolynomial::generator(ring, 1);
    auto z = DiffPolynomial::generator(ring, 2);
    return Derivation(ring, {y.scaled(Rational(2)), z, DiffPolynomial::zero(ring)}, true);
}

/// D₁ = (2y∘w₀)·∂x + (z∘w₀)·∂y.
inline Derivation builtin_d1(const RingPtr& ring) {
    require_three_generators(ring, "d1");
    auto y = DiffPolynomial::generator(ring, 1);
    auto z = DiffPolynomial::generator(ring, 2);
    auto w0 = builtin_w0(ring);
    return Derivation(ring, {circ(y.scaled(Rational(2)), w0), circ(z, w0), DiffPolynomial::zero(ring)},
                      true);
}

/// ψ = exp D₁.
inline Endomorphism builtin_psi(const RingPtr& ring, int cap = 10) {
    return exp_derivation(builtin_d1(ring), cap);
}

} // namespace novikov
