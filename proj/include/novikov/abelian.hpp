#pragma once

// The abelianization theta from the unital Novikov algebra onto the ordinary
// commutative polynomial ring on the same generators, together with a minimal
// sparse implementation of that ring, its derivations and endomorphisms, and
// the Nagata automorphism. theta sends the formal unit to 1 and a weight-1
// monomial to its derivative-erased image when every order is at most 1, to
// zero otherwise; commutators and associators of the circle product die, so
// derivations and endomorphisms in novikov mode descend along theta.

#include "novikov/maps.hpp"
#include "novikov/novikov_algebra.hpp"
#include "novikov/ring.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace novikov {

/// Exponent vector over the ring's generators.
struct CommMonomial {
    std::vector<int> exponents;

    int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }
    bool is_one() const {
        return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
    }

    CommMonomial times(const CommMonomial& other) const {
        if (exponents.size() != other.exponents.size()) {
            throw std::invalid_argument("commutative monomial: generator count mismatch");
        }
        CommMonomial r = *this;
        for (std::size_t i = 0; i < r.exponents.size(); ++i) {
            r.exponents[i] += other.exponents[i];
        }
        return r;
    }

    bool operator==(const CommMonomial&) const = default;
};

/// Total degree first; within a degree, ascending lexicographic comparison of
/// exponent vectors — which lists y² before xz and so prints w as y^2 - x*z.
struct CommOrder {
    bool operator()(const CommMonomial& a, const CommMonomial& b) const {
        int da = a.degree();
        int db = b.degree();
        if (da != db) {
            return da < db;
        }
        return a.exponents < b.exponents;
    }
};

class CommPolynomial {
public:
    using TermMap = std::map<CommMonomial, Rational, CommOrder>;

    explicit CommPolynomial(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_) {
            throw std::invalid_argument("commutative polynomial: null ring");
        }
    }

    static CommPolynomial zero(RingPtr ring) { return CommPolynomial(std::move(ring)); }

    static CommPolynomial constant(RingPtr ring, Rational c) {
        CommPolynomial f(std::move(ring));
        if (!c.is_zero()) {
            f.terms_.emplace(f.unit_monomial(), std::move(c));
        }
        return f;
    }

    static CommPolynomial one(RingPtr ring) { return constant(std::move(ring), Rational(1)); }

    static CommPolynomial generator(RingPtr ring, int i) {
        CommPolynomial f(std::move(ring));
        if (i < 0 || i >= f.ring_->generators) {
            throw std::invalid_argument("commutative polynomial: generator index out of range");
        }
        CommMonomial u = f.unit_monomial();
        u.exponents[static_cast<std::size_t>(i)] = 1;
        f.terms_.emplace(std::move(u), Rational(1));
        return f;
    }

    static CommPolynomial monomial(RingPtr ring, CommMonomial u, Rational c = Rational(1)) {
        CommPolynomial f(std::move(ring));
        f.add_term(u, c);
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational coefficient(const CommMonomial& u) const {
        auto it = terms_.find(u);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    CommPolynomial operator-() const { return scaled(Rational(-1)); }

    CommPolynomial scaled(const Rational& c) const {
        CommPolynomial r(ring_);
        if (c.is_zero()) {
            return r;
        }
        for (const auto& [u, a] : terms_) {
            r.terms_.emplace(u, a * c);
        }
        return r;
    }

    friend CommPolynomial operator+(const CommPolynomial& a, const CommPolynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        CommPolynomial r = a;
        for (const auto& [u, c] : b.terms_) {
            r.add_term(u, c);
        }
        return r;
    }

    friend CommPolynomial operator-(const CommPolynomial& a, const CommPolynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        CommPolynomial r = a;
        for (const auto& [u, c] : b.terms_) {
            r.add_term(u, -c);
        }
        return r;
    }

    friend CommPolynomial operator*(const CommPolynomial& a, const CommPolynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        CommPolynomial r(a.ring_);
        for (const auto& [u, c] : a.terms_) {
            for (const auto& [v, d] : b.terms_) {
                r.add_term(u.times(v), c * d);
            }
        }
        return r;
    }

    CommPolynomial pow(int k) const {
        if (k < 0) {
            throw std::invalid_argument("commutative polynomial: negative power");
        }
        CommPolynomial r = one(ring_);
        for (int i = 0; i < k; ++i) {
            r = r * *this;
        }
        return r;
    }

    CommPolynomial partial(int i) const {
        if (i < 0 || i >= ring_->generators) {
            throw std::invalid_argument("partial: generator index out of range");
        }
        CommPolynomial r(ring_);
        for (const auto& [u, c] : terms_) {
            int e = u.exponents[static_cast<std::size_t>(i)];
            if (e == 0) {
                continue;
            }
            CommMonomial v = u;
            v.exponents[static_cast<std::size_t>(i)] = e - 1;
            r.add_term(v, c * Rational(e));
        }
        return r;
    }

    bool operator==(const CommPolynomial& other) const {
        require_same_ring(ring_, other.ring_);
        return terms_ == other.terms_;
    }

private:
    CommMonomial unit_monomial() const {
        return CommMonomial{std::vector<int>(static_cast<std::size_t>(ring_->generators), 0)};
    }

    void add_term(const CommMonomial& u, const Rational& c) {
        if (c.is_zero()) {
            return;
        }
        if (static_cast<int>(u.exponents.size()) != ring_->generators) {
            throw std::invalid_argument("commutative polynomial: monomial does not fit the ring");
        }
        for (int e : u.exponents) {
            if (e < 0) {
                throw std::invalid_argument("commutative polynomial: negative exponent");
            }
        }
        auto [it, inserted] = terms_.try_emplace(u, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    RingPtr ring_;
    TermMap terms_;
};

class CommDerivation {
public:
    CommDerivation(RingPtr ring, std::vector<CommPolynomial> images)
        : ring_(std::move(ring)), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != ring_->generators) {
            throw std::invalid_argument("commutative derivation: one image per generator required");
        }
        for (const auto& g : images_) {
            require_same_ring(ring_, g.ring());
        }
    }

    static CommDerivation zero(RingPtr ring) {
        std::vector<CommPolynomial> images(static_cast<std::size_t>(ring->generators),
                                           CommPolynomial::zero(ring));
        return CommDerivation(std::move(ring), std::move(images));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<CommPolynomial>& images() const { return images_; }
    const CommPolynomial& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }

    CommPolynomial operator()(const CommPolynomial& f) const {
        require_same_ring(ring_, f.ring());
        CommPolynomial r = CommPolynomial::zero(ring_);
        for (int i = 0; i < ring_->generators; ++i) {
            r = r + f.partial(i) * images_[static_cast<std::size_t>(i)];
        }
        return r;
    }

    bool operator==(const CommDerivation& other) const {
        require_same_ring(ring_, other.ring_);
        return images_ == other.images_;
    }

private:
    RingPtr ring_;
    std::vector<CommPolynomial> images_;
};

class CommEndomorphism {
public:
    CommEndomorphism(RingPtr ring, std::vector<CommPolynomial> images)
        : ring_(std::move(ring)), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != ring_->generators) {
            throw std::invalid_argument("commutative endomorphism: one image per generator required");
        }
        for (const auto& g : images_) {
            require_same_ring(ring_, g.ring());
        }
    }

    static CommEndomorphism identity(RingPtr ring) {
        std::vector<CommPolynomial> images;
        for (int i = 0; i < ring->generators; ++i) {
            images.push_back(CommPolynomial::generator(ring, i));
        }
        return CommEndomorphism(std::move(ring), std::move(images));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<CommPolynomial>& images() const { return images_; }
    const CommPolynomial& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }

    CommPolynomial operator()(const CommPolynomial& f) const {
        require_same_ring(ring_, f.ring());
        CommPolynomial r = CommPolynomial::zero(ring_);
        for (const auto& [u, c] : f.terms()) {
            CommPolynomial prod = CommPolynomial::constant(ring_, c);
            for (std::size_t i = 0; i < u.exponents.size(); ++i) {
                prod = prod * images_[i].pow(u.exponents[i]);
            }
            r = r + prod;
        }
        return r;
    }

    friend CommEndomorphism compose(const CommEndomorphism& phi, const CommEndomorphism& psi) {
        require_same_ring(phi.ring_, psi.ring_);
        std::vector<CommPolynomial> images;
        images.reserve(psi.images_.size());
        for (const auto& g : psi.images_) {
            images.push_back(phi(g));
        }
        return CommEndomorphism(phi.ring_, std::move(images));
    }

    bool operator==(const CommEndomorphism& other) const {
        require_same_ring(ring_, other.ring_);
        return images_ == other.images_;
    }

private:
    RingPtr ring_;
    std::vector<CommPolynomial> images_;
};

inline CommPolynomial comm_apply_derivation(const CommDerivation& D, const CommPolynomial& f) {
    return D(f);
}

inline CommEndomorphism comm_exp(const CommDerivation& D, int cap = 20) {
    if (cap < 1) {
        throw std::invalid_argument("comm_exp: cap must be at least 1");
    }
    const RingPtr& ring = D.ring();
    std::vector<CommPolynomial> images;
    for (int i = 0; i < ring->generators; ++i) {
        CommPolynomial sum = CommPolynomial::generator(ring, i);
        CommPolynomial power = sum;
        for (int k = 1; !power.is_zero(); ++k) {
            if (k > cap) {
                throw std::domain_error("comm_exp: nilpotency not established within cap " +
                                        std::to_string(cap));
            }
            power = D(power);
            sum = sum + power.scaled(Rational(BigInt(1), factorial(k)));
        }
        images.push_back(std::move(sum));
    }
    return CommEndomorphism(ring, std::move(images));
}

/// theta on a weight-1 body monomial: zero when any derivative order exceeds
/// 1, the derivative-erased commutative monomial otherwise.
inline CommPolynomial theta(const DiffPolynomial& body) {
    if (!is_novikov(body)) {
        throw std::invalid_argument("theta: body must have weight 1");
    }
    CommPolynomial r = CommPolynomial::zero(body.ring());
    for (const auto& [u, c] : body.terms()) {
        CommMonomial image{std::vector<int>(static_cast<std::size_t>(body.ring()->generators), 0)};
        bool killed = false;
        for (const auto& factor : u.factors()) {
            if (factor.variable.order() >= 2) {
                killed = true;
                break;
            }
            image.exponents[static_cast<std::size_t>(factor.variable.var)] += factor.power;
        }
        if (!killed) {
            r = r + CommPolynomial::monomial(body.ring(), std::move(image), c);
        }
    }
    return r;
}

inline CommPolynomial theta(const NovikovElement& a) {
    return CommPolynomial::constant(a.ring(), a.unit()) + theta(a.body());
}

/// Pushes a novikov-mode derivation down along theta (generator images map
/// through theta).
inline CommDerivation induced_derivation(const Derivation& D) {
    if (!D.novikov()) {
        throw std::invalid_argument("induced_derivation: novikov mode required");
    }
    std::vector<CommPolynomial> images;
    images.reserve(D.images().size());
    for (const auto& g : D.images()) {
        images.push_back(theta(g));
    }
    return CommDerivation(D.ring(), std::move(images));
}

inline CommEndomorphism induced_endomorphism(const Endomorphism& phi) {
    if (!phi.novikov()) {
        throw std::invalid_argument("induced_endomorphism: novikov mode required");
    }
    std::vector<CommPolynomial> images;
    for (int i = 0; i < phi.ring()->generators; ++i) {
        images.push_back(theta(phi.image_element(i)));
    }
    return CommEndomorphism(phi.ring(), std::move(images));
}

/// w = y² − xz in the commutative ring.
inline CommPolynomial comm_w(const RingPtr& ring) {
    require_three_generators(ring, "comm w");
    auto x = CommPolynomial::generator(ring, 0);
    auto y = CommPolynomial::generator(ring, 1);
    auto z = CommPolynomial::generator(ring, 2);
    return y * y - x * z;
}

/// The derivation w·∂ with ∂ = 2y·∂x + z·∂y, whose exponential is Nagata.
inline CommDerivation nagata_derivation(const RingPtr& ring) {
    require_three_generators(ring, "nagata derivation");
    auto y = CommPolynomial::generator(ring, 1);
    auto z = CommPolynomial::generator(ring, 2);
    auto w = comm_w(ring);
    return CommDerivation(ring, {y.scaled(Rational(2)) * w, z * w, CommPolynomial::zero(ring)});
}

/// The Nagata automorphism (x + 2yw + zw², y + zw, z).
inline CommEndomorphism nagata(const RingPtr& ring) {
    require_three_generators(ring, "nagata");
    auto x = CommPolynomial::generator(ring, 0);
    auto y = CommPolynomial::generator(ring, 1);
    auto z = CommPolynomial::generator(ring, 2);
    auto w = comm_w(ring);
    return CommEndomorphism(
        ring, {x + y.scaled(Rational(2)) * w + z * w * w, y + z * w, z});
}

} // namespace novikov
