#pragma once

// Sparse exact arithmetic in the differential polynomial algebra k{x_1,...,x_n}
// with m commuting derivations delta_1,...,delta_m over the rationals.
//
// A derivative variable is a symbol x_i^theta, where theta is a multi-index of
// derivative orders. Differential monomials are commutative power products of
// derivative variables; polynomials are sparse rational combinations of
// canonical monomials. Two gradings are attached to every monomial: deg counts
// factors and d sums derivative orders; weight = deg - d.

#include "novikov/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace novikov {

struct RingConfig {
    int generators = 0;   // n
    int derivations = 0;  // m
    std::vector<std::string> names;

    bool operator==(const RingConfig&) const = default;
};

using RingPtr = std::shared_ptr<const RingConfig>;

namespace detail {

inline bool valid_name(const std::string& s) {
    if (s.empty() || s == "o") {  // "o" is the circle-product token in the text grammar
        return false;
    }
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
        return false;
    }
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

} // namespace detail

inline RingPtr make_ring(std::vector<std::string> names, int derivations = 1) {
    if (names.empty()) {
        throw std::invalid_argument("ring: at least one generator required");
    }
    if (derivations < 1) {
        throw std::invalid_argument("ring: at least one derivation required");
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!detail::valid_name(names[i])) {
            throw std::invalid_argument("ring: invalid generator name '" + names[i] + "'");
        }
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            if (names[i] == names[j]) {
                throw std::invalid_argument("ring: duplicate generator name '" + names[i] + "'");
            }
        }
    }
    RingConfig cfg{static_cast<int>(names.size()), derivations, std::move(names)};
    return std::make_shared<const RingConfig>(std::move(cfg));
}

/// The ring of the worked examples: k{x,y,z} with one derivation.
inline RingPtr standard_ring() { return make_ring({"x", "y", "z"}, 1); }

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a != b && (!a || !b || !(*a == *b))) {
        throw std::invalid_argument("ring mismatch between operands");
    }
}

/// The symbol x_i^theta. Ordered by generator index first, then by the
/// multi-index lexicographically; for one derivation this is the order
/// x_i^(r) > x_j^(s) iff i > j, or i = j and r > s.
struct DerivativeVariable {
    int var = 0;
    std::vector<int> theta;  // one order per derivation

    int order() const { return std::accumulate(theta.begin(), theta.end(), 0); }

    DerivativeVariable differentiated(int i) const {
        DerivativeVariable d = *this;
        d.theta.at(static_cast<std::size_t>(i)) += 1;
        return d;
    }

    auto operator<=>(const DerivativeVariable&) const = default;
};

inline DerivativeVariable derivative_variable(const RingPtr& ring, int var, std::vector<int> theta) {
    if (var < 0 || var >= ring->generators) {
        throw std::invalid_argument("derivative variable: generator index out of range");
    }
    if (static_cast<int>(theta.size()) != ring->derivations) {
        throw std::invalid_argument("derivative variable: multi-index length must equal the number of derivations");
    }
    for (int t : theta) {
        if (t < 0) {
            throw std::invalid_argument("derivative variable: negative derivative order");
        }
    }
    return DerivativeVariable{var, std::move(theta)};
}

inline DerivativeVariable derivative_variable(const RingPtr& ring, int var, int order = 0) {
    std::vector<int> theta(static_cast<std::size_t>(ring->derivations), 0);
    if (ring->derivations == 1) {
        theta[0] = order;
    } else if (order != 0) {
        throw std::invalid_argument("derivative variable: plain order requires one derivation");
    }
    return derivative_variable(ring, var, std::move(theta));
}

struct MonomialFactor {
    DerivativeVariable variable;
    int power = 1;

    bool operator==(const MonomialFactor&) const = default;
};

/// Canonical commutative power product of derivative variables. The empty
/// product is the monomial 1. Factors are kept sorted by the variable order,
/// with positive merged exponents.
class DiffMonomial {
public:
    DiffMonomial() = default;

    static DiffMonomial one() { return DiffMonomial(); }

    static DiffMonomial variable(DerivativeVariable v) {
        DiffMonomial u;
        u.factors_.push_back(MonomialFactor{std::move(v), 1});
        return u;
    }

    static DiffMonomial from_factors(std::vector<MonomialFactor> factors) {
        std::sort(factors.begin(), factors.end(),
                  [](const MonomialFactor& a, const MonomialFactor& b) { return a.variable < b.variable; });
        DiffMonomial u;
        for (auto& f : factors) {
            if (f.power == 0) {
                continue;
            }
            if (f.power < 0) {
                throw std::invalid_argument("monomial: negative exponent");
            }
            if (!u.factors_.empty() && u.factors_.back().variable == f.variable) {
                u.factors_.back().power += f.power;
            } else {
                u.factors_.push_back(std::move(f));
            }
        }
        return u;
    }

    const std::vector<MonomialFactor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int degree() const {
        int t = 0;
        for (const auto& f : factors_) {
            t += f.power;
        }
        return t;
    }

    int diff_degree() const {
        int t = 0;
        for (const auto& f : factors_) {
            t += f.power * f.variable.order();
        }
        return t;
    }

    int weight() const { return degree() - diff_degree(); }

    DiffMonomial times(const DiffMonomial& other) const {
        check_compatible(other);
        std::vector<MonomialFactor> all = factors_;
        all.insert(all.end(), other.factors_.begin(), other.factors_.end());
        return from_factors(std::move(all));
    }

    /// Exact division in the monoid of monomials; nullopt when not a divisor.
    std::optional<DiffMonomial> divided_by(const DiffMonomial& other) const {
        check_compatible(other);
        DiffMonomial q;
        std::size_t i = 0;
        for (const auto& f : other.factors_) {
            while (i < factors_.size() && factors_[i].variable < f.variable) {
                q.factors_.push_back(factors_[i]);
                ++i;
            }
            if (i == factors_.size() || !(factors_[i].variable == f.variable) || factors_[i].power < f.power) {
                return std::nullopt;
            }
            if (factors_[i].power > f.power) {
                q.factors_.push_back(MonomialFactor{f.variable, factors_[i].power - f.power});
            }
            ++i;
        }
        for (; i < factors_.size(); ++i) {
            q.factors_.push_back(factors_[i]);
        }
        return q;
    }

    bool divisible_by(const DiffMonomial& other) const { return divided_by(other).has_value(); }

    bool operator==(const DiffMonomial&) const = default;

private:
    void check_compatible(const DiffMonomial& other) const {
        if (!factors_.empty() && !other.factors_.empty() &&
            factors_[0].variable.theta.size() != other.factors_[0].variable.theta.size()) {
            throw std::invalid_argument("monomial: operands come from rings with different derivation counts");
        }
    }

    std::vector<MonomialFactor> factors_;
};

/// Term order used for canonical storage and printing: lower total degree
/// first; within a degree, monomials are compared factor by factor from the
/// smallest derivative variable and the larger word comes first. This puts
/// w'' into the shape 2*y'^2 + 2*y*y'' - x''*z - 2*x'*z' - x*z''.
struct MonomialOrder {
    bool operator()(const DiffMonomial& a, const DiffMonomial& b) const {
        int da = a.degree();
        int db = b.degree();
        if (da != db) {
            return da < db;
        }
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        std::size_t i = 0;
        std::size_t j = 0;
        int ra = fa.empty() ? 0 : fa[0].power;
        int rb = fb.empty() ? 0 : fb[0].power;
        while (i < fa.size() && j < fb.size()) {
            if (!(fa[i].variable == fb[j].variable)) {
                return fb[j].variable < fa[i].variable;
            }
            int step = std::min(ra, rb);
            ra -= step;
            rb -= step;
            if (ra == 0 && ++i < fa.size()) {
                ra = fa[i].power;
            }
            if (rb == 0 && ++j < fb.size()) {
                rb = fb[j].power;
            }
        }
        return false;  // equal words
    }
};

/// Sparse differential polynomial: canonical monomials mapped to nonzero
/// rational coefficients. Immutable value; all operations return new values.
class DiffPolynomial {
public:
    using TermMap = std::map<DiffMonomial, Rational, MonomialOrder>;

    explicit DiffPolynomial(RingPtr ring) : ring_(require_ring(std::move(ring))) {}

    static DiffPolynomial zero(RingPtr ring) { return DiffPolynomial(std::move(ring)); }

    static DiffPolynomial constant(RingPtr ring, Rational c) {
        DiffPolynomial f(std::move(ring));
        if (!c.is_zero()) {
            f.terms_.emplace(DiffMonomial::one(), std::move(c));
        }
        return f;
    }

    static DiffPolynomial one(RingPtr ring) { return constant(std::move(ring), Rational(1)); }

    static DiffPolynomial variable(RingPtr ring, DerivativeVariable v) {
        DiffPolynomial f(ring);
        f.validate_variable(v);
        f.terms_.emplace(DiffMonomial::variable(std::move(v)), Rational(1));
        return f;
    }

    static DiffPolynomial generator(const RingPtr& ring, int i) {
        return variable(ring, derivative_variable(ring, i));
    }

    static DiffPolynomial monomial(RingPtr ring, DiffMonomial u, Rational c = Rational(1)) {
        DiffPolynomial f(std::move(ring));
        f.add_term(u, c);
        return f;
    }

    static DiffPolynomial from_terms(RingPtr ring, const std::vector<std::pair<DiffMonomial, Rational>>& terms) {
        DiffPolynomial f(std::move(ring));
        for (const auto& [u, c] : terms) {
            f.add_term(u, c);
        }
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const DiffMonomial& u) const {
        auto it = terms_.find(u);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    DiffPolynomial operator-() const { return scaled(Rational(-1)); }

    DiffPolynomial scaled(const Rational& c) const {
        DiffPolynomial r(ring_);
        if (c.is_zero()) {
            return r;
        }
        for (const auto& [u, a] : terms_) {
            r.terms_.emplace(u, a * c);
        }
        return r;
    }

    DiffPolynomial& operator+=(const DiffPolynomial& b) {
        require_same_ring(ring_, b.ring_);
        for (const auto& [u, c] : b.terms_) {
            add_term(u, c);
        }
        return *this;
    }

    DiffPolynomial& operator-=(const DiffPolynomial& b) {
        require_same_ring(ring_, b.ring_);
        for (const auto& [u, c] : b.terms_) {
            add_term(u, -c);
        }
        return *this;
    }

    friend DiffPolynomial operator+(const DiffPolynomial& a, const DiffPolynomial& b) {
        DiffPolynomial r = a;
        r += b;
        return r;
    }

    friend DiffPolynomial operator-(const DiffPolynomial& a, const DiffPolynomial& b) {
        DiffPolynomial r = a;
        r -= b;
        return r;
    }

    friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        DiffPolynomial r(a.ring_);
        for (const auto& [u, c] : a.terms_) {
            for (const auto& [v, d] : b.terms_) {
                r.add_term(u.times(v), c * d);
            }
        }
        return r;
    }

    DiffPolynomial pow(int k) const {
        if (k < 0) {
            throw std::invalid_argument("polynomial: negative power");
        }
        DiffPolynomial r = one(ring_);
        for (int i = 0; i < k; ++i) {
            r = r * *this;
        }
        return r;
    }

    /// Applies delta_i: the multi-index of one factor is bumped per Leibniz term.
    DiffPolynomial delta(int i = 0) const {
        if (i < 0 || i >= ring_->derivations) {
            throw std::invalid_argument("delta: derivation index out of range");
        }
        DiffPolynomial r(ring_);
        for (const auto& [u, c] : terms_) {
            const auto& factors = u.factors();
            for (std::size_t f = 0; f < factors.size(); ++f) {
                std::vector<MonomialFactor> bumped = factors;
                bumped[f].power -= 1;
                bumped.push_back(MonomialFactor{factors[f].variable.differentiated(i), 1});
                r.add_term(DiffMonomial::from_factors(std::move(bumped)), c * Rational(factors[f].power));
            }
        }
        return r;
    }

    /// Applies delta_1^{theta_1} ... delta_m^{theta_m}.
    DiffPolynomial derivative(const std::vector<int>& theta) const {
        if (static_cast<int>(theta.size()) != ring_->derivations) {
            throw std::invalid_argument("derivative: multi-index length must equal the number of derivations");
        }
        DiffPolynomial r = *this;
        for (std::size_t i = 0; i < theta.size(); ++i) {
            if (theta[i] < 0) {
                throw std::invalid_argument("derivative: negative order");
            }
            for (int k = 0; k < theta[i]; ++k) {
                r = r.delta(static_cast<int>(i));
            }
        }
        return r;
    }

    /// Common value of deg over the terms; nullopt when inhomogeneous.
    /// The zero polynomial has no degree.
    std::optional<int> degree() const { return common_grade([](const DiffMonomial& u) { return u.degree(); }); }
    std::optional<int> diff_degree() const { return common_grade([](const DiffMonomial& u) { return u.diff_degree(); }); }
    std::optional<int> weight() const { return common_grade([](const DiffMonomial& u) { return u.weight(); }); }

    bool operator==(const DiffPolynomial& other) const {
        require_same_ring(ring_, other.ring_);
        return terms_ == other.terms_;
    }

private:
    static RingPtr require_ring(RingPtr ring) {
        if (!ring) {
            throw std::invalid_argument("polynomial: null ring");
        }
        return ring;
    }

    void validate_variable(const DerivativeVariable& v) const {
        if (v.var < 0 || v.var >= ring_->generators ||
            static_cast<int>(v.theta.size()) != ring_->derivations) {
            throw std::invalid_argument("polynomial: variable does not belong to the ring");
        }
        for (int t : v.theta) {
            if (t < 0) {
                throw std::invalid_argument("polynomial: negative derivative order");
            }
        }
    }

    void add_term(const DiffMonomial& u, const Rational& c) {
        if (c.is_zero()) {
            return;
        }
        for (const auto& f : u.factors()) {
            validate_variable(f.variable);
        }
        auto [it, inserted] = terms_.try_emplace(u, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    template <typename Grade>
    std::optional<int> common_grade(Grade&& grade) const {
        if (terms_.empty()) {
            throw std::domain_error("grading: the zero polynomial has no degree");
        }
        std::optional<int> value;
        for (const auto& [u, c] : terms_) {
            int g = grade(u);
            if (!value) {
                value = g;
            } else if (*value != g) {
                return std::nullopt;
            }
        }
        return value;
    }

    RingPtr ring_;
    TermMap terms_;
};

} // namespace novikov
