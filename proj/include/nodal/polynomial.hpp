#pragma once

#include "nodal/quad_scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace nodal {

// Ordered list of variable names shared by all polynomials of one ring.
struct VarTable {
    std::vector<std::string> names;

    static std::shared_ptr<const VarTable> make(std::vector<std::string> names) {
        auto t = std::make_shared<VarTable>();
        t->names = std::move(names);
        return t;
    }

    int index_of(const std::string& name) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
    size_t size() const { return names.size(); }
};

using VarTablePtr = std::shared_ptr<const VarTable>;

using Monomial = std::vector<unsigned>;

inline unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

// Graded-lexicographic order with respect to the declared variable order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && a->names == b->names);
}

// Sparse multivariate polynomial with exact scalar coefficients and
// graded-lex canonical term order. Zero coefficients are never stored.
template <ScalarField K>
class Poly {
public:
    using Terms = std::map<Monomial, K, GrlexLess>;

    Poly() : vars_(VarTable::make({})) {}
    explicit Poly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static Poly constant(VarTablePtr vars, const K& c) {
        Poly p(std::move(vars));
        if (!scalar_is_zero(c)) p.terms_[Monomial(p.vars_->size(), 0)] = c;
        return p;
    }
    static Poly variable(VarTablePtr vars, int index, unsigned exp = 1) {
        Poly p(vars);
        if (index < 0 || index >= static_cast<int>(vars->size()))
            throw Error("Poly: variable index out of range");
        Monomial m(vars->size(), 0);
        m[index] = exp;
        p.terms_[std::move(m)] = K(1);
        return p;
    }
    static Poly variable(const VarTablePtr& vars, const std::string& name, unsigned exp = 1) {
        int i = vars->index_of(name);
        if (i < 0) throw Error("Poly: unknown variable " + name);
        return variable(vars, i, exp);
    }
    static Poly monomial(VarTablePtr vars, Monomial m, const K& c) {
        Poly p(std::move(vars));
        if (m.size() != p.vars_->size()) throw Error("Poly: monomial arity mismatch");
        if (!scalar_is_zero(c)) p.terms_[std::move(m)] = c;
        return p;
    }

    const VarTablePtr& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
    }
    K constant_value() const {
        if (terms_.empty()) return K(0);
        if (!is_constant()) throw Error("Poly: not a constant");
        return terms_.begin()->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
        return d;
    }
    unsigned degree_in(int var) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }

    // Greatest monomial in graded-lex order.
    const std::pair<const Monomial, K>& leading_term() const {
        if (terms_.empty()) throw Error("Poly: leading term of zero");
        return *terms_.rbegin();
    }

    void add_term(const Monomial& m, const K& c) {
        if (scalar_is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(vars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same(b);
        Poly r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma);
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& operator*=(const K& c) {
        if (scalar_is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Poly operator*(Poly a, const K& c) { return a *= c; }
    friend Poly operator*(const K& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!same_table(a.vars_, b.vars_)) return false;
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const {
        Poly r = constant(vars_, K(1));
        Poly b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

    Poly derivative(int var) const {
        Poly r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial n(m);
            --n[var];
            r.add_term(n, c * scalar_from_rational<K>(Rational(static_cast<long long>(m[var]))));
        }
        return r;
    }

    // Evaluates the polynomial in any commutative ring R given one value per
    // variable. R needs +, *, and construction from a coefficient via `lift`.
    template <typename R, typename Lift>
    R evaluate(const std::vector<R>& values, const R& one, Lift lift) const {
        if (values.size() != vars_->size()) throw Error("Poly: evaluation arity mismatch");
        bool first = true;
        R acc = one;  // overwritten before use
        for (const auto& [m, c] : terms_) {
            R term = lift(c);
            for (size_t i = 0; i < m.size(); ++i)
                for (unsigned e = 0; e < m[i]; ++e) term = term * values[i];
            if (first) {
                acc = term;
                first = false;
            } else {
                acc = acc + term;
            }
        }
        if (first) {
            acc = one;
            acc = acc + (-one);  // zero of R
        }
        return acc;
    }

    // Exact division; throws if the divisor does not divide exactly.
    Poly divide_exact(const Poly& d) const {
        require_same(d);
        if (d.is_zero()) throw Error("Poly: division by zero polynomial");
        Poly q(vars_);
        Poly r = *this;
        const auto& [dm, dc] = d.leading_term();
        while (!r.is_zero()) {
            const auto& [rm, rc] = r.leading_term();
            Monomial qm(rm);
            for (size_t i = 0; i < qm.size(); ++i) {
                if (rm[i] < dm[i]) throw Error("Poly: not exactly divisible");
                qm[i] = rm[i] - dm[i];
            }
            K qc = rc / dc;
            q.add_term(qm, qc);
            r -= Poly::monomial(vars_, qm, qc) * d;
        }
        return q;
    }

    bool divisible_by(const Poly& d) const {
        try {
            divide_exact(d);
            return true;
        } catch (const Error&) {
            return false;
        }
    }

    // Componentwise minimum of all exponent vectors (zero vector if empty).
    Monomial monomial_content() const {
        Monomial m(vars_->size(), 0);
        bool first = true;
        for (const auto& [mm, c] : terms_) {
            if (first) {
                m = mm;
                first = false;
            } else {
                for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], mm[i]);
            }
        }
        return m;
    }

    Poly shift_down(const Monomial& m) const {
        Poly r(vars_);
        for (const auto& [mm, c] : terms_) {
            Monomial n(mm);
            for (size_t i = 0; i < n.size(); ++i) {
                if (n[i] < m[i]) throw Error("Poly: shift below zero exponent");
                n[i] -= m[i];
            }
            r.terms_[std::move(n)] = c;
        }
        return r;
    }

    // Substitution of polynomials (same table) for the variables.
    Poly compose(const std::vector<Poly>& values) const {
        if (values.empty()) return *this;
        VarTablePtr target = values.front().vars();
        return evaluate<Poly>(values, Poly::constant(target, K(1)),
                              [&](const K& c) { return Poly::constant(target, c); });
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string cs = scalar_str(c);
            bool neg = !cs.empty() && cs[0] == '-' && !scalar_needs_parens(c);
            if (out.empty()) {
                if (neg) {
                    out += "-";
                    cs = cs.substr(1);
                }
            } else {
                out += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            std::string vs;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!vs.empty()) vs += "*";
                vs += vars_->names[i];
                if (m[i] > 1) vs += "^" + std::to_string(m[i]);
            }
            if (vs.empty()) {
                out += scalar_needs_parens(c) ? "(" + cs + ")" : cs;
            } else if (cs == "1" && !scalar_needs_parens(c)) {
                out += vs;
            } else {
                out += (scalar_needs_parens(c) ? "(" + cs + ")" : cs) + "*" + vs;
            }
        }
        return out;
    }

private:
    void require_same(const Poly& o) const {
        if (!same_table(vars_, o.vars_)) throw Error("Poly: mixed variable tables");
    }

    VarTablePtr vars_;
    Terms terms_;
};

template <ScalarField K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& p) {
    return os << p.str();
}

}  // namespace nodal
