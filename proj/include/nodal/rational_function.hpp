#pragma once

#include "nodal/polynomial.hpp"

namespace nodal {

// Quotient of sparse polynomials. Normalized so the denominator is monic in
// graded-lex order and common monomial factors are cancelled; full gcd
// reduction is not attempted, so equality goes through cross-multiplication.
template <ScalarField K>
class RatFn {
public:
    RatFn() = default;
    explicit RatFn(Poly<K> num) : num_(std::move(num)), den_(Poly<K>::constant(num_.vars(), K(1))) {}
    RatFn(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (!same_table(num_.vars(), den_.vars())) throw Error("RatFn: mixed variable tables");
        if (den_.is_zero()) throw Error("RatFn: zero denominator");
        normalize();
    }

    static RatFn constant(VarTablePtr vars, const K& c) { return RatFn(Poly<K>::constant(std::move(vars), c)); }
    static RatFn variable(const VarTablePtr& vars, const std::string& name) {
        return RatFn(Poly<K>::variable(vars, name));
    }

    const Poly<K>& numerator() const { return num_; }
    const Poly<K>& denominator() const { return den_; }
    const VarTablePtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    // Requires a trivial denominator.
    const Poly<K>& as_polynomial() const {
        if (!is_polynomial()) throw Error("RatFn: nontrivial denominator");
        return num_;
    }

    RatFn operator-() const {
        RatFn r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw Error("RatFn: division by zero");
        return RatFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

    RatFn inverse() const {
        if (is_zero()) throw Error("RatFn: inverse of zero");
        return RatFn(den_, num_);
    }

    // Exact equality, decided by cross-multiplication.
    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    RatFn derivative(int var) const {
        // quotient rule; the d^2 denominator keeps the result exact
        return RatFn(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
    }

    RatFn pow(unsigned e) const {
        RatFn r = constant(vars(), K(1));
        RatFn b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

    template <typename R, typename Lift>
    R evaluate(const std::vector<R>& values, const R& one, Lift lift) const {
        R n = num_.template evaluate<R>(values, one, lift);
        R d = den_.template evaluate<R>(values, one, lift);
        return n / d;
    }

    RatFn<K> substitute(const std::vector<RatFn<K>>& values) const {
        if (values.empty()) return *this;
        VarTablePtr target = values.front().vars();
        RatFn one = constant(target, K(1));
        RatFn n = num_.template evaluate<RatFn>(values, one, [&](const K& c) { return constant(target, c); });
        RatFn d = den_.template evaluate<RatFn>(values, one, [&](const K& c) { return constant(target, c); });
        if (d.is_zero()) throw Error("RatFn: substitution makes denominator zero");
        return n / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
        return n + "/(" + den_.str() + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<K>::constant(num_.vars(), K(1));
            return;
        }
        // cancel shared monomial content
        Monomial cn = num_.monomial_content();
        Monomial cd = den_.monomial_content();
        Monomial shared(cn.size());
        bool any = false;
        for (size_t i = 0; i < cn.size(); ++i) {
            shared[i] = std::min(cn[i], cd[i]);
            any = any || shared[i] > 0;
        }
        if (any) {
            num_ = num_.shift_down(shared);
            den_ = den_.shift_down(shared);
        }
        if (num_ == den_) {
            num_ = Poly<K>::constant(num_.vars(), K(1));
            den_ = num_;
            return;
        }
        // monic denominator
        K lead = den_.leading_term().second;
        if (!scalar_is_one(lead)) {
            K inv = K(1) / lead;
            num_ *= inv;
            den_ *= inv;
        }
        if (den_.is_constant()) den_ = Poly<K>::constant(num_.vars(), K(1));
        if (num_.divisible_by(den_) && !den_.is_constant()) {
            num_ = num_.divide_exact(den_);
            den_ = Poly<K>::constant(num_.vars(), K(1));
        }
    }

    Poly<K> num_;
    Poly<K> den_;
};

template <ScalarField K>
std::ostream& operator<<(std::ostream& os, const RatFn<K>& f) {
    return os << f.str();
}

}  // namespace nodal
