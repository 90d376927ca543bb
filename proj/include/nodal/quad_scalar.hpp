#pragma once

#include "nodal/rational.hpp"

#include <concepts>
#include <string>

namespace nodal {

// Element a + b*sqrt(D) of a real or imaginary quadratic extension of Q.
// D is a square-free integer other than 0 and 1; a value with b == 0 carries
// D == 0 and combines with any discriminant. Mixing two nonzero discriminants
// is an error.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(int n) : a_(n) {}
    QuadScalar(const Rational& a) : a_(a) {}
    QuadScalar(Rational a, Rational b, long long disc) : a_(std::move(a)), b_(std::move(b)), d_(disc) {
        if (b_.is_zero()) {
            d_ = 0;
        } else {
            check_discriminant(d_);
        }
    }

    static QuadScalar sqrt_of(long long disc) { return QuadScalar(Rational(0), Rational(1), disc); }

    static void check_discriminant(long long d) {
        if (d == 0 || d == 1) throw Error("QuadScalar: discriminant must be a square-free integer != 0, 1");
        long long m = d < 0 ? -d : d;
        for (long long p = 2; p * p <= m; ++p)
            if (m % (p * p) == 0) throw Error("QuadScalar: discriminant not square-free");
    }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt_part() const { return b_; }
    long long discriminant() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadScalar conjugate() const { return QuadScalar(a_, -b_, d_); }

    // a^2 - D b^2; nonzero for nonzero elements since D is not a square.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadScalar operator-() const { return QuadScalar(-a_, -b_, d_); }

    QuadScalar& operator+=(const QuadScalar& o) {
        d_ = combine(d_, o.d_);
        a_ += o.a_;
        b_ += o.b_;
        if (b_.is_zero()) d_ = 0;
        return *this;
    }
    QuadScalar& operator-=(const QuadScalar& o) { return *this += -o; }
    QuadScalar& operator*=(const QuadScalar& o) {
        long long d = combine(d_, o.d_);
        Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = a;
        b_ = b;
        d_ = b_.is_zero() ? 0 : d;
        return *this;
    }
    QuadScalar& operator/=(const QuadScalar& o) {
        if (o.is_zero()) throw Error("QuadScalar: division by zero");
        if (o.is_rational()) {
            a_ /= o.a_;
            b_ /= o.a_;
            return *this;
        }
        Rational n = o.norm();
        return *this *= QuadScalar(o.a_ / n, -o.b_ / n, o.d_);
    }

    friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
    friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
    friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
    friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return x.b_.is_zero() || x.d_ == y.d_;
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

    QuadScalar inverse() const { return QuadScalar(1) / *this; }

    // Conventional name for the adjoined root: I when D = -1, sqrtD otherwise.
    static std::string root_symbol(long long d) { return d == -1 ? "I" : "sqrtD"; }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string root = root_symbol(d_);
        std::string rhs;
        if (b_ == Rational(1)) rhs = root;
        else if (b_ == Rational(-1)) rhs = "-" + root;
        else rhs = b_.str() + "*" + root;
        if (a_.is_zero()) return rhs;
        if (rhs[0] == '-') return a_.str() + rhs;
        return a_.str() + "+" + rhs;
    }

private:
    static long long combine(long long x, long long y) {
        if (x == 0) return y;
        if (y == 0) return x;
        if (x != y) throw Error("QuadScalar: mixing distinct discriminants");
        return x;
    }

    Rational a_{};
    Rational b_{};
    long long d_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const QuadScalar& q) { return os << q.str(); }

// Coefficient fields the algebra layers are templated over.
template <typename K>
concept ScalarField = std::same_as<K, Rational> || std::same_as<K, QuadScalar>;

template <ScalarField K>
K scalar_from_rational(const Rational& r) {
    return K(r);
}

inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_zero(const QuadScalar& x) { return x.is_zero(); }

inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const QuadScalar& x) { return x.str(); }

inline bool scalar_is_one(const Rational& x) { return x == Rational(1); }
inline bool scalar_is_one(const QuadScalar& x) { return x == QuadScalar(1); }

inline bool scalar_is_minus_one(const Rational& x) { return x == Rational(-1); }
inline bool scalar_is_minus_one(const QuadScalar& x) { return x == QuadScalar(-1); }

// True when the printed form needs parentheses inside a product.
inline bool scalar_needs_parens(const Rational& x) { return x.denominator() != 1; }
inline bool scalar_needs_parens(const QuadScalar& x) {
    return !x.sqrt_part().is_zero() || scalar_needs_parens(x.rational_part());
}

}  // namespace nodal
