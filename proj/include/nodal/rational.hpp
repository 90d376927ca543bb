#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nodal {

using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision rational. Always stored in lowest terms with a
// positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& n, const Int& d) : v_(n) {
        if (d == 0) throw Error("Rational: zero denominator");
        v_ /= boost::multiprecision::cpp_rational(d);
    }

    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return v_ < 0; }

    // Exact conversion; throws if the value is not an integer.
    Int to_integer() const {
        if (!is_integer()) throw Error("Rational: not an integer: " + str());
        return numerator();
    }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw Error("Rational: inverse of zero");
        return Rational(denominator(), numerator());
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    Rational pow(unsigned e) const {
        Rational r(1), b(*this);
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    // Largest integer <= value.
    Int floor() const {
        Int q = numerator() / denominator();
        if (v_ < 0 && q * denominator() != numerator()) --q;
        return q;
    }
    Int ceil() const { return -((-*this).floor()); }

    std::string str() const {
        std::string s = numerator().str();
        if (denominator() != 1) s += "/" + denominator().str();
        return s;
    }

private:
    boost::multiprecision::cpp_rational v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nodal
