#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coulomb {

/// Raised when a structural precondition is violated (rank mismatch,
/// malformed input, bad shape).
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration fails to stabilize (non-good theory,
/// non-convergent series).
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Int = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
/// Everything in this project is exact; there is no floating point anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw StructuralError("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return v_ < 0; }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw StructuralError("Rational: division by zero");
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

    /// "3", "-3" or "3/2".
    std::string str() const { return v_.get_str(); }

    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw StructuralError("Rational: cannot parse '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

}  // namespace coulomb
