#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace momentcone::exactla {

/// Element of the real quadratic field Q(sqrt 2), stored as rat + irr*sqrt(2)
/// with both components exact rationals in canonical form (lowest terms,
/// positive denominator).  Ordering and signs are decided without floating
/// point: when the components disagree in sign, compare rat^2 against
/// 2*irr^2 in integer arithmetic.
class Scalar {
public:
    Scalar() : a_(0), b_(0) {}
    Scalar(int v) : a_(v), b_(0) {}
    Scalar(long v) : a_(v), b_(0) {}
    Scalar(const mpz_class& v) : a_(v), b_(0) {}
    Scalar(mpq_class a) : a_(std::move(a)), b_(0) { a_.canonicalize(); }
    Scalar(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    static Scalar of_fraction(long num, long den);
    static Scalar sqrt2() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& rat() const { return a_; }
    const mpq_class& irr() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    /// Exact sign in {-1, 0, +1}.
    int sign() const;

    Scalar abs() const { return sign() < 0 ? -*this : *this; }
    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    /// Approximate double value; never used in decision paths.
    double to_double() const;

    /// Size proxy used for pivot selection: total bit length of all four
    /// integer components.
    std::size_t bit_size() const;

    std::string str() const;

    Scalar operator-() const { return Scalar(-a_, -b_); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

private:
    mpq_class a_;
    mpq_class b_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses the exact string grammar emitted by Scalar::str():
///   "p/q", "p", "p/q+r/s*sqrt2", "-3+1/2*sqrt2", "sqrt2", "-sqrt2", "2*sqrt2".
/// Throws std::invalid_argument on malformed input.
Scalar parse_scalar(const std::string& text);

}  // namespace momentcone::exactla
