#include "momentcone/scalar.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace momentcone::exactla {

Scalar Scalar::of_fraction(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

int Scalar::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Components disagree: sign of a + b*sqrt2 is the sign of the component
    // with the larger square, comparing a^2 against 2*b^2.
    mpq_class a2 = a_ * a_;
    mpq_class b2 = 2 * b_ * b_;
    const int c = cmp(a2, b2);
    if (c == 0) throw std::logic_error("a^2 == 2 b^2 with a,b nonzero: sqrt2 rational?");
    return c > 0 ? sa : sb;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    // 1/(a + b sqrt2) = (a - b sqrt2)/(a^2 - 2 b^2)
    mpq_class den = a_ * a_ - 2 * b_ * b_;
    return Scalar(a_ / den, -b_ / den);
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar result(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

double Scalar::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

std::size_t Scalar::bit_size() const {
    auto bits = [](const mpq_class& q) {
        return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    };
    return bits(a_) + bits(b_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 2 b1 b2 + (a1 b2 + b1 a2) s
    // Purely rational operands dominate in practice; keep them on the short
    // path with a single mpq multiply.
    if (sgn(b_) == 0) {
        if (sgn(o.b_) == 0) {
            a_ *= o.a_;
            return *this;
        }
        mpq_class b = a_ * o.b_;
        a_ *= o.a_;
        b_ = std::move(b);
        return *this;
    }
    if (sgn(o.b_) == 0) {
        a_ *= o.a_;
        b_ *= o.a_;
        return *this;
    }
    mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

std::string fraction_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::string Scalar::str() const {
    if (sgn(b_) == 0) return fraction_str(a_);
    std::string irr_part = fraction_str(::abs(b_)) + "*sqrt2";
    if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + irr_part;
    return fraction_str(a_) + (sgn(b_) < 0 ? "-" : "+") + irr_part;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

mpq_class parse_fraction(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (sgn(mpq_class(q.get_den())) == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

// Parses one term: either a rational or "[coeff*]sqrt2".  Sets the matching
// component.
void parse_term(const std::string& term, mpq_class& rat, mpq_class& irr) {
    const auto pos = term.find("sqrt2");
    if (pos == std::string::npos) {
        rat += parse_fraction(term);
        return;
    }
    if (pos + 5 != term.size()) throw std::invalid_argument("bad scalar term: " + term);
    std::string coeff = term.substr(0, pos);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    if (coeff.empty() || coeff == "+")
        irr += 1;
    else if (coeff == "-")
        irr -= 1;
    else
        irr += parse_fraction(coeff);
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar literal");

    // Split at the top-level '+'/'-' separating the two terms (sign characters
    // at position 0 or right after '*' or '/' belong to the term itself).
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '*' && s[i - 1] != '/' &&
            s[i - 1] != '+' && s[i - 1] != '-')
            split = i;  // keep the last candidate
    }
    mpq_class rat(0), irr(0);
    if (split == std::string::npos) {
        parse_term(s, rat, irr);
    } else {
        parse_term(s.substr(0, split), rat, irr);
        std::string second = s.substr(split + 1);
        mpq_class r2(0), i2(0);
        parse_term(second, r2, i2);
        if (s[split] == '-') {
            r2 = -r2;
            i2 = -i2;
        }
        rat += r2;
        irr += i2;
    }
    return Scalar(rat, irr);
}

}  // namespace momentcone::exactla
