#include "nilrep/ratfunc.hpp"

#include <stdexcept>

namespace nilrep {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.space(), Rational(1))) {}

RatFunc RatFunc::reduce(Poly num, Poly den) {
    if (num.space() != den.space()) throw std::invalid_argument("polynomials live in different variable spaces");
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return RatFunc(std::move(num));
    if (!den.is_constant()) {
        const Poly g = poly_gcd(num, den);
        if (!g.is_constant()) {
            num = exact_quotient(num, g);
            den = exact_quotient(den, g);
        }
    }
    const Rational scale = 1 / den.leading_coeff();
    return RatFunc(num * scale, den * scale, 0);
}

RatFunc ratfunc_reduce(Poly num, Poly den) { return RatFunc::reduce(std::move(num), std::move(den)); }

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw std::logic_error("rational function is not constant: " + to_string());
    return num_.constant_term() / den_.constant_term();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc::reduce(a.num_ + b.num_, a.den_);
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
    return RatFunc::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc::zero(a.space());
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
    // Cross-cancel first so the products stay small.
    const Poly g1 = poly_gcd(a.num_, b.den_);
    const Poly g2 = poly_gcd(b.num_, a.den_);
    Poly num = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
    Poly den = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
    const Rational scale = 1 / den.leading_coeff();
    return RatFunc(num * scale, den * scale, 0);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return a * RatFunc::reduce(b.den_, b.num_);
}

std::string RatFunc::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.space());
    return (exact_quotient(a, poly_gcd(a, b)) * b).monic();
}

}  // namespace nilrep
