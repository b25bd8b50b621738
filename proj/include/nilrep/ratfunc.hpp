#ifndef NILREP_RATFUNC_HPP
#define NILREP_RATFUNC_HPP

#include <string>

#include "nilrep/poly.hpp"

namespace nilrep {

/// Reduced fraction num/den of polynomials, an element of Q(lambda).
///
/// Canonical form: gcd(num, den) = 1 and den is monic under grevlex, so two
/// RatFuncs are equal iff their numerators and denominators are equal.
class RatFunc {
public:
    /// num / 1.
    explicit RatFunc(Poly num);

    static RatFunc zero(SpacePtr space) { return RatFunc(Poly(std::move(space))); }
    static RatFunc constant(SpacePtr space, const Rational& value) { return RatFunc(Poly::constant(std::move(space), value)); }

    /// Throws std::domain_error if den = 0.
    static RatFunc reduce(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const SpacePtr& space() const { return num_.space(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Value of a constant RatFunc; throws std::logic_error otherwise.
    Rational constant_value() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    /// Throws std::domain_error on division by zero.
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// "num" when den = 1, otherwise "(num) / (den)".
    std::string to_string() const;

private:
    RatFunc(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

/// Canonical reduced form of num/den.
RatFunc ratfunc_reduce(Poly num, Poly den);

/// lcm normalized to leading coefficient 1.
Poly poly_lcm(const Poly& a, const Poly& b);

}  // namespace nilrep

#endif
