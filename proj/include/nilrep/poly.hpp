#ifndef NILREP_POLY_HPP
#define NILREP_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilrep/rational.hpp"
#include "nilrep/variables.hpp"

namespace nilrep {

/// Exponent vector over a fixed variable ordering, with its total degree cached.
class Monomial {
public:
    using Exponent = std::uint8_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

    static Monomial unit(std::size_t nvars, std::size_t var, unsigned power = 1);

    std::size_t size() const { return exps_.size(); }
    unsigned degree() const { return degree_; }
    Exponent operator[](std::size_t var) const { return exps_[var]; }
    void set(std::size_t var, unsigned power);

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Requires divides(*this, other).
    Monomial operator/(const Monomial& other) const;

    /// Componentwise minimum.
    static Monomial meet(const Monomial& a, const Monomial& b);

    std::size_t hash() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<Exponent> exps_;
    unsigned degree_ = 0;
};

/// Graded reverse-lexicographic comparison with variable 0 largest.
/// Returns <0, 0, >0 like a three-way compare.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept sorted by decreasing grevlex order with no zero coefficients;
/// the zero polynomial has no terms. Every polynomial lives in a VarSpace and
/// binary operations between different spaces throw std::invalid_argument.
class Poly {
public:
    explicit Poly(SpacePtr space);

    static Poly constant(SpacePtr space, const Rational& value);
    static Poly variable(SpacePtr space, const Variable& v);
    static Poly variable_at(SpacePtr space, std::size_t index);
    /// Takes arbitrary terms; sorts, merges duplicates and drops zeros.
    static Poly from_terms(SpacePtr space, std::vector<Term> terms);

    const SpacePtr& space() const { return space_; }
    std::size_t nvars() const { return space_->size(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;
    /// Requires !is_zero().
    const Term& leading_term() const { return terms_.front(); }
    const Rational& leading_coeff() const { return terms_.front().coeff; }
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    bool contains_var(std::size_t var) const { return degree_in(var) > 0; }

    /// Coefficients c_0..c_d with *this = sum_k c_k * x_var^k; each c_k is free of x_var.
    std::vector<Poly> coefficients_in(std::size_t var) const;
    static Poly from_coefficients(SpacePtr space, std::size_t var, const std::vector<Poly>& coeffs);

    /// Replaces every variable with an engaged value by that rational.
    Poly substitute(const std::vector<std::optional<Rational>>& values) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& scalar);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b);

    Poly multiply_monomial(const Monomial& m, const Rational& c) const;

    /// Scaled so the leading coefficient is 1; zero stays zero.
    Poly monic() const;

    /// `c * l12^e * l1^f` terms joined by " + ", "0" for the zero polynomial.
    std::string to_string() const;

private:
    Poly(SpacePtr space, std::vector<Term> sorted_terms);

    void check_space(const Poly& other) const;

    SpacePtr space_;
    std::vector<Term> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

enum class PolyOp { Add, Sub, Mul, Neg };

/// Dispatches on `op`; Neg ignores `b` apart from the space check.
Poly poly_arith(PolyOp op, const Poly& a, const Poly& b);

/// Quotient a/b if b divides a exactly in Q[x], else nullopt. Throws std::domain_error if b = 0.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// a/b, throwing std::domain_error if the division is not exact.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Greatest common divisor normalized to leading coefficient 1.
/// Throws std::domain_error when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace nilrep

#endif
