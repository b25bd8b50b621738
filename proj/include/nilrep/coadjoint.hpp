#ifndef NILREP_COADJOINT_HPP
#define NILREP_COADJOINT_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nilrep/deadline.hpp"
#include "nilrep/lie_algebra.hpp"
#include "nilrep/matrix.hpp"
#include "nilrep/ratfunc.hpp"

namespace nilrep {

/// A coordinate of a linear functional: a symbolic dual variable or an exact value.
using Coordinate = std::variant<Variable, Rational>;

/// Linear functional on f_{m,2}, coordinates indexed by the relabeled basis.
class Functional {
public:
    /// Validates length and that symbolic entries name their own basis position.
    Functional(const LieAlgebra& algebra, std::vector<Coordinate> coords);

    /// Every coordinate symbolic.
    static Functional generic(const LieAlgebra& algebra);
    static Functional numeric(const LieAlgebra& algebra, const std::vector<Rational>& values);
    /// Values by variable name ("l12", "l3"); missing names are 0, unknown names throw std::invalid_argument.
    static Functional from_named_values(const LieAlgebra& algebra, const std::map<std::string, Rational>& values);

    std::size_t size() const { return coords_.size(); }
    const std::vector<Coordinate>& coords() const { return coords_; }
    const SpacePtr& space() const { return space_; }

    bool is_numeric() const;
    /// Throws std::invalid_argument if any coordinate is symbolic.
    std::vector<Rational> numeric_values() const;
    /// The coordinate as a polynomial (a variable or a constant).
    Poly coordinate_poly(std::size_t index) const;
    /// lambda(X) for a basis-coefficient vector X.
    Poly evaluate(const std::vector<Rational>& x) const;

private:
    SpacePtr space_;
    std::vector<Coordinate> coords_;
};

/// Square matrix over Q(lambda) with entries(i,j) = -entries(j,i).
class SkewMatrix {
public:
    /// Throws std::invalid_argument if the matrix is not square or not skew.
    explicit SkewMatrix(Matrix<RatFunc> entries);

    std::size_t dim() const { return entries_.rows(); }
    const RatFunc& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const Matrix<RatFunc>& entries() const { return entries_; }
    const SpacePtr& space() const { return entries_(0, 0).space(); }

    std::vector<RatFunc> apply(const std::vector<RatFunc>& v) const;

private:
    Matrix<RatFunc> entries_;
};

/// M(lambda) = [lambda[X_i, X_j]].
SkewMatrix build_M(const LieAlgebra& algebra, const Functional& lambda);

/// The m x m generator block [lambda[Z_i, Z_j]] as polynomials.
Matrix<Poly> generator_block(const LieAlgebra& algebra, const Functional& lambda);

/// Throws std::invalid_argument for odd dimension.
RatFunc pfaffian(const SkewMatrix& s);

/// Exact kernel basis over Q(lambda): skew fraction-free elimination over the
/// polynomial ring picks a pivot set, and the kernel is read off as sub-Pfaffians of
/// the bordered pivot blocks. Each vector is scaled so that its last nonzero entry is 1.
std::vector<std::vector<RatFunc>> nullspace(const SkewMatrix& s, const Deadline* deadline = nullptr);

/// Coadjoint stabilizer split as center plus extra vectors on the generator coordinates.
struct StabilizerBasis {
    std::vector<std::size_t> center_part;             // 0-based basis indices
    std::vector<std::vector<RatFunc>> extra_vectors;  // length n each

    std::size_t dimension() const { return center_part.size() + extra_vectors.size(); }
};

StabilizerBasis stabilizer(const LieAlgebra& algebra, const Functional& lambda, const Deadline* deadline = nullptr);

/// {"center_dim": int, "extra": [["ratfunc", ...], ...]}
std::string stabilizer_json(const StabilizerBasis& basis);

using Assignment = std::map<Variable, Rational>;

/// A substitution hit a point where a denominator vanishes.
class DegenerateError : public std::domain_error {
public:
    explicit DegenerateError(Poly polynomial)
        : std::domain_error("denominator vanishes: " + polynomial.to_string()), polynomial_(std::move(polynomial)) {}

    const Poly& polynomial() const { return polynomial_; }

private:
    Poly polynomial_;
};

/// Substitutes assigned variables; unassigned ones stay symbolic. Throws DegenerateError.
RatFunc specialize(const RatFunc& expr, const Assignment& assignment);
StabilizerBasis specialize(const StabilizerBasis& basis, const Assignment& assignment);

/// Assignment that sends each coordinate variable of `algebra` to the numeric functional's value.
Assignment assignment_of(const LieAlgebra& algebra, const Functional& numeric);

/// Polynomial whose non-vanishing defines Omega: the Pfaffian of the leading
/// (m-1) x (m-1) generator minor for odd m, of the full generator block for even m.
/// Its square is the determinant of that block, so the zero sets agree.
Poly omega_polynomial(const LieAlgebra& algebra, const Functional& lambda);

/// Numeric Omega membership; throws std::invalid_argument for symbolic input.
bool in_omega(const LieAlgebra& algebra, const Functional& lambda);

/// Numeric Omega_1 membership: lambda(Z_{j,m}) != 0 for all j < m when m is odd; true for even m.
bool in_omega1(const LieAlgebra& algebra, const Functional& lambda);

}  // namespace nilrep

#endif
