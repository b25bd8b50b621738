#include "nilrep/coadjoint.hpp"

#include "json.hpp"

#include "nilrep/linalg.hpp"

namespace nilrep {

// ---------------------------------------------------------------------------
// Functional

Functional::Functional(const LieAlgebra& algebra, std::vector<Coordinate> coords)
    : space_(algebra.space()), coords_(std::move(coords)) {
    if (coords_.size() != algebra.dimension())
        throw std::invalid_argument("functional has " + std::to_string(coords_.size()) + " coordinates, algebra has " +
                                    std::to_string(algebra.dimension()));
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (const auto* v = std::get_if<Variable>(&coords_[k]); v && space_->index_of(*v) != k)
            throw std::invalid_argument("coordinate " + std::to_string(k + 1) + " uses variable " + v->name());
    }
}

Functional Functional::generic(const LieAlgebra& algebra) {
    std::vector<Coordinate> coords;
    for (std::size_t k = 0; k < algebra.dimension(); ++k) coords.emplace_back(algebra.space()->variable(k));
    return Functional(algebra, std::move(coords));
}

Functional Functional::numeric(const LieAlgebra& algebra, const std::vector<Rational>& values) {
    std::vector<Coordinate> coords(values.begin(), values.end());
    return Functional(algebra, std::move(coords));
}

Functional Functional::from_named_values(const LieAlgebra& algebra, const std::map<std::string, Rational>& values) {
    std::vector<Rational> v(algebra.dimension(), Rational(0));
    for (const auto& [name, value] : values) {
        const auto idx = algebra.space()->find(name);
        if (!idx) throw std::invalid_argument("unknown coordinate '" + name + "'");
        v[*idx] = value;
    }
    return numeric(algebra, v);
}

bool Functional::is_numeric() const {
    for (const auto& c : coords_)
        if (std::holds_alternative<Variable>(c)) return false;
    return true;
}

std::vector<Rational> Functional::numeric_values() const {
    std::vector<Rational> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) {
        const auto* q = std::get_if<Rational>(&c);
        if (!q) throw std::invalid_argument("functional has symbolic coordinates");
        out.push_back(*q);
    }
    return out;
}

Poly Functional::coordinate_poly(std::size_t index) const {
    const auto& c = coords_.at(index);
    if (const auto* v = std::get_if<Variable>(&c)) return Poly::variable(space_, *v);
    return Poly::constant(space_, std::get<Rational>(c));
}

Poly Functional::evaluate(const std::vector<Rational>& x) const {
    if (x.size() != coords_.size()) throw std::invalid_argument("vector length does not match functional");
    Poly out(space_);
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!is_zero(x[k])) out += coordinate_poly(k) * x[k];
    return out;
}

// ---------------------------------------------------------------------------
// SkewMatrix and M(lambda)

SkewMatrix::SkewMatrix(Matrix<RatFunc> entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        throw std::invalid_argument("skew matrix must be square and nonempty");
    for (std::size_t i = 0; i < entries_.rows(); ++i) {
        if (!entries_(i, i).is_zero()) throw std::invalid_argument("skew matrix has a nonzero diagonal entry");
        for (std::size_t j = i + 1; j < entries_.cols(); ++j)
            if (!(entries_(i, j) == -entries_(j, i))) throw std::invalid_argument("matrix is not skew-symmetric");
    }
}

std::vector<RatFunc> SkewMatrix::apply(const std::vector<RatFunc>& v) const {
    return multiply(entries_, v, RatFunc::zero(space()));
}

SkewMatrix build_M(const LieAlgebra& algebra, const Functional& lambda) {
    if (lambda.space() != algebra.space()) throw std::invalid_argument("functional belongs to another algebra");
    const std::size_t n = algebra.dimension();
    Matrix<RatFunc> m(n, n, RatFunc::zero(algebra.space()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Poly value(algebra.space());
            for (const auto& e : algebra.bracket_of_basis(i, j)) value += lambda.coordinate_poly(e.k) * e.c;
            m(i, j) = RatFunc(std::move(value));
        }
    }
    return SkewMatrix(std::move(m));
}

Matrix<Poly> generator_block(const LieAlgebra& algebra, const Functional& lambda) {
    const auto m = static_cast<std::size_t>(algebra.generator_count());
    const std::size_t offset = algebra.derived_dim();
    const auto full = build_M(algebra, lambda);
    Matrix<Poly> block(m, m, Poly(algebra.space()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) block(i, j) = full(offset + i, offset + j).num();
    return block;
}

RatFunc pfaffian(const SkewMatrix& s) {
    if (s.dim() % 2 != 0) throw std::invalid_argument("pfaffian needs an even-dimensional matrix");
    return pfaffian_expand(s.entries(), RatFunc::constant(s.space(), Rational(1)));
}

// ---------------------------------------------------------------------------
// Nullspace

std::vector<std::vector<RatFunc>> nullspace(const SkewMatrix& s, const Deadline* deadline) {
    const std::size_t n = s.dim();
    const auto& space = s.space();
    // One common denominator keeps the cleared matrix skew.
    Poly common = Poly::constant(space, Rational(1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!s(i, j).is_polynomial()) common = poly_lcm(common, s(i, j).den());
    Matrix<Poly> a(n, n, Poly(space));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& e = s(i, j);
            if (e.is_zero()) continue;
            a(i, j) = e.num() * exact_quotient(common, e.den());
            a(j, i) = -a(i, j);
        }
    }

    const Poly one = Poly::constant(space, Rational(1));
    const auto form = skew_fraction_free(a, one, deadline);
    const auto raw = skew_kernel(a, form, one, deadline);

    std::vector<std::vector<RatFunc>> basis;
    basis.reserve(raw.size());
    for (const auto& v : raw) {
        check_deadline(deadline);
        std::size_t last = v.size();
        while (last > 0 && v[last - 1].is_zero()) --last;
        const Poly& scale = v[last - 1];
        std::vector<RatFunc> out(n, RatFunc::zero(space));
        for (std::size_t k = 0; k < n; ++k) {
            if (v[k].is_zero()) continue;
            out[k] = k + 1 == last ? RatFunc::constant(space, Rational(1)) : RatFunc::reduce(v[k], scale);
        }
        basis.push_back(std::move(out));
    }
    return basis;
}

StabilizerBasis stabilizer(const LieAlgebra& algebra, const Functional& lambda, const Deadline* deadline) {
    const auto kernel = nullspace(build_M(algebra, lambda), deadline);
    const std::size_t d = algebra.derived_dim();
    StabilizerBasis out;
    for (const auto& v : kernel) {
        std::size_t support = 0, where = 0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_zero()) {
                ++support;
                where = k;
            }
        }
        if (support == 1 && where < d) {
            out.center_part.push_back(where);
        } else {
            for (std::size_t k = 0; k < d; ++k)
                if (!v[k].is_zero()) throw std::logic_error("stabilizer vector with a center component");
            out.extra_vectors.push_back(v);
        }
    }
    return out;
}

std::string stabilizer_json(const StabilizerBasis& basis) {
    nlohmann::ordered_json j;
    j["center_dim"] = basis.center_part.size();
    auto extra = nlohmann::ordered_json::array();
    for (const auto& v : basis.extra_vectors) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& e : v) row.push_back(e.to_string());
        extra.push_back(std::move(row));
    }
    j["extra"] = std::move(extra);
    return j.dump();
}

// ---------------------------------------------------------------------------
// Specialization and genericity

namespace {

std::vector<std::optional<Rational>> substitution_values(const SpacePtr& space, const Assignment& assignment) {
    std::vector<std::optional<Rational>> values(space->size());
    for (const auto& [var, value] : assignment) values[space->index_of(var)] = value;
    return values;
}

RatFunc specialize_with(const RatFunc& expr, const std::vector<std::optional<Rational>>& values) {
    if (expr.is_constant()) return expr;
    Poly den = expr.den().substitute(values);
    if (den.is_zero()) throw DegenerateError(expr.den());
    return RatFunc::reduce(expr.num().substitute(values), std::move(den));
}

}  // namespace

RatFunc specialize(const RatFunc& expr, const Assignment& assignment) {
    return specialize_with(expr, substitution_values(expr.space(), assignment));
}

StabilizerBasis specialize(const StabilizerBasis& basis, const Assignment& assignment) {
    StabilizerBasis out;
    out.center_part = basis.center_part;
    for (const auto& v : basis.extra_vectors) {
        if (v.empty()) continue;
        const auto values = substitution_values(v.front().space(), assignment);
        std::vector<RatFunc> w;
        w.reserve(v.size());
        for (const auto& e : v) w.push_back(specialize_with(e, values));
        out.extra_vectors.push_back(std::move(w));
    }
    return out;
}

Assignment assignment_of(const LieAlgebra& algebra, const Functional& numeric) {
    const auto values = numeric.numeric_values();
    Assignment a;
    for (std::size_t k = 0; k < values.size(); ++k) a.emplace(algebra.space()->variable(k), values[k]);
    return a;
}

Poly omega_polynomial(const LieAlgebra& algebra, const Functional& lambda) {
    auto block = generator_block(algebra, lambda);
    const auto m = static_cast<std::size_t>(algebra.generator_count());
    const Poly one = Poly::constant(algebra.space(), Rational(1));
    if (m % 2 == 0) return pfaffian_expand(block, one);
    return pfaffian_expand(block.minor_without(m - 1, m - 1), one);
}

bool in_omega(const LieAlgebra& algebra, const Functional& lambda) {
    if (!lambda.is_numeric()) throw std::invalid_argument("in_omega needs a numeric functional");
    return !omega_polynomial(algebra, lambda).is_zero();
}

bool in_omega1(const LieAlgebra& algebra, const Functional& lambda) {
    const auto values = lambda.numeric_values();
    const int m = algebra.generator_count();
    if (m % 2 == 0) return true;
    const auto& index = algebra.index_map();
    for (int j = 1; j < m; ++j)
        if (is_zero(values[static_cast<std::size_t>(index.center_index(j, m) - 1)])) return false;
    return true;
}

}  // namespace nilrep
