#include "nilrep/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "nilrep/linalg.hpp"

namespace nilrep {

int BasisIndexMap::center_index(int i, int j) const {
    if (i < 1 || j <= i || j > m_) throw std::invalid_argument("center index needs 1 <= i < j <= m");
    return (i - 1) * m_ - (i - 1) * i / 2 + (j - i);
}

int BasisIndexMap::generator_index(int i) const {
    if (i < 1 || i > m_) throw std::invalid_argument("generator index needs 1 <= i <= m");
    return derived_dim() + i;
}

LieAlgebra::LieAlgebra(int m) : index_(m), space_(VarSpace::for_generators(m)) {
    const std::size_t n = dimension();
    table_.assign(n * n, {});
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            const auto gi = static_cast<std::size_t>(index_.generator_index(i) - 1);
            const auto gj = static_cast<std::size_t>(index_.generator_index(j) - 1);
            const auto k = static_cast<std::size_t>(index_.center_index(i, j) - 1);
            table_[gi * n + gj].push_back({k, Rational(1)});
            table_[gj * n + gi].push_back({k, Rational(-1)});
        }
    }
}

LieAlgebra LieAlgebra::free_step_two(int m) {
    if (m < 2) throw std::invalid_argument("f_{m,2} needs m >= 2, got " + std::to_string(m));
    return LieAlgebra(m);
}

LieAlgebra construct_free2(int m) { return LieAlgebra::free_step_two(m); }

const std::vector<StructureEntry>& LieAlgebra::bracket_of_basis(std::size_t i, std::size_t j) const {
    const std::size_t n = dimension();
    if (i >= n || j >= n) throw std::out_of_range("basis index out of range");
    return table_[i * n + j];
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& e : bracket_of_basis(i, j))
        if (e.k == k) return e.c;
    return Rational(0);
}

std::string LieAlgebra::basis_name(std::size_t index) const {
    const auto& v = space_->variable(index);
    if (v.kind() == Variable::Kind::Center) return "Z" + std::to_string(v.first()) + std::to_string(v.second());
    return "Z" + std::to_string(v.first());
}

namespace {

template <class T>
std::vector<T> bracket_impl(const LieAlgebra& algebra, std::span<const T> v, std::span<const T> w, const T& zero) {
    const std::size_t n = algebra.dimension();
    if (v.size() != n || w.size() != n)
        throw std::invalid_argument("bracket expects vectors of length " + std::to_string(n));
    std::vector<T> out(n, zero);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(v[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(w[j])) continue;
            const auto& entries = algebra.bracket_of_basis(i, j);
            if (entries.empty()) continue;
            const T vw = v[i] * w[j];
            for (const auto& e : entries) out[e.k] += vw * T(e.c);
        }
    }
    return out;
}

}  // namespace

std::vector<Rational> bracket(const LieAlgebra& algebra, std::span<const Rational> v, std::span<const Rational> w) {
    return bracket_impl<Rational>(algebra, v, w, Rational(0));
}

std::vector<RatFunc> bracket(const LieAlgebra& algebra, std::span<const RatFunc> v, std::span<const RatFunc> w) {
    // RatFunc(Rational) is not implicit; scale through a constant in the algebra's space.
    const std::size_t n = algebra.dimension();
    if (v.size() != n || w.size() != n)
        throw std::invalid_argument("bracket expects vectors of length " + std::to_string(n));
    const auto& space = algebra.space();
    std::vector<RatFunc> out(n, RatFunc::zero(space));
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (w[j].is_zero()) continue;
            const auto& entries = algebra.bracket_of_basis(i, j);
            if (entries.empty()) continue;
            const RatFunc vw = v[i] * w[j];
            for (const auto& e : entries) out[e.k] += vw * RatFunc::constant(space, e.c);
        }
    }
    return out;
}

namespace {

/// Indices k with e_k in the span, provided the span is a coordinate subspace.
std::vector<std::size_t> coordinate_support(const std::vector<std::vector<Rational>>& basis, std::size_t n,
                                            const char* what) {
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < n; ++k) {
        bool used = false;
        for (const auto& v : basis) used = used || !is_zero(v[k]);
        if (used) support.push_back(k);
    }
    if (support.size() != basis.size())
        throw std::logic_error(std::string(what) + " is not spanned by basis vectors");
    return support;
}

}  // namespace

CenterAndDerived center_and_derived(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dimension();
    // Center: x with sum_i x_i c[i][j][k] = 0 for all (j, k).
    Matrix<Rational> ad(n * n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& e : algebra.bracket_of_basis(i, j)) ad(j * n + e.k, i) = e.c;
    const auto center_basis = rational_nullspace(ad);

    // Derived algebra: span of all bracket rows.
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& entries = algebra.bracket_of_basis(i, j);
            if (entries.empty()) continue;
            std::vector<Rational> row(n, Rational(0));
            for (const auto& e : entries) row[e.k] = e.c;
            rows.push_back(std::move(row));
        }
    }
    Matrix<Rational> image(rows.size(), n, Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) image(r, c) = rows[r][c];
    const auto derived_basis = row_space_basis(image);

    return {coordinate_support(center_basis, n, "center"), coordinate_support(derived_basis, n, "derived algebra")};
}

std::string lie_algebra_json(const LieAlgebra& algebra) {
    nlohmann::ordered_json j;
    j["m"] = algebra.generator_count();
    j["n"] = algebra.dimension();
    j["derived_dim"] = algebra.derived_dim();
    auto brackets = nlohmann::ordered_json::array();
    const std::size_t n = algebra.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j2 = i + 1; j2 < n; ++j2) {
            for (const auto& e : algebra.bracket_of_basis(i, j2)) {
                nlohmann::ordered_json b;
                b["i"] = i + 1;
                b["j"] = j2 + 1;
                b["k"] = e.k + 1;
                b["c"] = to_string(e.c);
                brackets.push_back(std::move(b));
            }
        }
    }
    j["brackets"] = std::move(brackets);
    return j.dump();
}

}  // namespace nilrep
