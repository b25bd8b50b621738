#ifndef NILREP_LIE_ALGEBRA_HPP
#define NILREP_LIE_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nilrep/rational.hpp"
#include "nilrep/ratfunc.hpp"
#include "nilrep/variables.hpp"

namespace nilrep {

/// Positions of Z_ij and Z_i in the relabeled basis (1-based, matching X_1..X_n).
class BasisIndexMap {
public:
    explicit BasisIndexMap(int m) : m_(m) {}

    int generator_count() const { return m_; }
    int derived_dim() const { return m_ * (m_ - 1) / 2; }
    int dimension() const { return derived_dim() + m_; }

    /// Z_ij with 1 <= i < j <= m.
    int center_index(int i, int j) const;
    /// Z_i with 1 <= i <= m.
    int generator_index(int i) const;

private:
    int m_;
};

/// Nonzero structure constant [X_i, X_j] = c X_k, 0-based indices.
struct StructureEntry {
    std::size_t k;
    Rational c;
};

/// Free step-two nilpotent Lie algebra f_{m,2} in the relabeled Jordan-Hoelder basis:
/// X_1..X_{m(m-1)/2} are Z_12, Z_13, ..., Z_{m-1,m}; the remaining m vectors are Z_1..Z_m.
class LieAlgebra {
public:
    /// Throws std::invalid_argument for m < 2.
    static LieAlgebra free_step_two(int m);

    int generator_count() const { return index_.generator_count(); }
    std::size_t dimension() const { return static_cast<std::size_t>(index_.dimension()); }
    std::size_t derived_dim() const { return static_cast<std::size_t>(index_.derived_dim()); }
    const BasisIndexMap& index_map() const { return index_; }
    const SpacePtr& space() const { return space_; }

    /// Sparse row of [X_i, X_j] (0-based).
    const std::vector<StructureEntry>& bracket_of_basis(std::size_t i, std::size_t j) const;
    Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

    /// Basis vector name, e.g. "Z12" or "Z3".
    std::string basis_name(std::size_t index) const;

private:
    LieAlgebra(int m);

    BasisIndexMap index_;
    SpacePtr space_;
    std::vector<std::vector<StructureEntry>> table_;  // n*n
};

LieAlgebra construct_free2(int m);

/// Bilinear bracket of coefficient vectors; throws std::invalid_argument on length mismatch.
std::vector<Rational> bracket(const LieAlgebra& algebra, std::span<const Rational> v, std::span<const Rational> w);
std::vector<RatFunc> bracket(const LieAlgebra& algebra, std::span<const RatFunc> v, std::span<const RatFunc> w);

struct CenterAndDerived {
    std::vector<std::size_t> center;   // 0-based basis indices
    std::vector<std::size_t> derived;  // 0-based basis indices
};

/// Computes the center as the common kernel of all ad operators and the derived
/// algebra as the span of all brackets; both must be coordinate subspaces of
/// the basis (std::logic_error otherwise).
CenterAndDerived center_and_derived(const LieAlgebra& algebra);

/// {"m","n","derived_dim","brackets":[{"i","j","k","c"}]} with 1-based i < j.
std::string lie_algebra_json(const LieAlgebra& algebra);

}  // namespace nilrep

#endif
