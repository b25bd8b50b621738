#ifndef NILREP_VARIABLES_HPP
#define NILREP_VARIABLES_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilrep {

/// A dual coordinate of f_{m,2}: either l{i}{j} = lambda(Z_ij) with i < j, or l{i} = lambda(Z_i).
class Variable {
public:
    enum class Kind { Center, Generator };

    static Variable center(int i, int j);
    static Variable generator(int i);

    Kind kind() const { return kind_; }
    int first() const { return i_; }
    /// Second index of a center coordinate; 0 for generators.
    int second() const { return j_; }

    std::string name() const;

    friend bool operator==(const Variable&, const Variable&) = default;
    friend auto operator<=>(const Variable&, const Variable&) = default;

private:
    Variable(Kind kind, int i, int j) : kind_(kind), i_(i), j_(j) {}

    Kind kind_;
    int i_;
    int j_;
};

/// Ordered set of polynomial variables for a given generator count m.
///
/// Ordering matches the relabeled Jordan-Hoelder basis: all center coordinates
/// (1,2), (1,3), ..., (m-1,m) first, then generators 1..m. Variable index k is
/// therefore the dual coordinate of basis vector X_{k+1}. Spaces are interned,
/// so two polynomials share a space iff their space pointers are equal.
class VarSpace {
public:
    static std::shared_ptr<const VarSpace> for_generators(int m);

    int generator_count() const { return m_; }
    std::size_t size() const { return vars_.size(); }
    std::size_t center_count() const { return static_cast<std::size_t>(m_ * (m_ - 1) / 2); }

    const Variable& variable(std::size_t index) const { return vars_.at(index); }
    std::size_t index_of(const Variable& v) const;
    std::optional<std::size_t> find(std::string_view name) const;

    explicit VarSpace(int m);

private:
    int m_;
    std::vector<Variable> vars_;
    std::vector<std::string> names_;
};

using SpacePtr = std::shared_ptr<const VarSpace>;

}  // namespace nilrep

#endif
