#include "nilrep/variables.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace nilrep {

Variable Variable::center(int i, int j) {
    if (i < 1 || j <= i) throw std::invalid_argument("center coordinate needs 1 <= i < j");
    return {Kind::Center, i, j};
}

Variable Variable::generator(int i) {
    if (i < 1) throw std::invalid_argument("generator coordinate needs i >= 1");
    return {Kind::Generator, i, 0};
}

std::string Variable::name() const {
    if (kind_ == Kind::Center) return "l" + std::to_string(i_) + std::to_string(j_);
    return "l" + std::to_string(i_);
}

VarSpace::VarSpace(int m) : m_(m) {
    if (m < 0) throw std::invalid_argument("negative generator count");
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) vars_.push_back(Variable::center(i, j));
    for (int i = 1; i <= m; ++i) vars_.push_back(Variable::generator(i));
    names_.reserve(vars_.size());
    for (const auto& v : vars_) names_.push_back(v.name());
}

std::shared_ptr<const VarSpace> VarSpace::for_generators(int m) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const VarSpace>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[m];
    if (!slot) slot = std::make_shared<const VarSpace>(m);
    return slot;
}

std::size_t VarSpace::index_of(const Variable& v) const {
    if (v.kind() == Variable::Kind::Center) {
        const int i = v.first(), j = v.second();
        if (j > m_) throw std::invalid_argument("variable " + v.name() + " outside space");
        // Pairs (a,b) with a < i come first: sum_{a<i} (m - a).
        const int before = (i - 1) * m_ - (i - 1) * i / 2;
        return static_cast<std::size_t>(before + (j - i - 1));
    }
    if (v.first() > m_) throw std::invalid_argument("variable " + v.name() + " outside space");
    return center_count() + static_cast<std::size_t>(v.first() - 1);
}

std::optional<std::size_t> VarSpace::find(std::string_view name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return k;
    return std::nullopt;
}

}  // namespace nilrep
