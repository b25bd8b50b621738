#include "nilrep/linalg.hpp"

namespace nilrep {

std::size_t rank(const Matrix<Rational>& a) { return fraction_free_rref(a, Rational(1)).rank(); }

std::vector<std::vector<Rational>> row_space_basis(const Matrix<Rational>& a) {
    const auto form = fraction_free_rref(a, Rational(1));
    std::vector<std::vector<Rational>> basis;
    for (std::size_t i = 0; i < form.rank(); ++i) {
        std::vector<Rational> row(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row[j] = form.reduced(i, j) / form.pivot;
        basis.push_back(std::move(row));
    }
    return basis;
}

std::vector<std::vector<Rational>> rational_nullspace(const Matrix<Rational>& a) {
    auto basis = kernel_from_form(fraction_free_rref(a, Rational(1)), Rational(0));
    for (auto& v : basis) {
        std::size_t last = v.size();
        while (last > 0 && is_zero(v[last - 1])) --last;
        const Rational scale = 1 / v[last - 1];
        for (auto& x : v) x *= scale;
    }
    return basis;
}

std::vector<Rational> solve_exact(const Matrix<Rational>& a, const std::vector<Rational>& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_exact needs a square system");
    Matrix<Rational> aug(n, n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(aug(p, c))) ++p;
        if (p == n) throw std::domain_error("singular system");
        aug.swap_rows(p, c);
        const Rational inv = 1 / aug(c, c);
        for (std::size_t j = c; j <= n; ++j) aug(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(aug(i, c))) continue;
            const Rational f = aug(i, c);
            for (std::size_t j = c; j <= n; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product size mismatch");
    Rational s(0);
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace nilrep
