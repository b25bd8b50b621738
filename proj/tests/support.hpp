#ifndef NILREP_TESTS_SUPPORT_HPP
#define NILREP_TESTS_SUPPORT_HPP

// Test-local helpers: seeded randomness and independent oracles that do not
// call into the library's elimination code.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "nilrep/coadjoint.hpp"
#include "nilrep/matrix.hpp"
#include "nilrep/poly.hpp"
#include "nilrep/rational.hpp"

namespace testing {

using nilrep::Matrix;
using nilrep::Poly;
using nilrep::Rational;

inline std::uint64_t seed() {
    if (const char* s = std::getenv("NILREP_SEED"); s && *s) return std::strtoull(s, nullptr, 10);
    return 20240531;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(seed());
    return engine;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational(int span = 9, int max_den = 5) {
    Rational q(uniform_int(-span, span), uniform_int(1, max_den));
    q.canonicalize();
    return q;
}

inline Rational random_nonzero(int span = 9, int max_den = 5) {
    for (;;) {
        Rational q = random_rational(span, max_den);
        if (sgn(q) != 0) return q;
    }
}

inline Poly random_poly(const nilrep::SpacePtr& space, int terms, unsigned max_degree) {
    Poly p(space);
    for (int t = 0; t < terms; ++t) {
        Poly mono = Poly::constant(space, random_nonzero());
        const unsigned deg = static_cast<unsigned>(uniform_int(0, static_cast<int>(max_degree)));
        for (unsigned d = 0; d < deg; ++d)
            mono *= Poly::variable_at(space, static_cast<std::size_t>(uniform_int(0, static_cast<int>(space->size()) - 1)));
        p += mono;
    }
    return p;
}

inline Matrix<Rational> random_skew(std::size_t dim) {
    Matrix<Rational> a(dim, dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            a(i, j) = random_rational();
            a(j, i) = -a(i, j);
        }
    return a;
}

/// Determinant by textbook Gaussian elimination over Q with field division.
inline Rational gauss_det(Matrix<Rational> a) {
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            a.swap_rows(p, c);
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

/// Reduced row echelon form over Q with field division; returns the rank and
/// leaves `a` reduced.
inline std::size_t gauss_rref(Matrix<Rational>& a, std::vector<std::size_t>* pivots = nullptr) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

inline std::size_t gauss_rank(Matrix<Rational> a) { return gauss_rref(a); }

/// Kernel basis over Q by plain Gauss-Jordan, each vector scaled so its last nonzero entry is 1.
inline std::vector<std::vector<Rational>> gauss_kernel(Matrix<Rational> a) {
    std::vector<std::size_t> pivots;
    gauss_rref(a, &pivots);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> out;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(a.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

/// Rank of a list of row vectors.
inline std::size_t span_rank(const std::vector<std::vector<Rational>>& rows, std::size_t len) {
    if (rows.empty()) return 0;
    Matrix<Rational> a(rows.size(), len, Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < len; ++j) a(i, j) = rows[i][j];
    return gauss_rank(a);
}

/// Same Q-subspace: equal ranks and the union has no larger rank.
inline bool same_span(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b,
                      std::size_t len) {
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    const auto ra = span_rank(a, len);
    return ra == span_rank(b, len) && ra == span_rank(both, len);
}

/// M(lambda) of f_{m,2} at a numeric point straight from [Z_i, Z_j] = Z_ij,
/// independent of the library's structure table.
inline Matrix<Rational> direct_M(int m, const std::vector<Rational>& lambda) {
    const int d = m * (m - 1) / 2;
    const int n = d + m;
    auto center = [m](int i, int j) {  // 0-based position of Z_ij, 1 <= i < j <= m
        int pos = 0;
        for (int a = 1; a < i; ++a) pos += m - a;
        return pos + (j - i - 1);
    };
    Matrix<Rational> a(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Rational(0));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const auto r = static_cast<std::size_t>(d + i - 1), c = static_cast<std::size_t>(d + j - 1);
            a(r, c) = lambda[static_cast<std::size_t>(center(i, j))];
            a(c, r) = -a(r, c);
        }
    return a;
}

/// Random numeric functional with nonzero center coordinates.
inline std::vector<Rational> random_functional(int m) {
    const std::size_t n = static_cast<std::size_t>(m * (m - 1) / 2 + m);
    std::vector<Rational> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = k < static_cast<std::size_t>(m * (m - 1) / 2) ? random_nonzero() : random_rational();
    return v;
}

inline std::vector<Rational> constants_of(const std::vector<nilrep::RatFunc>& v) {
    std::vector<Rational> out;
    for (const auto& e : v) out.push_back(e.constant_value());
    return out;
}

}  // namespace testing

#endif
