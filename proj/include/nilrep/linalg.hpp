#ifndef NILREP_LINALG_HPP
#define NILREP_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nilrep/deadline.hpp"
#include "nilrep/matrix.hpp"
#include "nilrep/poly.hpp"
#include "nilrep/rational.hpp"

namespace nilrep {

inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Poly ring_exact_div(const Poly& a, const Poly& b) { return exact_quotient(a, b); }

/// Result of fraction-free Gauss-Jordan elimination.
///
/// Row i < rank() has its pivot in column pivot_cols[i]; every pivot equals
/// `pivot`, the leading rank-sized minor picked out by the row exchanges, and
/// every pivot column is zero outside its pivot row.
template <class Ring>
struct FractionFreeForm {
    Matrix<Ring> reduced;
    std::vector<std::size_t> pivot_cols;
    Ring pivot;

    std::size_t rank() const { return pivot_cols.size(); }
};

/// Bareiss-style Gauss-Jordan: each update divides exactly by the previous pivot.
/// Pivot choice is the first nonzero entry of the column at or below the current row.
template <class Ring>
FractionFreeForm<Ring> fraction_free_rref(Matrix<Ring> a, const Ring& one, const Deadline* deadline = nullptr) {
    const std::size_t rows = a.rows(), cols = a.cols();
    Ring prev = one;
    bool prev_is_one = true;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        check_deadline(deadline);
        std::size_t p = r;
        while (p < rows && is_zero(a(p, c))) ++p;
        if (p == rows) continue;
        a.swap_rows(p, r);
        const Ring piv = a(r, c);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Ring aic = a(i, c);
            const bool aic_zero = is_zero(aic);
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                Ring& entry = a(i, j);
                const bool cross_zero = aic_zero || is_zero(a(r, j));
                if (is_zero(entry) && cross_zero) continue;
                Ring updated = piv * entry;
                if (!cross_zero) updated -= aic * a(r, j);
                entry = prev_is_one ? std::move(updated) : ring_exact_div(updated, prev);
            }
            a(i, c) = Ring(one) - one;
            check_deadline(deadline);
        }
        prev = piv;
        prev_is_one = false;
        pivots.push_back(c);
        ++r;
    }
    return FractionFreeForm<Ring>{std::move(a), std::move(pivots), std::move(prev)};
}

/// Kernel basis read off a fraction-free form: one vector per non-pivot column f,
/// with entry `pivot` at f and -reduced(i, f) at each pivot column.
template <class Ring>
std::vector<std::vector<Ring>> kernel_from_form(const FractionFreeForm<Ring>& form, const Ring& zero) {
    const std::size_t cols = form.reduced.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : form.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Ring>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Ring> v(cols, zero);
        v[f] = form.pivot;
        for (std::size_t i = 0; i < form.rank(); ++i) v[form.pivot_cols[i]] = -form.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Result of fraction-free elimination of a skew-symmetric matrix with 2x2 pivots.
///
/// `order` lists the pivot indices (p1, q1, p2, q2, ...); the rank is order.size()
/// and `pfaffian` is the Pfaffian of the principal submatrix on `order`, taken in
/// that order.
template <class Ring>
struct SkewForm {
    std::vector<std::size_t> order;
    Ring pfaffian;

    std::size_t rank() const { return order.size(); }
};

/// Symmetric elimination on a skew matrix. After k stages the entry (i, j) of the
/// working matrix is the Pfaffian of the original submatrix on (p1, q1, ..., pk, qk, i, j),
/// so the division by the previous pivot is exact and entries have degree k + 1
/// instead of the 2k + 1 of plain Bareiss minors.
template <class Ring>
SkewForm<Ring> skew_fraction_free(Matrix<Ring> a, const Ring& one, const Deadline* deadline = nullptr) {
    if (a.rows() != a.cols()) throw std::invalid_argument("skew elimination needs a square matrix");
    const std::size_t n = a.rows();
    std::vector<std::size_t> active(n);
    for (std::size_t k = 0; k < n; ++k) active[k] = k;
    std::vector<std::size_t> order;
    Ring prev = one;
    bool prev_is_one = true;
    for (;;) {
        check_deadline(deadline);
        std::size_t pi = active.size(), qi = active.size();
        for (std::size_t x = 0; x < active.size() && pi == active.size(); ++x)
            for (std::size_t y = x + 1; y < active.size(); ++y)
                if (!is_zero(a(active[x], active[y]))) {
                    pi = x;
                    qi = y;
                    break;
                }
        if (pi == active.size()) break;
        const std::size_t p = active[pi], q = active[qi];
        const Ring piv = a(p, q);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(qi));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pi));
        for (std::size_t x = 0; x < active.size(); ++x) {
            const std::size_t i = active[x];
            for (std::size_t y = x + 1; y < active.size(); ++y) {
                const std::size_t j = active[y];
                // Pf of the 4x4 block on (p, q, i, j).
                Ring updated = piv * a(i, j);
                if (!is_zero(a(p, i)) && !is_zero(a(q, j))) updated -= a(p, i) * a(q, j);
                if (!is_zero(a(p, j)) && !is_zero(a(q, i))) updated += a(p, j) * a(q, i);
                if (!prev_is_one && !is_zero(updated)) updated = ring_exact_div(updated, prev);
                a(j, i) = -updated;
                a(i, j) = std::move(updated);
            }
            check_deadline(deadline);
        }
        order.push_back(p);
        order.push_back(q);
        prev = piv;
        prev_is_one = false;
    }
    return SkewForm<Ring>{std::move(order), std::move(prev)};
}

/// Determinant by one-step Bareiss elimination.
template <class Ring>
Ring bareiss_determinant(Matrix<Ring> a, const Ring& one) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Ring prev = one;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && is_zero(a(p, k))) ++p;
        if (p == n) return Ring(one) - one;
        if (p != k) {
            a.swap_rows(p, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Ring updated = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = k == 0 ? std::move(updated) : ring_exact_div(updated, prev);
            }
        }
        prev = a(k, k);
    }
    return negate ? Ring(-prev) : prev;
}

/// Pfaffian by recursive expansion along the first row.
template <class T>
T pfaffian_expand(const Matrix<T>& a, const T& one) {
    if (a.rows() != a.cols()) throw std::invalid_argument("pfaffian of a non-square matrix");
    if (a.rows() % 2 != 0) throw std::invalid_argument("pfaffian of an odd-dimensional matrix");
    const T zero = T(one) - one;
    std::vector<std::size_t> idx(a.rows());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    auto rec = [&](auto&& self, const std::vector<std::size_t>& rows) -> T {
        if (rows.empty()) return one;
        T total = zero;
        const std::size_t first = rows[0];
        for (std::size_t k = 1; k < rows.size(); ++k) {
            const T& entry = a(first, rows[k]);
            if (is_zero(entry)) continue;
            std::vector<std::size_t> rest;
            rest.reserve(rows.size() - 2);
            for (std::size_t q = 1; q < rows.size(); ++q)
                if (q != k) rest.push_back(rows[q]);
            T term = entry * self(self, rest);
            if (k % 2 == 1) total += term;
            else total -= term;
        }
        return total;
    };
    return rec(rec, idx);
}

/// Kernel basis of the skew matrix `a` from its skew form: for each index f outside
/// the pivot set, the bordered submatrix on T = (order..., f) has a one-dimensional
/// kernel with entry (-1)^t Pf(T without t) at position T[t]. The entry at f is form.pfaffian.
template <class Ring>
std::vector<std::vector<Ring>> skew_kernel(const Matrix<Ring>& a, const SkewForm<Ring>& form, const Ring& one,
                                           const Deadline* deadline = nullptr) {
    const std::size_t n = a.rows();
    const Ring zero = Ring(one) - one;
    std::vector<bool> in_order(n, false);
    for (auto k : form.order) in_order[k] = true;
    std::vector<std::vector<Ring>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (in_order[f]) continue;
        check_deadline(deadline);
        std::vector<Ring> v(n, zero);
        v[f] = form.pfaffian;
        const std::size_t s = form.order.size();
        for (std::size_t t = 0; t < s; ++t) {
            std::vector<std::size_t> idx;
            idx.reserve(s);
            for (std::size_t u = 0; u < s; ++u)
                if (u != t) idx.push_back(form.order[u]);
            idx.push_back(f);
            Matrix<Ring> sub(s, s, zero);
            for (std::size_t x = 0; x < s; ++x)
                for (std::size_t y = 0; y < s; ++y) sub(x, y) = a(idx[x], idx[y]);
            Ring pf = pfaffian_expand(sub, one);
            v[form.order[t]] = t % 2 == 0 ? std::move(pf) : Ring(-pf);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rank of a rational matrix.
std::size_t rank(const Matrix<Rational>& a);

/// Basis of the row space in reduced row echelon form (pivot entries 1).
std::vector<std::vector<Rational>> row_space_basis(const Matrix<Rational>& a);

/// Kernel of a rational matrix; each vector is scaled so its last nonzero entry is 1.
std::vector<std::vector<Rational>> rational_nullspace(const Matrix<Rational>& a);

/// Unique solution of a x = b; throws std::domain_error if a is singular.
std::vector<Rational> solve_exact(const Matrix<Rational>& a, const std::vector<Rational>& b);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace nilrep

#endif
