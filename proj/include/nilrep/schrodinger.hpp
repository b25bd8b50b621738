#ifndef NILREP_SCHRODINGER_HPP
#define NILREP_SCHRODINGER_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nilrep/rational.hpp"

namespace nilrep {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// N samples t_k = k * L / N of a function with period L.
class Grid {
public:
    /// Throws std::invalid_argument unless N >= 2 and L > 0.
    Grid(int n, Rational period);

    int size() const { return n_; }
    const Rational& period() const { return period_; }
    Rational step() const { return period_ / n_; }
    Rational point(int k) const { return step() * k; }

private:
    int n_;
    Rational period_;
};

/// Schrodinger representation of the Heisenberg group, lambda != 0.
struct Heisenberg {
    Rational lambda;
};

/// Representation of the free step-two group on three generators, parameters
/// (l1, l2, l3, l4) with l3 != 0.
struct Free32 {
    Rational l1, l2, l3, l4;
};

using RepParams = std::variant<Heisenberg, Free32>;

/// Throws std::invalid_argument for lambda = 0 (Heisenberg) or l3 = 0 (Free32).
void validate(const RepParams& params);

enum class Element { X1, X2, X3, Z1, Z2, Z3 };

std::string to_string(Element e);

/// exp(x * element).
struct Factor {
    Element element;
    Rational x;
};

/// Product of factors, leftmost outermost: pi(w) = pi(w[0]) pi(w[1]) ...
using GroupWord = std::vector<Factor>;

/// A translation does not land on the grid.
class GridError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// pi(w) F. Every factor is an index rotation times a unimodular diagonal with
/// phases reduced exactly mod 1 before evaluation. Throws GridError naming the
/// offending factor, std::invalid_argument for an element the kind lacks.
CVector apply_rep(const RepParams& params, const Grid& grid, const GroupWord& word, const CVector& f);

/// pi(w)^{-1} F, inverting each factor as an operator.
CVector apply_rep_inverse(const RepParams& params, const Grid& grid, const GroupWord& word, const CVector& f);

/// pi(a) pi(b) pi(a)^{-1} pi(b)^{-1} F is not a multiple of F.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The scalar c with pi(a) pi(b) pi(a)^{-1} pi(b)^{-1} F = c F. Throws
/// ConsistencyError when the relative deviation from c F exceeds 1e-10 and
/// std::invalid_argument when F = 0.
Complex commutator_phase(const RepParams& params, const Grid& grid, const GroupWord& a, const GroupWord& b,
                         const CVector& f);

/// e^{2 pi i theta}, theta reduced mod 1 exactly first.
Complex unit_phase(const Rational& theta);

struct IntRange {
    int first = 0;
    int last = 0;  // inclusive
};

/// pi(exp j X2) pi(exp k X3) F for j in js, k in ks, row-major in j.
/// Throws GridError unless the step divides 1.
std::vector<CVector> gabor_system(const Heisenberg& params, const Grid& grid, const CVector& f, IntRange js,
                                  IntRange ks);

/// Smallest and largest eigenvalue of the frame operator sum_f <., f> f.
std::pair<double, double> frame_bounds(const std::vector<CVector>& system);

/// G(i, j) = <f_j, f_i>, one row per line, each entry written as "re,im".
void write_gram_csv(const std::vector<CVector>& system, std::ostream& out);

double norm2(const CVector& f);

// ---------------------------------------------------------------------------
// Desk-scale checks

struct RepCheck {
    std::string name;
    std::string config;
    double max_err = 0;
    bool pass = false;
};

/// Unitarity, commutator phases, one-parameter homomorphism, centrality and
/// Gabor frame checks on N = 64, L = 8 with random vectors drawn from `seed`.
std::vector<RepCheck> standard_rep_checks(std::uint64_t seed);

/// `check=<name> config=<...> max_err=<float> pass=<bool>`
std::string format_check(const RepCheck& check);

}  // namespace nilrep

#endif
