#include "nilrep/schrodinger.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

namespace nilrep {

Grid::Grid(int n, Rational period) : n_(n), period_(std::move(period)) {
    if (n_ < 2) throw std::invalid_argument("grid needs at least 2 samples");
    if (sgn(period_) <= 0) throw std::invalid_argument("grid period must be positive");
}

void validate(const RepParams& params) {
    if (const auto* h = std::get_if<Heisenberg>(&params)) {
        if (is_zero(h->lambda)) throw std::invalid_argument("Heisenberg parameter lambda must be nonzero");
    } else if (is_zero(std::get<Free32>(params).l3)) {
        throw std::invalid_argument("Free32 parameter l3 must be nonzero");
    }
}

std::string to_string(Element e) {
    switch (e) {
        case Element::X1: return "X1";
        case Element::X2: return "X2";
        case Element::X3: return "X3";
        case Element::Z1: return "Z1";
        case Element::Z2: return "Z2";
        case Element::Z3: return "Z3";
    }
    return "?";
}

Complex unit_phase(const Rational& theta) {
    mpz_class whole;
    mpz_fdiv_q(whole.get_mpz_t(), theta.get_num_mpz_t(), theta.get_den_mpz_t());
    const Rational frac = theta - whole;
    return std::polar(1.0, 2 * std::numbers::pi * frac.get_d());
}

namespace {

// (U F)(t) = e^{2 pi i (a0 + a1 t)} F(t - shift)
struct Op {
    Rational a0{0}, a1{0}, shift{0};
};

std::string describe(std::size_t position, const Factor& f) {
    return "factor " + std::to_string(position + 1) + " (" + to_string(f.element) + ", " + to_string(f.x) + ")";
}

Op op_for(const RepParams& params, std::size_t position, const Factor& f) {
    Op op;
    const Rational& x = f.x;
    if (const auto* h = std::get_if<Heisenberg>(&params)) {
        switch (f.element) {
            case Element::X1: op.a0 = h->lambda * x; break;
            case Element::X2: op.a1 = -h->lambda * x; break;
            case Element::X3: op.shift = x; break;
            default: throw std::invalid_argument(describe(position, f) + ": the Heisenberg group has no such element");
        }
        return op;
    }
    const auto& p = std::get<Free32>(params);
    switch (f.element) {
        case Element::X3: op.a1 = -x * p.l3; break;
        case Element::X2: op.shift = x; break;
        case Element::X1:
            op.a0 = x * p.l4 - x * x * p.l2 * p.l1 / p.l3;
            op.a1 = x * p.l1;
            op.shift = p.l2 / p.l3 * x;
            break;
        case Element::Z1: op.a0 = x * p.l1; break;
        case Element::Z2: op.a0 = x * p.l2; break;
        case Element::Z3: op.a0 = x * p.l3; break;
    }
    return op;
}

long index_shift(const Grid& grid, const Op& op, std::size_t position, const Factor& f) {
    const Rational q = op.shift / grid.step();
    if (q.get_den() != 1)
        throw GridError(describe(position, f) + ": translation " + to_string(op.shift) +
                        " is not a multiple of the grid step " + to_string(grid.step()));
    const long n = grid.size();
    return ((mpz_class(q.get_num() % n)).get_si() + n) % n;
}

std::vector<Complex> phases(const Grid& grid, const Op& op) {
    std::vector<Complex> out(static_cast<std::size_t>(grid.size()));
    const Rational step = grid.step();
    for (int k = 0; k < grid.size(); ++k) out[static_cast<std::size_t>(k)] = unit_phase(op.a0 + op.a1 * step * k);
    return out;
}

void check_length(const Grid& grid, const CVector& f) {
    if (f.size() != static_cast<std::size_t>(grid.size()))
        throw std::invalid_argument("vector length " + std::to_string(f.size()) + " does not match grid size " +
                                    std::to_string(grid.size()));
}

CVector apply_factor(const RepParams& params, const Grid& grid, std::size_t position, const Factor& fac,
                     const CVector& f, bool inverse) {
    const Op op = op_for(params, position, fac);
    const long s = index_shift(grid, op, position, fac);
    const auto ph = phases(grid, op);
    const long n = grid.size();
    CVector out(f.size());
    for (long k = 0; k < n; ++k) {
        if (inverse) {
            const long j = (k + s) % n;
            out[static_cast<std::size_t>(k)] = std::conj(ph[static_cast<std::size_t>(j)]) * f[static_cast<std::size_t>(j)];
        } else {
            const long j = (k - s + n) % n;
            out[static_cast<std::size_t>(k)] = ph[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

Complex inner(const CVector& a, const CVector& b) {
    Complex s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

}  // namespace

CVector apply_rep(const RepParams& params, const Grid& grid, const GroupWord& word, const CVector& f) {
    validate(params);
    check_length(grid, f);
    CVector out = f;
    for (std::size_t k = word.size(); k-- > 0;) out = apply_factor(params, grid, k, word[k], out, false);
    return out;
}

CVector apply_rep_inverse(const RepParams& params, const Grid& grid, const GroupWord& word, const CVector& f) {
    validate(params);
    check_length(grid, f);
    CVector out = f;
    for (std::size_t k = 0; k < word.size(); ++k) out = apply_factor(params, grid, k, word[k], out, true);
    return out;
}

double norm2(const CVector& f) {
    double s = 0;
    for (const auto& z : f) s += std::norm(z);
    return std::sqrt(s);
}

Complex commutator_phase(const RepParams& params, const Grid& grid, const GroupWord& a, const GroupWord& b,
                         const CVector& f) {
    const double nf = norm2(f);
    if (nf == 0) throw std::invalid_argument("commutator phase needs a nonzero vector");
    CVector g = apply_rep_inverse(params, grid, b, f);
    g = apply_rep_inverse(params, grid, a, g);
    g = apply_rep(params, grid, b, g);
    g = apply_rep(params, grid, a, g);
    const Complex c = inner(f, g) / (nf * nf);
    double dev = 0;
    for (std::size_t k = 0; k < f.size(); ++k) dev += std::norm(g[k] - c * f[k]);
    dev = std::sqrt(dev) / nf;
    if (dev > 1e-10) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", dev);
        throw ConsistencyError(std::string("commutator is not a scalar on this grid (relative deviation ") + buf + ")");
    }
    return c;
}

std::vector<CVector> gabor_system(const Heisenberg& params, const Grid& grid, const CVector& f, IntRange js,
                                  IntRange ks) {
    if (Rational(1 / grid.step()).get_den() != 1)
        throw GridError("grid step " + to_string(grid.step()) + " does not divide 1");
    std::vector<CVector> out;
    for (int j = js.first; j <= js.last; ++j)
        for (int k = ks.first; k <= ks.last; ++k)
            out.push_back(apply_rep(params, grid, {{Element::X2, Rational(j)}, {Element::X3, Rational(k)}}, f));
    return out;
}

std::pair<double, double> frame_bounds(const std::vector<CVector>& system) {
    if (system.empty()) throw std::invalid_argument("frame bounds of an empty system");
    const auto n = static_cast<Eigen::Index>(system.front().size());
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& f : system) {
        if (static_cast<Eigen::Index>(f.size()) != n) throw std::invalid_argument("frame vectors differ in length");
        const Eigen::Map<const Eigen::VectorXcd> v(f.data(), n);
        s += v * v.adjoint();
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(s, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.minCoeff(), ev.maxCoeff()};
}

void write_gram_csv(const std::vector<CVector>& system, std::ostream& out) {
    char buf[96];
    for (const auto& fi : system) {
        for (std::size_t j = 0; j < system.size(); ++j) {
            const Complex g = inner(system[j], fi);
            std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", j ? "," : "", g.real(), g.imag());
            out << buf;
        }
        out << "\n";
    }
}

// ---------------------------------------------------------------------------
// Desk-scale checks

namespace {

CVector random_vector(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CVector f(static_cast<std::size_t>(n));
    for (auto& z : f) z = Complex(u(rng), u(rng));
    return f;
}

double rel_diff(const CVector& a, const CVector& b) {
    double d = 0;
    for (std::size_t k = 0; k < a.size(); ++k) d += std::norm(a[k] - b[k]);
    return std::sqrt(d) / norm2(b);
}

CVector scaled(Complex c, CVector v) {
    for (auto& z : v) z *= c;
    return v;
}

struct Tracker {
    RepCheck check;
    double tol;

    Tracker(std::string name, std::string config, double tolerance) : check{std::move(name), std::move(config), 0, true}, tol(tolerance) {}

    void see(double err) {
        check.max_err = std::max(check.max_err, err);
        if (!(err <= tol)) check.pass = false;
    }
    void fail() { check.pass = false; }
};

std::vector<Rational> eighths(int count) {
    std::vector<Rational> out;
    for (int k = 0; k < count; ++k) out.emplace_back(k, 8);
    return out;
}

}  // namespace

std::vector<RepCheck> standard_rep_checks(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Grid grid(64, Rational(8));
    const int n = grid.size();
    const Heisenberg heis{Rational(1)};
    const Heisenberg heis2{Rational(-3, 2)};
    const Free32 free{Rational(1), Rational(2), Rational(4), Rational(1, 3)};
    const std::string heis_cfg = "heisenberg:lambda=1,N=64,L=8";
    const std::string free_cfg = "free32:l=(1,2,4,1/3),N=64,L=8";
    std::vector<RepCheck> out;

    // Unitarity and exact inverses over every element of each kind.
    {
        Tracker unit("unitarity", "heisenberg:lambda=1,-3/2;free32:l=(1,2,4,1/3);N=64,L=8;50_vectors", 1e-12);
        Tracker inv("inverse", unit.check.config, 1e-12);
        std::vector<std::pair<RepParams, GroupWord>> ops;
        for (const auto& h : {heis, heis2})
            for (auto e : {Element::X1, Element::X2, Element::X3})
                for (const auto& x : {Rational(3, 8), Rational(-5, 4), Rational(7, 2)}) ops.push_back({h, {{e, x}}});
        for (auto e : {Element::X1, Element::X2, Element::X3, Element::Z1, Element::Z2, Element::Z3})
            for (const auto& x : {Rational(1, 4), Rational(-3, 4), Rational(5, 2)}) ops.push_back({free, {{e, x}}});
        ops.push_back({free, {{Element::X1, Rational(1, 2)}, {Element::X2, Rational(3, 8)}, {Element::X3, Rational(1, 3)}}});
        for (int trial = 0; trial < 50; ++trial) {
            const CVector f = random_vector(rng, n);
            const double nf = norm2(f);
            for (const auto& [p, w] : ops) {
                const CVector g = apply_rep(p, grid, w, f);
                unit.see(std::abs(norm2(g) - nf) / nf);
                inv.see(rel_diff(apply_rep_inverse(p, grid, w, g), f));
            }
        }
        out.push_back(unit.check);
        out.push_back(inv.check);
    }

    // Heisenberg commutator phases on a 5 x 5 grid of (x2, x3), 10 vectors each.
    {
        Tracker fwd("heisenberg_commutator", heis_cfg + ",a=X2(x2),b=X3(x3),expect=exp(-2pi*i*lambda*x2*x3)", 1e-10);
        Tracker rev("heisenberg_commutator_swapped", heis_cfg + ",a=X3(x3),b=X2(x2),expect=exp(+2pi*i*lambda*x2*x3)",
                    1e-10);
        for (const auto& x2 : eighths(5)) {
            for (const auto& x3 : eighths(5)) {
                const Complex expected = unit_phase(-heis.lambda * x2 * x3);
                for (int trial = 0; trial < 10; ++trial) {
                    const CVector f = random_vector(rng, n);
                    try {
                        fwd.see(std::abs(commutator_phase(heis, grid, {{Element::X2, x2}}, {{Element::X3, x3}}, f) - expected));
                        rev.see(std::abs(commutator_phase(heis, grid, {{Element::X3, x3}}, {{Element::X2, x2}}, f) -
                                         std::conj(expected)));
                    } catch (const ConsistencyError&) {
                        fwd.fail();
                        rev.fail();
                    }
                }
            }
        }
        out.push_back(fwd.check);
        out.push_back(rev.check);
    }

    // Free32 commutators against the phases of the central characters.
    {
        Tracker t("free32_commutator", free_cfg + ",pairs=(X3,X2),(X1,X2),(X1,X3)", 1e-10);
        for (const auto& s : {Rational(1, 4), Rational(1, 2)}) {
            for (const auto& r : {Rational(1, 8), Rational(3, 8)}) {
                const std::vector<std::tuple<Element, Element, Rational>> cases = {
                    {Element::X3, Element::X2, -free.l3 * r * s},
                    {Element::X1, Element::X2, free.l1 * r * s},
                    {Element::X1, Element::X3, free.l2 * r * s},
                };
                for (const auto& [ea, eb, theta] : cases) {
                    for (int trial = 0; trial < 10; ++trial) {
                        const CVector f = random_vector(rng, n);
                        try {
                            t.see(std::abs(commutator_phase(free, grid, {{ea, s}}, {{eb, r}}, f) - unit_phase(theta)));
                        } catch (const ConsistencyError&) {
                            t.fail();
                        }
                    }
                }
            }
        }
        out.push_back(t.check);
    }

    // One-parameter subgroups: pi(sX) pi(uX) = pi((s+u)X), with the X1 factor of
    // Free32 off by exp(2 pi i (l2/l3) l1 s u).
    {
        Tracker t("free32_homomorphism", free_cfg + ",x1_correction=exp(2pi*i*(l2/l3)*l1*s*u)", 1e-10);
        const std::vector<Rational> params = {Rational(1, 4), Rational(1, 2), Rational(-3, 4)};
        for (auto e : {Element::X1, Element::X2, Element::X3, Element::Z1, Element::Z2, Element::Z3}) {
            for (const auto& s : params) {
                for (const auto& u : params) {
                    const CVector f = random_vector(rng, n);
                    const CVector lhs = apply_rep(free, grid, {{e, s}, {e, u}}, f);
                    CVector rhs = apply_rep(free, grid, {{e, s + u}}, f);
                    if (e == Element::X1) rhs = scaled(unit_phase(free.l2 / free.l3 * free.l1 * s * u), rhs);
                    t.see(rel_diff(lhs, rhs));
                }
            }
        }
        out.push_back(t.check);
    }

    // Central elements commute with everything.
    {
        Tracker t("centrality", "heisenberg:X1;free32:Z1,Z2,Z3;N=64,L=8", 1e-12);
        auto probe = [&](const RepParams& p, Element z, Element x, const Rational& xz, const Rational& xx) {
            const CVector f = random_vector(rng, n);
            t.see(rel_diff(apply_rep(p, grid, {{z, xz}, {x, xx}}, f), apply_rep(p, grid, {{x, xx}, {z, xz}}, f)));
        };
        for (auto x : {Element::X2, Element::X3}) probe(heis, Element::X1, x, Rational(2, 7), Rational(5, 8));
        for (auto z : {Element::Z1, Element::Z2, Element::Z3})
            for (auto x : {Element::X1, Element::X2, Element::X3}) probe(free, z, x, Rational(3, 5), Rational(1, 2));
        out.push_back(t.check);
    }

    // Gabor systems of a one-cell indicator with lambda = 1 and N = L: the
    // modulations are trivial on integer points, so every translate appears N
    // times and the frame operator is N times the identity.
    for (int size : {8, 16}) {
        const Grid g(size, Rational(size));
        CVector f(static_cast<std::size_t>(size), Complex(0));
        f[0] = 1;
        const auto system = gabor_system(heis, g, f, {0, size - 1}, {0, size - 1});
        const auto [lo, hi] = frame_bounds(system);
        Tracker t("gabor_frame", "heisenberg:lambda=1,N=L=" + std::to_string(size) + ",indicator,expect_bounds=N", 1e-8);
        t.see(std::max(std::abs(lo - size), std::abs(hi - size)) / size);
        if (!(lo > 0)) t.fail();
        out.push_back(t.check);
    }
    return out;
}

std::string format_check(const RepCheck& check) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", check.max_err);
    return "check=" + check.name + " config=" + check.config + " max_err=" + buf + " pass=" +
           (check.pass ? "true" : "false");
}

}  // namespace nilrep
