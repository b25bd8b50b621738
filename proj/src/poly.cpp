#include "nilrep/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace nilrep {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::unit(std::size_t nvars, std::size_t var, unsigned power) {
    Monomial m(nvars);
    m.set(var, power);
    return m;
}

void Monomial::set(std::size_t var, unsigned power) {
    if (power > 255) throw std::overflow_error("monomial exponent exceeds 255");
    degree_ = degree_ - exps_[var] + power;
    exps_[var] = static_cast<Exponent>(power);
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t k = 0; k < exps_.size(); ++k)
        if (exps_[k] > other.exps_[k]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out(*this);
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        const unsigned e = unsigned(exps_[k]) + other.exps_[k];
        if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
        out.exps_[k] = static_cast<Exponent>(e);
    }
    out.degree_ = degree_ + other.degree_;
    return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial out(*this);
    for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] = static_cast<Exponent>(exps_[k] - other.exps_[k]);
    out.degree_ = degree_ - other.degree_;
    return out;
}

Monomial Monomial::meet(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out.set(k, std::min(a.exps_[k], b.exps_[k]));
    return out;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
    }
    return 0;
}

namespace {

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

std::vector<unsigned> max_degrees(const Poly& p) {
    std::vector<unsigned> deg(p.nvars(), 0);
    for (const auto& t : p.terms())
        for (std::size_t k = 0; k < deg.size(); ++k) deg[k] = std::max<unsigned>(deg[k], t.mono[k]);
    return deg;
}

Monomial monomial_content(const Poly& p) {
    Monomial m = p.leading_term().mono;
    for (const auto& t : p.terms()) m = Monomial::meet(m, t.mono);
    return m;
}

Poly monomial_poly(const SpacePtr& space, const Monomial& m) {
    return Poly::from_terms(space, {Term{m, Rational(1)}});
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(SpacePtr space) : space_(std::move(space)) {
    if (!space_) throw std::invalid_argument("polynomial needs a variable space");
}

Poly::Poly(SpacePtr space, std::vector<Term> sorted_terms) : space_(std::move(space)), terms_(std::move(sorted_terms)) {}

Poly Poly::constant(SpacePtr space, const Rational& value) {
    Poly p(std::move(space));
    if (!nilrep::is_zero(value)) p.terms_.push_back(Term{Monomial(p.nvars()), value});
    return p;
}

Poly Poly::variable(SpacePtr space, const Variable& v) {
    const auto idx = space->index_of(v);
    return variable_at(std::move(space), idx);
}

Poly Poly::variable_at(SpacePtr space, std::size_t index) {
    if (index >= space->size()) throw std::invalid_argument("variable index out of range");
    Poly p(std::move(space));
    p.terms_.push_back(Term{Monomial::unit(p.nvars(), index), Rational(1)});
    return p;
}

Poly Poly::from_terms(SpacePtr space, std::vector<Term> terms) {
    const std::size_t nv = space->size();
    for (const auto& t : terms)
        if (t.mono.size() != nv) throw std::invalid_argument("monomial length does not match variable space");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff += t.coeff;
        } else {
            if (!merged.empty() && nilrep::is_zero(merged.back().coeff)) merged.pop_back();
            merged.push_back(std::move(t));
        }
    }
    if (!merged.empty() && nilrep::is_zero(merged.back().coeff)) merged.pop_back();
    return Poly(std::move(space), std::move(merged));
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.degree() == 0); }

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.degree() == 0) return terms_.back().coeff;
    return Rational(0);
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned Poly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
    return d;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
    const unsigned d = degree_in(var);
    std::vector<std::vector<Term>> buckets(d + 1);
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        const unsigned e = m[var];
        m.set(var, 0);
        buckets[e].push_back(Term{std::move(m), t.coeff});
    }
    std::vector<Poly> out;
    out.reserve(d + 1);
    // Zeroing one exponent can reorder terms, so each bucket is re-sorted.
    for (auto& b : buckets) out.push_back(from_terms(space_, std::move(b)));
    return out;
}

Poly Poly::from_coefficients(SpacePtr space, std::size_t var, const std::vector<Poly>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        for (const auto& t : coeffs[e].terms()) {
            Monomial m = t.mono;
            m.set(var, m[var] + static_cast<unsigned>(e));
            terms.push_back(Term{std::move(m), t.coeff});
        }
    }
    return from_terms(std::move(space), std::move(terms));
}

Poly Poly::substitute(const std::vector<std::optional<Rational>>& values) const {
    if (values.size() != nvars()) throw std::invalid_argument("substitution vector has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        Monomial m = t.mono;
        for (std::size_t k = 0; k < values.size() && !nilrep::is_zero(c); ++k) {
            if (!values[k] || m[k] == 0) continue;
            for (unsigned e = 0; e < m[k]; ++e) c *= *values[k];
            m.set(k, 0);
        }
        if (!nilrep::is_zero(c)) out.push_back(Term{std::move(m), std::move(c)});
    }
    return from_terms(space_, std::move(out));
}

void Poly::check_space(const Poly& other) const {
    if (space_ != other.space_) throw std::invalid_argument("polynomials live in different variable spaces");
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int cmp;
        if (i == a.size()) cmp = -1;
        else if (j == b.size()) cmp = 1;
        else cmp = grevlex_compare(a[i].mono, b[j].mono);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back(Term{b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (!is_zero(c)) out.push_back(Term{a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
    check_space(other);
    terms_ = merge_terms(terms_, other.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    check_space(other);
    terms_ = merge_terms(terms_, other.terms_, true);
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (nilrep::is_zero(scalar)) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= scalar;
    return *this;
}

Poly Poly::multiply_monomial(const Monomial& m, const Rational& c) const {
    if (nilrep::is_zero(c)) return Poly(space_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    // Multiplying by a monomial preserves a monomial order.
    for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coeff * c});
    return Poly(space_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_space(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.space_);
    if (a.terms_.size() == 1) return b.multiply_monomial(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.terms_.size() == 1) return a.multiply_monomial(b.terms_[0].mono, b.terms_[0].coeff);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    Rational prod;
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            prod = s.coeff * t.coeff;
            auto [it, inserted] = acc.try_emplace(s.mono * t.mono, prod);
            if (!inserted) it->second += prod;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!nilrep::is_zero(c)) terms.push_back(Term{m, std::move(c)});
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return grevlex_compare(x.mono, y.mono) > 0; });
    return Poly(a.space_, std::move(terms));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

bool operator==(const Poly& a, const Poly& b) {
    if (a.space_ != b.space_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        if (!(a.terms_[k].mono == b.terms_[k].mono) || a.terms_[k].coeff != b.terms_[k].coeff) return false;
    }
    return true;
}

Poly Poly::monic() const {
    if (terms_.empty() || terms_.front().coeff == 1) return *this;
    Poly out(*this);
    const Rational inv = 1 / terms_.front().coeff;
    for (auto& t : out.terms_) t.coeff *= inv;
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k > 0) out += " + ";
        const auto& t = terms_[k];
        out += nilrep::to_string(t.coeff);
        for (std::size_t v = 0; v < t.mono.size(); ++v) {
            const unsigned e = t.mono[v];
            if (e == 0) continue;
            out += " * ";
            out += space_->variable(v).name();
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

Poly poly_arith(PolyOp op, const Poly& a, const Poly& b) {
    if (a.space() != b.space()) throw std::invalid_argument("polynomials live in different variable spaces");
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
        case PolyOp::Neg: return -a;
    }
    throw std::invalid_argument("unknown polynomial operation");
}

// ---------------------------------------------------------------------------
// Division

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (a.space() != b.space()) throw std::invalid_argument("polynomials live in different variable spaces");
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return Poly(a.space());
    if (b.is_constant()) return a * (1 / b.leading_coeff());
    const Monomial& lb = b.leading_term().mono;
    if (!lb.divides(a.leading_term().mono)) return std::nullopt;
    if (b.term_count() > a.term_count() && b.term_count() > 1 && a.term_count() == 1) return std::nullopt;
    {
        const auto da = max_degrees(a), db = max_degrees(b);
        for (std::size_t k = 0; k < da.size(); ++k)
            if (db[k] > da[k]) return std::nullopt;
    }
    const Rational lb_inv = 1 / b.leading_coeff();
    if (b.term_count() == 1) {
        std::vector<Term> q;
        q.reserve(a.term_count());
        for (const auto& t : a.terms()) {
            if (!lb.divides(t.mono)) return std::nullopt;
            q.push_back(Term{t.mono / lb, t.coeff * lb_inv});
        }
        return Poly::from_terms(a.space(), std::move(q));
    }

    std::map<Monomial, Rational, GrevlexGreater> rem;
    for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
    std::vector<Term> quotient;
    Rational prod;
    while (!rem.empty()) {
        auto lead = rem.begin();
        if (!lb.divides(lead->first)) return std::nullopt;
        Monomial qm = lead->first / lb;
        Rational qc = lead->second * lb_inv;
        for (const auto& t : b.terms()) {
            prod = qc * t.coeff;
            Monomial m = t.mono * qm;
            auto [it, inserted] = rem.try_emplace(std::move(m), -prod);
            if (!inserted) {
                it->second -= prod;
                if (is_zero(it->second)) rem.erase(it);
            }
        }
        quotient.push_back(Term{std::move(qm), std::move(qc)});
    }
    return Poly::from_terms(a.space(), std::move(quotient));
}

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw std::domain_error("polynomial division is not exact");
    return std::move(*q);
}

// ---------------------------------------------------------------------------
// GCD: content / primitive-part recursion with a primitive remainder sequence.

namespace {

Poly gcd_impl(const Poly& a, const Poly& b);

/// gcd of the coefficients of p viewed as a polynomial in x_var.
Poly content_in(const Poly& p, std::size_t var) {
    auto coeffs = p.coefficients_in(var);
    std::optional<Poly> g;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g ? gcd_impl(*g, c) : c;
        if (g->is_constant()) return Poly::constant(p.space(), Rational(1));
    }
    return g ? g->monic() : Poly::constant(p.space(), Rational(1));
}

Poly primitive_part(const Poly& p, std::size_t var) { return exact_quotient(p, content_in(p, var)).monic(); }

/// Multiple of the pseudo-remainder of a by b with respect to x_var.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
    auto ac = a.coefficients_in(var);
    const auto bc = b.coefficients_in(var);
    const std::size_t db = bc.size() - 1;
    const Poly& lb = bc.back();
    auto trim = [](std::vector<Poly>& v) {
        while (v.size() > 1 && v.back().is_zero()) v.pop_back();
    };
    trim(ac);
    while (ac.size() - 1 >= db && !(ac.size() == 1 && ac[0].is_zero())) {
        const Poly la = ac.back();
        const std::size_t shift = ac.size() - 1 - db;
        for (auto& c : ac) c = c * lb;
        for (std::size_t j = 0; j <= db; ++j) ac[j + shift] -= la * bc[j];
        ac.back() = Poly(a.space());
        trim(ac);
        if (db == 0) break;
    }
    return Poly::from_coefficients(a.space(), var, ac);
}

Poly gcd_stripped(const Poly& a, const Poly& b) {
    const SpacePtr& space = a.space();
    const Poly one = Poly::constant(space, Rational(1));
    if (a.is_constant() || b.is_constant()) return one;
    if (a.total_degree() <= b.total_degree()) {
        if (divide_exact(b, a)) return a;
    } else if (divide_exact(a, b)) {
        return b;
    }

    const auto da = max_degrees(a), db = max_degrees(b);
    // A variable occurring in only one argument: fold the other argument into its coefficients.
    for (std::size_t v = da.size(); v-- > 0;) {
        if ((da[v] > 0) == (db[v] > 0)) continue;
        const Poly& with = da[v] > 0 ? a : b;
        Poly g = da[v] > 0 ? b : a;
        for (const auto& c : with.coefficients_in(v)) {
            if (c.is_zero()) continue;
            g = gcd_impl(g, c);
            if (g.is_constant()) return one;
        }
        return g;
    }

    std::size_t var = da.size();
    for (std::size_t v = da.size(); v-- > 0;) {
        if (da[v] > 0) {
            var = v;
            break;
        }
    }
    const Poly ca = content_in(a, var), cb = content_in(b, var);
    const Poly content = gcd_impl(ca, cb);
    Poly pa = exact_quotient(a, ca), pb = exact_quotient(b, cb);
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

    Poly g = pb;
    while (true) {
        Poly r = pseudo_remainder(pa, g, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            g = one;
            break;
        }
        pa = std::move(g);
        g = primitive_part(r, var);
    }
    if (g.degree_in(var) > 0) g = primitive_part(g, var);
    return content * g;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
    const SpacePtr& space = a.space();
    if (a.is_constant() || b.is_constant()) return Poly::constant(space, Rational(1));
    const Monomial ma = monomial_content(a), mb = monomial_content(b);
    const Poly mono = monomial_poly(space, Monomial::meet(ma, mb));
    if (a.term_count() == 1 || b.term_count() == 1) return mono;
    return mono * gcd_stripped(exact_quotient(a, monomial_poly(space, ma)), exact_quotient(b, monomial_poly(space, mb)));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.space() != b.space()) throw std::invalid_argument("polynomials live in different variable spaces");
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    return gcd_impl(a, b).monic();
}

}  // namespace nilrep
