#include "nilrep/criterion.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "json.hpp"

#include "nilrep/linalg.hpp"

namespace nilrep {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Irreducible: return "Irreducible";
        case Verdict::Reducible: return "Reducible";
        case Verdict::Degenerate: return "Degenerate";
    }
    return "?";
}

std::vector<std::vector<Rational>> rational_closure(const std::vector<std::vector<RatFunc>>& vectors) {
    if (vectors.empty()) return {};
    const std::size_t len = vectors.front().size();
    std::map<Monomial, std::vector<Rational>, GrevlexGreater> by_monomial;
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vectors) {
        if (v.size() != len) throw std::invalid_argument("rational_closure: vectors differ in length");
        if (len == 0) continue;
        Poly common = Poly::constant(v.front().space(), Rational(1));
        for (const auto& e : v)
            if (!e.is_polynomial()) common = poly_lcm(common, e.den());
        by_monomial.clear();
        for (std::size_t k = 0; k < len; ++k) {
            if (v[k].is_zero()) continue;
            const Poly cleared = v[k].num() * exact_quotient(common, v[k].den());
            for (const auto& t : cleared.terms()) {
                auto& row = by_monomial.try_emplace(t.mono, len, Rational(0)).first->second;
                row[k] = t.coeff;
            }
        }
        for (auto& [mono, row] : by_monomial) rows.push_back(std::move(row));
    }
    if (rows.empty() || len == 0) return {};
    Matrix<Rational> a(rows.size(), len, Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < len; ++c) a(r, c) = rows[r][c];
    return row_space_basis(a);
}

namespace {

std::vector<std::vector<RatFunc>> generator_tails(const StabilizerBasis& stab, const LieAlgebra& algebra) {
    const std::size_t d = algebra.derived_dim();
    std::vector<std::vector<RatFunc>> tails;
    for (const auto& v : stab.extra_vectors) tails.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(d), v.end());
    return tails;
}

}  // namespace

std::size_t tail_dimQ(const StabilizerBasis& stab, const LieAlgebra& algebra) {
    return rational_closure(generator_tails(stab, algebra)).size();
}

CriterionReport check_irreducible(const LieAlgebra& algebra, const Functional& lambda, const CriterionOptions& options) {
    CriterionReport report;
    report.required_dim = static_cast<std::size_t>(algebra.generator_count());

    const auto stab = stabilizer(algebra, lambda, options.deadline);
    const auto tails = generator_tails(stab, algebra);
    report.closure_basis = rational_closure(tails);
    report.tail_dimQ = report.closure_basis.size();
    report.stabilizer_dim = stab.dimension();
    for (const auto& t : tails) {
        std::vector<std::string> row;
        for (const auto& e : t) row.push_back(e.to_string());
        report.tail_coordinates.push_back(std::move(row));
    }
    report.verdict = report.tail_dimQ == report.required_dim ? Verdict::Irreducible : Verdict::Reducible;

    if (!lambda.is_numeric()) {
        report.notes = "generic symbolic functional";
        return report;
    }
    std::vector<std::string> failures;
    const Poly omega = omega_polynomial(algebra, lambda);
    if (omega.is_zero()) {
        const Poly generic = omega_polynomial(algebra, Functional::generic(algebra));
        failures.push_back("outside Omega: " + generic.to_string() + " vanishes");
    }
    if (!in_omega1(algebra, lambda)) {
        const int m = algebra.generator_count();
        failures.push_back("outside Omega_1: some l{j}" + std::to_string(m) + " vanishes");
    }
    if (failures.empty()) {
        report.notes = "numeric functional in Omega and Omega_1";
    } else {
        for (std::size_t k = 0; k < failures.size(); ++k) report.notes += (k ? "; " : "") + failures[k];
        if (options.require_generic) report.verdict = Verdict::Degenerate;
    }
    return report;
}

std::string format_report_text(const CriterionReport& report) {
    std::ostringstream out;
    out << "verdict=" << to_string(report.verdict) << " tail_dimQ=" << report.tail_dimQ
        << " required_dim=" << report.required_dim << " stab_dim=" << report.stabilizer_dim << " notes=\""
        << report.notes << "\"";
    return out.str();
}

std::string format_report_json(const CriterionReport& report) {
    nlohmann::ordered_json j;
    j["verdict"] = to_string(report.verdict);
    j["tail_dimQ"] = report.tail_dimQ;
    j["required_dim"] = report.required_dim;
    j["stab_dim"] = report.stabilizer_dim;
    auto closure = nlohmann::ordered_json::array();
    for (const auto& row : report.closure_basis) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& q : row) r.push_back(to_string(q));
        closure.push_back(std::move(r));
    }
    j["closure_basis"] = std::move(closure);
    j["tail_coordinates"] = report.tail_coordinates;
    j["notes"] = report.notes;
    return j.dump();
}

// ---------------------------------------------------------------------------
// f_{5,2} closed forms

std::vector<RatFunc> reference_m5_alphas() {
    const auto space = VarSpace::for_generators(5);
    auto l = [&](int i, int j) { return Poly::variable(space, Variable::center(i, j)); };
    const Poly den = l(1, 4) * l(2, 3) - l(1, 3) * l(2, 4) + l(1, 2) * l(3, 4);
    const std::vector<Poly> nums = {
        l(2, 5) * l(3, 4) - l(2, 4) * l(3, 5) + l(2, 3) * l(4, 5),
        -(l(1, 5) * l(3, 4)) - l(1, 4) * l(3, 5) + l(1, 3) * l(4, 5),
        l(1, 5) * l(2, 4) - l(1, 4) * l(2, 5) + l(1, 2) * l(4, 5),
        -(l(1, 5) * l(2, 3)) + l(1, 3) * l(2, 5) + l(1, 2) * l(3, 5),
    };
    std::vector<RatFunc> out;
    for (const auto& p : nums) out.push_back(RatFunc::reduce(p, den));
    return out;
}

int M5ClosedForms::matched() const {
    int n = 0;
    for (const auto& a : alphas) n += a.match ? 1 : 0;
    return n;
}

M5ClosedForms check_m5_closed_forms(const Deadline* deadline) {
    const auto algebra = LieAlgebra::free_step_two(5);
    const auto lambda = Functional::generic(algebra);
    const auto stab = stabilizer(algebra, lambda, deadline);
    if (stab.extra_vectors.size() != 1) throw std::logic_error("generic f_{5,2} stabilizer must have one extra vector");
    const auto& gamma = stab.extra_vectors.front();
    const auto reference = reference_m5_alphas();
    const std::size_t d = algebra.derived_dim();

    const auto m_lambda = build_M(algebra, lambda);
    std::vector<RatFunc> ref_gamma(algebra.dimension(), RatFunc::zero(algebra.space()));
    for (std::size_t k = 0; k < 4; ++k) ref_gamma[d + k] = reference[k];
    ref_gamma[d + 4] = RatFunc::constant(algebra.space(), Rational(1));
    M5ClosedForms out;
    out.reference_in_kernel = true;
    for (const auto& r : m_lambda.apply(ref_gamma)) out.reference_in_kernel = out.reference_in_kernel && r.is_zero();
    for (std::size_t k = 0; k < 4; ++k) {
        ClosedFormCheck c;
        c.k = static_cast<int>(k + 1);
        c.computed = gamma[d + k].to_string();
        c.reference = reference[k].to_string();
        c.match = c.computed == c.reference;
        out.alphas.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parity sweep

std::vector<SweepRow> theorem_sweep(int from, int to, const SweepOptions& options) {
    if (from < 2 || to < from) throw std::invalid_argument("sweep range must satisfy 2 <= from <= to");
    std::vector<SweepRow> rows;
    for (int m = from; m <= to; ++m) {
        SweepRow row;
        row.m = m;
        const auto start = std::chrono::steady_clock::now();
        std::optional<Deadline> deadline;
        if (options.timeout_ms > 0) deadline.emplace(std::chrono::milliseconds(options.timeout_ms));
        const Deadline* dl = deadline ? &*deadline : nullptr;
        try {
            const auto algebra = LieAlgebra::free_step_two(m);
            const auto report = check_irreducible(algebra, Functional::generic(algebra), {false, dl});
            row.verdict = report.verdict;
            row.stab_dim = static_cast<long>(report.stabilizer_dim);
            if (m == 5) {
                row.closed_forms_matched = check_m5_closed_forms(dl).matched();
            }
        } catch (const TimeoutError&) {
            row.verdict.reset();
            row.stab_dim = -1;
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        row.ms = options.timing ? static_cast<long>(elapsed.count()) : 0;
        rows.push_back(row);
    }
    return rows;
}

std::string format_sweep_text(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << "m=" << r.m << " verdict=" << (r.verdict ? to_string(*r.verdict) : std::string("Timeout"))
            << " stab_dim=" << r.stab_dim << " ms=" << r.ms << "\n";
    }
    return out.str();
}

std::string format_sweep_json(const std::vector<SweepRow>& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["m"] = r.m;
        j["verdict"] = r.verdict ? to_string(*r.verdict) : std::string("Timeout");
        j["stab_dim"] = r.stab_dim;
        j["ms"] = r.ms;
        if (r.closed_forms_matched) j["closed_forms"] = {{"matched", *r.closed_forms_matched}, {"total", 4}};
        arr.push_back(std::move(j));
    }
    return arr.dump() + "\n";
}

}  // namespace nilrep
