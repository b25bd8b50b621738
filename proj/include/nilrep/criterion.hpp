#ifndef NILREP_CRITERION_HPP
#define NILREP_CRITERION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilrep/coadjoint.hpp"

namespace nilrep {

enum class Verdict { Irreducible, Reducible, Degenerate };

std::string to_string(Verdict v);

/// Outcome of the rational-ideal test for one functional.
struct CriterionReport {
    Verdict verdict = Verdict::Reducible;
    std::size_t tail_dimQ = 0;
    std::size_t required_dim = 0;  // n - dim[n,n] = m
    std::size_t stabilizer_dim = 0;
    /// Q-basis of the rational closure of the stabilizer's generator tails.
    std::vector<std::vector<Rational>> closure_basis;
    /// Generator-coordinate tails of the extra stabilizer vectors, serialized.
    std::vector<std::vector<std::string>> tail_coordinates;
    std::string notes;
};

/// Smallest rational subspace containing every specialization of the given
/// vectors over Q(lambda): clear each vector to a common polynomial denominator,
/// collect the rational coefficient vector of every monomial, and return a
/// reduced row echelon Q-basis of their span. All vectors must share a length.
std::vector<std::vector<Rational>> rational_closure(const std::vector<std::vector<RatFunc>>& vectors);

/// dim_Q of the generator-coordinate projections of the stabilizer's extra vectors.
std::size_t tail_dimQ(const StabilizerBasis& stab, const LieAlgebra& algebra);

struct CriterionOptions {
    /// Report Degenerate instead of deciding when a numeric functional lies outside Omega and Omega_1.
    bool require_generic = false;
    const Deadline* deadline = nullptr;
};

/// pi_lambda restricted to the integral lattice is irreducible iff tail_dimQ == m.
CriterionReport check_irreducible(const LieAlgebra& algebra, const Functional& lambda, const CriterionOptions& options = {});

/// "verdict=... tail_dimQ=... required_dim=... stab_dim=... notes=..."
std::string format_report_text(const CriterionReport& report);
std::string format_report_json(const CriterionReport& report);

// ---------------------------------------------------------------------------
// f_{5,2} closed forms

/// The four alpha_k(lambda) for m = 5 as published:
/// alpha_k = P_k / (l14 l23 - l13 l24 + l12 l34) with the numerators printed in the
/// original example.
std::vector<RatFunc> reference_m5_alphas();

struct ClosedFormCheck {
    int k = 0;
    std::string computed;
    std::string reference;
    bool match = false;
};

struct M5ClosedForms {
    std::vector<ClosedFormCheck> alphas;
    /// Whether the reference vector (alpha_1, ..., alpha_4, 1) is annihilated by M(lambda).
    bool reference_in_kernel = false;

    int matched() const;
};

/// Computes the generic m = 5 stabilizer and compares its alpha_k against reference_m5_alphas().
M5ClosedForms check_m5_closed_forms(const Deadline* deadline = nullptr);

// ---------------------------------------------------------------------------
// Parity sweep

struct SweepRow {
    int m = 0;
    std::optional<Verdict> verdict;  // nullopt: timed out
    long stab_dim = -1;
    long ms = 0;
    /// For m = 5: how many closed forms matched the reference strings.
    std::optional<int> closed_forms_matched;
};

struct SweepOptions {
    long timeout_ms = 0;  // 0: unlimited
    bool timing = false;  // report elapsed milliseconds; otherwise ms=0 for byte-stable output
};

/// Generic symbolic verdict for each m in [from, to]; a timed-out m is marked and the sweep continues.
std::vector<SweepRow> theorem_sweep(int from, int to, const SweepOptions& options = {});

/// One `m=<int> verdict=<...> stab_dim=<int> ms=<int>` line per row.
std::string format_sweep_text(const std::vector<SweepRow>& rows);
std::string format_sweep_json(const std::vector<SweepRow>& rows);

}  // namespace nilrep

#endif
