#include "nilrep/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "nilrep/criterion.hpp"
#include "nilrep/schrodinger.hpp"

namespace nilrep::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240531;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MRange {
    int from = 0;
    int to = 0;
};

MRange parse_m(const std::string& text) {
    static const std::regex pattern(R"((\d+)(?:\.\.(\d+))?)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern)) throw UsageError("--m expects INT or A..B, got '" + text + "'");
    MRange r;
    r.from = std::stoi(match[1].str());
    r.to = match[2].matched ? std::stoi(match[2].str()) : r.from;
    if (r.from < 2 || r.to < r.from) throw UsageError("--m needs 2 <= A <= B, got '" + text + "'");
    return r;
}

int single_m(const std::string& text) {
    const auto r = parse_m(text);
    if (r.from != r.to) throw UsageError("this subcommand takes a single --m value");
    return r.from;
}

Functional parse_functional(const LieAlgebra& algebra, const std::optional<std::string>& csv) {
    if (!csv) return Functional::generic(algebra);
    std::map<std::string, Rational> values;
    std::stringstream in(*csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--numeric entry '" + item + "' is not NAME=VALUE");
        const std::string name = item.substr(0, eq);
        if (values.count(name)) throw UsageError("--numeric sets '" + name + "' twice");
        try {
            values[name] = parse_rational(item.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw UsageError("--numeric value for '" + name + "': " + e.what());
        }
    }
    try {
        return Functional::from_named_values(algebra, values);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--numeric: ") + e.what());
    }
}

std::optional<Deadline> make_deadline(long timeout_ms) {
    if (timeout_ms <= 0) return std::nullopt;
    return Deadline(std::chrono::milliseconds(timeout_ms));
}

std::uint64_t seed_from_env() {
    const char* s = std::getenv("NILREP_SEED");
    if (!s || !*s) return kDefaultSeed;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw UsageError(std::string("NILREP_SEED must be an unsigned integer, got '") + s + "'");
    }
}

std::optional<Verdict> parse_verdict_word(const std::string& word) {
    std::string w = word;
    std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (w == "irreducible") return Verdict::Irreducible;
    if (w == "reducible") return Verdict::Reducible;
    if (w == "degenerate") return Verdict::Degenerate;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subcommands

int do_construct(int m, bool json, std::ostream& out) {
    const auto algebra = LieAlgebra::free_step_two(m);
    if (json) {
        out << lie_algebra_json(algebra) << "\n";
        return Ok;
    }
    out << "f_{" << m << ",2} m=" << m << " dim=" << algebra.dimension() << " derived_dim=" << algebra.derived_dim()
        << "\n";
    out << "basis:";
    for (std::size_t k = 0; k < algebra.dimension(); ++k) out << " " << algebra.basis_name(k);
    out << "\n";
    for (std::size_t i = 0; i < algebra.dimension(); ++i) {
        for (std::size_t j = i + 1; j < algebra.dimension(); ++j) {
            const auto& row = algebra.bracket_of_basis(i, j);
            if (row.empty()) continue;
            out << "[" << algebra.basis_name(i) << "," << algebra.basis_name(j) << "] =";
            for (std::size_t t = 0; t < row.size(); ++t) {
                out << (t ? " + " : " ");
                if (row[t].c != 1) out << to_string(row[t].c) << "*";
                out << algebra.basis_name(row[t].k);
            }
            out << "\n";
        }
    }
    return Ok;
}

int do_mmatrix(int m, const std::optional<std::string>& numeric, bool json, std::ostream& out) {
    const auto algebra = LieAlgebra::free_step_two(m);
    const auto lambda = parse_functional(algebra, numeric);
    const auto mat = build_M(algebra, lambda);
    const std::size_t n = algebra.dimension();
    if (json) {
        nlohmann::ordered_json j;
        auto basis = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < n; ++k) basis.push_back(algebra.basis_name(k));
        j["basis"] = std::move(basis);
        auto rows = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < n; ++r) {
            auto row = nlohmann::ordered_json::array();
            for (std::size_t c = 0; c < n; ++c) row.push_back(mat(r, c).to_string());
            rows.push_back(std::move(row));
        }
        j["M"] = std::move(rows);
        out << j.dump() << "\n";
        return Ok;
    }
    for (std::size_t r = 0; r < n; ++r) {
        out << algebra.basis_name(r) << ":";
        for (std::size_t c = 0; c < n; ++c) out << (c ? ", " : " ") << mat(r, c).to_string();
        out << "\n";
    }
    return Ok;
}

int do_stabilizer(int m, const std::optional<std::string>& numeric, bool json, long timeout_ms, std::ostream& out) {
    const auto algebra = LieAlgebra::free_step_two(m);
    const auto lambda = parse_functional(algebra, numeric);
    const auto deadline = make_deadline(timeout_ms);
    const auto stab = stabilizer(algebra, lambda, deadline ? &*deadline : nullptr);
    if (json) {
        out << stabilizer_json(stab) << "\n";
        return Ok;
    }
    out << "stab_dim=" << stab.dimension() << " center_dim=" << stab.center_part.size()
        << " extra=" << stab.extra_vectors.size() << "\n";
    out << "center:";
    for (auto k : stab.center_part) out << " " << algebra.basis_name(k);
    out << "\n";
    for (std::size_t v = 0; v < stab.extra_vectors.size(); ++v) {
        out << "gamma" << v + 1 << ":";
        bool first = true;
        for (std::size_t k = algebra.derived_dim(); k < algebra.dimension(); ++k) {
            out << (first ? " " : ", ") << algebra.basis_name(k) << "=" << stab.extra_vectors[v][k].to_string();
            first = false;
        }
        out << "\n";
    }
    return Ok;
}

int do_criterion(int m, const std::optional<std::string>& numeric, bool json, bool require_generic,
                 const std::optional<Verdict>& expect, long timeout_ms, std::ostream& out, std::ostream& err) {
    const auto algebra = LieAlgebra::free_step_two(m);
    const auto lambda = parse_functional(algebra, numeric);
    const auto deadline = make_deadline(timeout_ms);
    const auto report = check_irreducible(algebra, lambda, {require_generic, deadline ? &*deadline : nullptr});
    out << (json ? format_report_json(report) : format_report_text(report)) << "\n";
    if (expect && report.verdict != *expect) {
        err << "expected " << to_string(*expect) << ", got " << to_string(report.verdict) << "\n";
        return Mismatch;
    }
    return Ok;
}

int do_sweep(MRange range, bool json, const std::string& expect, long timeout_ms, bool timing, std::ostream& out,
             std::ostream& err) {
    std::optional<Verdict> uniform;
    const bool parity = expect == "parity";
    if (!expect.empty() && !parity) {
        uniform = parse_verdict_word(expect);
        if (!uniform) throw UsageError("--expect for sweep takes parity, irreducible or reducible");
    }
    const auto rows = theorem_sweep(range.from, range.to, {timeout_ms, timing});
    out << (json ? format_sweep_json(rows) : format_sweep_text(rows));
    if (expect.empty()) return Ok;
    int status = Ok;
    for (const auto& r : rows) {
        const Verdict want = parity ? (r.m % 2 == 1 ? Verdict::Irreducible : Verdict::Reducible) : *uniform;
        if (!r.verdict || *r.verdict != want) {
            err << "m=" << r.m << ": expected " << to_string(want) << ", got "
                << (r.verdict ? to_string(*r.verdict) : std::string("Timeout")) << "\n";
            status = Mismatch;
        }
    }
    return status;
}

int do_example_m5(bool json, long timeout_ms, std::ostream& out) {
    const auto deadline = make_deadline(timeout_ms);
    const auto result = check_m5_closed_forms(deadline ? &*deadline : nullptr);
    if (json) {
        nlohmann::ordered_json j;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& a : result.alphas)
            arr.push_back({{"k", a.k}, {"computed", a.computed}, {"reference", a.reference}, {"match", a.match}});
        j["alphas"] = std::move(arr);
        j["matched"] = result.matched();
        j["total"] = result.alphas.size();
        j["reference_in_kernel"] = result.reference_in_kernel;
        out << j.dump() << "\n";
    } else {
        for (const auto& a : result.alphas) {
            out << "alpha" << a.k << " = " << a.computed << "\n";
            out << "  reference = " << a.reference << " match=" << (a.match ? "true" : "false") << "\n";
        }
        out << "matched=" << result.matched() << "/" << result.alphas.size()
            << " reference_in_kernel=" << (result.reference_in_kernel ? "true" : "false") << "\n";
    }
    return result.matched() == static_cast<int>(result.alphas.size()) ? Ok : Mismatch;
}

int do_rep_check(bool json, const std::string& gram_csv, std::ostream& out, std::ostream& err) {
    const std::uint64_t seed = seed_from_env();
    const auto checks = standard_rep_checks(seed);
    const std::string sign_note =
        "pi(X3)pi(X2)pi(X3)^-1pi(X2)^-1=exp(+2pi*i*lambda*x2*x3); "
        "pi(X2)pi(X3)pi(X2)^-1pi(X3)^-1=exp(-2pi*i*lambda*x2*x3)";
    if (json) {
        nlohmann::ordered_json j;
        j["seed"] = seed;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : checks)
            arr.push_back({{"check", c.name}, {"config", c.config}, {"max_err", c.max_err}, {"pass", c.pass}});
        j["checks"] = std::move(arr);
        j["commutator_sign"] = sign_note;
        out << j.dump() << "\n";
    } else {
        out << "seed=" << seed << "\n";
        for (const auto& c : checks) out << format_check(c) << "\n";
        out << "note=commutator_sign " << sign_note << "\n";
    }
    if (!gram_csv.empty()) {
        std::ofstream file(gram_csv);
        if (!file) {
            err << "cannot write " << gram_csv << "\n";
            return Mismatch;
        }
        const Grid grid(8, Rational(8));
        CVector f(8, Complex(0));
        f[0] = 1;
        write_gram_csv(gabor_system(Heisenberg{Rational(1)}, grid, f, {0, 7}, {0, 7}), file);
    }
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const RepCheck& c) { return c.pass; });
    return ok ? Ok : Mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact coadjoint stabilizers and lattice irreducibility for free step-two nilpotent Lie algebras",
                 "nilrep"};
    app.require_subcommand(1, 1);

    std::string m_text, format = "text", expect, gram_csv;
    std::optional<std::string> numeric;
    long timeout_ms = 0;
    bool timing = false, require_generic = false;

    auto add_m = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--m", m_text, "generator count, INT or A..B");
        if (required) opt->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_numeric = [&](CLI::App* sub) {
        sub->add_option("--numeric", numeric, "numeric functional, e.g. l12=1,l3=-1/2 (missing names are 0)");
    };
    auto add_timeout = [&](CLI::App* sub) {
        sub->add_option("--timeout-ms", timeout_ms, "time budget in milliseconds (0: none)")->check(CLI::NonNegativeNumber);
    };

    auto* construct = app.add_subcommand("construct", "structure constants of f_{m,2}");
    add_m(construct, true);
    add_format(construct);

    auto* mmatrix = app.add_subcommand("mmatrix", "the matrix M(lambda) = [lambda[X_i, X_j]]");
    add_m(mmatrix, true);
    add_numeric(mmatrix);
    add_format(mmatrix);

    auto* stab = app.add_subcommand("stabilizer", "coadjoint stabilizer of lambda");
    add_m(stab, true);
    add_numeric(stab);
    add_format(stab);
    add_timeout(stab);

    auto* crit = app.add_subcommand("criterion", "irreducibility of the restriction to the integral lattice");
    add_m(crit, true);
    add_numeric(crit);
    add_format(crit);
    add_timeout(crit);
    crit->add_option("--expect", expect, "irreducible, reducible or degenerate");
    crit->add_flag("--require-generic", require_generic, "report Degenerate outside Omega and Omega_1");

    auto* sweep = app.add_subcommand("sweep", "generic verdict for each m in a range");
    add_m(sweep, true);
    add_format(sweep);
    add_timeout(sweep);
    sweep->add_option("--expect", expect, "parity, irreducible or reducible");
    sweep->add_flag("--timing", timing, "report elapsed milliseconds");

    auto* m5 = app.add_subcommand("example-m5", "closed forms of the generic f_{5,2} stabilizer");
    add_format(m5);
    add_timeout(m5);

    auto* rep = app.add_subcommand("rep-check", "finite-grid checks of the explicit representations");
    add_format(rep);
    rep->add_option("--gram-csv", gram_csv, "write the Gram matrix of the N = 8 Gabor system");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return Usage;
    }

    const bool json = format == "json";
    try {
        if (*construct) return do_construct(single_m(m_text), json, out);
        if (*mmatrix) return do_mmatrix(single_m(m_text), numeric, json, out);
        if (*stab) return do_stabilizer(single_m(m_text), numeric, json, timeout_ms, out);
        if (*crit) {
            std::optional<Verdict> want;
            if (!expect.empty()) {
                want = parse_verdict_word(expect);
                if (!want) throw UsageError("--expect takes irreducible, reducible or degenerate");
            }
            return do_criterion(single_m(m_text), numeric, json, require_generic, want, timeout_ms, out, err);
        }
        if (*sweep) return do_sweep(parse_m(m_text), json, expect, timeout_ms, timing, out, err);
        if (*m5) return do_example_m5(json, timeout_ms, out);
        if (*rep) return do_rep_check(json, gram_csv, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return Usage;
    } catch (const TimeoutError& e) {
        err << "error: " << e.what() << "\n";
        return Mismatch;
    }
    return Usage;
}

}  // namespace nilrep::cli
