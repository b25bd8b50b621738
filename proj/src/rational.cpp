#include "nilrep/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nilrep {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string original(text);
    auto fail = [&]() { return std::invalid_argument("not a rational number: '" + original + "'"); };

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational value;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw fail();
        const mpz_class d{std::string(den)};
        if (d == 0) throw fail();
        value = Rational(mpz_class(std::string(num)), d);
        value.canonicalize();
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) throw fail();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        value = Rational(mpz_class(std::string(whole.empty() ? "0" : whole)) * scale + mpz_class(std::string(frac)), scale);
        value.canonicalize();
    } else {
        if (!all_digits(text)) throw fail();
        value = Rational(mpz_class(std::string(text)));
    }
    return negative ? Rational(-value) : value;
}

}  // namespace nilrep
