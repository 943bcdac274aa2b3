#include "adj/rational.hpp"

#include "adj/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace adj {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

BigInt pow10(unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= 10;
    return r;
}

std::optional<std::int64_t> to_int64(const BigInt& n) {
    if (n < std::numeric_limits<std::int64_t>::min() || n > std::numeric_limits<std::int64_t>::max())
        return std::nullopt;
    return n.convert_to<std::int64_t>();
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) throw InputError("not a rational: '" + text + "'");

    Rational result;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw InputError("not a rational: '" + text + "'");
        BigInt d(den);
        if (d == 0) throw InputError("zero denominator: '" + text + "'");
        result = Rational(BigInt(num), d);
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || !all_digits(frac)) throw InputError("not a rational: '" + text + "'");
        BigInt scale = pow10(static_cast<unsigned>(frac.size()));
        result = Rational(BigInt(whole) * scale + BigInt(frac.empty() ? "0" : frac), scale);
    } else {
        if (!all_digits(s)) throw InputError("not a rational: '" + text + "'");
        result = Rational(BigInt(s));
    }
    return neg ? -result : result;
}

std::string rational_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string decimal_string(const Rational& r) {
    if (r == 0) return "0";
    constexpr int kSigDigits = 12;
    const bool neg = r < 0;
    BigInt a = abs(numerator(r));
    BigInt d = denominator(r);

    // e = floor(log10(a/d))
    int e = 0;
    if (a >= d) {
        BigInt whole = a / d;
        e = static_cast<int>(whole.str().size()) - 1;
    } else {
        BigInt x = a * 10;
        e = -1;
        while (x < d) {
            x *= 10;
            --e;
        }
    }

    // Round half-up to 12 significant digits.
    BigInt sn = a, sd = d;
    int k = (kSigDigits - 1) - e;
    if (k >= 0)
        sn *= pow10(static_cast<unsigned>(k));
    else
        sd *= pow10(static_cast<unsigned>(-k));
    BigInt q = (2 * sn + sd) / (2 * sd);
    if (q == pow10(kSigDigits)) {
        q = pow10(kSigDigits - 1);
        ++e;
    }
    std::string digits = q.str();

    std::string body;
    if (e >= kSigDigits || e <= -5) {
        body = digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
    } else if (e >= 0) {
        body = digits.substr(0, static_cast<std::size_t>(e) + 1);
        if (e + 1 < kSigDigits) body += "." + digits.substr(static_cast<std::size_t>(e) + 1);
    } else {
        body = "0." + std::string(static_cast<std::size_t>(-e) - 1, '0') + digits;
    }
    return neg ? "-" + body : body;
}

}  // namespace adj
