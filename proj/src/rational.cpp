#include "nerveforge/rational.h"

#include <cctype>
#include <cstdlib>

#include "nerveforge/errors.h"

namespace nerveforge {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");

    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        s.erase(0, 1);
    }

    // a/b form: delegate to GMP after validating both halves.
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("bad fraction literal: " + text);
        // Explicit base: the default string constructor auto-detects octal
        // from a leading zero.
        mpz_class numz(num, 10), denz(den, 10);
        if (denz == 0) throw ParseError("zero denominator: " + text);
        Rat q{numz, denz};
        q.canonicalize();
        return neg ? Rat(-q) : q;
    }

    // Optional exponent, then optional decimal point. 1.25e2 = 125/1.
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string etail = s.substr(epos + 1);
        s.erase(epos);
        if (etail.empty()) throw ParseError("bad exponent: " + text);
        bool eneg = false;
        if (etail[0] == '+' || etail[0] == '-') {
            eneg = (etail[0] == '-');
            etail.erase(0, 1);
        }
        if (!all_digits(etail) || etail.size() > 6)
            throw ParseError("bad exponent: " + text);
        exp10 = std::strtol(etail.c_str(), nullptr, 10);
        if (eneg) exp10 = -exp10;
    }

    auto dot = s.find('.');
    std::string digits;
    if (dot == std::string::npos) {
        digits = s;
    } else {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        exp10 -= static_cast<long>(s.size() - dot - 1);
    }
    if (!all_digits(digits)) throw ParseError("bad rational literal: " + text);

    mpz_class mant(digits, 10);
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    Rat q = exp10 < 0 ? Rat(mant, pow10) : Rat(mant * pow10);
    q.canonicalize();
    return neg ? Rat(-q) : q;
}

std::string rational_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign_of(const Rat& q) { return sgn(q); }

}  // namespace nerveforge
