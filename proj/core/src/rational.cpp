#include "geostring/rational.hpp"

#include <cctype>

namespace geostring {

namespace {

bool valid_int_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) {
        if (!valid_int_token(tok)) throw ParseError("bad rational literal: " + tok);
        return Rational(BigInt(tok));
    }
    std::string p = tok.substr(0, slash), q = tok.substr(slash + 1);
    if (!valid_int_token(p) || !valid_int_token(q))
        throw ParseError("bad rational literal: " + tok);
    BigInt qq(q);
    if (qq == 0) throw ParseError("zero denominator in rational: " + tok);
    return Rational(BigInt(p), qq);
}

std::string rational_str(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

std::string rational_decimal(const Rational& r, int digits) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num(r) * scale / den(r);  // truncates toward zero
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    // trim trailing zeros but keep at least one fractional digit
    auto last = s.find_last_not_of('0');
    if (s[last] == '.') ++last;
    s.erase(last + 1);
    return (neg ? "-" : "") + s;
}

}  // namespace geostring
