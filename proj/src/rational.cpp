#include "folres/rational.hpp"

#include "folres/errors.hpp"

namespace folres {

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (char ch : s) {
        if (ch == '.' || ch == 'e' || ch == 'E')
            throw ParseError("floating-point literal rejected: " + s);
        if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw ParseError("bad rational literal: " + s);
    }
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

}  // namespace folres
