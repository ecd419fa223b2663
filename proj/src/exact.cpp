#include "tensobs/exact.hpp"

#include <stdexcept>

namespace tensobs {

Int factorial(uint64_t n) {
    Int r = 1;
    for (uint64_t i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Int ipow(Int base, uint32_t exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1)
            r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

Rational rpow(const Int& base, int64_t exp) {
    if (exp >= 0)
        return Rational(ipow(base, static_cast<uint32_t>(exp)));
    if (base == 0)
        throw std::domain_error("rpow: zero base with negative exponent");
    return Rational(Int(1), ipow(base, static_cast<uint32_t>(-exp)));
}

std::string to_scientific(const Int& v, unsigned digits) {
    if (digits == 0)
        digits = 1;
    if (v < 0)
        return "-" + to_scientific(-v, digits);

    std::string s = v.str();
    if (v == 0)
        return "0.00e+00";

    int exponent = static_cast<int>(s.size()) - 1;
    std::string mant = s.substr(0, digits);
    while (mant.size() < digits)
        mant += '0';

    // Half-up rounding on the first dropped digit.
    if (s.size() > digits && s[digits] >= '5') {
        for (int i = static_cast<int>(mant.size()) - 1; i >= 0; --i) {
            if (mant[i] != '9') {
                ++mant[i];
                break;
            }
            mant[i] = '0';
            if (i == 0) {
                mant.insert(mant.begin(), '1');
                mant.pop_back();
                ++exponent;
            }
        }
    }

    std::string out;
    out += mant[0];
    if (digits > 1) {
        out += '.';
        out += mant.substr(1);
    }
    out += "e+";
    std::string es = std::to_string(exponent);
    if (es.size() < 2)
        es.insert(es.begin(), '0');
    out += es;
    return out;
}

std::string format_count(const Int& v) {
    static const Int threshold = Int(100000000);
    std::string s = v.str();
    if (v >= threshold)
        s += " (" + to_scientific(v) + ")";
    return s;
}

} // namespace tensobs
