#include "edfkit/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

#include <limits>

namespace edfkit {

BigInt lcm_list(const std::vector<std::int64_t>& values) {
    if (values.empty()) {
        throw InvalidInput("lcm_list: empty list");
    }
    BigInt acc = 1;
    for (std::int64_t v : values) {
        if (v < 1) {
            throw InvalidInput("lcm_list: values must be >= 1");
        }
        acc = boost::multiprecision::lcm(acc, BigInt(v));
    }
    return acc;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    if (den <= 0) {
        throw InvalidInput("ceil_div: denominator must be positive");
    }
    BigInt q = num / den;
    if (num % den != 0 && num > 0) {
        ++q;
    }
    return q;
}

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& text) {
    BigInt num;
    BigInt den = 1;
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            num = BigInt(text);
        } else {
            num = BigInt(text.substr(0, slash));
            den = BigInt(text.substr(slash + 1));
        }
    } catch (const std::runtime_error&) {
        throw ParseError("rational: malformed value '" + text + "'");
    }
    if (den == 0) {
        throw ParseError("rational: zero denominator in '" + text + "'");
    }
    return Rational(num, den);
}

std::optional<std::int64_t> to_int64(const BigInt& v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(v);
}

} // namespace edfkit
