#include "frobkit/exactnum.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>

namespace frobkit {

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    BigRational real = re * rhs.re - im * rhs.im;
    im = re * rhs.im + im * rhs.re;
    re = std::move(real);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZero("gaussian division by zero");
    }
    BigRational norm = rhs.re * rhs.re + rhs.im * rhs.im;
    BigRational real = (re * rhs.re + im * rhs.im) / norm;
    im = (im * rhs.re - re * rhs.im) / norm;
    re = std::move(real);
    return *this;
}

GaussianRational pow(const GaussianRational& x, std::uint64_t e) {
    if (x.is_zero() && e == 0) {
        throw IndeterminateForm("0^0 is indeterminate");
    }
    GaussianRational result{1};
    GaussianRational base = x;
    while (e != 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    int sign() {
        if (!done() && (peek() == '+' || peek() == '-')) {
            return text[pos++] == '-' ? -1 : 1;
        }
        return 1;
    }

    BigInt digits() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos;
        }
        if (pos == start) {
            throw ParseError("expected digits", pos);
        }
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    // R = integer or integer/integer
    BigRational number() {
        BigInt num = digits();
        if (!done() && peek() == '/') {
            ++pos;
            std::size_t den_pos = pos;
            BigInt den = digits();
            if (den == 0) {
                throw ParseError("zero denominator", den_pos);
            }
            return BigRational(num, den);
        }
        return BigRational(num);
    }

    struct Part {
        BigRational value;
        bool imaginary;
    };

    Part part() {
        int s = sign();
        if (!done() && peek() == 'i') {
            ++pos;
            return {BigRational(s), true};
        }
        BigRational value = number();
        if (s < 0) {
            value = -value;
        }
        if (!done() && peek() == 'i') {
            ++pos;
            return {std::move(value), true};
        }
        return {std::move(value), false};
    }
};

}  // namespace

GaussianRational parse_gaussian(std::string_view text) {
    Parser p{text};
    if (p.done()) {
        throw ParseError("empty input", 0);
    }
    Parser::Part first = p.part();
    if (p.done()) {
        return first.imaginary ? GaussianRational(0, std::move(first.value))
                               : GaussianRational(std::move(first.value));
    }
    if (p.peek() != '+' && p.peek() != '-') {
        throw ParseError("expected '+', '-' or end of input", p.pos);
    }
    if (first.imaginary) {
        throw ParseError("imaginary part must come last", p.pos);
    }
    Parser::Part second = p.part();
    if (!second.imaginary) {
        throw ParseError("second component must be imaginary (missing 'i')", p.pos);
    }
    if (!p.done()) {
        throw ParseError("trailing input", p.pos);
    }
    return {std::move(first.value), std::move(second.value)};
}

std::string to_string(const BigRational& value) {
    std::string out = boost::multiprecision::numerator(value).str();
    if (boost::multiprecision::denominator(value) != 1) {
        out += '/';
        out += boost::multiprecision::denominator(value).str();
    }
    return out;
}

std::string to_string(const GaussianRational& value) {
    if (value.im == 0) {
        return to_string(value.re);
    }
    std::string out = to_string(value.re);
    if (value.im > 0) {
        out += '+';
        out += to_string(value.im);
    } else {
        out += '-';
        out += to_string(BigRational(-value.im));
    }
    out += 'i';
    return out;
}

BigInt require_integer(const BigRational& value, const char* context) {
    if (boost::multiprecision::denominator(value) != 1) {
        throw IntegralityViolation(std::string(context) + ": non-integral value " +
                                   to_string(value));
    }
    return boost::multiprecision::numerator(value);
}

BigInt require_nonnegative_integer(const BigRational& value, const char* context) {
    BigInt result = require_integer(value, context);
    if (result < 0) {
        throw IntegralityViolation(std::string(context) + ": negative value " +
                                   result.str());
    }
    return result;
}

}  // namespace frobkit
