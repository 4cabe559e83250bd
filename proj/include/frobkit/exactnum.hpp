#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "frobkit/errors.hpp"

namespace frobkit {

// Arbitrary-precision integer, sign + magnitude, canonical zero.
using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always lowest terms, denominator > 0.
using BigRational = boost::multiprecision::cpp_rational;

/// An exact element of Q(i). Equality is component-wise; both components
/// stay canonical because BigRational normalizes after every operation.
struct GaussianRational {
    BigRational re;
    BigRational im;

    GaussianRational() = default;
    GaussianRational(BigRational real) : re(std::move(real)) {}
    GaussianRational(BigRational real, BigRational imag)
        : re(std::move(real)), im(std::move(imag)) {}
    GaussianRational(int value) : re(value) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    bool operator==(const GaussianRational&) const = default;

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) {
        lhs *= rhs;
        return lhs;
    }
    friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) {
        lhs /= rhs;
        return lhs;
    }
    friend GaussianRational operator-(const GaussianRational& value) {
        return {-value.re, -value.im};
    }
};

/// x^e by square-and-multiply. Throws IndeterminateForm for 0^0.
GaussianRational pow(const GaussianRational& x, std::uint64_t e);

/// Parses the grammar  [+|-]R [(+|-) R i]  where R is "integer" or
/// "integer/integer" and a bare "i" stands for 1i. No whitespace.
/// Examples: "2", "i", "-i", "3/4i", "-3/2+1/2i".
GaussianRational parse_gaussian(std::string_view text);

/// Canonical formatting: lowest terms, "a/b" only when b != 1, imaginary
/// part omitted when zero. parse_gaussian(to_string(x)) == x.
std::string to_string(const BigRational& value);
std::string to_string(const GaussianRational& value);

/// Asserts that an exactly evaluated rational is an integer and returns it.
/// `context` names the formula for the IntegralityViolation message.
BigInt require_integer(const BigRational& value, const char* context);

/// require_integer plus a nonnegativity assertion.
BigInt require_nonnegative_integer(const BigRational& value, const char* context);

}  // namespace frobkit
