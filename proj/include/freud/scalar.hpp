#pragma once

// Arbitrary-precision scalar type and the error taxonomy shared by all modules.
// Scalar is an MPFR-backed variable-precision real; the working precision is a
// per-process setting chosen in bits and every operation yields a result at
// (at least) the highest precision among its operands.

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace freud {

using Scalar = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::cpp_rational;

int digits_for_bits(int bits);
void set_working_precision(int bits);
int working_precision_bits();

// Parse a decimal string at the current working precision. Throws
// std::invalid_argument on malformed input.
Scalar scalar_from_decimal(const std::string& text);

// Decimal rendering with `digits` significant digits, trailing zeros trimmed.
// Round-trips through scalar_from_decimal with relative error <= 10^(1-digits).
std::string to_decimal(const Scalar& value, int digits);

std::string rational_to_string(const Rational& value);

Scalar pi_value();
Scalar pow10(long exponent);

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : NumericalError {
    using NumericalError::NumericalError;
};

struct SingularPivot : NumericalError {
    using NumericalError::NumericalError;
};

struct PrecisionExhausted : NumericalError {
    using NumericalError::NumericalError;
};

struct CrossCheckFailure : NumericalError {
    CrossCheckFailure(const std::string& what, Scalar lhs_, Scalar rhs_)
        : NumericalError(what), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {}
    Scalar lhs, rhs;
};

struct PositivityLoss : NumericalError {
    PositivityLoss(const std::string& what, int index_) : NumericalError(what), index(index_) {}
    int index;
};

struct DivisionByNearZero : NumericalError {
    DivisionByNearZero(const std::string& what, int index_) : NumericalError(what), index(index_) {}
    int index;
};

struct ZeroDenominator : NumericalError {
    ZeroDenominator(const std::string& what, int depth_) : NumericalError(what), depth(depth_) {}
    int depth;
};

struct ParityViolation : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace freud
