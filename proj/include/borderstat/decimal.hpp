#pragma once

#include <string>

#include "borderstat/bigint.hpp"

namespace borderstat {

// Renders v with the given number of fractional digits, rounding
// half-to-even at the last digit.
std::string decimal_string(const Rational& v, int digits);

// An arbitrary-precision value paired with a rigorous absolute-error
// radius: the pair asserts |true - value| <= err. Both components are
// exact rationals, so arithmetic never loses enclosure.
class ErrDecimal {
public:
    ErrDecimal(Rational value, Rational err);

    const Rational& value() const { return value_; }
    const Rational& err() const { return err_; }

    ErrDecimal operator+(const ErrDecimal& other) const;

    // value * k with err * |k|.
    ErrDecimal scaled(const Rational& k) const;

    // Same value with the error radius widened by extra >= 0.
    ErrDecimal with_extra_err(const Rational& extra) const;

    // Rendering D digits is permitted only when err < 10^-D / 2, so the
    // printed string deviates from the true value by less than one unit
    // in the last digit.
    bool renderable(int digits) const;

    // Round-half-even decimal rendering; throws precision_error when
    // the error radius does not justify the requested digits.
    std::string to_string(int digits) const;

private:
    Rational value_;
    Rational err_;
};

}  // namespace borderstat
