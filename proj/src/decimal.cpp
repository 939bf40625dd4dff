#include "borderstat/decimal.hpp"

#include <stdexcept>

#include "borderstat/errors.hpp"

namespace borderstat {

namespace {

BigCount ten_pow(int digits) {
    return pow_big(10, static_cast<unsigned long>(digits));
}

}  // namespace

std::string decimal_string(const Rational& v, int digits) {
    if (digits < 0) {
        throw std::invalid_argument("digit count must be nonnegative");
    }
    if (sgn(v) < 0) {
        return "-" + decimal_string(Rational(-v), digits);
    }
    const BigCount scale = ten_pow(digits);
    Rational scaled = v * Rational(scale);
    scaled.canonicalize();
    BigCount q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num().get_mpz_t(),
                scaled.get_den().get_mpz_t());
    // Fractional remainder r/den decides the final digit: ties go to even.
    const BigCount twice = 2 * r;
    const int order = cmp(twice, scaled.get_den());
    if (order > 0 || (order == 0 && mpz_odd_p(q.get_mpz_t()))) {
        q += 1;
    }
    std::string flat = q.get_str();
    if (digits == 0) {
        return flat;
    }
    if (static_cast<int>(flat.size()) <= digits) {
        flat.insert(0, digits + 1 - flat.size(), '0');
    }
    flat.insert(flat.size() - digits, ".");
    return flat;
}

ErrDecimal::ErrDecimal(Rational value, Rational err)
    : value_(std::move(value)), err_(std::move(err)) {
    if (sgn(err_) < 0) {
        throw std::invalid_argument("error radius must be nonnegative");
    }
}

ErrDecimal ErrDecimal::operator+(const ErrDecimal& other) const {
    return ErrDecimal(value_ + other.value_, err_ + other.err_);
}

ErrDecimal ErrDecimal::scaled(const Rational& k) const {
    return ErrDecimal(value_ * k, err_ * abs(k));
}

ErrDecimal ErrDecimal::with_extra_err(const Rational& extra) const {
    if (sgn(extra) < 0) {
        throw std::invalid_argument("error widening must be nonnegative");
    }
    return ErrDecimal(value_, err_ + extra);
}

bool ErrDecimal::renderable(int digits) const {
    return err_ < Rational(1, 2 * ten_pow(digits));
}

std::string ErrDecimal::to_string(int digits) const {
    if (!renderable(digits)) {
        throw precision_error("error radius too large for requested digits");
    }
    return decimal_string(value_, digits);
}

}  // namespace borderstat
