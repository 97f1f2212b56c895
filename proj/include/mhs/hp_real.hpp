#pragma once

#include <mpfr.h>

#include <string>

#include "mhs/exact.hpp"

namespace mhslab {

// High-precision floating-point value backed by MPFR. Precision is carried
// per value and set explicitly at construction; binary operations compute at
// the larger operand precision. No ambient rounding/precision state is used
// (everything rounds to nearest).
class HpReal {
public:
    static constexpr long default_precision = 256;

    explicit HpReal(long prec = default_precision);
    HpReal(const HpReal& o);
    HpReal(HpReal&& o) noexcept;
    HpReal& operator=(const HpReal& o);
    HpReal& operator=(HpReal&& o) noexcept;
    ~HpReal();

    static HpReal from_long(long v, long prec = default_precision);
    static HpReal from_double(double v, long prec = default_precision);
    static HpReal from_rational(const Rational& q, long prec = default_precision);
    // accepts "1e-8" style strings, rounded to prec
    static HpReal from_string(const std::string& s, long prec = default_precision);
    static HpReal ln2(long prec = default_precision);
    static HpReal pi(long prec = default_precision);
    // 2^e exactly (within exponent range)
    static HpReal pow2(long e, long prec = default_precision);

    long precision() const;

    HpReal operator+(const HpReal& o) const;
    HpReal operator-(const HpReal& o) const;
    HpReal operator*(const HpReal& o) const;
    HpReal operator/(const HpReal& o) const;
    HpReal operator-() const;
    HpReal& operator+=(const HpReal& o);
    HpReal& operator-=(const HpReal& o);
    HpReal& operator*=(const HpReal& o);
    HpReal& operator/=(const HpReal& o);

    HpReal abs() const;
    HpReal sqrt() const;
    // x^e for integer e (e may be negative)
    HpReal pow_int(long e) const;

    int cmp(const HpReal& o) const;
    bool operator<(const HpReal& o) const { return cmp(o) < 0; }
    bool operator<=(const HpReal& o) const { return cmp(o) <= 0; }
    bool operator>(const HpReal& o) const { return cmp(o) > 0; }
    bool operator>=(const HpReal& o) const { return cmp(o) >= 0; }
    bool operator==(const HpReal& o) const { return cmp(o) == 0; }

    bool is_zero() const;
    double to_double() const;
    // decimal string with the given number of significant digits
    std::string str(std::size_t digits = 30) const;

    // raw handle for call sites that need an mpfr function directly
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

}  // namespace mhslab
