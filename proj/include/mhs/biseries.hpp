#pragma once

#include <vector>

#include "mhs/exact.hpp"

namespace mhslab {

// Truncated bivariate formal power series in (z, w) over Rational, dense
// exponent grid 0..order_z x 0..order_w. All arithmetic is exact and never
// creates exponents beyond the truncation orders.
class BiSeries {
public:
    BiSeries(long order_z, long order_w);

    static BiSeries constant(const Rational& q, long order_z, long order_w);
    // q * z^i * w^j; silently zero when the exponent exceeds the truncation
    // (the monomial vanishes mod the truncation ideal)
    static BiSeries monomial(const Rational& q, long i, long j, long order_z, long order_w);

    long order_z() const { return order_z_; }
    long order_w() const { return order_w_; }

    const Rational& coeff(long i, long j) const;
    void set_coeff(long i, long j, const Rational& q);

    BiSeries operator+(const BiSeries& o) const;
    BiSeries operator-(const BiSeries& o) const;
    BiSeries operator*(const BiSeries& o) const;
    BiSeries scaled(const Rational& q) const;

    // Multiplicative inverse up to truncation; requires nonzero constant term.
    BiSeries inverse() const;

    bool operator==(const BiSeries& o) const;

    // (i, j, coefficient) triples of nonzero entries, row-major; for debugging
    std::vector<std::tuple<long, long, Rational>> nonzero_triples() const;

private:
    Rational& at(long i, long j) { return c_[static_cast<std::size_t>(i * (order_w_ + 1) + j)]; }
    const Rational& at(long i, long j) const {
        return c_[static_cast<std::size_t>(i * (order_w_ + 1) + j)];
    }
    void check_same_orders(const BiSeries& o) const;

    long order_z_;
    long order_w_;
    std::vector<Rational> c_;
};

}  // namespace mhslab
