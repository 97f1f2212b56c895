#include "mhs/biseries.hpp"

#include <tuple>

namespace mhslab {

namespace {
std::size_t grid_size(long order_z, long order_w) {
    if (order_z < 0 || order_w < 0)
        throw std::invalid_argument("biseries: truncation orders must be >= 0");
    return static_cast<std::size_t>((order_z + 1) * (order_w + 1));
}
}  // namespace

BiSeries::BiSeries(long order_z, long order_w)
    : order_z_(order_z), order_w_(order_w), c_(grid_size(order_z, order_w), Rational(0)) {}

BiSeries BiSeries::constant(const Rational& q, long order_z, long order_w) {
    BiSeries s(order_z, order_w);
    s.at(0, 0) = q;
    return s;
}

BiSeries BiSeries::monomial(const Rational& q, long i, long j, long order_z, long order_w) {
    BiSeries s(order_z, order_w);
    if (i < 0 || j < 0) throw std::invalid_argument("biseries: negative exponent");
    if (i <= order_z && j <= order_w) s.at(i, j) = q;
    return s;
}

const Rational& BiSeries::coeff(long i, long j) const {
    if (i < 0 || i > order_z_ || j < 0 || j > order_w_)
        throw std::out_of_range("biseries: coefficient outside truncation");
    return at(i, j);
}

void BiSeries::set_coeff(long i, long j, const Rational& q) {
    if (i < 0 || i > order_z_ || j < 0 || j > order_w_)
        throw std::out_of_range("biseries: coefficient outside truncation");
    at(i, j) = q;
}

void BiSeries::check_same_orders(const BiSeries& o) const {
    if (order_z_ != o.order_z_ || order_w_ != o.order_w_)
        throw std::invalid_argument("biseries: truncation order mismatch");
}

BiSeries BiSeries::operator+(const BiSeries& o) const {
    check_same_orders(o);
    BiSeries s(order_z_, order_w_);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] + o.c_[i];
    return s;
}

BiSeries BiSeries::operator-(const BiSeries& o) const {
    check_same_orders(o);
    BiSeries s(order_z_, order_w_);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] - o.c_[i];
    return s;
}

BiSeries BiSeries::operator*(const BiSeries& o) const {
    check_same_orders(o);
    BiSeries s(order_z_, order_w_);
    for (long i = 0; i <= order_z_; ++i)
        for (long j = 0; j <= order_w_; ++j) {
            const Rational& a = at(i, j);
            if (a == 0) continue;
            for (long k = 0; i + k <= order_z_; ++k)
                for (long l = 0; j + l <= order_w_; ++l) {
                    const Rational& b = o.at(k, l);
                    if (b != 0) s.at(i + k, j + l) += a * b;
                }
        }
    return s;
}

BiSeries BiSeries::scaled(const Rational& q) const {
    BiSeries s(order_z_, order_w_);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] * q;
    return s;
}

BiSeries BiSeries::inverse() const {
    if (at(0, 0) == 0)
        throw std::domain_error("biseries: inverse requires nonzero constant term");
    BiSeries y(order_z_, order_w_);
    Rational inv0 = Rational(1) / at(0, 0);
    // graded coefficient solve of X*Y = 1
    for (long i = 0; i <= order_z_; ++i)
        for (long j = 0; j <= order_w_; ++j) {
            Rational acc = (i == 0 && j == 0) ? Rational(1) : Rational(0);
            for (long k = 0; k <= i; ++k)
                for (long l = 0; l <= j; ++l) {
                    if (k == 0 && l == 0) continue;
                    const Rational& x = at(k, l);
                    if (x != 0) acc -= x * y.at(i - k, j - l);
                }
            y.at(i, j) = acc * inv0;
        }
    return y;
}

bool BiSeries::operator==(const BiSeries& o) const {
    return order_z_ == o.order_z_ && order_w_ == o.order_w_ && c_ == o.c_;
}

std::vector<std::tuple<long, long, Rational>> BiSeries::nonzero_triples() const {
    std::vector<std::tuple<long, long, Rational>> out;
    for (long i = 0; i <= order_z_; ++i)
        for (long j = 0; j <= order_w_; ++j)
            if (at(i, j) != 0) out.emplace_back(i, j, at(i, j));
    return out;
}

}  // namespace mhslab
