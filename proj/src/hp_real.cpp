#include "mhs/hp_real.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace mhslab {

namespace {
long checked_prec(long prec) {
    if (prec < MPFR_PREC_MIN || prec > 1'000'000)
        throw std::invalid_argument("hp_real: precision out of range");
    return prec;
}
}  // namespace

HpReal::HpReal(long prec) {
    mpfr_init2(v_, checked_prec(prec));
    mpfr_set_zero(v_, 1);
}

HpReal::HpReal(const HpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HpReal::HpReal(HpReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

HpReal& HpReal::operator=(const HpReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

HpReal& HpReal::operator=(HpReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

HpReal::~HpReal() { mpfr_clear(v_); }

HpReal HpReal::from_long(long v, long prec) {
    HpReal r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

HpReal HpReal::from_double(double v, long prec) {
    HpReal r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

HpReal HpReal::from_rational(const Rational& q, long prec) {
    HpReal r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

HpReal HpReal::from_string(const std::string& s, long prec) {
    HpReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("hp_real: cannot parse '" + s + "'");
    return r;
}

HpReal HpReal::ln2(long prec) {
    HpReal r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::pi(long prec) {
    HpReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::pow2(long e, long prec) {
    HpReal r(prec);
    mpfr_set_si(r.v_, 1, MPFR_RNDN);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

long HpReal::precision() const { return mpfr_get_prec(v_); }

namespace {
long join_prec(const HpReal& a, const HpReal& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

HpReal HpReal::operator+(const HpReal& o) const {
    HpReal r(join_prec(*this, o));
    mpfr_add(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::operator-(const HpReal& o) const {
    HpReal r(join_prec(*this, o));
    mpfr_sub(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::operator*(const HpReal& o) const {
    HpReal r(join_prec(*this, o));
    mpfr_mul(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::operator/(const HpReal& o) const {
    HpReal r(join_prec(*this, o));
    mpfr_div(r.raw(), v_, o.v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::operator-() const {
    HpReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

HpReal& HpReal::operator+=(const HpReal& o) { return *this = *this + o; }
HpReal& HpReal::operator-=(const HpReal& o) { return *this = *this - o; }
HpReal& HpReal::operator*=(const HpReal& o) { return *this = *this * o; }
HpReal& HpReal::operator/=(const HpReal& o) { return *this = *this / o; }

HpReal HpReal::abs() const {
    HpReal r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::sqrt() const {
    HpReal r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::pow_int(long e) const {
    HpReal r(precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

int HpReal::cmp(const HpReal& o) const { return mpfr_cmp(v_, o.v_); }

bool HpReal::is_zero() const { return mpfr_zero_p(v_) != 0; }

double HpReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string HpReal::str(std::size_t digits) const {
    mpfr_exp_t exp;
    char* raw = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
    if (!raw) return "nan";
    std::string mant(raw);
    mpfr_free_str(raw);
    bool neg = !mant.empty() && mant.front() == '-';
    if (neg) mant.erase(mant.begin());
    if (mant.empty()) mant = "0";
    std::string out = (neg ? "-" : "");
    out += "0." + mant + "e" + std::to_string(exp);
    return out;
}

}  // namespace mhslab
