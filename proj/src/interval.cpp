#include "polycert/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace polycert {

Interval::Interval(int prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) {
    swap(*this, other);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void swap(Interval& a, Interval& b) noexcept {
    std::swap(a.prec_, b.prec_);
    mpfr_swap(a.lo_, b.lo_);
    mpfr_swap(a.hi_, b.hi_);
}

Interval Interval::exact(long v, int prec) {
    Interval out(prec);
    mpfr_set_si(out.lo_, v, MPFR_RNDD);
    mpfr_set_si(out.hi_, v, MPFR_RNDU);
    return out;
}

Interval Interval::enclose(const Rat& q, int prec) {
    Interval out(prec);
    mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
    return out;
}

Interval Interval::exp_of_long(long k, int prec) {
    Interval out(prec);
    mpfr_t arg;
    mpfr_init2(arg, prec);
    mpfr_set_si(arg, k, MPFR_RNDN);  // exact
    mpfr_exp(out.lo_, arg, MPFR_RNDD);
    mpfr_exp(out.hi_, arg, MPFR_RNDU);
    mpfr_clear(arg);
    return out;
}

Interval Interval::log_of(const Rat& q, int prec) {
    if (q <= 0) throw std::domain_error("log of non-positive rational");
    Interval out(prec);
    mpfr_t arg;
    mpfr_init2(arg, prec + 64);
    mpfr_set_q(arg, q.get_mpq_t(), MPFR_RNDD);
    mpfr_log(out.lo_, arg, MPFR_RNDD);
    mpfr_set_q(arg, q.get_mpq_t(), MPFR_RNDU);
    mpfr_log(out.hi_, arg, MPFR_RNDU);
    mpfr_clear(arg);
    return out;
}

Interval Interval::symmetric(const Interval& mag) {
    Interval out(mag.prec_);
    mpfr_set(out.hi_, mag.hi_, MPFR_RNDU);
    mpfr_neg(out.lo_, mag.hi_, MPFR_RNDD);
    return out;
}

Interval Interval::operator+(const Interval& rhs) const {
    Interval out(prec_);
    mpfr_add(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, hi_, rhs.hi_, MPFR_RNDU);
    return out;
}

Interval Interval::operator-(const Interval& rhs) const {
    Interval out(prec_);
    mpfr_sub(out.lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, hi_, rhs.lo_, MPFR_RNDU);
    return out;
}

Interval Interval::operator*(const Interval& rhs) const {
    Interval out(prec_);
    mpfr_t tmp;
    mpfr_init2(tmp, prec_);
    const mpfr_srcptr a[2] = {lo_, hi_};
    const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
    bool first = true;
    for (auto x : a)
        for (auto y : b) {
            mpfr_mul(tmp, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(tmp, out.lo_) < 0) mpfr_set(out.lo_, tmp, MPFR_RNDD);
            mpfr_mul(tmp, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(tmp, out.hi_) > 0) mpfr_set(out.hi_, tmp, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(tmp);
    return out;
}

Interval Interval::operator-() const {
    Interval out(prec_);
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
}

Interval Interval::pow(unsigned long e) const {
    Interval acc = Interval::exact(1, prec_);
    Interval base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Interval Interval::reciprocal() const {
    if (contains_zero()) throw std::domain_error("reciprocal of interval containing zero");
    Interval out(prec_);
    mpfr_ui_div(out.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(out.hi_, 1, lo_, MPFR_RNDU);
    return out;
}

bool Interval::definitely_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::definitely_nonnegative() const { return mpfr_sgn(lo_) >= 0; }

bool Interval::contains(const Interval& other) const {
    return mpfr_cmp(lo_, other.lo_) <= 0 && mpfr_cmp(other.hi_, hi_) <= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

Rat Interval::lower_rat() const {
    Rat q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return q;
}

Rat Interval::upper_rat() const {
    Rat q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return q;
}

double Interval::lower_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

namespace {

std::string fmt(mpfr_srcptr v, mpfr_rnd_t rnd, int digits) {
    std::string spec = "%." + std::to_string(digits) + "R*g";
    char* buf = nullptr;
    mpfr_asprintf(&buf, spec.c_str(), rnd, v);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

}  // namespace

std::string Interval::lower_str(int digits) const { return fmt(lo_, MPFR_RNDD, digits); }
std::string Interval::upper_str(int digits) const { return fmt(hi_, MPFR_RNDU, digits); }

}  // namespace polycert
