#pragma once

#include <mpfr.h>

#include <string>

#include "polycert/rat.hpp"

namespace polycert {

// Closed interval with outward-rounded endpoints at fixed binary precision.
// Every arithmetic result encloses the exact value.
class Interval {
public:
    static constexpr int kDefaultPrecision = 128;

    explicit Interval(int prec = kDefaultPrecision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(Interval other);
    ~Interval();

    static Interval exact(long v, int prec = kDefaultPrecision);
    static Interval enclose(const Rat& q, int prec = kDefaultPrecision);
    // certified enclosure of e^k
    static Interval exp_of_long(long k, int prec = kDefaultPrecision);
    // natural log of a positive rational
    static Interval log_of(const Rat& q, int prec = kDefaultPrecision);
    // [-m, m] where m is the upper endpoint of mag
    static Interval symmetric(const Interval& mag);

    Interval operator+(const Interval& rhs) const;
    Interval operator-(const Interval& rhs) const;
    Interval operator*(const Interval& rhs) const;
    Interval operator-() const;
    Interval pow(unsigned long e) const;
    Interval reciprocal() const;  // requires 0 not contained

    bool definitely_positive() const;
    bool definitely_nonnegative() const;
    bool contains(const Interval& other) const;  // other inside this
    bool contains_zero() const;

    // exact rational endpoints (binary floats are rationals)
    Rat lower_rat() const;
    Rat upper_rat() const;

    double lower_d() const;
    double upper_d() const;

    // decimal strings rounded outward
    std::string lower_str(int digits = 20) const;
    std::string upper_str(int digits = 20) const;

    int precision() const { return prec_; }

private:
    int prec_;
    mpfr_t lo_, hi_;

    friend void swap(Interval& a, Interval& b) noexcept;
};

void swap(Interval& a, Interval& b) noexcept;

}  // namespace polycert
