#pragma once

#include <mpfr.h>

#include <string>

#include "ade/cyclotomic.hpp"

namespace ade {

/// Decimal digits used for certified evaluations; the ADE_PRECISION
/// environment variable overrides the default of 30.
int default_precision_digits();
long digits_to_bits(int digits);

/// Closed interval [lo, hi] guaranteed to contain the exact value, with all
/// endpoint arithmetic outward-rounded.  Only the operations the certified
/// paths need are provided; equality decisions never go through here.
class Interval {
public:
    explicit Interval(long prec_bits);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    static Interval exact_long(long v, long prec_bits);
    static Interval exact_rational(const Rat& v, long prec_bits);

    long precision_bits() const { return prec_; }
    double lo_double() const;  // rounded down
    double hi_double() const;  // rounded up
    double width_double() const;
    std::string to_string(int digits) const;
    /// True when the decimal literal provably lies inside the interval.
    bool contains_decimal(const std::string& value) const;

    bool contains_zero() const;
    bool definitely_positive() const;  // lo > 0
    bool definitely_gt(const Interval& rhs) const;   // lo > rhs.hi
    bool definitely_gt_long(long v) const;           // lo > v
    bool possibly_gt_long(long v) const;             // hi > v

    Interval operator+(const Interval& rhs) const;
    Interval operator-(const Interval& rhs) const;
    Interval operator*(const Interval& rhs) const;
    Interval& operator+=(const Interval& rhs);

    /// this + scalar * rhs for an integer scalar of either sign.
    Interval add_scaled(const Int& scalar, const Interval& rhs) const;

    /// Largest integer t >= 0 such that lo + t * coef.lo <= budget may still
    /// hold; permissive by construction (never excludes a feasible t).
    /// Requires coef.lo > 0.  Returns -1 when even t = 0 is infeasible.
    long max_feasible_steps(const Interval& coef, long budget) const;

    /// n / (2 * this), for this with lo > 0.
    Interval half_n_over(long n) const;

    friend Interval sin_pi_frac(long k, long n, long prec_bits);
    friend Interval cos_pi_frac(long k, long n, long prec_bits);

private:
    void set_exact_long(long v);

    mpfr_t lo_, hi_;
    long prec_;
};

/// sin(pi * k / n) as a certified interval, any integer k.
Interval sin_pi_frac(long k, long n, long prec_bits);
/// cos(pi * k / n) as a certified interval, any integer k.
Interval cos_pi_frac(long k, long n, long prec_bits);

/// Numeric embedding of a cyclotomic integer at the canonical primitive
/// root zeta = exp(2*pi*i/order); certified real and imaginary parts.
struct ComplexInterval {
    Interval re, im;
};
ComplexInterval embed_numeric(const CycloInt& x, long prec_bits);

}  // namespace ade
