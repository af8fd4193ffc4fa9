#include "ade/certified.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ade {

int default_precision_digits() {
    static const int digits = [] {
        const char* env = std::getenv("ADE_PRECISION");
        if (env) {
            int d = std::atoi(env);
            if (d >= 15) return d;
        }
        return 30;
    }();
    return digits;
}

long digits_to_bits(int digits) {
    // log2(10) ~ 3.322, plus guard bits for the handful of roundings.
    return static_cast<long>(digits * 3.3220) + 24;
}

Interval::Interval(long prec_bits) : prec_(prec_bits) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
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

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.prec_);
        mpfr_set_prec(hi_, other.prec_);
        prec_ = other.prec_;
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    if (this != &other) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
        std::swap(prec_, other.prec_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void Interval::set_exact_long(long v) {
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval Interval::exact_long(long v, long prec_bits) {
    Interval r(prec_bits);
    r.set_exact_long(v);
    return r;
}

Interval Interval::exact_rational(const Rat& v, long prec_bits) {
    Interval r(prec_bits);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::width_double() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool Interval::contains_decimal(const std::string& value) const {
    mpfr_t vd, vu;
    mpfr_init2(vd, prec_);
    mpfr_init2(vu, prec_);
    mpfr_set_str(vd, value.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(vu, value.c_str(), 10, MPFR_RNDU);
    bool ok = mpfr_cmp(lo_, vd) <= 0 && mpfr_cmp(vu, hi_) <= 0;
    mpfr_clear(vd);
    mpfr_clear(vu);
    return ok;
}

std::string Interval::to_string(int digits) const {
    // Midpoint display; the enclosure itself stays internal.
    mpfr_t mid;
    mpfr_init2(mid, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, mid);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(mid);
    return out;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::definitely_positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::definitely_gt(const Interval& rhs) const {
    return mpfr_cmp(lo_, rhs.hi_) > 0;
}

bool Interval::definitely_gt_long(long v) const {
    return mpfr_cmp_si(lo_, v) > 0;
}

bool Interval::possibly_gt_long(long v) const {
    return mpfr_cmp_si(hi_, v) > 0;
}

Interval Interval::operator+(const Interval& rhs) const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
    return r;
}

Interval& Interval::operator+=(const Interval& rhs) {
    mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
    return *this;
}

Interval Interval::operator-(const Interval& rhs) const {
    Interval r(prec_);
    mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& rhs) const {
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    // lo = min of the four endpoint products rounded down.
    mpfr_mul(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi = max rounded up.
    mpfr_mul(r.hi_, lo_, rhs.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::add_scaled(const Int& scalar, const Interval& rhs) const {
    Interval r(*this);
    mpfr_t t;
    mpfr_init2(t, prec_);
    const bool nonneg = sgn(scalar) >= 0;
    mpfr_mul_z(t, nonneg ? rhs.lo_ : rhs.hi_, scalar.get_mpz_t(), MPFR_RNDD);
    mpfr_add(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul_z(t, nonneg ? rhs.hi_ : rhs.lo_, scalar.get_mpz_t(), MPFR_RNDU);
    mpfr_add(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

long Interval::max_feasible_steps(const Interval& coef, long budget) const {
    if (!(mpfr_sgn(coef.lo_) > 0))
        throw std::invalid_argument("max_feasible_steps: coef must be positive");
    if (mpfr_cmp_si(lo_, budget) > 0) return -1;
    mpfr_t num, q;
    mpfr_init2(num, prec_);
    mpfr_init2(q, prec_);
    mpfr_si_sub(num, budget, lo_, MPFR_RNDU);
    mpfr_div(q, num, coef.lo_, MPFR_RNDU);
    mpfr_floor(q, q);
    long t;
    if (mpfr_cmp_si(q, 1L << 40) > 0)
        t = 1L << 40;  // effectively unbounded; caller clamps further
    else
        t = mpfr_get_si(q, MPFR_RNDZ);
    mpfr_clear(num);
    mpfr_clear(q);
    return t < 0 ? -1 : t;
}

Interval Interval::half_n_over(long n) const {
    if (!definitely_positive())
        throw std::invalid_argument("half_n_over: interval must be positive");
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_mul_ui(t, hi_, 2, MPFR_RNDU);
    mpfr_si_div(r.lo_, n, t, MPFR_RNDD);
    mpfr_mul_ui(t, lo_, 2, MPFR_RNDD);
    mpfr_si_div(r.hi_, n, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

namespace {

// x = pi * k / n with directed rounding; k in (0, n), result in (0, pi).
void pi_frac(mpfr_t out, long k, long n, mpfr_rnd_t rnd) {
    mpfr_const_pi(out, rnd);
    mpfr_mul_si(out, out, k, rnd);
    mpfr_div_si(out, out, n, rnd);
}

}  // namespace

Interval sin_pi_frac(long k, long n, long prec_bits) {
    if (n < 1) throw std::invalid_argument("sin_pi_frac: n must be >= 1");
    long r = pos_mod(k, 2 * n);
    int sign = 1;
    if (r >= n) {
        r -= n;
        sign = -1;
    }
    if (r > n - r) r = n - r;  // sin(pi - x) = sin(x); now 2*r <= n
    Interval out(prec_bits);
    if (r == 0) return sign < 0 ? Interval::exact_long(0, prec_bits) : out;
    if (2 * r == n) {
        out.set_exact_long(sign);
        return out;
    }
    // 0 < pi*r/n < pi/2: sin is increasing there, and the outward-rounded
    // argument endpoints stay well inside the monotone hump.
    mpfr_t x;
    mpfr_init2(x, prec_bits);
    pi_frac(x, r, n, MPFR_RNDD);
    mpfr_sin(out.lo_, x, MPFR_RNDD);
    pi_frac(x, r, n, MPFR_RNDU);
    mpfr_sin(out.hi_, x, MPFR_RNDU);
    mpfr_clear(x);
    if (mpfr_cmp_si(out.hi_, 1) > 0) mpfr_set_si(out.hi_, 1, MPFR_RNDU);
    if (mpfr_sgn(out.lo_) < 0) mpfr_set_zero(out.lo_, 1);
    if (sign < 0) {
        mpfr_swap(out.lo_, out.hi_);
        mpfr_neg(out.lo_, out.lo_, MPFR_RNDD);
        mpfr_neg(out.hi_, out.hi_, MPFR_RNDU);
    }
    return out;
}

Interval cos_pi_frac(long k, long n, long prec_bits) {
    if (n < 1) throw std::invalid_argument("cos_pi_frac: n must be >= 1");
    long r = pos_mod(k, 2 * n);
    if (r > n) r = 2 * n - r;  // cos(2pi - x) = cos(x); now 0 <= r <= n
    Interval out(prec_bits);
    if (r == 0) {
        out.set_exact_long(1);
        return out;
    }
    if (r == n) {
        out.set_exact_long(-1);
        return out;
    }
    if (2 * r == n) return out;  // cos(pi/2) = 0 exactly
    // 0 < pi*r/n < pi: cos is decreasing there.
    mpfr_t x;
    mpfr_init2(x, prec_bits);
    pi_frac(x, r, n, MPFR_RNDU);
    mpfr_cos(out.lo_, x, MPFR_RNDD);
    pi_frac(x, r, n, MPFR_RNDD);
    mpfr_cos(out.hi_, x, MPFR_RNDU);
    mpfr_clear(x);
    if (mpfr_cmp_si(out.hi_, 1) > 0) mpfr_set_si(out.hi_, 1, MPFR_RNDU);
    if (mpfr_cmp_si(out.lo_, -1) < 0) mpfr_set_si(out.lo_, -1, MPFR_RNDD);
    return out;
}

ComplexInterval embed_numeric(const CycloInt& x, long prec_bits) {
    const long m = x.order();
    ComplexInterval acc{Interval(prec_bits), Interval(prec_bits)};
    const auto& c = x.coeffs();
    for (long k = 0; k < static_cast<long>(c.size()); ++k) {
        if (c[k] == 0) continue;
        // zeta^k = cos(2 pi k / m) + i sin(2 pi k / m)
        acc.re = acc.re.add_scaled(c[k], cos_pi_frac(2 * k, m, prec_bits));
        acc.im = acc.im.add_scaled(c[k], sin_pi_frac(2 * k, m, prec_bits));
    }
    return acc;
}

}  // namespace ade
