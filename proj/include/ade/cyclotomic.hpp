#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace ade {

using Int = mpz_class;
using Rat = mpq_class;

long euler_phi(long m);
std::vector<long> divisors(long m);

/// x reduced into [0, m).
inline long pos_mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

/// Coefficients of the m-th cyclotomic polynomial, low degree first.
/// Monic of degree phi(m); cyclotomic_poly(6) == {1, -1, 1}.
std::vector<Int> cyclotomic_poly(long m);

/// Shared per-order data for arithmetic in Z[zeta_m] = Z[x]/Phi_m(x):
/// the modulus and the reduction of every power x^j, j in [0, m).
/// Instances are immutable after construction and cached per order, so
/// they can be shared freely across threads.
class CycloRing {
public:
    static std::shared_ptr<const CycloRing> get(long order);

    long order() const { return order_; }
    long degree() const { return degree_; }
    const std::vector<Int>& modulus() const { return modulus_; }

    /// Canonical coefficients of x^(e mod order), length degree().
    const std::vector<Int>& power(long e) const {
        return powers_[pos_mod(e, order_)];
    }

private:
    explicit CycloRing(long order);

    long order_;
    long degree_;
    std::vector<Int> modulus_;
    std::vector<std::vector<Int>> powers_;
};

/// Exact element of the cyclotomic integer ring of a given order, stored in
/// the power basis 1, z, ..., z^(phi(order)-1) modulo Phi_order.  The
/// representation is canonical: two values are equal iff their coefficient
/// vectors are identical.  Values are immutable in spirit; all operations
/// return new values and may run concurrently.
class CycloInt {
public:
    CycloInt() = default;

    static CycloInt zero(long order);
    static CycloInt one(long order);
    static CycloInt from_int(long order, const Int& c);
    /// z^e for any integer e (reduced mod order).
    static CycloInt zeta_pow(long order, long e);

    long order() const { return ring_ ? ring_->order() : 0; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    /// If the value is a rational integer c, returns it.
    bool as_int(Int& out) const;

    CycloInt operator-() const;
    CycloInt operator+(const CycloInt& rhs) const;
    CycloInt operator-(const CycloInt& rhs) const;
    CycloInt operator*(const CycloInt& rhs) const;
    CycloInt operator*(const Int& scalar) const;

    /// this += scalar * x, without temporaries.  x must share the order.
    void add_scaled(const Int& scalar, const CycloInt& x);

    /// Image under the ring automorphism z -> z^ell; requires
    /// gcd(ell, order) == 1.
    CycloInt galois(long ell) const;

    friend bool operator==(const CycloInt& a, const CycloInt& b) {
        return a.order() == b.order() && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycloInt& a, const CycloInt& b) {
        return !(a == b);
    }

    std::string to_string() const;

private:
    CycloInt(std::shared_ptr<const CycloRing> ring, std::vector<Int> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}
    void require_same_order(const CycloInt& rhs) const;

    std::shared_ptr<const CycloRing> ring_;
    std::vector<Int> coeffs_;
};

}  // namespace ade
