#include "ade/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ade {

long euler_phi(long m) {
    long result = m;
    long x = m;
    for (long p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            result -= result / p;
            while (x % p == 0) x /= p;
        }
    }
    if (x > 1) result -= result / x;
    return result;
}

std::vector<long> divisors(long m) {
    std::vector<long> out;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Quotient of exact polynomial division; remainder must vanish.
std::vector<Int> poly_div_exact(const std::vector<Int>& num,
                                const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    const long dn = static_cast<long>(num.size()) - 1;
    const long dd = static_cast<long>(den.size()) - 1;
    if (dn < dd) throw std::logic_error("poly_div_exact: degree underflow");
    std::vector<Int> quot(dn - dd + 1);
    for (long k = dn - dd; k >= 0; --k) {
        Int q;
        mpz_divexact(q.get_mpz_t(), rem[k + dd].get_mpz_t(),
                     den[dd].get_mpz_t());
        quot[k] = q;
        for (long i = 0; i <= dd; ++i) rem[k + i] -= q * den[i];
    }
    for (const Int& c : rem)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

std::mutex g_cyclo_mutex;
std::map<long, std::vector<Int>> g_cyclo_cache;
std::map<long, std::shared_ptr<const CycloRing>> g_ring_cache;

std::vector<Int> cyclotomic_poly_locked(long m) {
    auto it = g_cyclo_cache.find(m);
    if (it != g_cyclo_cache.end()) return it->second;
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Int> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (long d : divisors(m)) {
        if (d == m) continue;
        num = poly_div_exact(num, cyclotomic_poly_locked(d));
    }
    g_cyclo_cache.emplace(m, num);
    return num;
}

}  // namespace

std::vector<Int> cyclotomic_poly(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be >= 1");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_poly_locked(m);
}

CycloRing::CycloRing(long order) : order_(order) {
    modulus_ = cyclotomic_poly(order);
    degree_ = static_cast<long>(modulus_.size()) - 1;
    powers_.resize(order);
    for (long j = 0; j < order && j < degree_; ++j) {
        powers_[j].assign(degree_, Int(0));
        powers_[j][j] = 1;
    }
    // x^j = x * x^(j-1) - leading * Phi, iterated.
    for (long j = degree_; j < order; ++j) {
        std::vector<Int> row(degree_, Int(0));
        const std::vector<Int>& prev = powers_[j - 1];
        const Int& lead = prev[degree_ - 1];
        for (long i = 0; i < degree_; ++i) {
            if (i > 0) row[i] = prev[i - 1];
            row[i] -= lead * modulus_[i];
        }
        powers_[j] = std::move(row);
    }
}

std::shared_ptr<const CycloRing> CycloRing::get(long order) {
    if (order < 1) throw std::invalid_argument("CycloRing: order must be >= 1");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = g_ring_cache.find(order);
    if (it != g_ring_cache.end()) return it->second;
    auto ring = std::shared_ptr<const CycloRing>(new CycloRing(order));
    g_ring_cache.emplace(order, ring);
    return ring;
}

CycloInt CycloInt::zero(long order) {
    auto ring = CycloRing::get(order);
    std::vector<Int> c(ring->degree(), Int(0));
    return CycloInt(std::move(ring), std::move(c));
}

CycloInt CycloInt::one(long order) { return from_int(order, Int(1)); }

CycloInt CycloInt::from_int(long order, const Int& c) {
    auto ring = CycloRing::get(order);
    std::vector<Int> v(ring->degree(), Int(0));
    v[0] = c;
    return CycloInt(std::move(ring), std::move(v));
}

CycloInt CycloInt::zeta_pow(long order, long e) {
    auto ring = CycloRing::get(order);
    std::vector<Int> v = ring->power(e);
    return CycloInt(std::move(ring), std::move(v));
}

bool CycloInt::is_zero() const {
    for (const Int& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloInt::as_int(Int& out) const {
    if (coeffs_.empty()) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    out = coeffs_[0];
    return true;
}

void CycloInt::require_same_order(const CycloInt& rhs) const {
    if (order() != rhs.order())
        throw std::invalid_argument("CycloInt: mixed orders " +
                                    std::to_string(order()) + " vs " +
                                    std::to_string(rhs.order()));
}

CycloInt CycloInt::operator-() const {
    std::vector<Int> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return CycloInt(ring_, std::move(v));
}

CycloInt CycloInt::operator+(const CycloInt& rhs) const {
    require_same_order(rhs);
    std::vector<Int> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] + rhs.coeffs_[i];
    return CycloInt(ring_, std::move(v));
}

CycloInt CycloInt::operator-(const CycloInt& rhs) const {
    require_same_order(rhs);
    std::vector<Int> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] - rhs.coeffs_[i];
    return CycloInt(ring_, std::move(v));
}

CycloInt CycloInt::operator*(const CycloInt& rhs) const {
    require_same_order(rhs);
    const long deg = ring_->degree();
    // Convolution first; monomials of degree >= deg fold in via the
    // precomputed power table (exponents live mod order since z^order = 1).
    std::vector<Int> conv(2 * deg - 1);
    for (long i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    std::vector<Int> v(conv.begin(), conv.begin() + deg);
    for (long k = deg; k < 2 * deg - 1; ++k) {
        if (conv[k] == 0) continue;
        const std::vector<Int>& row = ring_->power(k);
        for (long i = 0; i < deg; ++i) {
            if (row[i] != 0) v[i] += conv[k] * row[i];
        }
    }
    return CycloInt(ring_, std::move(v));
}

CycloInt CycloInt::operator*(const Int& scalar) const {
    std::vector<Int> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * scalar;
    return CycloInt(ring_, std::move(v));
}

void CycloInt::add_scaled(const Int& scalar, const CycloInt& x) {
    require_same_order(x);
    if (scalar == 0) return;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (x.coeffs_[i] != 0)
            mpz_addmul(coeffs_[i].get_mpz_t(), scalar.get_mpz_t(),
                       x.coeffs_[i].get_mpz_t());
    }
}

CycloInt CycloInt::galois(long ell) const {
    const long m = order();
    if (std::gcd(pos_mod(ell, m), m) != 1)
        throw std::invalid_argument("CycloInt::galois: ell not coprime to order");
    const long deg = ring_->degree();
    std::vector<Int> v(deg, Int(0));
    for (long k = 0; k < deg; ++k) {
        if (coeffs_[k] == 0) continue;
        const std::vector<Int>& row = ring_->power(k * (ell % m));
        for (long i = 0; i < deg; ++i) {
            if (row[i] != 0) v[i] += coeffs_[k] * row[i];
        }
    }
    return CycloInt(ring_, std::move(v));
}

std::string CycloInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) os << "-";
        Int a = abs(coeffs_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace ade
