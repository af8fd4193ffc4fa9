#pragma once

#include <memory>
#include <vector>

#include "ade/certified.hpp"
#include "ade/cyclotomic.hpp"

namespace ade {

/// Modular data for affine A1 at a fixed n >= 3: labels P+ = {1..n-1}, the
/// rescaled S-matrix St(a,b) = z^(ab) - z^(-ab) over the cyclotomic ring of
/// order 2n (z a primitive 2n-th root of unity), and the T-residues
/// a^2 mod 4n.  The rescaling drops the nonzero scalar relating St to the
/// unitary S, so commutation equations are unchanged and stay in exact
/// integer arithmetic.  Immutable after construction.
class ModularData {
public:
    explicit ModularData(long n);

    long n() const { return n_; }
    long order() const { return 2 * n_; }
    const std::shared_ptr<const CycloRing>& ring() const { return ring_; }

    /// St(a,b), 1-based labels in P+.
    const CycloInt& s(long a, long b) const {
        return s_[(a - 1) * (n_ - 1) + (b - 1)];
    }
    /// a^2 mod 4n.
    long t_residue(long a) const { return t_[a - 1]; }
    /// The simple-current partner n - a.
    long j(long a) const { return n_ - a; }

private:
    long n_;
    std::shared_ptr<const CycloRing> ring_;
    std::vector<CycloInt> s_;
    std::vector<long> t_;
};

ModularData build_modular_data(long n);

/// Exact structural identities of the modular data; all decided in the
/// cyclotomic ring with zero tolerance.
bool s_is_symmetric(const ModularData& md);
bool s_squared_is_minus_2n(const ModularData& md);
bool j_sign_identity_holds(const ModularData& md);
/// galois(ell, St(a,b)) == eps_ell(a) * St([ell a], b) over every ell
/// coprime to 2n and all labels.
bool galois_covariance_holds(const ModularData& md);

/// Certified approximation of sin(pi * k / n) with interval width below
/// 10^(-digits); digits must be >= 15.
Interval sin_approx(long n, long k, int digits);

}  // namespace ade
