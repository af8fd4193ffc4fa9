#include "ade/galois.hpp"

#include <numeric>

#include "ade/certified.hpp"
#include "ade/modular_data.hpp"

namespace ade {

EllSets ell_sets(long n) {
    if (n < 3) throw std::invalid_argument("ell_sets: n must be >= 3");
    EllSets out;
    for (long ell = 1; ell < 2 * n; ++ell) {
        if (std::gcd(ell, 2 * n) == 1) out.L.push_back(ell);
        if (std::gcd(ell, n) == 1) out.Lprime.push_back(ell);
    }
    return out;
}

std::pair<long, int> galois_perm(long n, long ell, long a) {
    if (std::gcd(pos_mod(ell, 2 * n), 2 * n) != 1)
        throw std::invalid_argument("galois_perm: ell not coprime to 2n");
    if (a < 1 || a >= n) throw std::invalid_argument("galois_perm: a not in P+");
    const long r = pos_mod(ell * a, 2 * n);
    // r = n would force a = n; cannot happen for gcd(ell, 2n) = 1.
    return r < n ? std::make_pair(r, 1) : std::make_pair(2 * n - r, -1);
}

GaloisAction galois_action(long n, long ell) {
    GaloisAction act;
    act.n = n;
    act.ell = ell;
    act.perm.resize(n - 1);
    act.sign.resize(n - 1);
    for (long a = 1; a < n; ++a) {
        auto [la, eps] = galois_perm(n, ell, a);
        act.perm[a - 1] = la;
        act.sign[a - 1] = eps;
    }
    return act;
}

std::vector<GaloisViolation> check_galois_symmetry(const Invariant& inv) {
    const long n = inv.n;
    std::vector<GaloisViolation> out;
    for (long ell : ell_sets(n).L) {
        GaloisAction act = galois_action(n, ell);
        for (long a = 1; a < n; ++a) {
            for (long b = 1; b < n; ++b) {
                const int s = act.sign[a - 1] * act.sign[b - 1];
                const Int& image = inv.at(act.perm[a - 1], act.perm[b - 1]);
                if (inv.at(a, b) != (s > 0 ? image : Int(-image)))
                    out.push_back({ell, a, b});
            }
        }
    }
    return out;
}

std::vector<GaloisViolation> check_galois_selection(const Invariant& inv) {
    const long n = inv.n;
    std::vector<GaloisViolation> out;
    for (long ell : ell_sets(n).L) {
        GaloisAction act = galois_action(n, ell);
        for (long a = 1; a < n; ++a)
            for (long b = 1; b < n; ++b)
                if (inv.at(a, b) != 0 && act.sign[a - 1] != act.sign[b - 1])
                    out.push_back({ell, a, b});
    }
    return out;
}

namespace {

// Decide cos(pi k1 / n) > cos(pi k2 / n) with certified intervals,
// escalating precision; exact ring arithmetic settles the (never observed)
// tie case so rounding cannot misclassify.
bool cos_strictly_greater(long k1, long k2, long n, int digits) {
    bool tie_checked = false;
    for (int d = digits;; d *= 2) {
        const long prec = digits_to_bits(d);
        Interval c1 = cos_pi_frac(k1, n, prec);
        Interval c2 = cos_pi_frac(k2, n, prec);
        if (c1.definitely_gt(c2)) return true;
        if (c2.definitely_gt(c1)) return false;
        if (!tie_checked) {
            const long m = 2 * n;
            CycloInt diff = CycloInt::zeta_pow(m, k1) + CycloInt::zeta_pow(m, -k1) -
                            CycloInt::zeta_pow(m, k2) - CycloInt::zeta_pow(m, -k2);
            if (diff.is_zero()) return false;  // equal, not strictly greater
            tie_checked = true;
        }
        if (d > 1 << 20)
            throw std::logic_error("cos comparison failed to separate");
    }
}

}  // namespace

std::set<long> frontier_scan(long n, int digits) {
    if (n < 3) throw std::invalid_argument("frontier_scan: n must be >= 3");
    if (digits <= 0) digits = default_precision_digits();
    const std::vector<long> lprime = ell_sets(n).Lprime;
    std::set<long> out;
    for (long a = 2; a <= n - 2; ++a) {
        if (((a - 1) * (a + 1)) % (4 * n) != 0) continue;
        bool admissible = true;
        for (long ell : lprime) {
            if (!cos_strictly_greater(ell * (a - 1), ell * (a + 1), n, digits)) {
                admissible = false;
                break;
            }
        }
        if (admissible) out.insert(a);
    }
    return out;
}

ParityReport check_parity(const Invariant& inv) {
    const long n = inv.n;
    ParityReport rep{};
    const long corner_label[2] = {1, n - 1};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Int& v = inv.at(corner_label[i], corner_label[j]);
            if (v < 0 || v > 1)
                throw std::invalid_argument(
                    "check_parity: corner entry outside {0,1}; input is not "
                    "physical");
            rep.corner[i][j] = static_cast<int>(v.get_si());
        }
    }
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (rep.corner[i][j] != 1) continue;
            for (long a = 1; a < n && rep.symmetry_ok; ++a) {
                for (long b = 1; b < n; ++b) {
                    const long ja = i ? n - a : a;
                    const long jb = j ? n - b : b;
                    if (inv.at(ja, jb) != inv.at(a, b)) {
                        rep.symmetry_ok = false;
                        break;
                    }
                    if (inv.at(a, b) != 0 &&
                        pos_mod((a + 1) * i - (b + 1) * j, 2) != 0) {
                        rep.selection_ok = false;
                    }
                }
            }
        }
    }
    return rep;
}

std::optional<std::vector<long>> check_permutation_form(const ModularData& md,
                                                        const Invariant& inv) {
    const long n = inv.n;
    if (inv.at(1, 1) != 1) return std::nullopt;
    for (long a = 2; a < n; ++a)
        if (inv.at(a, 1) != 0) return std::nullopt;

    std::vector<long> perm(n - 1, 0);
    std::vector<bool> hit(n, false);
    for (long a = 1; a < n; ++a) {
        long image = 0;
        for (long b = 1; b < n; ++b) {
            const Int& v = inv.at(a, b);
            if (v == 0) continue;
            if (v != 1 || image != 0)
                throw StructureViolation(
                    "trivial first column but row " + std::to_string(a) +
                    " is not a unit row");
            image = b;
        }
        if (image == 0 || hit[image])
            throw StructureViolation("trivial first column but the matrix is "
                                     "not a permutation");
        hit[image] = true;
        perm[a - 1] = image;
    }
    for (long a = 1; a < n; ++a)
        for (long b = 1; b < n; ++b)
            if (md.s(perm[a - 1], perm[b - 1]) != md.s(a, b))
                throw StructureViolation(
                    "permutation does not preserve the S matrix at (" +
                    std::to_string(a) + "," + std::to_string(b) + ")");
    return perm;
}

PairBlockReport check_pair_block_form(const Invariant& inv) {
    const long n = inv.n;
    const long j1 = n - 1;
    PairBlockReport rep;
    bool corners = inv.at(1, 1) == 1 && inv.at(1, j1) == 1 &&
                   inv.at(j1, 1) == 1 && inv.at(j1, j1) == 1;
    bool rest_trivial = true;
    for (long a = 2; a < n - 1 && rest_trivial; ++a)
        if (inv.at(a, 1) != 0 || inv.at(1, a) != 0) rest_trivial = false;
    if (!corners || !rest_trivial) return rep;
    rep.applicable = true;

    for (long a = 1; a < n; ++a) {
        const bool zero_row = inv.row_is_zero(a);
        const bool zero_col = inv.col_is_zero(a);
        if (zero_row != (a % 2 == 0) || zero_col != (a % 2 == 0))
            throw StructureViolation("row/column " + std::to_string(a) +
                                     " zeroness does not match parity");
    }

    const long half = (n % 2 == 0) ? n / 2 : 0;
    for (long a = 1; a < n; ++a) {
        if (a == half) continue;
        for (long b = 1; b < n; ++b) {
            if (b == half || inv.at(a, b) == 0) continue;
            for (long c = 1; c < n; ++c) {
                const Int want_row = (c == b || c == n - b) ? 1 : 0;
                const Int want_col = (c == a || c == n - a) ? 1 : 0;
                if (inv.at(a, c) != want_row || inv.at(c, b) != want_col)
                    throw StructureViolation(
                        "support at (" + std::to_string(a) + "," +
                        std::to_string(b) + ") is not a {b, Jb} pair block");
            }
        }
    }
    rep.pass = true;
    return rep;
}

}  // namespace ade
