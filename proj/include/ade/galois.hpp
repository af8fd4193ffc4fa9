#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ade/invariant.hpp"

namespace ade {

class ModularData;

/// Raised when an input that verifies as physical contradicts established
/// structural results; indicates an implementation bug somewhere and is
/// treated as a hard failure by the CLI.
class StructureViolation : public std::runtime_error {
public:
    explicit StructureViolation(const std::string& what)
        : std::runtime_error(what) {}
};

struct EllSets {
    std::vector<long> L;       // 1 <= ell < 2n, gcd(ell, 2n) = 1
    std::vector<long> Lprime;  // 1 <= ell < 2n, gcd(ell, n) = 1
};
EllSets ell_sets(long n);

/// The Galois action for one ell coprime to 2n: the permutation a -> [ell a]
/// of P+ and the signs eps_ell(a).  With {x} the residue of x mod 2n in
/// [0, 2n): if {ell a} < n then [ell a] = {ell a} with sign +1, else
/// [ell a] = 2n - {ell a} with sign -1; {ell a} = n cannot occur.
struct GaloisAction {
    long n = 0, ell = 0;
    std::vector<long> perm;  // index a-1 -> [ell a]
    std::vector<int> sign;   // index a-1 -> eps_ell(a)
};
GaloisAction galois_action(long n, long ell);
std::pair<long, int> galois_perm(long n, long ell, long a);

struct GaloisViolation {
    long ell, a, b;
};

/// Violations of M(a,b) = eps(a) eps(b) M([la],[lb]) over all ell in L.
std::vector<GaloisViolation> check_galois_symmetry(const Invariant& inv);
/// Violations of the sign selection rule: M(a,b) != 0 requires
/// eps_ell(a) = eps_ell(b) for every ell in L.
std::vector<GaloisViolation> check_galois_selection(const Invariant& inv);

/// Labels a outside {1, J1} that could carry a nonzero first-row entry:
/// (a-1)(a+1) = 0 mod 4n together with the cosine dominance
/// cos(pi l (a-1) / n) > cos(pi l (a+1) / n) for every l in L'.  The
/// inequality is decided by certified intervals with an exact cyclotomic
/// sign fallback, so rounding can never misclassify.
std::set<long> frontier_scan(long n, int digits = 0);

/// The four corner values M(J^i 1, J^j 1), the induced symmetry
/// M(J^i a, J^j b) = M(a,b) for corners equal to 1, and the parity
/// selection rule on the support.
struct ParityReport {
    int corner[2][2];
    bool symmetry_ok = true;
    bool selection_ok = true;
    bool pass() const { return symmetry_ok && selection_ok; }
};
ParityReport check_parity(const Invariant& inv);

/// If the first column of M is trivial (only M(1,1) = 1), M must be a
/// permutation matrix whose permutation preserves St exactly; returns that
/// permutation (index a-1 -> pi(a)).  Returns nullopt when the hypothesis
/// does not apply.  Throws StructureViolation if the hypothesis holds but
/// the conclusion fails.
std::optional<std::vector<long>> check_permutation_form(const ModularData& md,
                                                        const Invariant& inv);

/// Structure check for invariants whose first row and column live exactly on
/// {1, J1} with unit corners: rows and columns vanish exactly at even
/// labels, and away from the fixed point n/2 the support comes in 2x2
/// all-ones blocks on {b, Jb}.  Throws StructureViolation on a structural
/// failure; applicable == false when the hypothesis does not hold.
struct PairBlockReport {
    bool applicable = false;
    bool pass = false;
};
PairBlockReport check_pair_block_form(const Invariant& inv);

}  // namespace ade
