#pragma once

#include <string>
#include <vector>

#include "ade/invariant.hpp"

namespace ade {

/// The named families of physical invariants.  A exists for every n >= 3;
/// D for even n >= 4 (a permutation matrix when 4 | n, the paired block
/// form when n = 2 mod 4); E6, E7, E8 only at n = 12, 18, 30.
/// Throws invalid_argument for inapplicable label/n combinations.
Invariant build_series(long n, Label label);

/// All applicable family matrices at n, deduplicated as matrices
/// (D at n = 4 coincides with A and appears once).
std::vector<Invariant> theorem_list(long n);

/// Sorted multiset of diagonal labels: a appears with multiplicity M(a,a).
std::vector<long> exponents(const Invariant& inv);

/// Human-readable partition function.  Indecomposable all-ones square
/// blocks on an index set B render as |χ_b1+...|²; everything else renders
/// term by term with row/column grouping.  parse_partition_function
/// round-trips the output.
std::string render_partition_function(const Invariant& inv);
Invariant parse_partition_function(long n, const std::string& text);

}  // namespace ade
