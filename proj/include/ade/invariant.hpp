#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ade/cyclotomic.hpp"

namespace ade {

enum class Label { A, D, E6, E7, E8, Unknown };

std::string label_name(Label l);
Label label_from_name(const std::string& s);  // throws on unknown name

/// A candidate physical invariant: an (n-1) x (n-1) matrix of nonnegative
/// integers with 1-based labels a, b in P+, plus an optional family tag.
struct Invariant {
    long n = 0;
    std::vector<Int> m;  // row major, (n-1)^2 entries
    Label label = Label::Unknown;

    Invariant() = default;
    explicit Invariant(long n_) : n(n_), m((n_ - 1) * (n_ - 1)) {}

    Int& at(long a, long b) { return m[(a - 1) * (n - 1) + (b - 1)]; }
    const Int& at(long a, long b) const { return m[(a - 1) * (n - 1) + (b - 1)]; }

    bool is_identity() const;
    bool row_is_zero(long a) const;
    bool col_is_zero(long b) const;
};

/// Entry-wise equality; labels are metadata and do not participate.
bool same_matrix(const Invariant& x, const Invariant& y);
bool lex_less(const Invariant& x, const Invariant& y);

/// Text format: first line n, then n-1 lines of n-1 entries.
std::string to_matrix_file(const Invariant& inv);
Invariant read_matrix_file(std::istream& in);
Invariant read_matrix_file(const std::string& path);

}  // namespace ade
