#include "ade/invariant.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ade {

std::string label_name(Label l) {
    switch (l) {
        case Label::A: return "A";
        case Label::D: return "D";
        case Label::E6: return "E6";
        case Label::E7: return "E7";
        case Label::E8: return "E8";
        default: return "unknown";
    }
}

Label label_from_name(const std::string& s) {
    if (s == "A") return Label::A;
    if (s == "D") return Label::D;
    if (s == "E6") return Label::E6;
    if (s == "E7") return Label::E7;
    if (s == "E8") return Label::E8;
    throw std::invalid_argument("unknown family name: " + s);
}

bool Invariant::is_identity() const {
    for (long a = 1; a < n; ++a)
        for (long b = 1; b < n; ++b)
            if (at(a, b) != (a == b ? 1 : 0)) return false;
    return true;
}

bool Invariant::row_is_zero(long a) const {
    for (long b = 1; b < n; ++b)
        if (at(a, b) != 0) return false;
    return true;
}

bool Invariant::col_is_zero(long b) const {
    for (long a = 1; a < n; ++a)
        if (at(a, b) != 0) return false;
    return true;
}

bool same_matrix(const Invariant& x, const Invariant& y) {
    return x.n == y.n && x.m == y.m;
}

bool lex_less(const Invariant& x, const Invariant& y) {
    if (x.n != y.n) return x.n < y.n;
    for (size_t i = 0; i < x.m.size(); ++i)
        if (x.m[i] != y.m[i]) return x.m[i] < y.m[i];
    return false;
}

std::string to_matrix_file(const Invariant& inv) {
    std::ostringstream os;
    os << inv.n << "\n";
    for (long a = 1; a < inv.n; ++a) {
        for (long b = 1; b < inv.n; ++b) {
            if (b > 1) os << ' ';
            os << inv.at(a, b).get_str();
        }
        os << "\n";
    }
    return os.str();
}

Invariant read_matrix_file(std::istream& in) {
    long n;
    if (!(in >> n) || n < 3)
        throw std::invalid_argument("matrix file: bad first line (need n >= 3)");
    Invariant inv(n);
    for (long a = 1; a < n; ++a) {
        for (long b = 1; b < n; ++b) {
            std::string tok;
            if (!(in >> tok))
                throw std::invalid_argument("matrix file: truncated entries");
            try {
                inv.at(a, b) = Int(tok);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("matrix file: bad entry '" + tok + "'");
            }
            if (inv.at(a, b) < 0)
                throw std::invalid_argument("matrix file: negative entry");
        }
    }
    return inv;
}

Invariant read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open matrix file: " + path);
    return read_matrix_file(f);
}

}  // namespace ade
