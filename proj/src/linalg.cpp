#include "ade/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ade {

Int determinant(MatZ m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
    const long n = m.rows;
    if (n == 0) return 1;
    Int prev(1);
    int sign = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            long p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::vector<std::vector<Rat>> kernel_basis(const MatZ& m, long* rank_out) {
    MatZ w = m;
    const long rows = w.rows, cols = w.cols;
    std::vector<long> pivot_col;   // per pivotal row, ascending
    Int prev(1);
    long r = 0;  // current pivotal row count
    for (long c = 0; c < cols && r < rows; ++c) {
        long p = r;
        while (p < rows && w.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (long j = 0; j < cols; ++j) std::swap(w.at(r, j), w.at(p, j));
        for (long i = r + 1; i < rows; ++i) {
            for (long j = c + 1; j < cols; ++j) {
                Int t = w.at(i, j) * w.at(r, c) - w.at(i, c) * w.at(r, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            w.at(i, c) = 0;
        }
        prev = w.at(r, c);
        pivot_col.push_back(c);
        ++r;
    }
    if (rank_out) *rank_out = r;

    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (long f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[f] = 1;
        for (long i = r - 1; i >= 0; --i) {
            const long pc = pivot_col[i];
            Rat s(0);
            for (long j = pc + 1; j < cols; ++j) {
                if (x[j] != 0 && w.at(i, j) != 0) s += Rat(w.at(i, j)) * x[j];
            }
            if (s != 0) {
                x[pc] = -s / Rat(w.at(i, pc));
                x[pc].canonicalize();
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<long> rref(std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return {};
    const long cols = static_cast<long>(rows[0].size());
    long r = 0;
    std::vector<long> pivots;
    for (long c = 0; c < cols && r < static_cast<long>(rows.size()); ++c) {
        long p = r;
        while (p < static_cast<long>(rows.size()) && rows[p][c] == 0) ++p;
        if (p == static_cast<long>(rows.size())) continue;
        std::swap(rows[r], rows[p]);
        Rat inv = rows[r][c];
        for (long j = c; j < cols; ++j) {
            rows[r][j] /= inv;
            rows[r][j].canonicalize();
        }
        for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (long j = c; j < cols; ++j) {
                rows[i][j] -= f * rows[r][j];
                rows[i][j].canonicalize();
            }
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const long n = static_cast<long>(a.size());
    auto off_norm = [&] {
        double s = 0;
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                if (i != j) s += a[i][j] * a[i][j];
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < 100 && off_norm() > 1e-13; ++sweep) {
        for (long p = 0; p < n; ++p) {
            for (long q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) +
                                  std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (long k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (long k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (long i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace ade
