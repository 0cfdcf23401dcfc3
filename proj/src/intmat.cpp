#include "g2ps/intmat.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace g2ps {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from(std::initializer_list<std::initializer_list<long long>> rows) {
    int r = int(rows.size());
    int c = r == 0 ? 0 : int(rows.begin()->size());
    IntMat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (int(row.size()) != c) throw std::invalid_argument("IntMat::from: ragged rows");
        int j = 0;
        for (long long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool IntMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMat IntMat::operator-() const {
    IntMat m(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("IntMat: shape mismatch in +");
    IntMat m(a.rows_, a.cols_);
    for (size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
    return m;
}

IntMat operator-(const IntMat& a, const IntMat& b) { return a + (-b); }

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMat: shape mismatch in *");
    IntMat m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            long long v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols_; ++j) m.at(i, j) += v * b.at(k, j);
        }
    return m;
}

std::string IntMat::str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) s += ",";
        s += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += std::to_string(at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

namespace {

void swap_rows(IntMat& m, int i, int k) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(i, j), m.at(k, j));
}

void swap_cols(IntMat& m, int j, int l) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, j), m.at(i, l));
}

// row i -= q * row k
void row_sub(IntMat& m, int i, int k, long long q) {
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(k, j);
}

// col j -= q * col l
void col_sub(IntMat& m, int j, int l, long long q) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, l);
}

} // namespace

SmithResult smith(const IntMat& M) {
    const int r = M.rows(), c = M.cols();
    SmithResult res{IntMat::identity(r), M, IntMat::identity(c)};
    IntMat& U = res.U;
    IntMat& D = res.D;
    IntMat& V = res.V;

    const int n = r < c ? r : c;
    for (int t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    long long v = std::llabs(D.at(i, j));
                    if (v != 0 && (pi < 0 || v < std::llabs(D.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) { pi = pj = t; } // trailing block is zero; done
            if (D.at(pi, pj) == 0) break;
            if (pi != t) { swap_rows(D, t, pi); swap_rows(U, t, pi); }
            if (pj != t) { swap_cols(D, t, pj); swap_cols(V, t, pj); }

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (D.at(i, t) == 0) continue;
                long long q = D.at(i, t) / D.at(t, t);
                row_sub(D, i, t, q);
                row_sub(U, i, t, q);
                if (D.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (D.at(t, j) == 0) continue;
                long long q = D.at(t, j) / D.at(t, t);
                col_sub(D, j, t, q);
                col_sub(V, j, t, q);
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide everything below-right; if not, fold the
            // offending row into row t and restart the reduction.
            int bi = -1;
            for (int i = t + 1; i < r && bi < 0; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi >= 0) {
                row_sub(D, t, bi, -1);
                row_sub(U, t, bi, -1);
                continue;
            }
            break;
        }
        if (D.at(t, t) < 0) {
            for (int j = 0; j < c; ++j) D.at(t, j) = -D.at(t, j);
            for (int j = 0; j < r; ++j) U.at(t, j) = -U.at(t, j);
        }
    }
    return res;
}

} // namespace g2ps
