#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace g2ps {

// Dense integer matrix, sized for the tiny lattices that show up in rank-2
// torus computations.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}
    static IntMat identity(int n);
    static IntMat from(std::initializer_list<std::initializer_list<long long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    long long at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_identity() const;

    IntMat operator-() const;
    friend IntMat operator+(const IntMat& a, const IntMat& b);
    friend IntMat operator-(const IntMat& a, const IntMat& b);
    friend IntMat operator*(const IntMat& a, const IntMat& b);
    friend bool operator==(const IntMat& a, const IntMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator<(const IntMat& a, const IntMat& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.a_ < b.a_;
    }

    std::string str() const; // e.g. "[[0,1],[1,0]]"

private:
    int rows_, cols_;
    std::vector<long long> a_;
};

// Smith normal form: U*M*V = D with U, V unimodular and D diagonal,
// entries nonnegative, each dividing the next.
struct SmithResult {
    IntMat U, D, V;
};
SmithResult smith(const IntMat& M);

} // namespace g2ps
