#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2ps/frac.hpp"

namespace g2ps {

// Element of the representation ring of SL(2,C): a finite integer combination
// of the irreducibles V(l), l >= 0.
struct RepRingElement {
    std::map<long long, long long> coeffs; // weight -> coefficient, no zeros

    static RepRingElement V(long long l);
    std::string str() const;
    friend bool operator==(const RepRingElement&, const RepRingElement&) = default;
};

// Clebsch-Gordan product V(m)V(n) = sum of V(l), l = |m-n|, |m-n|+2, ..., m+n.
RepRingElement cg_multiply(const RepRingElement& a, const RepRingElement& b);

// Univariate polynomial with exact rational coefficients.
struct Poly1 {
    std::map<long long, Frac> c; // degree -> coefficient, no zeros

    bool is_zero() const { return c.empty(); }
    friend bool operator==(const Poly1&, const Poly1&) = default;
};
Poly1 p1_add(const Poly1& a, const Poly1& b);
Poly1 p1_sub(const Poly1& a, const Poly1& b);
Poly1 p1_mul(const Poly1& a, const Poly1& b);

// Character polynomial of V(l): p_0 = 1, p_1 = X, p_l = X p_{l-1} - p_{l-2}.
Poly1 char_poly(long long l);
// Expands a polynomial in the p_l basis (independent oracle for cg_multiply).
RepRingElement from_char_poly(Poly1 p);

// Element (a^{left} x^m)(a'^{right} x'^n) of the lowest two-sided cell.
struct LowestCellElement {
    bool left_a = false;
    long long m = 0;
    bool right_a = false;
    long long n = 0;

    bool valid() const;
    std::string str() const;
    friend auto operator<=>(const LowestCellElement&, const LowestCellElement&) = default;
};

// Basis element V_{ij}(m) (x) V_{kl}(n) of M2(R) (x) M2(R).
struct TensorBasisElement {
    int i = 1, j = 1, k = 1, l = 1;
    long long m = 0, n = 0;

    bool even() const { return (m + n + i + j + k + l) % 2 == 0; }
    std::string str() const;
    friend auto operator<=>(const TensorBasisElement&, const TensorBasisElement&) = default;
};

TensorBasisElement table2_basis(const LowestCellElement& w);
LowestCellElement cell_of_tensor(const TensorBasisElement& t);

// Integer combination of cell elements, e.g. a product in the based ring.
using CellCombination = std::map<LowestCellElement, long long>;

// Product of two cell elements via the matrix-unit realization; structure
// constants are non-negative integers.
CellCombination j_multiply(const LowestCellElement& w, const LowestCellElement& w2);
// The four-term identity element of the based ring.
CellCombination j_unit();

// Polynomial in X and Y with exact rational coefficients.
struct Poly2 {
    std::map<std::array<long long, 2>, Frac> c; // (degX, degY) -> coefficient

    static Poly2 zero() { return {}; }
    static Poly2 constant(const Frac& v);
    static Poly2 monomial(long long dx, long long dy, const Frac& v = Frac(1));

    bool is_zero() const { return c.empty(); }
    Frac eval(const Frac& x, const Frac& y) const;
    Poly2 operator+(const Poly2&) const;
    Poly2 operator-(const Poly2&) const;
    Poly2 operator*(const Poly2&) const;
    Poly2 scaled(const Frac& v) const;
    // Parity of total degree if homogeneous mod 2, else nullopt.
    std::optional<int> degree_parity() const;
    std::string str() const;
    friend bool operator==(const Poly2&, const Poly2&) = default;
};

// 4x4 matrix over Q[X,Y] in the basis ordered so that the two diagonal 2x2
// blocks collect the diagonal tensor positions (11,22 | 12,21).
struct GradedPolyMatrix {
    std::array<Poly2, 16> e;

    static GradedPolyMatrix zero() { return {}; }
    static GradedPolyMatrix unit(int r, int s, const Poly2& p);

    const Poly2& at(int r, int s) const { return e[4 * r + s]; }
    Poly2& at(int r, int s) { return e[4 * r + s]; }

    GradedPolyMatrix operator+(const GradedPolyMatrix&) const;
    GradedPolyMatrix operator-(const GradedPolyMatrix&) const;
    GradedPolyMatrix operator*(const GradedPolyMatrix&) const;
    GradedPolyMatrix scaled(const Frac& v) const;
    std::array<Frac, 16> eval(const Frac& x, const Frac& y) const;
    bool is_zero() const;
    // 0 or 1 when homogeneous for the block-plus-degree grading, else nullopt.
    std::optional<int> grade() const;
    bool in_even_part() const { return grade() == 0; }
    friend bool operator==(const GradedPolyMatrix&, const GradedPolyMatrix&) = default;
};

// Block parity of a row/column index: rows 0,1 carry the diagonal tensor
// positions, rows 2,3 the off-diagonal ones.
int block_parity(int r);

// Image of a tensor basis element in the graded matrix model.
GradedPolyMatrix tensor_to_graded(const TensorBasisElement& t);

// Monomial basis of the even part, truncated at total degree D.
std::vector<GradedPolyMatrix> even_part_basis(long long D);

// Dimension of the span of the evaluated basis at (x, y).
int evaluate(const std::vector<GradedPolyMatrix>& basis, const Frac& x, const Frac& y);

// The grading automorphism: (X,Y) -> (-X,-Y) and negation of the
// off-diagonal blocks; an involution.
GradedPolyMatrix epsilon(const GradedPolyMatrix& M);

// In the degree-D truncation of the crossed product by {1, epsilon}, checks
// that the two-sided ideal generated by [1]+[epsilon] is everything.
bool crossed_product_full_ideal_check(long long D);

// The embedding P, z -> diag(P, 0, z, 0); throws on odd P.
GradedPolyMatrix delta0(const Poly2& P, const Frac& z);

// Stored simple-module dimensions for the middle cell of the unramified case.
struct SimpleModuleDim {
    std::string sigma_tag;
    std::string rho;
    int dim;
};
const std::vector<SimpleModuleDim>& middle_cell_module_dims();

} // namespace g2ps
