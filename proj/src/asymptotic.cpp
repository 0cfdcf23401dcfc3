#include "g2ps/asymptotic.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2ps {

RepRingElement RepRingElement::V(long long l) {
    if (l < 0) throw std::invalid_argument("V: negative highest weight");
    RepRingElement r;
    r.coeffs[l] = 1;
    return r;
}

std::string RepRingElement::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [l, c] : coeffs) {
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        long long a = c > 0 ? c : -c;
        if (a != 1) s += std::to_string(a) + "*";
        s += "V(" + std::to_string(l) + ")";
    }
    return s;
}

RepRingElement cg_multiply(const RepRingElement& a, const RepRingElement& b) {
    RepRingElement r;
    for (const auto& [m, cm] : a.coeffs)
        for (const auto& [n, cn] : b.coeffs)
            for (long long l = m > n ? m - n : n - m; l <= m + n; l += 2) {
                long long& slot = r.coeffs[l];
                slot += cm * cn;
                if (slot == 0) r.coeffs.erase(l);
            }
    return r;
}

Poly1 p1_add(const Poly1& a, const Poly1& b) {
    Poly1 r = a;
    for (const auto& [d, v] : b.c) {
        Frac s = (r.c.count(d) ? r.c[d] : Frac()) + v;
        if (s.is_zero()) r.c.erase(d);
        else r.c[d] = s;
    }
    return r;
}

Poly1 p1_sub(const Poly1& a, const Poly1& b) {
    Poly1 neg;
    for (const auto& [d, v] : b.c) neg.c[d] = -v;
    return p1_add(a, neg);
}

Poly1 p1_mul(const Poly1& a, const Poly1& b) {
    Poly1 r;
    for (const auto& [da, va] : a.c)
        for (const auto& [db, vb] : b.c) {
            Frac s = (r.c.count(da + db) ? r.c[da + db] : Frac()) + va * vb;
            if (s.is_zero()) r.c.erase(da + db);
            else r.c[da + db] = s;
        }
    return r;
}

Poly1 char_poly(long long l) {
    if (l < 0) throw std::invalid_argument("char_poly: negative weight");
    Poly1 p0, p1;
    p0.c[0] = Frac(1);
    if (l == 0) return p0;
    p1.c[1] = Frac(1);
    if (l == 1) return p1;
    Poly1 x = p1;
    for (long long i = 2; i <= l; ++i) {
        Poly1 next = p1_sub(p1_mul(x, p1), p0);
        p0 = p1;
        p1 = next;
    }
    return p1;
}

RepRingElement from_char_poly(Poly1 p) {
    RepRingElement r;
    while (!p.is_zero()) {
        auto [deg, coeff] = *p.c.rbegin();
        if (!coeff.is_integer()) throw std::domain_error("from_char_poly: non-integer coefficient");
        r.coeffs[deg] = coeff.num();
        Poly1 scaled;
        for (const auto& [d, v] : char_poly(deg).c) scaled.c[d] = v * coeff;
        p = p1_sub(p, scaled);
    }
    return r;
}

namespace {

// Shape of one tensor slot: (has_a, m) of the cell element determines the
// matrix position and the internal highest weight.
struct Slot {
    int i, j;
    long long w;
};

Slot slot_of(bool has_a, long long m) {
    if (has_a && m >= 0) return {1, 1, m};
    if (!has_a && m >= 1) return {2, 1, m - 1};
    if (has_a && m <= -2) return {2, 2, -m - 2};
    if (!has_a && m <= -1) return {1, 2, -m - 1};
    throw std::invalid_argument("slot_of: not a lowest-cell shape");
}

std::pair<bool, long long> cell_slot(int i, int j, long long w) {
    if (w < 0) throw std::invalid_argument("cell_slot: negative weight");
    if (i == 1 && j == 1) return {true, w};
    if (i == 2 && j == 1) return {false, w + 1};
    if (i == 2 && j == 2) return {true, -w - 2};
    if (i == 1 && j == 2) return {false, -w - 1};
    throw std::invalid_argument("cell_slot: bad indices");
}

} // namespace

bool LowestCellElement::valid() const {
    auto slot_ok = [](bool has_a, long long v) {
        return has_a ? (v >= 0 || v <= -2) : (v != 0);
    };
    if (!slot_ok(left_a, m) || !slot_ok(right_a, n)) return false;
    return (m + n) % 2 == 0;
}

std::string LowestCellElement::str() const {
    auto part = [](bool has_a, long long v, const char* sym) {
        std::string s;
        if (has_a) s += "a";
        if (v != 0) {
            if (!s.empty()) s += "*";
            s += sym;
            if (v != 1) s += "^" + std::to_string(v);
        }
        if (s.empty()) s = "1";
        return s;
    };
    return "(" + part(left_a, m, "x") + ")(" + part(right_a, n, "x'") + ")";
}

std::string TensorBasisElement::str() const {
    return "V" + std::to_string(i) + std::to_string(j) + "(" + std::to_string(m) +
           ")(x)V" + std::to_string(k) + std::to_string(l) + "(" + std::to_string(n) + ")";
}

TensorBasisElement table2_basis(const LowestCellElement& w) {
    if (!w.valid()) throw std::invalid_argument("table2_basis: not a lowest-cell element");
    Slot s1 = slot_of(w.left_a, w.m);
    Slot s2 = slot_of(w.right_a, w.n);
    return {s1.i, s1.j, s2.i, s2.j, s1.w, s2.w};
}

LowestCellElement cell_of_tensor(const TensorBasisElement& t) {
    auto [la, m] = cell_slot(t.i, t.j, t.m);
    auto [ra, n] = cell_slot(t.k, t.l, t.n);
    LowestCellElement w{la, m, ra, n};
    if (!w.valid()) throw std::invalid_argument("cell_of_tensor: parity violation");
    return w;
}

CellCombination j_multiply(const LowestCellElement& w, const LowestCellElement& w2) {
    TensorBasisElement t = table2_basis(w);
    TensorBasisElement u = table2_basis(w2);
    CellCombination out;
    if (t.j != u.i || t.l != u.k) return out;
    for (long long p = t.m > u.m ? t.m - u.m : u.m - t.m; p <= t.m + u.m; p += 2)
        for (long long r = t.n > u.n ? t.n - u.n : u.n - t.n; r <= t.n + u.n; r += 2)
            out[cell_of_tensor({t.i, u.j, t.k, u.l, p, r})] += 1;
    return out;
}

CellCombination j_unit() {
    CellCombination u;
    for (long long m : {0LL, -2LL})
        for (long long n : {0LL, -2LL})
            u[LowestCellElement{true, m, true, n}] = 1;
    return u;
}

Poly2 Poly2::constant(const Frac& v) {
    Poly2 p;
    if (!v.is_zero()) p.c[{0, 0}] = v;
    return p;
}

Poly2 Poly2::monomial(long long dx, long long dy, const Frac& v) {
    if (dx < 0 || dy < 0) throw std::invalid_argument("monomial: negative degree");
    Poly2 p;
    if (!v.is_zero()) p.c[{dx, dy}] = v;
    return p;
}

Frac Poly2::eval(const Frac& x, const Frac& y) const {
    auto power = [](const Frac& b, long long e) {
        Frac r(1);
        for (long long i = 0; i < e; ++i) r = r * b;
        return r;
    };
    Frac out;
    for (const auto& [d, v] : c) out = out + v * power(x, d[0]) * power(y, d[1]);
    return out;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [d, v] : o.c) {
        Frac s = (r.c.count(d) ? r.c[d] : Frac()) + v;
        if (s.is_zero()) r.c.erase(d);
        else r.c[d] = s;
    }
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + o.scaled(Frac(-1)); }

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (const auto& [da, va] : c)
        for (const auto& [db, vb] : o.c) {
            std::array<long long, 2> d{da[0] + db[0], da[1] + db[1]};
            Frac s = (r.c.count(d) ? r.c[d] : Frac()) + va * vb;
            if (s.is_zero()) r.c.erase(d);
            else r.c[d] = s;
        }
    return r;
}

Poly2 Poly2::scaled(const Frac& v) const {
    Poly2 r;
    if (v.is_zero()) return r;
    for (const auto& [d, w] : c) r.c[d] = w * v;
    return r;
}

std::optional<int> Poly2::degree_parity() const {
    std::optional<int> par;
    for (const auto& [d, v] : c) {
        (void)v;
        int p = static_cast<int>((d[0] + d[1]) % 2);
        if (par && *par != p) return std::nullopt;
        par = p;
    }
    return par;
}

std::string Poly2::str() const {
    if (c.empty()) return "0";
    std::string s;
    for (const auto& [d, v] : c) {
        std::string term;
        if (d[0] > 0) term += "X" + (d[0] > 1 ? "^" + std::to_string(d[0]) : "");
        if (d[1] > 0) {
            if (!term.empty()) term += "*";
            term += "Y" + (d[1] > 1 ? "^" + std::to_string(d[1]) : "");
        }
        Frac a = v;
        bool neg = a < Frac();
        if (neg) a = -a;
        std::string coeff = a.str();
        if (coeff == "1" && !term.empty()) coeff.clear();
        std::string piece = coeff.empty() ? term : (term.empty() ? coeff : coeff + "*" + term);
        if (s.empty()) s = (neg ? "-" : "") + piece;
        else s += (neg ? " - " : " + ") + piece;
    }
    return s;
}

GradedPolyMatrix GradedPolyMatrix::unit(int r, int s, const Poly2& p) {
    GradedPolyMatrix m;
    m.at(r, s) = p;
    return m;
}

GradedPolyMatrix GradedPolyMatrix::operator+(const GradedPolyMatrix& o) const {
    GradedPolyMatrix r;
    for (int i = 0; i < 16; ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

GradedPolyMatrix GradedPolyMatrix::operator-(const GradedPolyMatrix& o) const {
    GradedPolyMatrix r;
    for (int i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

GradedPolyMatrix GradedPolyMatrix::operator*(const GradedPolyMatrix& o) const {
    GradedPolyMatrix r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Poly2 sum;
            for (int k = 0; k < 4; ++k) sum = sum + at(i, k) * o.at(k, j);
            r.at(i, j) = sum;
        }
    return r;
}

GradedPolyMatrix GradedPolyMatrix::scaled(const Frac& v) const {
    GradedPolyMatrix r;
    for (int i = 0; i < 16; ++i) r.e[i] = e[i].scaled(v);
    return r;
}

std::array<Frac, 16> GradedPolyMatrix::eval(const Frac& x, const Frac& y) const {
    std::array<Frac, 16> out;
    for (int i = 0; i < 16; ++i) out[i] = e[i].eval(x, y);
    return out;
}

bool GradedPolyMatrix::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](const Poly2& p) { return p.is_zero(); });
}

int block_parity(int r) {
    if (r < 0 || r > 3) throw std::invalid_argument("block_parity: index out of range");
    return r < 2 ? 0 : 1;
}

std::optional<int> GradedPolyMatrix::grade() const {
    std::optional<int> g;
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
            const Poly2& p = at(r, s);
            if (p.is_zero()) continue;
            auto dp = p.degree_parity();
            if (!dp) return std::nullopt;
            int total = (*dp + block_parity(r) + block_parity(s)) % 2;
            if (g && *g != total) return std::nullopt;
            g = total;
        }
    return g;
}

namespace {

// (i,k) -> matrix row, grouping equal-parity tensor positions together:
// (1,1),(2,2) ahead of (1,2),(2,1).
int pos_index(int i, int k) {
    if (i == 1 && k == 1) return 0;
    if (i == 2 && k == 2) return 1;
    if (i == 1 && k == 2) return 2;
    if (i == 2 && k == 1) return 3;
    throw std::invalid_argument("pos_index: bad tensor indices");
}

} // namespace

GradedPolyMatrix tensor_to_graded(const TensorBasisElement& t) {
    Poly1 px = char_poly(t.m);
    Poly1 py = char_poly(t.n);
    Poly2 p;
    for (const auto& [dx, vx] : px.c)
        for (const auto& [dy, vy] : py.c) p.c[{dx, dy}] = vx * vy;
    return GradedPolyMatrix::unit(pos_index(t.i, t.k), pos_index(t.j, t.l), p);
}

std::vector<GradedPolyMatrix> even_part_basis(long long D) {
    if (D < 0) throw std::invalid_argument("even_part_basis: negative degree bound");
    std::vector<GradedPolyMatrix> out;
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
            for (long long dx = 0; dx <= D; ++dx)
                for (long long dy = 0; dx + dy <= D; ++dy) {
                    if ((dx + dy + block_parity(r) + block_parity(s)) % 2 != 0) continue;
                    out.push_back(GradedPolyMatrix::unit(r, s, Poly2::monomial(dx, dy)));
                }
    return out;
}

namespace {

// Rank of a set of exact rational vectors via Gaussian elimination.
class RankTracker {
public:
    bool add(std::array<Frac, 16> v) {
        for (const auto& row : rows_) {
            int p = pivot(row);
            if (!v[p].is_zero()) {
                Frac f = v[p] / row[p];
                for (int i = 0; i < 16; ++i) v[i] = v[i] - f * row[i];
            }
        }
        for (const Frac& x : v)
            if (!x.is_zero()) {
                rows_.push_back(v);
                return true;
            }
        return false;
    }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    static int pivot(const std::array<Frac, 16>& row) {
        for (int i = 0; i < 16; ++i)
            if (!row[i].is_zero()) return i;
        return 15;
    }
    std::vector<std::array<Frac, 16>> rows_;
};

} // namespace

int evaluate(const std::vector<GradedPolyMatrix>& basis, const Frac& x, const Frac& y) {
    RankTracker rank;
    for (const auto& m : basis) rank.add(m.eval(x, y));
    return rank.rank();
}

GradedPolyMatrix epsilon(const GradedPolyMatrix& M) {
    GradedPolyMatrix out;
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
            Poly2 p;
            for (const auto& [d, v] : M.at(r, s).c) {
                Frac w = ((d[0] + d[1]) % 2 != 0) ? -v : v;
                if (block_parity(r) != block_parity(s)) w = -w;
                p.c[d] = w;
            }
            out.at(r, s) = p;
        }
    return out;
}

namespace {

// Element a0 [1] + a1 [eps] of the crossed product.
struct Crossed {
    GradedPolyMatrix a0, a1;

    Crossed operator*(const Crossed& o) const {
        return {a0 * o.a0 + a1 * epsilon(o.a1), a0 * o.a1 + a1 * epsilon(o.a0)};
    }
    Crossed operator+(const Crossed& o) const { return {a0 + o.a0, a1 + o.a1}; }
    bool operator==(const Crossed& o) const { return a0 == o.a0 && a1 == o.a1; }
};

std::array<Frac, 16> constant_part(const GradedPolyMatrix& m) {
    return m.eval(Frac(), Frac());
}

} // namespace

bool crossed_product_full_ideal_check(long long D) {
    if (D < 1) throw std::invalid_argument("crossed_product_full_ideal_check: degree bound < 1");

    GradedPolyMatrix id;
    for (int r = 0; r < 4; ++r) id.at(r, r) = Poly2::constant(Frac(1));
    Crossed one{id, GradedPolyMatrix::zero()};
    Crossed g{id, id}; // [1] + [eps]

    // Splitting identity for an off-diagonal matrix unit: E31 [1] equals
    // (1/2 E31) g + g (1/2 E31) because eps negates the off-diagonal blocks.
    GradedPolyMatrix e31 = GradedPolyMatrix::unit(2, 0, Poly2::constant(Frac(1)));
    Crossed half{e31.scaled(Frac(1, 2)), GradedPolyMatrix::zero()};
    Crossed lhs{e31, GradedPolyMatrix::zero()};
    if (!(half * g + g * half == lhs)) return false;

    // Constant-level ideal closure: products a g b over the 32 constant basis
    // elements plus the unit must span all constants.
    std::vector<Crossed> consts;
    consts.push_back(one);
    for (int part = 0; part < 2; ++part)
        for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s) {
                GradedPolyMatrix u = GradedPolyMatrix::unit(r, s, Poly2::constant(Frac(1)));
                if (part == 0) consts.push_back({u, GradedPolyMatrix::zero()});
                else consts.push_back({GradedPolyMatrix::zero(), u});
            }

    RankTracker r0, r1;
    int combined = 0;
    for (const auto& a : consts)
        for (const auto& b : consts) {
            Crossed p = a * g * b;
            if (r0.add(constant_part(p.a0))) ++combined;
            if (r1.add(constant_part(p.a1))) ++combined;
            if (combined == 32) break;
        }
    if (r0.rank() != 16 || r1.rank() != 16) return false;

    // Degree escalation: every monomial basis element factors as a product of
    // an algebra element with a constant in the ideal, so truncation at any
    // degree D >= 1 stays full.
    for (long long dx = 0; dx <= D; ++dx)
        for (long long dy = 0; dx + dy <= D; ++dy)
            for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s) {
                    GradedPolyMatrix mono =
                        GradedPolyMatrix::unit(r, s, Poly2::monomial(dx, dy));
                    GradedPolyMatrix diag =
                        GradedPolyMatrix::unit(r, r, Poly2::monomial(dx, dy));
                    GradedPolyMatrix constant =
                        GradedPolyMatrix::unit(r, s, Poly2::constant(Frac(1)));
                    if (!(diag * constant == mono)) return false;
                }
    return true;
}

GradedPolyMatrix delta0(const Poly2& P, const Frac& z) {
    for (const auto& [d, v] : P.c) {
        (void)v;
        if ((d[0] + d[1]) % 2 != 0)
            throw std::invalid_argument("delta0: polynomial has odd-degree monomials");
    }
    GradedPolyMatrix m;
    m.at(0, 0) = P;
    m.at(2, 2) = Poly2::constant(z);
    return m;
}

const std::vector<SimpleModuleDim>& middle_cell_module_dims() {
    static const std::vector<SimpleModuleDim> dims{
        {"t_e", "rho1", 3},
        {"t_d", "1", 3},
        {"t_c", "1", 2},
        {"t_e", "rho2", 1},
    };
    return dims;
}

} // namespace g2ps
