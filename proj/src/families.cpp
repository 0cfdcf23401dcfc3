#include "g2ps/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2ps {

namespace {

long long modN(long long v, long long N) {
    long long r = v % N;
    if (r < 0) r += N;
    return r;
}

Scalar nu_power(int sign) { return Scalar::q(Frac(-sign)); }

bool point_less(const TorusPoint& a, const TorusPoint& b) {
    if (a[0] < b[0]) return true;
    if (b[0] < a[0]) return false;
    return a[1] < b[1];
}

// Splits a monomial coordinate into (exponent of `name`, remaining constant).
std::pair<long long, Scalar> split_var(const Scalar& s, const std::string& name) {
    Frac e(0);
    auto it = s.vars().find(name);
    if (it != s.vars().end()) e = it->second;
    if (!e.is_integer()) throw std::domain_error("curve exponent is not an integer");
    Scalar rest = e.is_zero() ? s : s / Scalar::var(name, e);
    return {e.num(), rest};
}

} // namespace

const std::vector<RedCondition>& twelve_conditions() {
    static const std::vector<RedCondition> table = {
        {{1, 0}, +1},  {{2, 1}, +1}, {{2, 1}, -1},  {{1, 1}, -1},
        {{0, 1}, +1},  {{1, 0}, -1}, {{1, 2}, +1},  {{1, 2}, -1},
        {{0, 1}, -1},  {{1, 1}, +1}, {{1, -1}, +1}, {{1, -1}, -1},
    };
    return table;
}

namespace {

bool satisfies(const PSPoint& p, const std::array<long long, 2>& n, int sign) {
    if (modN(n[0] * p.ram[0] + n[1] * p.ram[1], p.N) != 0) return false;
    Scalar value = p.unram[0].pow(Frac(n[0])) * p.unram[1].pow(Frac(n[1]));
    return value == nu_power(sign);
}

} // namespace

bool reducible_twelve(const PSPoint& p) {
    for (const auto& cond : twelve_conditions())
        if (satisfies(p, cond.n, cond.sign)) return true;
    return false;
}

bool reducible_roots(const WeylGroup& W, const PSPoint& p) {
    for (const auto& r : W.roots())
        for (int sign : {+1, -1})
            if (satisfies(p, {r.pairing[0], r.pairing[1]}, sign)) return true;
    return false;
}

bool keys_unitary(const PSPoint& p) {
    // Each coordinate character must have order exactly two.
    for (int i = 0; i < 2; ++i) {
        long long c = i == 0 ? p.ram[0] : p.ram[1];
        const Scalar& u = p.unram[i];
        if (modN(2 * c, p.N) != 0) return false;
        if (!(u * u == Scalar::one())) return false;
        if (modN(c, p.N) == 0 && u == Scalar::one()) return false;
    }
    return modN(p.ram[0] - p.ram[1], p.N) != 0 || !(p.unram[0] == p.unram[1]);
}

bool is_reducible(const WeylGroup&, const PSPoint& p) {
    return reducible_twelve(p) || keys_unitary(p);
}

std::string FamilyFactor::str() const {
    Scalar lhs = Scalar::one();
    if (m[0] != 0) lhs = lhs * Scalar::var("x", Frac(m[0]));
    if (m[1] != 0) lhs = lhs * Scalar::var("y", Frac(m[1]));
    Scalar rhs = c * Scalar::var("tau", Frac(d));
    return lhs.str() + " = " + rhs.str();
}

FlatFamily flat_family(Case cs) {
    const Scalar one = Scalar::one();
    const Scalar j = Scalar::zeta(Frac(1, 3));
    const Scalar j2 = Scalar::zeta(Frac(2, 3));
    const Scalar tau2inv = Scalar::var("tau", Frac(-2));
    switch (cs) {
    case Case::Iwahori:
        return {{{one, {0, 1}, -2}, {one, {1, -1}, 2}}, {}};
    case Case::GL2ChiOne:
        return {{{one, {0, 1}, -1}}, {}};
    case Case::GL2ChiChi:
        return {{{one, {1, -1}, 2}}, {}};
    case Case::SL3:
        return {{{one, {1, -1}, 2}},
                {TorusPoint{j, tau2inv * j2}, TorusPoint{j2, tau2inv * j}}};
    case Case::SO4:
        return {{{one, {1, -1}, 2}, {one, {1, 1}, -2}},
                {TorusPoint{Scalar::minus_one(), one}}};
    case Case::TrivialWs:
        break;
    }
    throw std::invalid_argument("flat_family: no family in the trivial case");
}

bool family_member(const std::vector<IntMat>& sub, const FlatFamily& fam, const Scalar& tau,
                   const TorusPoint& p) {
    std::vector<TorusPoint> extras;
    extras.reserve(fam.extras.size());
    for (const auto& ex : fam.extras) {
        if (tau == Scalar::var("tau"))
            extras.push_back(ex);
        else
            extras.push_back(substitute(ex, "tau", tau));
    }
    for (const auto& w : sub) {
        TorusPoint tp = act(w, p);
        for (const auto& f : fam.factors) {
            Scalar lhs = tp[0].pow(Frac(f.m[0])) * tp[1].pow(Frac(f.m[1]));
            if (lhs == f.c * tau.pow(Frac(f.d))) return true;
        }
        for (const auto& ex : extras)
            if (tp == ex) return true;
    }
    return false;
}

std::vector<Curve> reducibility_curves(Case cs) {
    const Scalar z = Scalar::var("z");
    const Scalar zinv = Scalar::var("z", Frac(-1));
    switch (cs) {
    case Case::Iwahori:
        return {{"c_2", {z, Scalar::q(Frac(-1)) * z}}, {"c_3", {z, Scalar::q(Frac(-1))}}};
    case Case::GL2ChiOne:
        return {{"c_1", {Scalar::Q() * z, Scalar::Q(Frac(-1))}}};
    case Case::GL2ChiChi:
        return {{"c_2", {Scalar::Q() * z, Scalar::Q(Frac(-1)) * z}}};
    case Case::SL3:
        return {{"c_1", {z, Scalar::q(Frac(-1)) * z}}};
    case Case::SO4:
        return {{"c_1", {Scalar::Q() * z, Scalar::Q(Frac(-1)) * z}},
                {"c_1'", {Scalar::Q(Frac(-1)) * zinv, Scalar::Q(Frac(-1)) * z}}};
    case Case::TrivialWs:
        break;
    }
    return {};
}

const std::vector<SpecialPoint>& special_points(Case cs) {
    auto pt = [](const Scalar& a, const Scalar& b) { return TorusPoint{a, b}; };
    const Scalar one = Scalar::one();
    const Scalar m1 = Scalar::minus_one();
    const Scalar j = Scalar::zeta(Frac(1, 3));
    const Scalar j2 = Scalar::zeta(Frac(2, 3));
    const Scalar z = Scalar::var("z");
    const Scalar zinv = Scalar::var("z", Frac(-1));
    const Scalar qi = Scalar::q(Frac(-1));
    const Scalar Q = Scalar::Q();
    const Scalar Qi = Scalar::Q(Frac(-1));

    static const std::vector<SpecialPoint> iwahori = {
        {"t_a", pt(qi, Scalar::q(Frac(-2))), 4},
        {"t_b", pt(z, qi * z), 2},
        {"t_c", pt(j, qi * j), 4},
        {"t_d", pt(m1, qi), 4},
        {"t_e", pt(one, qi), 5},
        {"t_f", pt(Scalar::q(Frac(2, 3)), Scalar::q(Frac(-1, 3))), 2},
        {"t_g", pt(Q, Qi), 2},
        {"t_h", pt(qi, z), 2},
        {"t_i", pt(qi, qi), 2},
        {"t_j", pt(qi, Q), 2},
    };
    static const std::vector<SpecialPoint> chi1 = {
        {"curve", pt(Q * z, Qi), 2},
    };
    static const std::vector<SpecialPoint> chichi = {
        {"curve", pt(Q * z, Qi * z), 2},
    };
    static const std::vector<SpecialPoint> sl3 = {
        {"y_a", pt(one, qi), 4},
        {"y_a'", pt(j, qi * j), 4},
        {"y_a''", pt(j2, qi * j2), 4},
        {"y_b", pt(z, qi * z), 2},
    };
    static const std::vector<SpecialPoint> so4 = {
        {"z_a", pt(one, qi), 4},
        {"z_b", pt(Qi * zinv, Qi * z), 2},
        {"z_c", pt(m1, m1 * qi), 4},
        {"z_d", pt(Q * z, Qi * z), 2},
        {"z_*", pt(m1, one), 2},
    };
    static const std::vector<SpecialPoint> none = {};
    switch (cs) {
    case Case::Iwahori: return iwahori;
    case Case::GL2ChiOne: return chi1;
    case Case::GL2ChiChi: return chichi;
    case Case::SL3: return sl3;
    case Case::SO4: return so4;
    case Case::TrivialWs: break;
    }
    return none;
}

std::vector<TorusPoint> curve_intersections(const std::vector<IntMat>& sub, const Curve& A,
                                            const Curve& B) {
    TorusPoint bw = {B.param[0].substitute("z", Scalar::var("w")),
                     B.param[1].substitute("z", Scalar::var("w"))};
    std::array<long long, 2> a{};
    std::array<Scalar, 2> Ac;
    for (int i = 0; i < 2; ++i) std::tie(a[i], Ac[i]) = split_var(A.param[i], "z");

    std::vector<TorusPoint> reps;
    auto add = [&](const TorusPoint& p) {
        for (const auto& r : reps)
            if (same_orbit(sub, p, r)) return;
        reps.push_back(orbit(sub, p).front());
    };

    for (const auto& w : sub) {
        TorusPoint T = act(w, bw);
        std::array<long long, 2> b{};
        std::array<Scalar, 2> Bc;
        for (int i = 0; i < 2; ++i) std::tie(b[i], Bc[i]) = split_var(T[i], "w");
        Scalar C0 = Bc[0] / Ac[0];
        Scalar C1 = Bc[1] / Ac[1];
        long long k = -a[0] * b[1] + a[1] * b[0];
        if (k == 0) continue; // parallel or coincident: no isolated points
        Scalar Cz = C0.pow(Frac(-b[1])) * C1.pow(Frac(b[0]));
        if (k < 0) Cz = Cz.inv();
        if (Cz.has_vars()) continue;
        long long K = k < 0 ? -k : k;
        for (long long m = 0; m < K; ++m) {
            Scalar root = Scalar::zeta((Cz.torsion() + Frac(m)) / Frac(K)) *
                          Scalar::Q(Frac(1)).pow(Cz.q_half() / Frac(K));
            Scalar D0 = C0 * root.pow(Frac(-a[0]));
            Scalar D1 = C1 * root.pow(Frac(-a[1]));
            bool ok;
            if (b[0] == 0)
                ok = D0 == Scalar::one();
            else if (b[1] == 0)
                ok = D1 == Scalar::one();
            else
                ok = D0.pow(Frac(b[1])) == D1.pow(Frac(b[0]));
            if (!ok) continue;
            add({Ac[0] * root.pow(Frac(a[0])), Ac[1] * root.pow(Frac(a[1]))});
        }
    }
    std::sort(reps.begin(), reps.end(), point_less);
    return reps;
}

int constituent_count(Case cs, const WeylGroup& W, const std::vector<IntMat>& sub,
                      const TorusPoint& y) {
    if (cs == Case::TrivialWs)
        throw std::invalid_argument("constituent_count: no quotient in the trivial case");
    for (const auto& sp : special_points(cs))
        if (same_orbit(sub, y, sp.point)) return sp.count;
    if (family_member(sub, flat_family(cs), Scalar::Q(), y)) return 2;
    if (is_reducible(W, PSPoint{rep_pair(cs), 12, y})) return 2;
    if (y[0].has_vars() || y[1].has_vars())
        throw std::domain_error("generic: 1 or tabulated");
    return 1;
}

} // namespace g2ps
