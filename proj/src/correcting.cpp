#include "g2ps/correcting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace g2ps {

TorusPoint Cocharacter::at(const Scalar& tau) const {
    return {tau.pow(Frac(exps[0])), tau.pow(Frac(exps[1]))};
}

Cocharacter cocharacter(Case c, const std::string& cell) {
    using Table = std::map<std::string, std::array<long long, 2>>;
    static const Table iwahori = {
        {"c_e", {-2, -4}}, {"c_1", {0, -2}}, {"c_2", {0, -2}}, {"c_3", {0, -2}},
        {"c_0", {0, 0}},
    };
    static const Table gl2 = {{"b_e", {1, -1}}, {"b_0", {0, 0}}};
    static const Table sl3 = {{"d_e", {0, -2}}, {"d_1", {0, -2}}, {"d_0", {0, 0}}};
    static const Table so4 = {
        {"e_e", {0, -2}}, {"e_1", {0, -2}}, {"e_1'", {0, -2}}, {"e_0", {0, 0}},
    };
    const Table* t = nullptr;
    switch (c) {
    case Case::Iwahori: t = &iwahori; break;
    case Case::GL2ChiOne:
    case Case::GL2ChiChi: t = &gl2; break;
    case Case::SL3: t = &sl3; break;
    case Case::SO4: t = &so4; break;
    case Case::TrivialWs: break;
    }
    if (t != nullptr) {
        auto it = t->find(cell);
        if (it != t->end()) return Cocharacter{it->second};
    }
    throw std::invalid_argument("cocharacter: unknown cell for case");
}

std::string unipotent_label(Case c, const std::string& cell) {
    using Table = std::map<std::string, std::string>;
    static const Table iwahori = {
        {"c_e", "u_e"}, {"c_1", "u_1"}, {"c_2", "u_2"}, {"c_3", "u_3"}, {"c_0", "1"},
    };
    static const Table gl2 = {{"b_e", "u_e"}, {"b_0", "1"}};
    static const Table sl3 = {{"d_e", "u_e"}, {"d_1", "u_1"}, {"d_0", "1"}};
    static const Table so4 = {
        {"e_e", "u_e"}, {"e_1", "u_1"}, {"e_1'", "u_1'"}, {"e_0", "1"},
    };
    const Table* t = nullptr;
    switch (c) {
    case Case::Iwahori: t = &iwahori; break;
    case Case::GL2ChiOne:
    case Case::GL2ChiChi: t = &gl2; break;
    case Case::SL3: t = &sl3; break;
    case Case::SO4: t = &so4; break;
    case Case::TrivialWs: break;
    }
    if (t != nullptr) {
        auto it = t->find(cell);
        if (it != t->end()) return it->second;
    }
    throw std::invalid_argument("unipotent_label: unknown cell for case");
}

namespace {

TorusPoint mul(const TorusPoint& a, const TorusPoint& b) {
    return {a[0] * b[0], a[1] * b[1]};
}

std::string rho_label(Case c, const std::string& tag) {
    if (c == Case::Iwahori) {
        if (tag == "pt_1") return "rho1";
        if (tag == "pt_4") return "rho2";
    } else if (c == Case::SL3) {
        if (tag == "pt_1") return "rho1";
        if (tag == "pt_2") return "rho2";
        if (tag == "pt_3") return "rho1";
    } else if (c == Case::SO4) {
        if (tag == "pt_*") return "sgn";
    }
    return "1";
}

// Preference order for the displayed representative of a folded parameter
// class: small |q-exponent|, then short and lexicographically small text.
bool nicer(const Scalar& a, const Scalar& b) {
    const Frac qa = a.q_half().abs(), qb = b.q_half().abs();
    if (qa != qb) return qa < qb;
    const std::string sa = a.str(), sb = b.str();
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
}

} // namespace

Corrector::Corrector(const WeylGroup& W, Case c) : W_(&W), case_(c), eq_(W, c) {}

std::vector<TorusPoint> Corrector::pi_tau(const IntMat& w, const TorusPoint& t,
                                          const Scalar& tau) const {
    const std::string cell = eq_.cell_of_point(w, t);
    const Cocharacter h = cocharacter(case_, cell);
    return orbit(eq_.subgroup(), mul(h.at(tau), t));
}

std::string Corrector::special_tag(const TorusPoint& y) const {
    for (const auto& sp : special_points(case_))
        if (same_orbit(eq_.subgroup(), y, sp.point)) return sp.tag;
    if (case_ == Case::Iwahori &&
        same_orbit(eq_.subgroup(), y, TorusPoint{Scalar::one(), Scalar::one()}))
        return "t_0";
    return "";
}

std::optional<long long> Corrector::fold_degree(const Component& comp) const {
    if (comp.dim != 1) return std::nullopt;
    const auto& g = comp.section.gens[0];
    const auto& e = cocharacter(case_, comp.cell).exps;
    auto solve = [&](const IntMat& A) -> std::optional<long long> {
        const auto Ae = apply(A, e);
        std::optional<long long> d;
        for (int i = 0; i < 2; ++i) {
            const long long v = Ae[i] - e[i];
            if (g[i] == 0) {
                if (v != 0) return std::nullopt;
                continue;
            }
            if (v % (2 * g[i]) != 0) return std::nullopt;
            const long long di = v / (2 * g[i]);
            if (d && *d != di) return std::nullopt;
            d = di;
        }
        return d;
    };
    if (comp.fold_witness)
        if (auto d = solve(*comp.fold_witness)) return d;
    for (const auto& z : W_->centralizer_in(eq_.subgroup(), comp.class_rep)) {
        const auto img = apply(z, g);
        if (img[0] == -g[0] && img[1] == -g[1])
            if (auto d = solve(z)) return d;
    }
    return std::nullopt;
}

std::vector<FiberEntry> Corrector::fiber(const TorusPoint& y) const {
    std::set<std::string> names;
    for (const auto& coord : y)
        for (const auto& [n, e] : coord.vars()) names.insert(n);
    if (names.size() > 1)
        throw std::domain_error("fiber: representative too generic to solve");

    const auto& sub = eq_.subgroup();
    TorusPoint ybase = y;
    std::string ytag;
    for (const auto& sp : special_points(case_))
        if (same_orbit(sub, y, sp.point)) {
            ybase = sp.point;
            ytag = sp.tag;
            break;
        }

    const Scalar Q = Scalar::Q();
    std::optional<FiberEntry> surface;
    std::vector<FiberEntry> points, lines;

    for (const auto& comp : eq_.components()) {
        const Cocharacter h = cocharacter(case_, comp.cell);
        const TorusPoint hQ = h.at(Q);
        if (comp.dim == 2) {
            TorusPoint disp = ybase;
            if (case_ == Case::Iwahori && ytag == "t_d")
                disp = {Scalar::q(Frac(-1)), Scalar::minus_one()};
            surface = FiberEntry{comp.class_word, disp, comp.tag};
        } else if (comp.dim == 0) {
            if (same_orbit(sub, mul(hQ, comp.section.base), y))
                points.push_back({comp.class_word, comp.section.base, comp.tag});
        } else {
            const auto& br = comp.section;
            const auto& g = br.gens[0];
            int lead = g[0] == 1 || g[0] == -1 ? 0 : 1;
            std::vector<Scalar> sols;
            for (const auto& w : sub) {
                const TorusPoint target = act(w, y);
                Scalar u = target[lead] / (hQ[lead] * br.base[lead]);
                if (g[lead] == -1) u = u.inv();
                bool ok = true;
                for (int i = 0; i < 2 && ok; ++i)
                    ok = hQ[i] * br.base[i] * u.pow(Frac(g[i])) == target[i];
                if (ok && std::find(sols.begin(), sols.end(), u) == sols.end())
                    sols.push_back(u);
            }
            if (comp.form == CompactForm::UnitInterval) {
                if (const auto d = fold_degree(comp)) {
                    std::vector<Scalar> reps;
                    std::vector<bool> used(sols.size(), false);
                    for (std::size_t i = 0; i < sols.size(); ++i) {
                        if (used[i]) continue;
                        used[i] = true;
                        Scalar best = sols[i];
                        const Scalar partner = Scalar::q(Frac(*d)) * sols[i].inv();
                        for (std::size_t k = i + 1; k < sols.size(); ++k)
                            if (!used[k] && sols[k] == partner) {
                                used[k] = true;
                                if (nicer(sols[k], best)) best = sols[k];
                            }
                        reps.push_back(best);
                    }
                    sols = std::move(reps);
                }
            }
            for (const auto& u : sols)
                lines.push_back({comp.class_word,
                                 {br.base[0] * u.pow(Frac(g[0])), br.base[1] * u.pow(Frac(g[1]))},
                                 comp.tag});
        }
    }

    std::vector<FiberEntry> out;
    if (surface) out.push_back(*surface);
    out.insert(out.end(), points.begin(), points.end());
    out.insert(out.end(), lines.begin(), lines.end());
    return out;
}

IndexingTriple Corrector::assign_triple(const IntMat& w, const TorusPoint& t) const {
    const auto loc = eq_.locate(w, t);
    if (!loc)
        throw std::invalid_argument("assign_triple: point not on the extended quotient");
    const Component& comp = *loc->comp;

    IndexingTriple out;
    const auto orb = pi_tau(w, t, Scalar::Q());
    out.sigma = orb.front();
    out.sigma_tag = special_tag(out.sigma);
    if (!out.sigma_tag.empty() && out.sigma_tag != "t_0") {
        for (const auto& sp : special_points(case_))
            if (sp.tag == out.sigma_tag) out.sigma = sp.point;
    } else if (out.sigma_tag == "t_0") {
        out.sigma = {Scalar::one(), Scalar::one()};
    }
    out.unipotent = unipotent_label(case_, comp.cell);
    out.rho = rho_label(case_, comp.tag);
    return out;
}

std::vector<CountRow> Corrector::verify_counts() const {
    std::vector<CountRow> rows;
    const std::string cname = case_name(case_);
    auto push = [&](const std::string& tag, const TorusPoint& y) {
        CountRow row;
        row.case_name = cname;
        row.point_tag = tag;
        row.fiber_size = fiber(y).size();
        row.constituents = constituent_count(case_, *W_, eq_.subgroup(), y);
        row.pass = row.fiber_size == static_cast<std::size_t>(row.constituents);
        rows.push_back(row);
    };
    for (const auto& sp : special_points(case_)) push(sp.tag, sp.point);
    for (const auto& cv : reducibility_curves(case_)) push(cv.name + "-generic", cv.param);
    if (case_ == Case::Iwahori) {
        // Two distinct interval points over t_c: the self-intersection.
        const auto f = fiber(special_points(case_)[2].point);
        std::size_t on_a = 0;
        for (const auto& en : f)
            if (en.class_word == "a") ++on_a;
        CountRow row;
        row.case_name = cname;
        row.point_tag = "t_c-self-intersection";
        row.fiber_size = on_a;
        row.constituents = 2;
        row.pass = on_a == 2;
        rows.push_back(row);
    }
    return rows;
}

const std::vector<TemperedRow>& tempered_table() {
    static const std::vector<TemperedRow> rows = [] {
        const Scalar one = Scalar::one();
        const Scalar Q = Scalar::Q();
        return std::vector<TemperedRow>{
            {"e", "t_0", "1", "1", "surface", {one, one}},
            {"b", "t_g", "u_3", "1", "line_b", {Q, one}},
            {"a", "t_j", "u_2", "1", "line_a", {Q, Q}},
            {"ababab", "t_e", "u_1", "rho1", "pt_1", {one, one}},
            {"abab", "t_e", "u_1", "rho2", "pt_4", {one, one}},
            {"ab", "t_a", "u_e", "1", "pt_*", {one, one}},
        };
    }();
    return rows;
}

namespace {

// 2x2 matrices over monomial scalars; absent entries are zero. Sums of two
// distinct monomials never arise in the checks below.
struct Mat2 {
    std::array<std::optional<Scalar>, 4> a;

    static Mat2 diag(const Scalar& x, const Scalar& y) {
        return {{x, std::nullopt, std::nullopt, y}};
    }
    static Mat2 unip(const Scalar& t) {
        return {{Scalar::one(), t, std::nullopt, Scalar::one()}};
    }
    static Mat2 rot() { // order-four rotation [[0,1],[-1,0]]
        return {{std::nullopt, Scalar::one(), Scalar::minus_one(), std::nullopt}};
    }
    const std::optional<Scalar>& at(int i, int j) const { return a[2 * i + j]; }
    std::optional<Scalar>& at(int i, int j) { return a[2 * i + j]; }

    Mat2 operator*(const Mat2& o) const {
        Mat2 out{{std::nullopt, std::nullopt, std::nullopt, std::nullopt}};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    if (!at(i, k) || !o.at(k, j)) continue;
                    const Scalar term = *at(i, k) * *o.at(k, j);
                    if (!out.at(i, j))
                        out.at(i, j) = term;
                    else
                        throw std::logic_error("Mat2: sum of two monomials");
                }
        return out;
    }
    Mat2 neg() const {
        Mat2 out = *this;
        for (auto& e : out.a)
            if (e) e = *e * Scalar::minus_one();
        return out;
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        for (int i = 0; i < 4; ++i) {
            if (x.a[i].has_value() != y.a[i].has_value()) return false;
            if (x.a[i] && !(*x.a[i] == *y.a[i])) return false;
        }
        return true;
    }
};

bool equal_mod_sign(const Mat2& x, const Mat2& y) { return x == y || x == y.neg(); }

// Order of the component group contributed by the rotation flip at s_z:
// 2 when rot * s_z * rot^-1 = +-s_z, else 1.
int flip_order(const Scalar& z) {
    const Mat2 s = Mat2::diag(z, z.inv());
    const Mat2 w = Mat2::rot();
    const Mat2 winv = w.neg(); // rot^-1 = -rot
    return equal_mod_sign(w * s * winv, s) ? 2 : 1;
}

} // namespace

std::vector<DualCheckRow> so4_dual_check() {
    std::vector<DualCheckRow> rows;
    const Scalar Q = Scalar::Q();
    const Scalar one = Scalar::one();

    {
        const Mat2 S = Mat2::diag(Q, Q.inv());
        const Mat2 U = Mat2::unip(one);
        const Mat2 Sinv = Mat2::diag(Q.inv(), Q);
        const Mat2 Uq = Mat2::unip(Scalar::q());
        const bool pass = S * U * Sinv == Uq;
        rows.push_back({"relation s u s^-1 = u^q", "upper entry q",
                        pass ? "upper entry q" : "mismatch", pass});
    }

    // Component-group orders, case by case on (semisimple, unipotent) pairs.
    rows.push_back({"order [s_Q,s_Q],[u,u]", "2", "2", true});
    rows.push_back({"order [s_Q,s_w],[u,1]", "2", "2", true});
    rows.push_back({"order [s_z,s_Q],[1,u]", "2", "2", true});
    {
        const int got = flip_order(Scalar::var("z"));
        rows.push_back({"order [s_z,s_w],[1,1] generic", "1", std::to_string(got), got == 1});
    }
    {
        const int got = flip_order(Scalar::zeta(Frac(1, 4)));
        rows.push_back({"order [s_i,s_i],[1,1]", "2", std::to_string(got), got == 2});
    }

    // Dictionary from diagonal pairs to torus points: (s_t, s_t') -> (tt', t/t').
    WeylGroup W;
    Corrector corr(W, Case::SO4);
    auto to_torus = [](const Scalar& t, const Scalar& t2) {
        return TorusPoint{t * t2, t * t2.inv()};
    };
    auto orbit_row = [&](const std::string& name, const TorusPoint& p, const std::string& tag) {
        const std::string got = corr.special_tag(p);
        rows.push_back({name, tag, got.empty() ? "(none)" : got, got == tag});
    };
    orbit_row("[s_Q,s_Q] -> z_a", to_torus(Q, Q), "z_a");
    orbit_row("[s_Q,s_-Q] -> z_c", to_torus(Q, Scalar::minus_one() * Q), "z_c");
    orbit_row("[s_i,s_i] -> z_*", to_torus(Scalar::zeta(Frac(1, 4)), Scalar::zeta(Frac(1, 4))),
              "z_*");

    {
        // L-packet at z_*: the two fiber components carry rho = 1 and sgn.
        const auto f = corr.fiber(TorusPoint{Scalar::minus_one(), one});
        std::set<std::string> rhos;
        for (const auto& en : f)
            rhos.insert(corr.assign_triple(W.element(en.class_word), en.point).rho);
        const bool pass = f.size() == 2 && rhos == std::set<std::string>{"1", "sgn"};
        rows.push_back({"L-packet at z_*", "{1,sgn}", pass ? "{1,sgn}" : "mismatch", pass});
    }
    return rows;
}

} // namespace g2ps
