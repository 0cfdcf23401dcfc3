#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "g2ps/families.hpp"

using namespace g2ps;

namespace {

// Roots of unity times integer powers of q, deterministic.
std::vector<TorusPoint> sample_points(std::size_t count) {
    static const std::vector<Frac> torsion{Frac(0),    Frac(1, 2), Frac(1, 3), Frac(2, 3),
                                           Frac(1, 4), Frac(3, 4), Frac(1, 6), Frac(5, 6)};
    std::vector<TorusPoint> out;
    std::size_t i = 0;
    while (out.size() < count) {
        long long a = static_cast<long long>(i % 7) - 3;
        long long b = static_cast<long long>((i / 7) % 7) - 3;
        out.push_back({Scalar::zeta(torsion[i % torsion.size()]) * Scalar::q(Frac(a)),
                       Scalar::zeta(torsion[(i / 3) % torsion.size()]) * Scalar::q(Frac(b))});
        ++i;
    }
    return out;
}

std::vector<IntMat> sub_of(const WeylGroup& W, Case c) {
    return stabilizer_subgroup(W, rep_pair(c), 12);
}

} // namespace

TEST_CASE("the twelve tabulated reducibility conditions, in order") {
    const auto& tab = twelve_conditions();
    REQUIRE(tab.size() == 12);
    const std::vector<RedCondition> want = {
        {{1, 0}, +1},  {{2, 1}, +1}, {{2, 1}, -1},  {{1, 1}, -1},
        {{0, 1}, +1},  {{1, 0}, -1}, {{1, 2}, +1},  {{1, 2}, -1},
        {{0, 1}, -1},  {{1, 1}, +1}, {{1, -1}, +1}, {{1, -1}, -1},
    };
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(tab[i].n == want[i].n);
        CHECK(tab[i].sign == want[i].sign);
    }
}

TEST_CASE("tabulated conditions agree with the root pairings everywhere") {
    WeylGroup W;
    const std::vector<RamPair> reps = {{0, 0}, {1, 0}, {1, 1}, {4, 4}, {6, 6}, {1, 5}};
    for (const auto& ram : reps) {
        CAPTURE(ram[0]);
        CAPTURE(ram[1]);
        for (const auto& t : sample_points(200)) {
            PSPoint p{ram, 12, t};
            CHECK(reducible_twelve(p) == reducible_roots(W, p));
        }
    }
}

TEST_CASE("reducibility point examples") {
    WeylGroup W;
    const Scalar z = Scalar::var("z");
    const Scalar qi = Scalar::q(Frac(-1));
    SUBCASE("unramified principal series") {
        CHECK(reducible_twelve({{0, 0}, 12, {z, qi}}));
        CHECK(reducible_twelve({{0, 0}, 12, {z, qi * z}}));
        CHECK_FALSE(reducible_twelve({{0, 0}, 12, {Scalar::q(Frac(7)), Scalar::q(Frac(11))}}));
    }
    SUBCASE("ramification can kill a condition") {
        // chi_2 = nu requires chi_2 unramified
        CHECK(reducible_twelve({{0, 0}, 12, {z, qi}}));
        CHECK_FALSE(reducible_twelve({{0, 1}, 12, {z, qi}}));
        CHECK(reducible_twelve({{1, 0}, 12, {z, qi}}));
    }
}

TEST_CASE("the unitary reducibility criterion") {
    const Scalar one = Scalar::one();
    const Scalar m1 = Scalar::minus_one();
    SUBCASE("distinct order-two characters") {
        CHECK(keys_unitary({{6, 6}, 12, {m1, one}}));
        CHECK(keys_unitary({{0, 6}, 12, {m1, m1}}));
        CHECK(keys_unitary({{6, 0}, 12, {one, m1}}));
    }
    SUBCASE("equal characters fail") {
        CHECK_FALSE(keys_unitary({{6, 6}, 12, {m1, m1}}));
        CHECK_FALSE(keys_unitary({{0, 0}, 12, {m1, m1}}));
    }
    SUBCASE("a trivial or higher-order coordinate fails") {
        CHECK_FALSE(keys_unitary({{0, 0}, 12, {one, m1}}));
        CHECK_FALSE(keys_unitary({{0, 0}, 12, {m1, one}}));
        CHECK_FALSE(keys_unitary({{6, 6}, 12, {Scalar::zeta(Frac(1, 3)), one}}));
        CHECK_FALSE(keys_unitary({{4, 6}, 12, {one, one}}));
    }
    SUBCASE("feeds the combined predicate") {
        WeylGroup W;
        CHECK(is_reducible(W, {{6, 6}, 12, {m1, one}}));
        CHECK_FALSE(reducible_twelve({{6, 6}, 12, {m1, one}}));
    }
}

TEST_CASE("flat families, case by case") {
    SUBCASE("unramified") {
        FlatFamily f = flat_family(Case::Iwahori);
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].str() == "y^1 = tau^-2");
        CHECK(f.factors[1].str() == "x^1*y^-1 = tau^2");
        CHECK(f.extras.empty());
    }
    SUBCASE("rank one with one ramified character") {
        FlatFamily f = flat_family(Case::GL2ChiOne);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].str() == "y^1 = tau^-1");
        CHECK(f.extras.empty());
    }
    SUBCASE("rank one with equal ramification") {
        FlatFamily f = flat_family(Case::GL2ChiChi);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].str() == "x^1*y^-1 = tau^2");
    }
    SUBCASE("order-six ramification carries two extra points") {
        FlatFamily f = flat_family(Case::SL3);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].str() == "x^1*y^-1 = tau^2");
        REQUIRE(f.extras.size() == 2);
        CHECK(str(f.extras[0]) == "(zeta(1/3),zeta(2/3)*tau^-2)");
        CHECK(str(f.extras[1]) == "(zeta(2/3),zeta(1/3)*tau^-2)");
    }
    SUBCASE("order-two-squared ramification carries an isolated extra point") {
        FlatFamily f = flat_family(Case::SO4);
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].str() == "x^1*y^-1 = tau^2");
        CHECK(f.factors[1].str() == "x^1*y^1 = tau^-2");
        REQUIRE(f.extras.size() == 1);
        CHECK(str(f.extras[0]) == "(-1,1)");
    }
    SUBCASE("no family in the generic case") {
        CHECK_THROWS_AS(flat_family(Case::TrivialWs), std::invalid_argument);
    }
}

TEST_CASE("family membership at tau = sqrt(q)") {
    WeylGroup W;
    const Scalar sq = Scalar::Q();
    for (Case c : all_cases()) {
        CAPTURE(case_name(c));
        const auto sub = sub_of(W, c);
        const FlatFamily fam = flat_family(c);
        for (const auto& curve : reducibility_curves(c)) {
            CAPTURE(curve.name);
            CHECK(family_member(sub, fam, sq, curve.param));
        }
        for (const auto& sp : special_points(c)) {
            CAPTURE(sp.tag);
            CHECK(family_member(sub, fam, sq, sp.point));
        }
        for (std::size_t k = 0; k < 20; ++k) {
            TorusPoint off{Scalar::zeta(Frac(1, 5)) * Scalar::q(Frac(7 + (long long)k)),
                           Scalar::zeta(Frac(1, 7)) * Scalar::q(Frac(11 + 2 * (long long)k))};
            CHECK_FALSE(family_member(sub, fam, sq, off));
        }
    }
}

TEST_CASE("membership is invariant under the subgroup action") {
    WeylGroup W;
    const Scalar sq = Scalar::Q();
    for (Case c : all_cases()) {
        const auto sub = sub_of(W, c);
        const FlatFamily fam = flat_family(c);
        for (const auto& sp : special_points(c))
            for (const auto& w : sub)
                CHECK(family_member(sub, fam, sq, act(w, sp.point)));
    }
}

TEST_CASE("each binomial factor is satisfied for symbolic tau") {
    WeylGroup W;
    const Scalar tau = Scalar::var("tau");
    const Scalar z = Scalar::var("z");
    for (Case c : all_cases()) {
        CAPTURE(case_name(c));
        const auto sub = sub_of(W, c);
        const FlatFamily fam = flat_family(c);
        for (const auto& f : fam.factors) {
            // build a point on the factor: for (0,1) take (z, c tau^d),
            // for (1,s) take x = c tau^d z^-s with y = z
            TorusPoint p;
            const Scalar rhs = f.c * tau.pow(Frac(f.d));
            if (f.m[0] == 0)
                p = {z, rhs};
            else
                p = {rhs * z.pow(Frac(-f.m[1])), z};
            CHECK(family_member(sub, fam, tau, p));
        }
        for (const auto& ex : fam.extras) CHECK(family_member(sub, fam, tau, ex));
    }
}

TEST_CASE("odd-power correction keeps the stored curve on the family") {
    // In the singly-ramified rank-one case the family reaches (z, 1/sqrt q),
    // not (z, 1/q); the stored reducibility curve sits on the family while the
    // naive q-scaled curve does not.
    WeylGroup W;
    const auto sub = sub_of(W, Case::GL2ChiOne);
    const FlatFamily fam = flat_family(Case::GL2ChiOne);
    const Scalar z = Scalar::var("z");
    CHECK(family_member(sub, fam, Scalar::Q(), {Scalar::Q() * z, Scalar::Q(Frac(-1))}));
    CHECK_FALSE(family_member(sub, fam, Scalar::Q(), {z, Scalar::q(Frac(-1))}));
}

TEST_CASE("reducibility curves per case") {
    CHECK(reducibility_curves(Case::Iwahori).size() == 2);
    CHECK(str(reducibility_curves(Case::Iwahori)[0].param) == "(z^1,Q^-2*z^1)");
    CHECK(str(reducibility_curves(Case::Iwahori)[1].param) == "(z^1,Q^-2)");
    CHECK(reducibility_curves(Case::Iwahori)[0].name == "c_2");
    CHECK(reducibility_curves(Case::Iwahori)[1].name == "c_3");
    CHECK(str(reducibility_curves(Case::GL2ChiOne)[0].param) == "(Q^1*z^1,Q^-1)");
    CHECK(str(reducibility_curves(Case::GL2ChiChi)[0].param) == "(Q^1*z^1,Q^-1*z^1)");
    CHECK(str(reducibility_curves(Case::SL3)[0].param) == "(z^1,Q^-2*z^1)");
    const auto so4 = reducibility_curves(Case::SO4);
    REQUIRE(so4.size() == 2);
    CHECK(so4[0].name == "c_1");
    CHECK(so4[1].name == "c_1'");
    CHECK(str(so4[0].param) == "(Q^1*z^1,Q^-1*z^1)");
    CHECK(str(so4[1].param) == "(Q^-1*z^-1,Q^-1*z^1)");
    CHECK(reducibility_curves(Case::TrivialWs).empty());
}

TEST_CASE("curve points against the root predicate") {
    WeylGroup W;
    for (Case c : all_cases())
        for (const auto& curve : reducibility_curves(c)) {
            CAPTURE(case_name(c));
            CAPTURE(curve.name);
            // the rank-one curve with one ramified coordinate sits at a half
            // power of q, which the integral root pairings cannot detect; it
            // is certified through the family instead
            if (c == Case::GL2ChiOne) {
                CHECK_FALSE(reducible_roots(W, PSPoint{rep_pair(c), 12, curve.param}));
                auto sub = stabilizer_subgroup(W, rep_pair(c), 12);
                CHECK(family_member(sub, flat_family(c), Scalar::Q(), curve.param));
            } else {
                CHECK(reducible_roots(W, PSPoint{rep_pair(c), 12, curve.param}));
            }
        }
}

TEST_CASE("tabulated special points and their counts") {
    const auto& iw = special_points(Case::Iwahori);
    REQUIRE(iw.size() == 10);
    const std::vector<std::pair<std::string, int>> want = {
        {"t_a", 4}, {"t_b", 2}, {"t_c", 4}, {"t_d", 4}, {"t_e", 5},
        {"t_f", 2}, {"t_g", 2}, {"t_h", 2}, {"t_i", 2}, {"t_j", 2},
    };
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(iw[i].tag == want[i].first);
        CHECK(iw[i].count == want[i].second);
    }
    CHECK(str(iw[0].point) == "(Q^-2,Q^-4)");
    CHECK(str(iw[4].point) == "(1,Q^-2)");
    CHECK(str(iw[5].point) == "(Q^(4/3),Q^(-2/3))");

    const auto& sl3 = special_points(Case::SL3);
    REQUIRE(sl3.size() == 4);
    CHECK(sl3[0].tag == "y_a");
    CHECK(sl3[1].tag == "y_a'");
    CHECK(sl3[2].tag == "y_a''");
    CHECK(sl3[3].tag == "y_b");
    CHECK(sl3[0].count == 4);
    CHECK(sl3[3].count == 2);
    CHECK(str(sl3[2].point) == "(zeta(2/3),zeta(2/3)*Q^-2)");

    const auto& so4 = special_points(Case::SO4);
    REQUIRE(so4.size() == 5);
    CHECK(so4[0].tag == "z_a");
    CHECK(so4[1].tag == "z_b");
    CHECK(so4[2].tag == "z_c");
    CHECK(so4[3].tag == "z_d");
    CHECK(so4[4].tag == "z_*");
    CHECK(str(so4[2].point) == "(-1,-1*Q^-2)");
    CHECK(str(so4[4].point) == "(-1,1)");
    CHECK(so4[4].count == 2);

    CHECK(special_points(Case::GL2ChiOne).size() == 1);
    CHECK(special_points(Case::GL2ChiOne)[0].tag == "curve");
    CHECK(special_points(Case::GL2ChiOne)[0].count == 2);
    CHECK(special_points(Case::TrivialWs).empty());
}

TEST_CASE("intersections of the two reducibility curves") {
    WeylGroup W;
    SUBCASE("unramified case: three orbits") {
        const auto sub = sub_of(W, Case::Iwahori);
        const auto curves = reducibility_curves(Case::Iwahori);
        auto pts = curve_intersections(sub, curves[0], curves[1]);
        REQUIRE(pts.size() == 3);
        int matched = 0;
        for (const auto& sp : special_points(Case::Iwahori)) {
            if (sp.tag != "t_a" && sp.tag != "t_d" && sp.tag != "t_e") continue;
            for (const auto& p : pts)
                if (same_orbit(sub, p, sp.point)) ++matched;
        }
        CHECK(matched == 3);
    }
    SUBCASE("order-two-squared case: two orbits") {
        const auto sub = sub_of(W, Case::SO4);
        const auto curves = reducibility_curves(Case::SO4);
        auto pts = curve_intersections(sub, curves[0], curves[1]);
        REQUIRE(pts.size() == 2);
        int matched = 0;
        for (const auto& sp : special_points(Case::SO4)) {
            if (sp.tag != "z_a" && sp.tag != "z_c") continue;
            for (const auto& p : pts)
                if (same_orbit(sub, p, sp.point)) ++matched;
        }
        CHECK(matched == 2);
    }
}

TEST_CASE("constituent counts") {
    WeylGroup W;
    SUBCASE("special points report their tabulated count") {
        for (Case c : all_cases()) {
            const auto sub = sub_of(W, c);
            for (const auto& sp : special_points(c))
                CHECK(constituent_count(c, W, sub, sp.point) == sp.count);
        }
    }
    SUBCASE("translates of special points report the same count") {
        const auto sub = sub_of(W, Case::Iwahori);
        const auto& te = special_points(Case::Iwahori)[4];
        for (const auto& w : sub)
            CHECK(constituent_count(Case::Iwahori, W, sub, act(w, te.point)) == te.count);
    }
    SUBCASE("family points off the table report two") {
        const auto sub = sub_of(W, Case::Iwahori);
        // a numeric point of the curve (z, z/q) away from every special orbit
        TorusPoint p{Scalar::q(Frac(3)), Scalar::q(Frac(2))};
        CHECK(constituent_count(Case::Iwahori, W, sub, p) == 2);
    }
    SUBCASE("numeric irreducible points report one") {
        const auto sub = sub_of(W, Case::Iwahori);
        TorusPoint p{Scalar::zeta(Frac(1, 5)) * Scalar::q(Frac(7)),
                     Scalar::zeta(Frac(1, 7)) * Scalar::q(Frac(11))};
        CHECK(constituent_count(Case::Iwahori, W, sub, p) == 1);
    }
    SUBCASE("unclassifiable symbolic points throw") {
        const auto sub = sub_of(W, Case::Iwahori);
        TorusPoint p{Scalar::var("z"), Scalar::var("w")};
        CHECK_THROWS_AS(constituent_count(Case::Iwahori, W, sub, p), std::domain_error);
    }
    SUBCASE("no counting in the generic case") {
        CHECK_THROWS_AS(constituent_count(Case::TrivialWs, W, {}, {Scalar::one(), Scalar::one()}),
                        std::invalid_argument);
    }
}

TEST_CASE("counts along a curve jump exactly at the tabulated points") {
    WeylGroup W;
    SUBCASE("ramified order-six: count four only at the three cube roots") {
        const auto sub = sub_of(W, Case::SL3);
        for (long long k : {0, 1, 2}) {
            TorusPoint p{Scalar::zeta(Frac(k, 3)), Scalar::q(Frac(-1)) * Scalar::zeta(Frac(k, 3))};
            CHECK(constituent_count(Case::SL3, W, sub, p) == 4);
        }
        TorusPoint generic{Scalar::q(Frac(2)), Scalar::q(Frac(1))};
        CHECK(constituent_count(Case::SL3, W, sub, generic) == 2);
    }
    SUBCASE("order-two-squared: count four at the two-torsion points of the curve") {
        const auto sub = sub_of(W, Case::SO4);
        // z0 = Q lands on z_a's orbit, z0 = -Q on z_c's orbit
        TorusPoint at_plus{Scalar::Q(Frac(2)), Scalar::one()};
        TorusPoint at_minus{Scalar::minus_one() * Scalar::Q(Frac(2)), Scalar::minus_one()};
        CHECK(constituent_count(Case::SO4, W, sub, at_plus) == 4);
        CHECK(constituent_count(Case::SO4, W, sub, at_minus) == 4);
        TorusPoint generic{Scalar::Q() * Scalar::q(Frac(4)), Scalar::Q(Frac(-1)) * Scalar::q(Frac(4))};
        CHECK(constituent_count(Case::SO4, W, sub, generic) == 2);
    }
}
