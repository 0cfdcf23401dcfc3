#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "g2ps/correcting.hpp"

using namespace g2ps;

namespace {

using Entry = std::pair<std::string, std::string>; // class word, point

std::vector<Entry> entries(const std::vector<FiberEntry>& f) {
    std::vector<Entry> out;
    for (const auto& en : f) out.emplace_back(en.class_word, str(en.point));
    return out;
}

void check_fiber(const Corrector& corr, const TorusPoint& y, const std::vector<Entry>& want) {
    auto got = entries(corr.fiber(y));
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CAPTURE(i);
        CHECK(got[i].first == want[i].first);
        CHECK(got[i].second == want[i].second);
    }
}

const SpecialPoint& named(Case c, const std::string& tag) {
    for (const auto& sp : special_points(c))
        if (sp.tag == tag) return sp;
    throw std::runtime_error("no such tag: " + tag);
}

} // namespace

TEST_CASE("cell cocharacters") {
    SUBCASE("unramified") {
        CHECK(cocharacter(Case::Iwahori, "c_e").exps == std::array<long long, 2>{-2, -4});
        CHECK(cocharacter(Case::Iwahori, "c_1").exps == std::array<long long, 2>{0, -2});
        CHECK(cocharacter(Case::Iwahori, "c_2").exps == std::array<long long, 2>{0, -2});
        CHECK(cocharacter(Case::Iwahori, "c_3").exps == std::array<long long, 2>{0, -2});
        CHECK(cocharacter(Case::Iwahori, "c_0").exps == std::array<long long, 2>{0, 0});
    }
    SUBCASE("rank one") {
        CHECK(cocharacter(Case::GL2ChiOne, "b_e").exps == std::array<long long, 2>{1, -1});
        CHECK(cocharacter(Case::GL2ChiChi, "b_e").exps == std::array<long long, 2>{1, -1});
        CHECK(cocharacter(Case::GL2ChiOne, "b_0").exps == std::array<long long, 2>{0, 0});
    }
    SUBCASE("ramified order six and two-squared") {
        for (const char* cell : {"d_e", "d_1"})
            CHECK(cocharacter(Case::SL3, cell).exps == std::array<long long, 2>{0, -2});
        CHECK(cocharacter(Case::SL3, "d_0").exps == std::array<long long, 2>{0, 0});
        for (const char* cell : {"e_e", "e_1", "e_1'"})
            CHECK(cocharacter(Case::SO4, cell).exps == std::array<long long, 2>{0, -2});
        CHECK(cocharacter(Case::SO4, "e_0").exps == std::array<long long, 2>{0, 0});
    }
    SUBCASE("evaluation") {
        const Cocharacter h = cocharacter(Case::Iwahori, "c_e");
        CHECK(str(h.at(Scalar::Q())) == "(Q^-2,Q^-4)");
        CHECK(str(h.at(Scalar::var("tau"))) == "(tau^-2,tau^-4)");
        CHECK(str(h.at(Scalar::one())) == "(1,1)");
    }
    SUBCASE("unknown cells are rejected") {
        CHECK_THROWS_AS(cocharacter(Case::Iwahori, "b_e"), std::invalid_argument);
        CHECK_THROWS_AS(cocharacter(Case::SO4, "e_9"), std::invalid_argument);
    }
}

TEST_CASE("unipotent labels by cell") {
    CHECK(unipotent_label(Case::Iwahori, "c_e") == "u_e");
    CHECK(unipotent_label(Case::Iwahori, "c_1") == "u_1");
    CHECK(unipotent_label(Case::Iwahori, "c_2") == "u_2");
    CHECK(unipotent_label(Case::Iwahori, "c_3") == "u_3");
    CHECK(unipotent_label(Case::Iwahori, "c_0") == "1");
    CHECK(unipotent_label(Case::GL2ChiOne, "b_e") == "u_e");
    CHECK(unipotent_label(Case::GL2ChiOne, "b_0") == "1");
    CHECK(unipotent_label(Case::SL3, "d_1") == "u_1");
    CHECK(unipotent_label(Case::SO4, "e_1'") == "u_1'");
    CHECK(unipotent_label(Case::SO4, "e_0") == "1");
    CHECK_THROWS_AS(unipotent_label(Case::SL3, "c_1"), std::invalid_argument);
}

TEST_CASE("deformed projection") {
    WeylGroup W;
    Corrector corr(W, Case::Iwahori);
    const Scalar one = Scalar::one();
    SUBCASE("top point flows to the most degenerate parameter") {
        auto pi = corr.pi_tau(W.element("ab"), {one, one}, Scalar::Q());
        REQUIRE_FALSE(pi.empty());
        CHECK(corr.special_tag(pi.front()) == "t_a");
    }
    SUBCASE("at tau = 1 the projection is the plain orbit") {
        const TorusPoint t{Scalar::q(), Scalar::q(Frac(3))};
        CHECK(corr.pi_tau(W.element("e"), t, one) == orbit(corr.quotient().subgroup(), t));
    }
    SUBCASE("conjugation invariance holds at tau = 1") {
        const TorusPoint t{one, Scalar::minus_one()};
        const IntMat w = W.element("ababab");
        for (const auto& g : corr.quotient().subgroup())
            CHECK(corr.pi_tau(g * w * W.inv(g), act(g, t), one) == corr.pi_tau(w, t, one));
    }
    SUBCASE("the deformed projection is evaluated at the given representative") {
        // the three two-torsion representatives of one component spread over
        // several parameter orbits; the tabulated value is reached from (-1,1)
        const IntMat w = W.element("ababab");
        auto tag_of = [&](const TorusPoint& t) {
            return corr.special_tag(corr.pi_tau(w, t, Scalar::Q()).front());
        };
        CHECK(tag_of({Scalar::minus_one(), one}) == "t_d");
        CHECK(tag_of({Scalar::minus_one(), Scalar::minus_one()}) == "t_d");
        CHECK(tag_of({one, Scalar::minus_one()}) == "");
    }
    SUBCASE("orthogonal case line flows to the tabulated curve") {
        Corrector so4(W, Case::SO4);
        auto pi = so4.pi_tau(W.element("a"), {Scalar::minus_one(), Scalar::minus_one()},
                             Scalar::Q());
        CHECK(so4.special_tag(pi.front()) == "z_c");
    }
}

TEST_CASE("tabulated point tags") {
    WeylGroup W;
    for (Case c : all_cases()) {
        CAPTURE(case_name(c));
        Corrector corr(W, c);
        for (const auto& sp : special_points(c)) {
            CHECK(corr.special_tag(sp.point) == sp.tag);
            for (const auto& g : corr.quotient().subgroup())
                CHECK(corr.special_tag(act(g, sp.point)) == sp.tag);
        }
        CHECK(corr.special_tag({Scalar::q(Frac(9)), Scalar::q(Frac(5))}) == "");
    }
    Corrector iw(W, Case::Iwahori);
    CHECK(iw.special_tag({Scalar::one(), Scalar::one()}) == "t_0");
}

TEST_CASE("fibers of the corrected projection: unramified case") {
    WeylGroup W;
    Corrector corr(W, Case::Iwahori);
    auto pt = [&](const char* tag) { return named(Case::Iwahori, tag).point; };

    check_fiber(corr, pt("t_a"),
                {{"e", "(Q^-2,Q^-4)"}, {"ab", "(1,1)"}, {"a", "(Q^-2,Q^-2)"}, {"b", "(Q^-4,1)"}});
    check_fiber(corr, pt("t_b"), {{"e", "(z^1,Q^-2*z^1)"}, {"a", "(z^1,z^1)"}});
    check_fiber(corr, pt("t_c"),
                {{"e", "(zeta(1/3),zeta(1/3)*Q^-2)"},
                 {"abab", "(zeta(1/3),zeta(1/3))"},
                 {"a", "(zeta(1/3),zeta(1/3))"},
                 {"a", "(zeta(2/3),zeta(2/3))"}});
    check_fiber(corr, pt("t_d"),
                {{"e", "(Q^-2,-1)"}, {"ababab", "(-1,1)"}, {"a", "(-1,-1)"}, {"b", "(-1,1)"}});
    check_fiber(corr, pt("t_e"),
                {{"e", "(1,Q^-2)"},
                 {"ababab", "(1,1)"},
                 {"abab", "(1,1)"},
                 {"a", "(1,1)"},
                 {"b", "(1,1)"}});
    check_fiber(corr, pt("t_f"), {{"e", "(Q^(4/3),Q^(-2/3))"}, {"a", "(Q^(2/3),Q^(2/3))"}});
    check_fiber(corr, pt("t_g"), {{"e", "(Q^1,Q^-1)"}, {"a", "(Q^1,Q^1)"}});
    check_fiber(corr, pt("t_h"), {{"e", "(Q^-2,z^1)"}, {"b", "(z^1,1)"}});
    check_fiber(corr, pt("t_i"), {{"e", "(Q^-2,Q^-2)"}, {"b", "(Q^-2,1)"}});
    check_fiber(corr, pt("t_j"), {{"e", "(Q^-2,Q^1)"}, {"b", "(Q^1,1)"}});

    SUBCASE("component tags along the largest fiber") {
        auto f = corr.fiber(pt("t_e"));
        REQUIRE(f.size() == 5);
        CHECK(f[0].component_tag == "surface");
        CHECK(f[1].component_tag == "pt_1");
        CHECK(f[2].component_tag == "pt_4");
        CHECK(f[3].component_tag == "line_a");
        CHECK(f[4].component_tag == "line_b");
    }
    SUBCASE("the two-torsion fiber lands on pt_2") {
        auto f = corr.fiber(pt("t_d"));
        REQUIRE(f.size() == 4);
        CHECK(f[1].component_tag == "pt_2");
    }
    SUBCASE("the top point fiber lands on pt_*") {
        auto f = corr.fiber(pt("t_a"));
        CHECK(f[1].component_tag == "pt_*");
    }
    SUBCASE("fibers are orbit invariants") {
        for (const auto& g : corr.quotient().subgroup())
            CHECK(entries(corr.fiber(act(g, pt("t_a")))) == entries(corr.fiber(pt("t_a"))));
    }
}

TEST_CASE("fibers of the corrected projection: ramified cases") {
    WeylGroup W;
    SUBCASE("order six") {
        Corrector corr(W, Case::SL3);
        auto pt = [&](const char* tag) { return named(Case::SL3, tag).point; };
        check_fiber(corr, pt("y_a"),
                    {{"e", "(1,Q^-2)"}, {"abab", "(1,1)"}, {"a", "(1,1)"}, {"a", "(Q^2,Q^2)"}});
        check_fiber(corr, pt("y_a'"),
                    {{"e", "(zeta(1/3),zeta(1/3)*Q^-2)"},
                     {"abab", "(zeta(1/3),zeta(1/3))"},
                     {"a", "(zeta(1/3),zeta(1/3))"},
                     {"a", "(zeta(1/3)*Q^2,zeta(1/3)*Q^2)"}});
        check_fiber(corr, pt("y_a''"),
                    {{"e", "(zeta(2/3),zeta(2/3)*Q^-2)"},
                     {"abab", "(zeta(2/3),zeta(2/3))"},
                     {"a", "(zeta(2/3),zeta(2/3))"},
                     {"a", "(zeta(2/3)*Q^2,zeta(2/3)*Q^2)"}});
        check_fiber(corr, pt("y_b"), {{"e", "(z^1,Q^-2*z^1)"}, {"a", "(z^1,z^1)"}});
    }
    SUBCASE("two-squared") {
        Corrector corr(W, Case::SO4);
        auto pt = [&](const char* tag) { return named(Case::SO4, tag).point; };
        check_fiber(corr, pt("z_a"),
                    {{"e", "(1,Q^-2)"},
                     {"ababab", "(1,1)"},
                     {"a", "(1,1)"},
                     {"babab", "(1,1)"}});
        check_fiber(corr, pt("z_b"),
                    {{"e", "(Q^-1*z^-1,Q^-1*z^1)"}, {"babab", "(Q^-1*z^-1,Q^1*z^1)"}});
        check_fiber(corr, pt("z_c"),
                    {{"e", "(-1,-1*Q^-2)"},
                     {"ababab", "(-1,-1)"},
                     {"a", "(-1,-1)"},
                     {"babab", "(-1,-1)"}});
        check_fiber(corr, pt("z_d"),
                    {{"e", "(Q^1*z^1,Q^-1*z^1)"}, {"a", "(Q^1*z^1,Q^1*z^1)"}});
        check_fiber(corr, pt("z_*"), {{"e", "(-1,1)"}, {"ababab", "(-1,1)"}});
    }
    SUBCASE("rank one") {
        Corrector chi1(W, Case::GL2ChiOne);
        check_fiber(chi1, named(Case::GL2ChiOne, "curve").point,
                    {{"e", "(Q^1*z^1,Q^-1)"}, {"b", "(z^1,1)"}});
        Corrector chichi(W, Case::GL2ChiChi);
        check_fiber(chichi, named(Case::GL2ChiChi, "curve").point,
                    {{"e", "(Q^1*z^1,Q^-1*z^1)"}, {"a", "(z^1,z^1)"}});
    }
}

TEST_CASE("fiber sizes match constituent counts everywhere") {
    WeylGroup W;
    const std::vector<std::pair<Case, std::size_t>> sizes = {
        {Case::Iwahori, 13},
        {Case::GL2ChiOne, 2},
        {Case::GL2ChiChi, 2},
        {Case::SL3, 5},
        {Case::SO4, 7},
    };
    for (const auto& [c, n] : sizes) {
        CAPTURE(case_name(c));
        Corrector corr(W, c);
        auto rows = corr.verify_counts();
        CHECK(rows.size() == n);
        for (const auto& row : rows) {
            CAPTURE(row.point_tag);
            CHECK(row.pass);
            CHECK(row.fiber_size == static_cast<std::size_t>(row.constituents));
        }
    }
    Corrector iw(W, Case::Iwahori);
    auto rows = iw.verify_counts();
    CHECK(rows[10].point_tag == "c_2-generic");
    CHECK(rows[11].point_tag == "c_3-generic");
    CHECK(rows[12].point_tag == "t_c-self-intersection");
    CHECK(rows[12].fiber_size == 2);
}

TEST_CASE("indexing triples of the isolated components") {
    WeylGroup W;
    struct Want {
        Case c;
        std::string tag, sigma, unip, rho;
    };
    const std::vector<Want> table = {
        {Case::Iwahori, "pt_*", "t_a", "u_e", "1"},
        {Case::Iwahori, "pt_1", "t_e", "u_1", "rho1"},
        {Case::Iwahori, "pt_2", "t_d", "u_1", "1"},
        {Case::Iwahori, "pt_3", "t_c", "u_1", "1"},
        {Case::Iwahori, "pt_4", "t_e", "u_1", "rho2"},
        {Case::SL3, "pt_1", "y_a", "u_e", "rho1"},
        {Case::SL3, "pt_2", "y_a'", "u_e", "rho2"},
        {Case::SL3, "pt_3", "y_a''", "u_e", "rho1"},
        {Case::SO4, "pt_1", "z_a", "u_e", "1"},
        {Case::SO4, "pt_2", "z_c", "u_e", "1"},
        {Case::SO4, "pt_*", "z_*", "1", "sgn"},
    };
    for (const auto& want : table) {
        CAPTURE(case_name(want.c));
        CAPTURE(want.tag);
        Corrector corr(W, want.c);
        const Component* comp = corr.quotient().by_tag(want.tag);
        REQUIRE(comp != nullptr);
        IndexingTriple triple = corr.assign_triple(comp->class_rep, comp->section.base);
        CHECK(triple.sigma_tag == want.sigma);
        CHECK(triple.unipotent == want.unip);
        CHECK(triple.rho == want.rho);
        CHECK(str(triple.sigma) == str(named(want.c, want.sigma).point));
    }
}

TEST_CASE("the assigned parameter always lies in the corrected projection") {
    WeylGroup W;
    for (Case c : all_cases()) {
        CAPTURE(case_name(c));
        Corrector corr(W, c);
        for (const auto& comp : corr.quotient().components()) {
            CAPTURE(comp.tag);
            IndexingTriple triple = corr.assign_triple(comp.class_rep, comp.section.base);
            auto pi = corr.pi_tau(comp.class_rep, comp.section.base, Scalar::Q());
            bool found = false;
            for (const auto& p : pi)
                if (p == triple.sigma) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("unipotent and rho labels are constant on components") {
    WeylGroup W;
    Corrector corr(W, Case::Iwahori);
    const TorusPoint base{Scalar::minus_one(), Scalar::one()};
    const IntMat w = W.element("ababab");
    IndexingTriple at_base = corr.assign_triple(w, base);
    CHECK(at_base.sigma_tag == "t_d");
    for (const auto& g : corr.quotient().subgroup()) {
        IndexingTriple moved = corr.assign_triple(g * w * W.inv(g), act(g, base));
        // sigma follows the representative, but the component-determined
        // labels never move
        CHECK(moved.unipotent == at_base.unipotent);
        CHECK(moved.rho == at_base.rho);
    }
}

TEST_CASE("tempered triples, one per class") {
    WeylGroup W;
    Corrector corr(W, Case::Iwahori);
    const auto& rows = tempered_table();
    REQUIRE(rows.size() == 6);

    struct Want {
        std::string word, sigma, unip, rho, tag;
    };
    const std::vector<Want> want = {
        {"e", "t_0", "1", "1", "surface"},   {"b", "t_g", "u_3", "1", "line_b"},
        {"a", "t_j", "u_2", "1", "line_a"},  {"ababab", "t_e", "u_1", "rho1", "pt_1"},
        {"abab", "t_e", "u_1", "rho2", "pt_4"}, {"ab", "t_a", "u_e", "1", "pt_*"},
    };
    std::set<std::string> words;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].class_word == want[i].word);
        CHECK(rows[i].sigma_tag == want[i].sigma);
        CHECK(rows[i].unipotent == want[i].unip);
        CHECK(rows[i].rho == want[i].rho);
        CHECK(rows[i].component_tag == want[i].tag);
        words.insert(rows[i].class_word);
    }
    SUBCASE("the class words are exactly the conjugacy-class representatives") {
        std::set<std::string> reps;
        for (const auto& cl : W.conjugacy_classes()) reps.insert(W.word(cl.front()));
        CHECK(words == reps);
    }
    SUBCASE("each witness lies on the claimed component") {
        for (const auto& row : rows) {
            auto loc = corr.quotient().locate(W.element(row.class_word), row.witness);
            REQUIRE(loc.has_value());
            CHECK(loc->comp->tag == row.component_tag);
        }
    }
}

TEST_CASE("fold degrees of the interval components") {
    WeylGroup W;
    Corrector iw(W, Case::Iwahori);
    CHECK(iw.fold_degree(*iw.quotient().by_tag("line_a")) == 1);
    CHECK(iw.fold_degree(*iw.quotient().by_tag("line_b")) == 1);
    CHECK_FALSE(iw.fold_degree(*iw.quotient().by_tag("surface")).has_value());
    CHECK_FALSE(iw.fold_degree(*iw.quotient().by_tag("pt_1")).has_value());

    Corrector so4(W, Case::SO4);
    CHECK(so4.fold_degree(*so4.quotient().by_tag("line_a")) == 1);
    CHECK(so4.fold_degree(*so4.quotient().by_tag("line_a'")) == 1);

    Corrector sl3(W, Case::SL3);
    CHECK_FALSE(sl3.fold_degree(*sl3.quotient().by_tag("line_a")).has_value());
}

TEST_CASE("symbolic dual-pair checks of the orthogonal case") {
    auto rows = so4_dual_check();
    REQUIRE(rows.size() == 10);
    const std::vector<std::pair<std::string, std::string>> want = {
        {"relation s u s^-1 = u^q", "upper entry q"},
        {"order [s_Q,s_Q],[u,u]", "2"},
        {"order [s_Q,s_w],[u,1]", "2"},
        {"order [s_z,s_Q],[1,u]", "2"},
        {"order [s_z,s_w],[1,1] generic", "1"},
        {"order [s_i,s_i],[1,1]", "2"},
        {"[s_Q,s_Q] -> z_a", "z_a"},
        {"[s_Q,s_-Q] -> z_c", "z_c"},
        {"[s_i,s_i] -> z_*", "z_*"},
        {"L-packet at z_*", "{1,sgn}"},
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(rows[i].name);
        CHECK(rows[i].name == want[i].first);
        CHECK(rows[i].observed == want[i].second);
        CHECK(rows[i].expected == rows[i].observed);
        CHECK(rows[i].pass);
    }
}
