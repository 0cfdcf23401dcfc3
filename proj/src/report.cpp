#include "g2ps/report.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "g2ps/asymptotic.hpp"
#include "g2ps/correcting.hpp"
#include "g2ps/extquot.hpp"
#include "g2ps/families.hpp"
#include "g2ps/torus.hpp"

namespace g2ps {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

std::string ref_id(const std::string& case_name, const std::string& check) {
    return "g2ps:" + case_name + ":" + check;
}

CheckRow make_check(const std::string& case_name, const std::string& name,
                    const std::string& expected, const std::string& observed) {
    return {name, expected, observed, expected == observed, ref_id(case_name, name)};
}

// Deterministic list of structured symbolic parameter values: roots of unity
// times integer powers of q.
std::vector<TorusPoint> structured_points(std::size_t count) {
    static const std::vector<Frac> torsion{Frac(0),    Frac(1, 2), Frac(1, 3), Frac(2, 3),
                                           Frac(1, 4), Frac(3, 4), Frac(1, 6), Frac(5, 6)};
    std::vector<TorusPoint> out;
    std::size_t i = 0;
    while (out.size() < count) {
        long long a = static_cast<long long>(i % 7) - 3;
        long long b = static_cast<long long>((i / 7) % 7) - 3;
        const Frac& z1 = torsion[i % torsion.size()];
        const Frac& z2 = torsion[(i / 3) % torsion.size()];
        out.push_back({Scalar::zeta(z1) * Scalar::q(Frac(a)), Scalar::zeta(z2) * Scalar::q(Frac(b))});
        ++i;
    }
    return out;
}

// Points guaranteed off every flat family: 5- and 7-torsion never matches the
// torsion of any family constant, and the q-exponents are too large for the
// binomial identities.
std::vector<TorusPoint> off_locus_points(std::size_t count) {
    std::vector<TorusPoint> out;
    for (std::size_t k = 0; k < count; ++k) {
        long long a = 7 + static_cast<long long>(k);
        long long b = 11 + 2 * static_cast<long long>(k);
        out.push_back({Scalar::zeta(Frac(1, 5)) * Scalar::q(Frac(a)),
                       Scalar::zeta(Frac(1, 7)) * Scalar::q(Frac(b))});
    }
    return out;
}

std::string expected_inventory(Case c) {
    switch (c) {
        case Case::Iwahori: return "pt_*,pt_1,pt_2,pt_3,pt_4,line_a,line_b,surface";
        case Case::GL2ChiOne:
        case Case::GL2ChiChi: return "line,surface";
        case Case::SL3: return "pt_1,pt_2,pt_3,line_a,surface";
        case Case::SO4: return "pt_1,pt_2,line_a,line_a',surface,pt_*";
        default: return "";
    }
}

long long expected_stabilizer_order(Case c) {
    switch (c) {
        case Case::Iwahori: return 12;
        case Case::GL2ChiOne:
        case Case::GL2ChiChi: return 2;
        case Case::SL3: return 6;
        case Case::SO4: return 4;
        case Case::TrivialWs: return 1;
    }
    return 0;
}

std::vector<CheckRow> trivial_case_checks(const WeylGroup& W, const ReportOptions& opts) {
    const std::string cn = case_name(Case::TrivialWs);
    std::vector<CheckRow> checks;
    auto sub = stabilizer_subgroup(W, rep_pair(Case::TrivialWs), opts.modulus);
    checks.push_back(make_check(cn, "stabilizer-order", "1", std::to_string(sub.size())));

    std::size_t reducible = 0;
    const auto sample = structured_points(200);
    for (const auto& t : sample) {
        PSPoint p{rep_pair(Case::TrivialWs), opts.modulus, t};
        if (is_reducible(W, p)) ++reducible;
    }
    checks.push_back(make_check(cn, "irreducible-sample", "0/200",
                                std::to_string(reducible) + "/200"));
    return checks;
}

std::vector<CheckRow> asymptotic_checks(long long degree) {
    const std::string cn = "so4";
    std::vector<CheckRow> checks;

    // Product in the representation ring vs the character-polynomial oracle.
    std::size_t cg_ok = 0, cg_total = 0;
    for (long long m = 0; m <= 8; ++m)
        for (long long n = 0; n <= 8; ++n) {
            ++cg_total;
            RepRingElement lhs = cg_multiply(RepRingElement::V(m), RepRingElement::V(n));
            RepRingElement rhs = from_char_poly(p1_mul(char_poly(m), char_poly(n)));
            if (lhs == rhs) ++cg_ok;
        }
    checks.push_back(make_check(cn, "cg-oracle", std::to_string(cg_total) + "/" + std::to_string(cg_total),
                                std::to_string(cg_ok) + "/" + std::to_string(cg_total)));

    // Closure of the based-ring products: non-negative integer coefficients on
    // valid cell elements, for internal weights up to 3.
    std::vector<LowestCellElement> cells;
    for (int la = 0; la < 2; ++la)
        for (int ra = 0; ra < 2; ++ra)
            for (long long m = -5; m <= 3; ++m)
                for (long long n = -5; n <= 3; ++n) {
                    LowestCellElement w{la == 1, m, ra == 1, n};
                    if (!w.valid()) continue;
                    TensorBasisElement t = table2_basis(w);
                    if (t.m > 3 || t.n > 3) continue;
                    cells.push_back(w);
                }
    std::size_t closed = 0, total = 0;
    for (const auto& w : cells)
        for (const auto& w2 : cells) {
            ++total;
            bool ok = true;
            try {
                for (const auto& [prod, coeff] : j_multiply(w, w2))
                    if (!prod.valid() || coeff < 0) ok = false;
            } catch (const std::exception&) {
                ok = false;
            }
            if (ok) ++closed;
        }
    checks.push_back(make_check(cn, "table2-closure",
                                std::to_string(total) + "/" + std::to_string(total),
                                std::to_string(closed) + "/" + std::to_string(total)));

    // Identity of the based ring.
    {
        bool ok = true;
        CellCombination unit = j_unit();
        std::mt19937 rng(20240913);
        std::uniform_int_distribution<long long> pick(0, static_cast<long long>(cells.size()) - 1);
        for (int trial = 0; trial < 20 && ok; ++trial) {
            const LowestCellElement& w = cells[static_cast<std::size_t>(pick(rng))];
            CellCombination left, right, self;
            self[w] = 1;
            for (const auto& [u, cu] : unit)
                for (const auto& [p, cp] : j_multiply(u, w)) {
                    left[p] += cu * cp;
                    if (left[p] == 0) left.erase(p);
                }
            for (const auto& [u, cu] : unit)
                for (const auto& [p, cp] : j_multiply(w, u)) {
                    right[p] += cu * cp;
                    if (right[p] == 0) right.erase(p);
                }
            ok = left == self && right == self;
        }
        checks.push_back(make_check(cn, "unit-element", "identity", ok ? "identity" : "fails"));
    }

    // Span ranks of the evaluated even part.
    std::mt19937 rng(773231);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    auto random_frac = [&]() { return Frac(num(rng), den(rng)); };
    {
        std::vector<std::string> origin, generic;
        for (long long D = 2; D <= 4; ++D) {
            auto basis = even_part_basis(D);
            origin.push_back(std::to_string(evaluate(basis, Frac(), Frac())));
            int good = 0;
            for (int i = 0; i < 25; ++i) {
                Frac x = random_frac(), y = random_frac();
                if (x.is_zero() && y.is_zero()) x = Frac(1);
                if (evaluate(basis, x, y) == 16) ++good;
            }
            generic.push_back(std::to_string(good) + "/25");
        }
        checks.push_back(make_check(cn, "rank-origin", "8,8,8", join(origin, ",")));
        checks.push_back(make_check(cn, "rank-generic", "25/25,25/25,25/25", join(generic, ",")));
    }

    // Compatibility of the grading automorphism with evaluation: conjugation
    // by diag(1,1,-1,-1) matches evaluation at the negated point.
    auto random_matrix = [&]() {
        GradedPolyMatrix m;
        std::uniform_int_distribution<int> deg(0, 3);
        std::uniform_int_distribution<long long> coeff(-4, 4);
        for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s)
                m.at(r, s) = Poly2::monomial(deg(rng), deg(rng), Frac(coeff(rng)));
        return m;
    };
    {
        int good = 0;
        for (int i = 0; i < 50; ++i) {
            GradedPolyMatrix m = random_matrix();
            Frac x = random_frac(), y = random_frac();
            auto lhs = epsilon(m).eval(x, y);
            auto rhs = m.eval(-x, -y);
            bool ok = true;
            for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s) {
                    Frac want = rhs[static_cast<std::size_t>(4 * r + s)];
                    if ((block_parity(r) + block_parity(s)) % 2 != 0) want = -want;
                    if (lhs[static_cast<std::size_t>(4 * r + s)] == want) continue;
                    ok = false;
                }
            if (ok) ++good;
        }
        checks.push_back(make_check(cn, "epsilon-evaluation", "50/50", std::to_string(good) + "/50"));
    }
    {
        bool involution = true;
        for (int i = 0; i < 20 && involution; ++i) {
            GradedPolyMatrix m = random_matrix();
            involution = epsilon(epsilon(m)) == m;
        }
        checks.push_back(make_check(cn, "epsilon-involution", "order 2",
                                    involution ? "order 2" : "fails"));
    }

    // Full-ideal property of [1]+[eps] in the truncated crossed product.
    {
        std::vector<std::string> vals;
        for (long long D = 1; D <= 3; ++D)
            vals.push_back(crossed_product_full_ideal_check(D) ? "true" : "false");
        checks.push_back(make_check(cn, "crossed-ideal", "true,true,true", join(vals, ",")));
    }

    // The diagonal embedding is multiplicative and rejects odd polynomials.
    {
        auto random_even_poly = [&]() {
            Poly2 p;
            std::uniform_int_distribution<int> deg(0, 2);
            std::uniform_int_distribution<long long> coeff(-4, 4);
            for (int terms = 0; terms < 3; ++terms) {
                int dx = deg(rng), dy = deg(rng);
                if ((dx + dy) % 2 != 0) dy += 1;
                p = p + Poly2::monomial(dx, dy, Frac(coeff(rng)));
            }
            return p;
        };
        int good = 0;
        for (int i = 0; i < 50; ++i) {
            Poly2 p = random_even_poly(), p2 = random_even_poly();
            Frac z = random_frac(), z2 = random_frac();
            if (delta0(p, z) * delta0(p2, z2) == delta0(p * p2, z * z2)) ++good;
        }
        checks.push_back(make_check(cn, "delta0-multiplicative", "50/50",
                                    std::to_string(good) + "/50"));
        bool rejected = false;
        try {
            delta0(Poly2::monomial(1, 0), Frac(1));
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        checks.push_back(make_check(cn, "delta0-odd-rejected", "throws",
                                    rejected ? "throws" : "accepted"));
        (void)degree;
    }
    return checks;
}

} // namespace

std::vector<CheckRow> verify_group(const WeylGroup& W, const ReportOptions& opts) {
    std::vector<CheckRow> checks;
    const std::string cn = "group";

    checks.push_back(make_check(cn, "order", "12", std::to_string(W.size())));

    auto classes = W.conjugacy_classes();
    checks.push_back(make_check(cn, "class-count", "6", std::to_string(classes.size())));

    std::vector<std::string> reps, cents;
    for (const auto& cl : classes) {
        reps.push_back(W.word(cl.front()));
        cents.push_back(std::to_string(W.centralizer(cl.front()).size()));
    }
    checks.push_back(make_check(cn, "class-representatives", "e,ab,abab,ababab,a,b",
                                join(reps, ",")));
    checks.push_back(make_check(cn, "centralizer-orders", "12,6,6,12,4,4", join(cents, ",")));

    // Stabilizers over every ramification pair agree with the subgroup
    // generated by root reflections.
    long long agree = 0;
    const long long N = opts.modulus;
    for (long long c1 = 0; c1 < N; ++c1)
        for (long long c2 = 0; c2 < N; ++c2) {
            RamPair p{c1, c2};
            if (W.sorted(stabilizer_subgroup(W, p, N)) == W.sorted(reflection_stabilizer(W, p, N)))
                ++agree;
        }
    const std::string all_pairs = std::to_string(N * N) + "/" + std::to_string(N * N);
    checks.push_back(make_check(cn, "stabilizer-reflections", all_pairs,
                                std::to_string(agree) + "/" + std::to_string(N * N)));

    // Orbit sizes of (m,m) and (m,0) for characters of each order dividing 12.
    {
        std::vector<std::string> sizes;
        for (long long ord : {1, 2, 3, 6})
            sizes.push_back(std::to_string(orbit_size(W, OrbitPattern::ChiChi, ord, N)));
        checks.push_back(make_check(cn, "orbit-sizes-diagonal", "1,3,2,6", join(sizes, ",")));
    }
    {
        std::vector<std::string> sizes;
        for (long long ord : {1, 2, 3})
            sizes.push_back(std::to_string(orbit_size(W, OrbitPattern::ChiOne, ord, N)));
        checks.push_back(make_check(cn, "orbit-sizes-first-slot", "1,3,6", join(sizes, ",")));
    }
    return checks;
}

std::vector<CheckRow> verify_case(const WeylGroup& W, Case c, const ReportOptions& opts) {
    if (c == Case::TrivialWs) return trivial_case_checks(W, opts);

    const std::string cn = case_name(c);
    std::vector<CheckRow> checks;
    const Corrector corr(W, c);
    const ExtendedQuotient& eq = corr.quotient();

    checks.push_back(make_check(cn, "stabilizer-order",
                                std::to_string(expected_stabilizer_order(c)),
                                std::to_string(eq.subgroup().size())));

    std::vector<std::string> tags, forms;
    for (const auto& comp : eq.components()) {
        tags.push_back(comp.tag);
        forms.push_back(comp.tag + "=" + compact_form_name(comp.form));
    }
    checks.push_back(make_check(cn, "component-inventory", expected_inventory(c), join(tags, ",")));

    static const std::map<Case, std::string> expected_forms{
        {Case::Iwahori,
         "pt_*=isolated-point,pt_1=isolated-point,pt_2=isolated-point,pt_3=isolated-point,"
         "pt_4=isolated-point,line_a=unit-interval,line_b=unit-interval,surface=compact-quotient"},
        {Case::GL2ChiOne, "line=circle,surface=compact-quotient"},
        {Case::GL2ChiChi, "line=circle,surface=compact-quotient"},
        {Case::SL3,
         "pt_1=isolated-point,pt_2=isolated-point,pt_3=isolated-point,line_a=circle,"
         "surface=compact-quotient"},
        {Case::SO4,
         "pt_1=isolated-point,pt_2=isolated-point,line_a=unit-interval,line_a'=unit-interval,"
         "surface=compact-quotient,pt_*=isolated-point"},
    };
    checks.push_back(make_check(cn, "component-forms", expected_forms.at(c), join(forms, ",")));

    // Fiber sizes match constituent counts at every tabulated point and at a
    // generic point of every reducibility curve.
    for (const auto& row : corr.verify_counts()) {
        CheckRow check = make_check(cn, "fiber-" + row.point_tag,
                                    std::to_string(row.constituents),
                                    std::to_string(row.fiber_size));
        check.pass = row.pass;
        checks.push_back(check);
    }

    // Flat-family membership at tau = sqrt(q).
    const FlatFamily fam = flat_family(c);
    const Scalar sq = Scalar::Q();
    for (const auto& curve : reducibility_curves(c)) {
        bool member = family_member(eq.subgroup(), fam, sq, curve.param);
        checks.push_back(make_check(cn, "family-curve-" + curve.name, "member",
                                    member ? "member" : "off"));
    }
    for (const auto& sp : special_points(c)) {
        bool member = family_member(eq.subgroup(), fam, sq, sp.point);
        checks.push_back(make_check(cn, "family-point-" + sp.tag, "member",
                                    member ? "member" : "off"));
    }
    {
        std::size_t members = 0;
        for (const auto& p : off_locus_points(20))
            if (family_member(eq.subgroup(), fam, sq, p)) ++members;
        checks.push_back(make_check(cn, "family-off-locus", "0/20",
                                    std::to_string(members) + "/20"));
    }

    // At tau = 1 the family carries every non-lowest component and omits the
    // generic point of the ordinary quotient.
    {
        const Scalar one = Scalar::one();
        std::size_t members = 0, total = 0;
        for (const auto& comp : eq.components()) {
            if (comp.tag == "surface") continue;
            ++total;
            TorusPoint t = comp.dim == 0 ? comp.section.base : comp.section.point({"z", "z2"});
            if (family_member(eq.subgroup(), fam, one, t)) ++members;
        }
        const std::string want = std::to_string(total) + "/" + std::to_string(total);
        checks.push_back(make_check(cn, "tau1-components", want,
                                    std::to_string(members) + "/" + std::to_string(total)));
        bool generic = family_member(eq.subgroup(), fam, one,
                                     eq.by_tag("surface")->section.point({"z", "z2"}));
        checks.push_back(make_check(cn, "tau1-ordinary-generic", "off",
                                    generic ? "member" : "off"));
    }

    // The tabulated reducibility conditions agree with the root pairings on a
    // structured sample.
    {
        std::size_t agree = 0;
        const auto sample = structured_points(200);
        for (const auto& t : sample) {
            PSPoint p{rep_pair(c), opts.modulus, t};
            if (reducible_twelve(p) == reducible_roots(W, p)) ++agree;
        }
        checks.push_back(make_check(cn, "reducibility-oracles", "200/200",
                                    std::to_string(agree) + "/200"));
    }

    // sigma of the assigned triple equals the corrected projection at sqrt(q)
    // for every component's marked point.
    {
        std::size_t good = 0, total = 0;
        for (const auto& comp : eq.components()) {
            ++total;
            const TorusPoint& base = comp.section.base;
            IndexingTriple triple = corr.assign_triple(comp.class_rep, base);
            auto pi = corr.pi_tau(comp.class_rep, base, sq);
            if (std::find(pi.begin(), pi.end(), triple.sigma) != pi.end() ||
                same_orbit(eq.subgroup(), triple.sigma, pi.front()))
                ++good;
        }
        const std::string want = std::to_string(total) + "/" + std::to_string(total);
        checks.push_back(make_check(cn, "triple-sigma-projection", want,
                                    std::to_string(good) + "/" + std::to_string(total)));
    }

    if (c == Case::Iwahori) {
        auto curves = reducibility_curves(c);
        auto pts = curve_intersections(eq.subgroup(), curves[0], curves[1]);
        std::vector<std::string> found;
        for (const auto& p : pts) found.push_back(corr.special_tag(p));
        std::sort(found.begin(), found.end());
        checks.push_back(make_check(cn, "curve-intersection", "t_a,t_d,t_e", join(found, ",")));

        const auto& rows = tempered_table();
        std::set<std::string> words;
        bool located = true;
        for (const auto& row : rows) {
            words.insert(row.class_word);
            auto loc = eq.locate(W.element(row.class_word), row.witness);
            if (!loc || loc->comp->tag != row.component_tag) located = false;
        }
        std::vector<std::string> sorted_words(words.begin(), words.end());
        checks.push_back(make_check(cn, "tempered-classes", "a,ab,abab,ababab,b,e",
                                    join(sorted_words, ",")));
        checks.push_back(make_check(cn, "tempered-components", "6 located",
                                    located ? std::to_string(rows.size()) + " located"
                                            : "mislocated"));
    }

    if (c == Case::SL3) {
        std::vector<std::string> sigmas;
        for (const auto* tag : {"pt_1", "pt_2", "pt_3"}) {
            const Component* comp = eq.by_tag(tag);
            sigmas.push_back(corr.assign_triple(comp->class_rep, comp->section.base).sigma_tag);
        }
        checks.push_back(make_check(cn, "isolated-sigmas", "y_a,y_a',y_a''", join(sigmas, ",")));
    }

    if (c == Case::SO4) {
        auto curves = reducibility_curves(c);
        auto pts = curve_intersections(eq.subgroup(), curves[0], curves[1]);
        std::vector<std::string> found;
        for (const auto& p : pts) found.push_back(corr.special_tag(p));
        std::sort(found.begin(), found.end());
        checks.push_back(make_check(cn, "curve-intersection", "z_a,z_c", join(found, ",")));

        for (const auto& row : so4_dual_check()) {
            CheckRow check = make_check(cn, "dual-" + row.name, row.expected, row.observed);
            check.pass = row.pass;
            checks.push_back(check);
        }
        auto asym = asymptotic_checks(opts.degree);
        checks.insert(checks.end(), asym.begin(), asym.end());
    }
    return checks;
}

ReportDocument run_report(const WeylGroup& W, Case c, const ReportOptions& opts) {
    ReportDocument doc;
    doc.case_name = case_name(c);

    if (c == Case::TrivialWs) {
        doc.sections.push_back({"stabilizer", {{"element"}, {"e"}}});
        doc.sections.push_back(
            {"components", {{"tag", "cell", "class", "dim", "form"},
                            {"surface", "-", "e", "2", compact_form_name(CompactForm::CompactQuotient)}}});
        doc.checks = verify_case(W, c, opts);
        return doc;
    }

    const Corrector corr(W, c);
    const ExtendedQuotient& eq = corr.quotient();

    {
        ReportSection sec{"stabilizer", {{"element"}}};
        for (const auto& w : eq.subgroup()) sec.rows.push_back({W.word(w)});
        doc.sections.push_back(sec);
    }
    {
        ReportSection sec{"conjugacy classes", {{"representative", "size", "centralizer"}}};
        for (const auto& cl : W.classes_in(eq.subgroup())) {
            const IntMat& rep = cl.front();
            sec.rows.push_back({W.word(rep), std::to_string(cl.size()),
                                std::to_string(W.centralizer_in(eq.subgroup(), rep).size())});
        }
        doc.sections.push_back(sec);
    }
    {
        ReportSection sec{"components",
                          {{"tag", "cell", "class", "dim", "form", "section", "orbit"}}};
        for (const auto& comp : eq.components())
            sec.rows.push_back({comp.tag, comp.cell, comp.class_word, std::to_string(comp.dim),
                                compact_form_name(comp.form), comp.section.str(),
                                comp.dim == 0 ? std::to_string(comp.orbit_pts.size()) : "-"});
        doc.sections.push_back(sec);
    }
    {
        ReportSection sec{"cocharacters", {{"cell", "h", "unipotent"}}};
        for (const auto& cell : eq.cells()) {
            Cocharacter h = cocharacter(c, cell);
            sec.rows.push_back({cell, str(h.at(Scalar::var("tau"))), unipotent_label(c, cell)});
        }
        doc.sections.push_back(sec);
    }
    {
        ReportSection sec{"indexing triples", {{"tag", "class", "sigma", "unipotent", "rho"}}};
        for (const auto& comp : eq.components()) {
            if (comp.dim != 0) continue;
            IndexingTriple t = corr.assign_triple(comp.class_rep, comp.section.base);
            sec.rows.push_back({comp.tag, comp.class_word,
                                t.sigma_tag.empty() ? str(t.sigma) : t.sigma_tag, t.unipotent,
                                t.rho});
        }
        doc.sections.push_back(sec);
    }
    {
        ReportSection sec{"flat family", {{"relation"}}};
        const FlatFamily fam = flat_family(c);
        for (const auto& f : fam.factors) sec.rows.push_back({f.str()});
        for (const auto& ex : fam.extras) sec.rows.push_back({"point " + str(ex)});
        doc.sections.push_back(sec);
    }
    {
        ReportSection sec{"special fibers", {{"tag", "point", "constituents", "fiber"}}};
        for (const auto& sp : special_points(c)) {
            std::vector<std::string> entries;
            for (const auto& fe : corr.fiber(sp.point))
                entries.push_back("(" + fe.class_word + ", " + str(fe.point) + ")");
            sec.rows.push_back(
                {sp.tag, str(sp.point), std::to_string(sp.count), join(entries, "; ")});
        }
        doc.sections.push_back(sec);
    }
    if (c == Case::Iwahori) {
        ReportSection sec{"tempered triples",
                          {{"class", "sigma", "unipotent", "rho", "component"}}};
        for (const auto& row : tempered_table())
            sec.rows.push_back(
                {row.class_word, row.sigma_tag, row.unipotent, row.rho, row.component_tag});
        doc.sections.push_back(sec);
    }
    if (c == Case::SO4) {
        ReportSection sec{"graded algebra", {{"quantity", "value"}}};
        for (long long D = 2; D <= 4; ++D) {
            auto basis = even_part_basis(D);
            sec.rows.push_back({"rank at origin, degree " + std::to_string(D),
                                std::to_string(evaluate(basis, Frac(), Frac()))});
            sec.rows.push_back({"rank at generic point, degree " + std::to_string(D),
                                std::to_string(evaluate(basis, Frac(2), Frac(3)))});
        }
        for (const auto& row : so4_dual_check())
            sec.rows.push_back({row.name, row.observed});
        doc.sections.push_back(sec);
    }

    doc.checks = verify_case(W, c, opts);
    return doc;
}

bool ReportDocument::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRow& c) { return c.pass; });
}

std::string ReportDocument::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["case"] = case_name;
    j["sections"] = nlohmann::ordered_json::array();
    for (const auto& sec : sections) {
        nlohmann::ordered_json js;
        js["title"] = sec.title;
        js["rows"] = sec.rows;
        j["sections"].push_back(js);
    }
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["observed"] = c.observed;
        jc["pass"] = c.pass;
        jc["ref"] = c.ref;
        j["checks"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

std::string ReportDocument::to_markdown() const {
    std::ostringstream out;
    out << "# Case report: " << case_name << "\n";
    auto emit_table = [&out](const std::vector<std::vector<std::string>>& rows) {
        if (rows.empty()) return;
        out << "\n|";
        for (const auto& h : rows.front()) out << " " << h << " |";
        out << "\n|";
        for (std::size_t i = 0; i < rows.front().size(); ++i) out << " --- |";
        out << "\n";
        for (std::size_t r = 1; r < rows.size(); ++r) {
            out << "|";
            for (const auto& cell : rows[r]) out << " " << cell << " |";
            out << "\n";
        }
    };
    for (const auto& sec : sections) {
        out << "\n## " << sec.title << "\n";
        emit_table(sec.rows);
    }
    out << "\n## checks\n";
    std::vector<std::vector<std::string>> rows{{"name", "expected", "observed", "pass", "ref"}};
    for (const auto& c : checks)
        rows.push_back({c.name, c.expected, c.observed, c.pass ? "pass" : "FAIL", c.ref});
    emit_table(rows);
    return out.str();
}

int run_verify(const WeylGroup& W, const std::string& scope, std::string& out,
               const ReportOptions& opts) {
    std::vector<CheckRow> checks;
    if (scope == "all") {
        checks = verify_group(W, opts);
        for (Case c : all_cases()) {
            auto rows = verify_case(W, c, opts);
            checks.insert(checks.end(), rows.begin(), rows.end());
        }
        auto rows = verify_case(W, Case::TrivialWs, opts);
        checks.insert(checks.end(), rows.begin(), rows.end());
    } else if (auto c = case_from_name(scope)) {
        checks = verify_case(W, *c, opts);
    } else {
        out += "unknown scope: " + scope + "\n";
        return 2;
    }

    bool all = true;
    for (const auto& c : checks) {
        out += std::string(c.pass ? "PASS" : "FAIL") + " " + c.ref + ": expected " + c.expected +
               ", observed " + c.observed + "\n";
        if (!c.pass) all = false;
    }
    out += std::string(all ? "OK" : "FAILED") + " (" + std::to_string(checks.size()) +
           " checks)\n";
    return all ? 0 : 1;
}

} // namespace g2ps
