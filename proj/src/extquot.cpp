#include "g2ps/extquot.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace g2ps {

std::string compact_form_name(CompactForm f) {
    switch (f) {
        case CompactForm::IsolatedPoint: return "isolated-point";
        case CompactForm::UnitInterval: return "unit-interval";
        case CompactForm::Circle: return "circle";
        case CompactForm::CompactQuotient: return "compact-quotient";
    }
    return "?";
}

namespace {

bool point_less(const TorusPoint& a, const TorusPoint& b) {
    if (a[0] < b[0]) return true;
    if (b[0] < a[0]) return false;
    return a[1] < b[1];
}

bool contains_point(const std::vector<TorusPoint>& v, const TorusPoint& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

TorusPoint pt(const char* x, const char* y) {
    auto parse = [](const char* s) -> Scalar {
        std::string v(s);
        if (v == "1") return Scalar::one();
        if (v == "-1") return Scalar::minus_one();
        if (v == "j") return Scalar::zeta(Frac(1, 3));
        if (v == "j2") return Scalar::zeta(Frac(2, 3));
        throw std::logic_error("pt: unknown coordinate");
    };
    return {parse(x), parse(y)};
}

} // namespace

bool on_branch(const LocusBranch& br, const TorusPoint& t) {
    if (br.gens.empty()) return t == br.base;
    if (br.gens.size() == 2) return true; // full surface
    const auto& g = br.gens[0];
    int lead = -1;
    for (int i = 0; i < 2; ++i)
        if (g[i] == 1 || g[i] == -1) {
            lead = i;
            break;
        }
    if (lead < 0) throw std::logic_error("on_branch: no unit generator coordinate");
    const Scalar u = (t[lead] / br.base[lead]).pow(Frac(g[lead])); // g[lead] = +-1
    for (int i = 0; i < 2; ++i)
        if (t[i] != br.base[i] * u.pow(Frac(g[i]))) return false;
    return true;
}

ExtendedQuotient::ExtendedQuotient(const WeylGroup& W, Case c, long long N)
    : W_(&W), case_(c) {
    if (c == Case::TrivialWs)
        throw std::invalid_argument("extended quotient: stabilizer is trivial");
    build(N);
}

void ExtendedQuotient::build(long long N) {
    const WeylGroup& W = *W_;
    sub_ = stabilizer_subgroup(W, rep_pair(case_), N);

    switch (case_) {
        case Case::Iwahori: cells_ = {"c_e", "c_1", "c_2", "c_3", "c_0"}; break;
        case Case::GL2ChiOne:
        case Case::GL2ChiChi: cells_ = {"b_e", "b_0"}; break;
        case Case::SL3: cells_ = {"d_e", "d_1", "d_0"}; break;
        case Case::SO4: cells_ = {"e_e", "e_1", "e_1'", "e_0"}; break;
        default: break;
    }

    // Cell of a class that does not split across cells, keyed by class word.
    std::map<std::string, std::string> cell_of_class;
    std::map<std::string, std::string> line_tag;
    switch (case_) {
        case Case::Iwahori:
            cell_of_class = {{"e", "c_0"}, {"a", "c_2"}, {"b", "c_3"},
                             {"ab", "c_e"}, {"abab", "c_1"}, {"ababab", "c_1"}};
            line_tag = {{"a", "line_a"}, {"b", "line_b"}};
            break;
        case Case::GL2ChiOne:
            cell_of_class = {{"e", "b_0"}, {"b", "b_e"}};
            line_tag = {{"b", "line"}};
            break;
        case Case::GL2ChiChi:
            cell_of_class = {{"e", "b_0"}, {"a", "b_e"}};
            line_tag = {{"a", "line"}};
            break;
        case Case::SL3:
            cell_of_class = {{"e", "d_0"}, {"a", "d_1"}, {"abab", "d_e"}};
            line_tag = {{"a", "line_a"}};
            break;
        case Case::SO4:
            cell_of_class = {{"e", "e_0"}, {"a", "e_1"}, {"babab", "e_1'"},
                             {"ababab", ""}}; // split cell, resolved per orbit
            line_tag = {{"a", "line_a"}, {"babab", "line_a'"}};
            break;
        default: break;
    }

    for (const auto& cl : W.classes_in(sub_)) {
        const IntMat rep = cl.front();
        const std::string word = W.word(rep);
        const auto Z = W.centralizer_in(sub_, rep);
        const FixedLocus L = fixed_locus(rep);

        // Isolated branches, grouped into centralizer orbits.
        std::vector<TorusPoint> isolated;
        for (const auto& br : L.branches)
            if (br.dim() == 0) isolated.push_back(br.base);
        std::vector<std::vector<TorusPoint>> orbits;
        for (const auto& p : isolated) {
            bool seen = false;
            for (const auto& o : orbits)
                if (contains_point(o, p)) {
                    seen = true;
                    break;
                }
            if (!seen) orbits.push_back(orbit(Z, p));
        }
        std::sort(orbits.begin(), orbits.end(),
                  [](const auto& x, const auto& y) { return point_less(x.front(), y.front()); });

        for (const auto& o : orbits) {
            Component comp;
            comp.class_rep = rep;
            comp.class_word = word;
            comp.dim = 0;
            comp.form = CompactForm::IsolatedPoint;
            comp.orbit_pts = o;
            comp.section.base = o.front();

            std::string cell = cell_of_class.at(word);
            std::string tag;
            if (case_ == Case::Iwahori && word == "ababab") {
                if (contains_point(o, pt("1", "1"))) {
                    tag = "pt_1";
                } else {
                    tag = "pt_2";
                    comp.section.base = pt("-1", "1"); // display as printed
                }
            } else if (case_ == Case::Iwahori && word == "abab") {
                tag = contains_point(o, pt("1", "1")) ? "pt_4" : "pt_3";
            } else if (case_ == Case::Iwahori && word == "ab") {
                tag = "pt_*";
            } else if (case_ == Case::SL3) {
                if (contains_point(o, pt("1", "1")))
                    tag = "pt_1";
                else if (contains_point(o, pt("j", "j")))
                    tag = "pt_2";
                else
                    tag = "pt_3";
            } else if (case_ == Case::SO4) {
                if (contains_point(o, pt("1", "1"))) {
                    tag = "pt_1";
                    cell = "e_e";
                } else if (contains_point(o, pt("-1", "-1"))) {
                    tag = "pt_2";
                    cell = "e_e";
                } else {
                    tag = "pt_*";
                    cell = "e_0";
                    comp.section.base = pt("-1", "1"); // display as printed
                }
            } else {
                tag = "pt";
            }
            comp.cell = cell;
            comp.tag = tag;
            comps_.push_back(std::move(comp));
        }

        // Line and surface branches.
        for (const auto& br : L.branches) {
            if (br.dim() == 0) continue;
            Component comp;
            comp.class_rep = rep;
            comp.class_word = word;
            comp.dim = br.dim();
            comp.section = br;
            comp.cell = cell_of_class.at(word);
            if (br.dim() == 2) {
                comp.form = CompactForm::CompactQuotient;
                comp.tag = "surface";
            } else {
                comp.tag = line_tag.at(word);
                comp.form = CompactForm::Circle;
                const auto& g = br.gens[0];
                for (const auto& z : Z) {
                    const auto img = apply(z, g);
                    if (img[0] == -g[0] && img[1] == -g[1]) {
                        comp.form = CompactForm::UnitInterval;
                        comp.fold_witness = z;
                        break;
                    }
                }
            }
            comps_.push_back(std::move(comp));
        }
    }

    auto cell_index = [&](const std::string& cell) {
        return std::find(cells_.begin(), cells_.end(), cell) - cells_.begin();
    };
    std::sort(comps_.begin(), comps_.end(), [&](const Component& x, const Component& y) {
        const auto cx = cell_index(x.cell), cy = cell_index(y.cell);
        if (cx != cy) return cx < cy;
        if (x.dim != y.dim) return x.dim > y.dim;
        return x.tag < y.tag;
    });
}

const Component* ExtendedQuotient::by_tag(std::string_view tag) const {
    for (const auto& c : comps_)
        if (c.tag == tag) return &c;
    return nullptr;
}

std::optional<ExtendedQuotient::Located> ExtendedQuotient::locate(const IntMat& w,
                                                                  const TorusPoint& t) const {
    for (const auto& comp : comps_) {
        for (const auto& g : sub_) {
            if (!(g * w * W_->inv(g) == comp.class_rep)) continue;
            const TorusPoint tp = act(g, t);
            bool member = false;
            if (comp.dim == 0)
                member = contains_point(comp.orbit_pts, tp);
            else
                member = on_branch(comp.section, tp);
            if (member) return Located{&comp, g};
        }
    }
    return std::nullopt;
}

std::string ExtendedQuotient::cell_of_point(const IntMat& w, const TorusPoint& t) const {
    const auto loc = locate(w, t);
    if (!loc) throw std::invalid_argument("cell_of_point: point lies on no component");
    return loc->comp->cell;
}

} // namespace g2ps
