#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2ps/inertial.hpp"
#include "g2ps/torus.hpp"
#include "g2ps/weyl.hpp"

namespace g2ps {

enum class CompactForm { IsolatedPoint, UnitInterval, Circle, CompactQuotient };
std::string compact_form_name(CompactForm f);

// One component of the extended quotient: a conjugacy class of the stabilizer
// subgroup together with one centralizer-orbit of its fixed locus, stored via
// a canonical section.
struct Component {
    std::string cell;      // two-sided cell label, e.g. "c_1"
    IntMat class_rep;      // minimal-word class representative
    std::string class_word;
    int dim = 0;
    CompactForm form = CompactForm::IsolatedPoint;
    std::string tag;       // "pt_1", "pt_*", "line_a", "surface", ...
    LocusBranch section;   // canonical section; for dim 0 the base is the display point
    std::vector<TorusPoint> orbit_pts;   // dim 0: full centralizer orbit
    std::optional<IntMat> fold_witness;  // dim 1: an element inverting the section parameter
};

// The extended quotient T//W^s for one inertial case, as the ordered list of
// its components with cell labels.
class ExtendedQuotient {
public:
    ExtendedQuotient(const WeylGroup& W, Case c, long long N = 12);

    Case the_case() const { return case_; }
    const WeylGroup& group() const { return *W_; }
    const std::vector<IntMat>& subgroup() const { return sub_; }
    const std::vector<Component>& components() const { return comps_; }
    const std::vector<std::string>& cells() const { return cells_; }
    std::string lowest_cell() const { return cells_.back(); }

    const Component* by_tag(std::string_view tag) const;

    // Locates the unique component containing the extended point (w, t),
    // together with the conjugating witness used.
    struct Located {
        const Component* comp;
        IntMat conj; // conj * w * conj^-1 = comp->class_rep, act(conj, t) on section
    };
    std::optional<Located> locate(const IntMat& w, const TorusPoint& t) const;
    std::string cell_of_point(const IntMat& w, const TorusPoint& t) const; // throws if absent

private:
    const WeylGroup* W_;
    Case case_;
    std::vector<IntMat> sub_;
    std::vector<Component> comps_;
    std::vector<std::string> cells_;

    void build(long long N);
};

// True if the point of the section's ambient branch lies on the branch
// (solves the monomial membership exactly).
bool on_branch(const LocusBranch& br, const TorusPoint& t);

} // namespace g2ps
