#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "g2ps/extquot.hpp"
#include "g2ps/families.hpp"

namespace g2ps {

// Cocharacter h(tau) = (tau^{e1}, tau^{e2}) attached to a two-sided cell.
struct Cocharacter {
    std::array<long long, 2> exps{0, 0};
    TorusPoint at(const Scalar& tau) const;
};
Cocharacter cocharacter(Case c, const std::string& cell);

// Unipotent-class label attached to a cell ("1" for the lowest cell).
std::string unipotent_label(Case c, const std::string& cell);

// One point in a fiber of pi_{sqrt q}: the class word of its component, the
// point on the component's section, and the component tag.
struct FiberEntry {
    std::string class_word;
    TorusPoint point;
    std::string component_tag;
};

struct IndexingTriple {
    TorusPoint sigma;
    std::string sigma_tag; // tabulated tag when the orbit is a named point, else ""
    std::string unipotent;
    std::string rho;
};

struct CountRow {
    std::string case_name;
    std::string point_tag;
    std::size_t fiber_size = 0;
    int constituents = 0;
    bool pass = false;
};

struct TemperedRow {
    std::string class_word;
    std::string sigma_tag;
    std::string unipotent;
    std::string rho;
    std::string component_tag;
    TorusPoint witness; // paired with class_word as an extended-quotient point
};

struct DualCheckRow {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
};

// Deformed projections pi_tau, fibers over quotient points, and the
// indexing-triple assignment for one inertial case.
class Corrector {
  public:
    Corrector(const WeylGroup& W, Case c);

    const ExtendedQuotient& quotient() const { return eq_; }

    // W^s-orbit (sorted) of h_cell(tau) * t for the component through (w,t).
    std::vector<TorusPoint> pi_tau(const IntMat& w, const TorusPoint& t,
                                   const Scalar& tau) const;

    // Tag of the tabulated point whose orbit contains y, or "".
    std::string special_tag(const TorusPoint& y) const;

    // All extended-quotient points over the orbit of y at tau = sqrt(q):
    // surface entry first, then isolated points, then line solutions.
    std::vector<FiberEntry> fiber(const TorusPoint& y) const;

    IndexingTriple assign_triple(const IntMat& w, const TorusPoint& t) const;

    // Fiber size vs constituent count for every tabulated point plus one
    // generic point per reducibility curve, and the self-intersection check.
    std::vector<CountRow> verify_counts() const;

    // Degree d of the parameter identification u ~ q^d * u^{-1} on a folded line.
    std::optional<long long> fold_degree(const Component& comp) const;

  private:
    const WeylGroup* W_;
    Case case_;
    ExtendedQuotient eq_;
};

// The six tempered triples of the unramified case, one per conjugacy class,
// as printed; witnesses realize each row's component.
const std::vector<TemperedRow>& tempered_table();

// Symbolic checks of the dual-pair description in the orthogonal case:
// the commutation relation, component-group orders, and the dictionary
// back to the torus quotient.
std::vector<DualCheckRow> so4_dual_check();

} // namespace g2ps
