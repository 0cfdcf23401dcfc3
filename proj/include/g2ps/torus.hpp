#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2ps/intmat.hpp"
#include "g2ps/scalar.hpp"

namespace g2ps {

// One branch of a fixed-point locus: the coset { base * (s^{g_1}, s^{g_2}) }
// with one free parameter per generator. No generators = isolated point.
struct LocusBranch {
    TorusPoint base;
    std::vector<std::array<long long, 2>> gens;

    int dim() const { return static_cast<int>(gens.size()); }

    // Materializes the branch as a symbolic point, one fresh variable per
    // generator ("s1", "s2", ... by default).
    TorusPoint point(const std::vector<std::string>& names = {"s1", "s2"}) const;

    std::string str() const; // "base ; (g1,g2) (g1,g2)"
};

// Finite union of translated subtori { t : w * t = t }.
struct FixedLocus {
    std::vector<LocusBranch> branches;
    std::string str() const; // one branch per line
};

// Solves prod_j z_j^{(A-I)_ij} = 1 exactly via the Smith normal form of A-I:
// zero diagonal entries contribute free generators (columns of V), entries
// d > 1 contribute d-torsion translates of the base point.
FixedLocus fixed_locus(const IntMat& w);

// All images of t under the listed elements, deduplicated and sorted.
std::vector<TorusPoint> orbit(const std::vector<IntMat>& sub, const TorusPoint& t);

// A witness w in sub with w * t = t', if one exists.
std::optional<IntMat> same_orbit(const std::vector<IntMat>& sub, const TorusPoint& t,
                                 const TorusPoint& to);

} // namespace g2ps
