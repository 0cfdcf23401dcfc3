#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2ps/inertial.hpp"
#include "g2ps/torus.hpp"
#include "g2ps/weyl.hpp"

namespace g2ps {

// A principal-series parameter: ramification exponents of the two characters
// mod N plus their symbolic values at a uniformizer.
struct PSPoint {
    RamPair ram{0, 0};
    long long N = 12;
    TorusPoint unram{Scalar::one(), Scalar::one()};
};

// One monomial reducibility condition chi_1^{n1} chi_2^{n2} = nu^{sign}.
struct RedCondition {
    std::array<long long, 2> n;
    int sign; // +1 or -1
};

// The twelve nonunitary conditions, in the order they are tabulated.
const std::vector<RedCondition>& twelve_conditions();

bool reducible_twelve(const PSPoint& p);
// Same predicate expressed through the root system: some coroot pairing sends
// the character to nu^{+-1}.
bool reducible_roots(const WeylGroup& W, const PSPoint& p);
// Unitary criterion: the two characters are distinct and both of order two.
bool keys_unitary(const PSPoint& p);
bool is_reducible(const WeylGroup& W, const PSPoint& p);

// One binomial of a flat family: x^{m1} y^{m2} = c * tau^d.
struct FamilyFactor {
    Scalar c;
    std::array<long long, 2> m;
    long long d;
    std::string str() const;
};

// Union of binomial curves plus finitely many tau-parametrized extra points.
struct FlatFamily {
    std::vector<FamilyFactor> factors;
    std::vector<TorusPoint> extras; // coordinates may mention the variable "tau"
};

FlatFamily flat_family(Case c);

// True iff some W^s-translate of p satisfies a factor identically at this tau,
// or equals an extra point.
bool family_member(const std::vector<IntMat>& sub, const FlatFamily& fam, const Scalar& tau,
                   const TorusPoint& p);

// A reducibility curve, parametrized monomially by the variable "z".
struct Curve {
    std::string name;
    TorusPoint param;
};
std::vector<Curve> reducibility_curves(Case c);

// Tabulated quotient points with their constituent counts.
struct SpecialPoint {
    std::string tag;
    TorusPoint point;
    int count;
};
const std::vector<SpecialPoint>& special_points(Case c);

// All isolated intersection points of two parametrized curves, one
// representative per W^s-orbit, ordered canonically.
std::vector<TorusPoint> curve_intersections(const std::vector<IntMat>& sub, const Curve& A,
                                            const Curve& B);

// Number of inequivalent constituents of the induced representation at the
// orbit of y. Throws std::domain_error("generic: 1 or tabulated") when a
// symbolic representative cannot be classified.
int constituent_count(Case c, const WeylGroup& W, const std::vector<IntMat>& sub,
                      const TorusPoint& y);

} // namespace g2ps
