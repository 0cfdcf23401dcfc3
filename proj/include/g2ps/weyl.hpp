#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "g2ps/intmat.hpp"
#include "g2ps/scalar.hpp"

namespace g2ps {

// A matrix m acting on the character lattice moves a point of the dual torus
// by (m.t)_i = prod_j t_j^{m_ij}.
TorusPoint act(const IntMat& m, const TorusPoint& t);
std::array<long long, 2> apply(const IntMat& m, const std::array<long long, 2>& v);

// Reflection data recovered from the matrix alone: the root is the primitive
// (-1)-eigenvector, the pairing vector n satisfies x - s(x) = <n,x> * root on
// the lattice, with sign fixed so n is lexicographically positive.
struct RootDatum {
    std::string word;
    std::array<long long, 2> root;
    std::array<long long, 2> pairing;
    std::string label; // the root written in the basis of the two simple roots
};

// The dihedral group of order 12 generated by
//   a: (x,y) -> (y,x)        [[0,1],[1,0]]
//   b: (x,y) -> (xy, 1/y)    [[1,1],[0,-1]]
// acting on the rank-2 lattice.  Every element carries a canonical word in the
// generators (shortest, ties broken alphabetically).
class WeylGroup {
public:
    WeylGroup();

    int size() const { return int(elements_.size()); }
    const std::vector<IntMat>& elements() const { return elements_; } // canonical word order
    const std::string& word(const IntMat& m) const;
    IntMat element(const std::string& w) const; // "e" or any word in the letters a, b

    IntMat gen_a() const { return IntMat::from({{0, 1}, {1, 0}}); }
    IntMat gen_b() const { return IntMat::from({{1, 1}, {0, -1}}); }

    IntMat inv(const IntMat& m) const;
    int order(const IntMat& m) const;
    bool is_reflection(const IntMat& m) const; // m^2 = 1, m != +-1

    // Classes of the full group: determinant-one classes first (by word
    // length), then reflection classes; members in canonical word order.
    const std::vector<std::vector<IntMat>>& conjugacy_classes() const { return classes_; }
    std::vector<IntMat> centralizer(const IntMat& m) const;

    // The same machinery relative to a subgroup given as a closed element list.
    std::vector<std::vector<IntMat>> classes_in(const std::vector<IntMat>& sub) const;
    std::vector<IntMat> centralizer_in(const std::vector<IntMat>& sub, const IntMat& m) const;
    std::vector<IntMat> sorted(std::vector<IntMat> v) const; // canonical word order

    // The six reflections with derived root data, in canonical word order.
    const std::vector<RootDatum>& roots() const { return roots_; }
    const RootDatum& root_of(const IntMat& reflection) const;

private:
    std::vector<IntMat> elements_;
    std::map<IntMat, std::string> word_;
    std::vector<std::vector<IntMat>> classes_;
    std::vector<RootDatum> roots_;

    bool word_less(const IntMat& x, const IntMat& y) const;
    void build_classes();
    void build_roots();
};

} // namespace g2ps
