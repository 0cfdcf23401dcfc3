#include "g2ps/torus.hpp"

#include <algorithm>

#include "g2ps/weyl.hpp"

namespace g2ps {

TorusPoint LocusBranch::point(const std::vector<std::string>& names) const {
    TorusPoint p = base;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const Scalar s = Scalar::var(names.at(k));
        for (int i = 0; i < 2; ++i) p[i] *= s.pow(Frac(gens[k][i]));
    }
    return p;
}

std::string LocusBranch::str() const {
    std::string out = g2ps::str(base);
    if (!gens.empty()) {
        out += " ;";
        for (const auto& g : gens)
            out += " (" + std::to_string(g[0]) + "," + std::to_string(g[1]) + ")";
    }
    return out;
}

std::string FixedLocus::str() const {
    std::string out;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (i) out += "\n";
        out += branches[i].str();
    }
    return out;
}

FixedLocus fixed_locus(const IntMat& w) {
    const IntMat M = w - IntMat::identity(w.rows());
    const SmithResult s = smith(M);
    const int n = M.rows();

    std::vector<int> free_idx, torsion_idx;
    for (int k = 0; k < n; ++k) {
        const long long d = s.D.at(k, k);
        if (d == 0)
            free_idx.push_back(k);
        else if (d > 1)
            torsion_idx.push_back(k);
    }

    std::vector<std::array<long long, 2>> gens;
    for (int k : free_idx) gens.push_back({s.V.at(0, k), s.V.at(1, k)});

    // Mixed-radix enumeration of the torsion part, first index outermost.
    long long total = 1;
    for (int k : torsion_idx) total *= s.D.at(k, k);

    FixedLocus out;
    for (long long idx = 0; idx < total; ++idx) {
        long long rest = idx;
        std::vector<long long> digits(torsion_idx.size());
        for (std::size_t p = torsion_idx.size(); p-- > 0;) {
            const long long d = s.D.at(torsion_idx[p], torsion_idx[p]);
            digits[p] = rest % d;
            rest /= d;
        }
        LocusBranch br;
        br.base = {Scalar::one(), Scalar::one()};
        for (std::size_t p = 0; p < torsion_idx.size(); ++p) {
            const int k = torsion_idx[p];
            const long long d = s.D.at(k, k);
            for (int j = 0; j < 2; ++j)
                br.base[j] *= Scalar::zeta(Frac(digits[p] * s.V.at(j, k), d));
        }
        br.gens = gens;
        out.branches.push_back(br);
    }
    return out;
}

std::vector<TorusPoint> orbit(const std::vector<IntMat>& sub, const TorusPoint& t) {
    std::vector<TorusPoint> pts;
    for (const auto& m : sub) {
        TorusPoint im = act(m, t);
        bool seen = false;
        for (const auto& p : pts)
            if (p == im) {
                seen = true;
                break;
            }
        if (!seen) pts.push_back(im);
    }
    std::sort(pts.begin(), pts.end(), [](const TorusPoint& a, const TorusPoint& b) {
        if (a[0] < b[0]) return true;
        if (b[0] < a[0]) return false;
        return a[1] < b[1];
    });
    return pts;
}

std::optional<IntMat> same_orbit(const std::vector<IntMat>& sub, const TorusPoint& t,
                                 const TorusPoint& to) {
    for (const auto& m : sub)
        if (act(m, t) == to) return m;
    return std::nullopt;
}

} // namespace g2ps
