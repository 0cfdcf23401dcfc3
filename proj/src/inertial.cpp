#include "g2ps/inertial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace g2ps {

namespace {

long long modN(long long x, long long N) {
    long long r = x % N;
    return r < 0 ? r + N : r;
}

RamPair apply_mod(const IntMat& m, const RamPair& c, long long N) {
    RamPair out{};
    for (int i = 0; i < 2; ++i)
        out[i] = modN(m.at(i, 0) * c[0] + m.at(i, 1) * c[1], N);
    return out;
}

long long order_mod(long long x, long long N) { return N / std::gcd(modN(x, N), N); }

} // namespace

std::string case_name(Case c) {
    switch (c) {
        case Case::Iwahori: return "iwahori";
        case Case::GL2ChiOne: return "gl2-chi1";
        case Case::GL2ChiChi: return "gl2-chichi";
        case Case::SL3: return "sl3";
        case Case::SO4: return "so4";
        case Case::TrivialWs: return "trivial";
    }
    return "?";
}

std::optional<Case> case_from_name(std::string_view name) {
    for (Case c : {Case::Iwahori, Case::GL2ChiOne, Case::GL2ChiChi, Case::SL3, Case::SO4,
                   Case::TrivialWs})
        if (case_name(c) == name) return c;
    return std::nullopt;
}

std::vector<Case> all_cases() {
    return {Case::Iwahori, Case::GL2ChiOne, Case::GL2ChiChi, Case::SL3, Case::SO4};
}

RamPair rep_pair(Case c) {
    switch (c) {
        case Case::Iwahori: return {0, 0};
        case Case::GL2ChiOne: return {1, 0};
        case Case::GL2ChiChi: return {1, 1};
        case Case::SL3: return {4, 4};
        case Case::SO4: return {6, 6};
        case Case::TrivialWs: return {1, 5};
    }
    return {0, 0};
}

std::vector<IntMat> stabilizer_subgroup(const WeylGroup& W, const RamPair& c, long long N) {
    std::vector<IntMat> out;
    for (const auto& m : W.elements())
        if (apply_mod(m, c, N) == RamPair{modN(c[0], N), modN(c[1], N)}) out.push_back(m);
    return out;
}

std::vector<RamPair> ram_orbit(const WeylGroup& W, const RamPair& c, long long N) {
    std::vector<RamPair> out;
    for (const auto& m : W.elements()) {
        RamPair im = apply_mod(m, c, N);
        if (std::find(out.begin(), out.end(), im) == out.end()) out.push_back(im);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntMat> reflection_stabilizer(const WeylGroup& W, const RamPair& c, long long N) {
    std::vector<IntMat> gens;
    for (const auto& rd : W.roots()) {
        const long long pair = rd.pairing[0] * c[0] + rd.pairing[1] * c[1];
        if (modN(pair, N) == 0) gens.push_back(W.element(rd.word));
    }
    // Close under multiplication.
    std::vector<IntMat> group{IntMat::identity(2)};
    for (std::size_t i = 0; i < group.size(); ++i)
        for (const auto& h : gens) {
            IntMat prod = group[i] * h;
            bool seen = false;
            for (const auto& k : group)
                if (k == prod) {
                    seen = true;
                    break;
                }
            if (!seen) group.push_back(prod);
        }
    return W.sorted(group);
}

Case classify_case(const WeylGroup& W, const RamPair& c, long long N) {
    const auto O = ram_orbit(W, c, N);
    for (const auto& p : O)
        if (p[0] == 0 && p[1] == 0) return Case::Iwahori;
    for (const auto& p : O)
        if (p[0] == p[1] && p[0] != 0) {
            const long long o = order_mod(p[0], N);
            if (o == 2) return Case::SO4;
            if (o == 3) return Case::SL3;
            return Case::GL2ChiChi;
        }
    for (const auto& p : O)
        if ((p[1] == 0 && order_mod(p[0], N) > 2) || (p[0] == 0 && order_mod(p[1], N) > 2))
            return Case::GL2ChiOne;
    return Case::TrivialWs;
}

bool ws_trivial(const WeylGroup& W, const RamPair& c, long long N) {
    for (const auto& rd : W.roots())
        if (modN(rd.pairing[0] * c[0] + rd.pairing[1] * c[1], N) == 0) return false;
    return true;
}

long long orbit_size(const WeylGroup& W, OrbitPattern pattern, long long order_of_chi,
                     long long N) {
    if (order_of_chi < 1 || N % order_of_chi != 0)
        throw std::invalid_argument("orbit_size: order must divide the modulus");
    const long long x = modN(N / order_of_chi, N);
    const RamPair c = pattern == OrbitPattern::ChiChi ? RamPair{x, x} : RamPair{x, 0};
    return static_cast<long long>(ram_orbit(W, c, N).size());
}

} // namespace g2ps
